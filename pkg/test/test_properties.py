"""
Property tests over seeded random instances.
"""

from __future__ import annotations

import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from cubictsp.generators import random_cubic_with_bridges, random_subcubic
from cubictsp.graph import Graph, suppress_degree_two
from cubictsp.matching import decompose_uniform
from cubictsp.oracle import tsp_bruteforce, verify_decomposition, verify_walk
from cubictsp.walk import cubic_bound, lower_bound, solve_cubic, solve_subcubic, subcubic_bound

PROPERTY_SETTINGS=settings(max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow])

@st.composite
def subcubic_graphs(draw: st.DrawFn, max_n3: int=24, max_n2: int=8)->Graph:
	n3=2*draw(st.integers(2, max_n3//2))
	n2=draw(st.integers(0, max_n2))
	return random_subcubic(n3+n2, n2, draw(st.integers(0, 2**32-1)))

@st.composite
def bridged_graphs(draw: st.DrawFn)->Graph:
	blocks=draw(st.integers(1, 5))
	hub=blocks>=3 and draw(st.booleans())
	return random_cubic_with_bridges(blocks, draw(st.sampled_from([4, 6, 8])), draw(st.integers(0, 2**32-1)), hub=hub)


class TestWalkProperties:
	@PROPERTY_SETTINGS
	@given(g=subcubic_graphs())
	def test_subcubic_walk_within_bound(self, g: Graph)->None:
		report, trace=solve_subcubic(g)
		assert verify_walk(g, report.walk).ok
		assert report.walk.length==g.n-2+report.excess
		assert report.walk.length<=subcubic_bound(g)
		assert report.steps==len(trace.steps)

	@PROPERTY_SETTINGS
	@given(g=subcubic_graphs(max_n3=10, max_n2=4))
	def test_never_below_optimum(self, g: Graph)->None:
		report, _=solve_subcubic(g)
		assert tsp_bruteforce(g)<=report.walk.length

	@PROPERTY_SETTINGS
	@given(g=bridged_graphs())
	def test_cubic_walk_within_bound(self, g: Graph)->None:
		report=solve_cubic(g)
		assert verify_walk(g, report.walk).ok
		assert lower_bound(g)<=report.walk.length<=cubic_bound(g)


class TestDecompositionProperties:
	@PROPERTY_SETTINGS
	@given(g=subcubic_graphs(max_n3=24, max_n2=0))
	def test_uniform_vector_is_exact(self, g: Graph)->None:
		d=decompose_uniform(suppress_degree_two(g))
		assert verify_decomposition(d).ok
		assert d.size<=g.n//2+2

	@pytest.mark.parametrize("seed", range(20))
	def test_seeded_cubic(self, seed: int)->None:
		g=random_subcubic(10+2*(seed%8), 0, seed)
		d=decompose_uniform(suppress_degree_two(g))
		assert verify_decomposition(d).ok
		assert d.size<=g.n//2+2
