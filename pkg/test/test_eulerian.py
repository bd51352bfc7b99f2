from fractions import Fraction

import networkx as nx  # type: ignore
import pytest

from cubictsp.eulerian import (
		EulerianSubgraph, NotBasic, NotClean, NotEulerian, NotSpanning, basic_bound, check_six_cycle_types, clean_bound,
		discharge_charges, excess, initial_charges, solve_basic, solve_clean,
		)
from cubictsp.graph import Graph, GraphEditor, named, six_cycles
from cubictsp.oracle import enumerate_eulerian, minexc_bruteforce
from cubictsp.reduction import GraphKind, classify_graph

def mcgee()->Graph:
	return Graph.from_networkx(nx.LCF_graph(24, [12, 7, -7], 8))

def tutte_coxeter(subdivided: int=0)->Graph:
	g=Graph.from_networkx(nx.LCF_graph(30, [-13, -9, 7, -7, 9, 13], 5))
	editor=GraphEditor(g)
	for u, v in g.edges[:subdivided]:
		editor.subdivide(u, v)
	return editor.finish()[0]

def subdivided_heawood()->Graph:
	g=named("heawood")
	editor=GraphEditor(g)
	for u, v in g.edges:
		editor.subdivide(u, v)
	return editor.finish()[0]

def hexagon_with_pendants()->Graph:
	"""
	A 6-cycle whose outside neighbors have degree two and lead, alternately, into two copies of the Petersen graph
	minus a vertex. Every edge away from the cycle is subdivided once.
	"""
	p=named("petersen")
	edges=[(i, (i+1)%6) for i in range(6)]+[(i, 6+i) for i in range(6)]
	for side, base in ((0, 12), (1, 21)):
		edges+=[(base+a-1, base+b-1) for a, b in p.edges if 0 not in (a, b)]
		edges+=[(6+side+2*t, base+end-1) for t, end in enumerate(p.adjacency[0])]
	g=Graph.build(30, edges)
	editor=GraphEditor(g)
	for u, v in g.edges:
		if u>=6 and v>=6: editor.subdivide(u, v)
	return editor.finish()[0]

def theta(a: int, b: int, c: int)->Graph:
	editor=GraphEditor(Graph.build(2, []))
	for length in (a, b, c):
		editor.add_path(0, 1, length)
	return editor.finish()[0]


class TestSubgraph:
	def test_validation(self)->None:
		k4=named("k4")
		with pytest.raises(NotEulerian, match="vertex 0 has degree 1"):
			EulerianSubgraph.from_edges(k4, [(0, 1)])
		with pytest.raises(NotSpanning):
			EulerianSubgraph.from_edge_ids(k4, [6])
		with pytest.raises(NotSpanning):
			EulerianSubgraph.from_edges(named("k23"), [(0, 1)])

	def test_components(self)->None:
		prism=named("prism")
		f=EulerianSubgraph.from_edges(prism, [(0, 1), (1, 2), (0, 2)])
		assert f.cycles==((0, 1, 2),)
		assert f.isolated==(3, 4, 5)
		assert f.components()==[(0, 1, 2), (3,), (4,), (5,)]
		assert (f.c, f.i, f.exc)==(1, 3, 5)
		assert EulerianSubgraph.empty(prism).exc==6
		assert f.contains(2, 1) and not f.contains(0, 3)

	@pytest.mark.parametrize("name", ["k4", "k23", "prism", "petersen", "theta_figure"])
	def test_charges_add_up_to_excess(self, name: str)->None:
		g=named(name)
		for f in enumerate_eulerian(g):
			assert sum(discharge_charges(f).values())==excess(f)
		assert sum(initial_charges(g).values())==Fraction(2*(g.n+g.n2), 7)


class TestBasic:
	@pytest.mark.parametrize("g", [Graph.cycle(3), Graph.cycle(8), named("k4"), named("k23"), theta(0, 1, 1), theta(0, 1, 4), theta(2, 3, 5), theta(1, 1, 6)])
	def test_optimal(self, g: Graph)->None:
		f=solve_basic(g)
		assert f.exc==minexc_bruteforce(g)
		assert f.exc<=basic_bound(g)

	def test_theta_skips_shortest_path(self)->None:
		assert solve_basic(theta(2, 3, 5)).exc==4

	def test_not_basic(self)->None:
		with pytest.raises(NotBasic):
			solve_basic(named("petersen"))


class TestClean:
	@pytest.mark.parametrize("g", [mcgee(), tutte_coxeter(), tutte_coxeter(subdivided=4), subdivided_heawood(), hexagon_with_pendants()])
	def test_bound(self, g: Graph)->None:
		assert classify_graph(g)==GraphKind.clean
		f=solve_clean(g)
		assert f.host==g
		assert f.exc<=clean_bound(g)
		for k in six_cycles(g):
			if k.is_theta_cycle: continue
			report=check_six_cycle_types(g, k)
			assert report.ok, [str(t) for t in report.types]

	def test_six_cycle_of_clean_graph(self)->None:
		g=hexagon_with_pendants()
		k,=six_cycles(g)
		report=check_six_cycle_types(g, k)
		assert report.ok and report.multiset_index==0
		assert all(t.lengths[0]==6 and t.lengths[1]>=8 for t in report.types)

	def test_rejects_improper(self)->None:
		with pytest.raises(NotClean, match="improper"):
			solve_clean(named("prism"))

	def test_six_cycle_types(self)->None:
		g=named("heawood")
		report=check_six_cycle_types(g, six_cycles(g)[0])
		assert len(report.types)==6
		assert not report.ok
