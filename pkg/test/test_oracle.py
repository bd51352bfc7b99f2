import pytest

from cubictsp import oracle
from cubictsp.config import GlobalConfiguration
from cubictsp.eulerian import EulerianSubgraph
from cubictsp.generators import random_subcubic
from cubictsp.graph import Graph, named
from cubictsp.oracle import (
		OracleMismatch, TooLarge, Verdict, cycle_space_dimension, enumerate_eulerian, enumerate_even_subgraphs, minexc_bruteforce,
		tsp_bruteforce, tsp_multigraph_bruteforce, verify_walk,
		)

def small_graphs()->list[Graph]:
	graphs=[named(name) for name in ("k4", "k33", "k23", "prism", "petersen", "two_diamonds", "theta_figure")]
	graphs+=[random_subcubic(n3+n2, n2, seed) for n3 in (4, 6, 8) for n2 in (0, 2, 4) for seed in range(3)]
	return graphs

class TestEnumeration:
	@pytest.mark.parametrize("g", small_graphs())
	def test_two_enumerations_agree(self, g: Graph)->None:
		packings=[f.edge_ids for f in enumerate_eulerian(g)]
		assert len(packings)==len(set(packings))
		even={f.edge_ids for f in enumerate_even_subgraphs(g)}
		assert set(packings)==even
		assert len(even)==2**cycle_space_dimension(g)

	def test_dimension_limit(self)->None:
		with pytest.raises(TooLarge):
			list(enumerate_even_subgraphs(named("heawood"), limit=5))

	def test_vertex_limit(self)->None:
		with pytest.raises(TooLarge):
			minexc_bruteforce(named("heawood"), config=GlobalConfiguration(oracle_vertex_limit=10))


class TestValues:
	@pytest.mark.parametrize("name, minexc, tsp", [
		("k4", 2, 4), ("k23", 3, 6), ("k33", 2, 6), ("prism", 2, 6), ("petersen", 3, 11), ("two_diamonds", 2, 8),
		])
	def test_known(self, name: str, minexc: int, tsp: int)->None:
		g=named(name)
		assert minexc_bruteforce(g)==minexc
		assert tsp_bruteforce(g)==tsp

	@pytest.mark.parametrize("g", small_graphs()+[Graph.build(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)])])
	def test_routes_agree(self, g: Graph)->None:
		assert tsp_multigraph_bruteforce(g)==g.n-2+minexc_bruteforce(g)

	def test_bridge_is_doubled(self)->None:
		# two triangles joined by a bridge
		g=Graph.build(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)])
		assert tsp_bruteforce(g)==8

	def test_tree_is_doubled(self)->None:
		assert tsp_multigraph_bruteforce(Graph.build(4, [(0, 1), (1, 2), (1, 3)]))==6

	def test_multigraph_search_is_independent(self, monkeypatch: pytest.MonkeyPatch)->None:
		monkeypatch.setattr(oracle, "minexc_bruteforce", lambda g, config=None: 1)
		with pytest.raises(OracleMismatch, match="multigraph search gives 11"):
			tsp_bruteforce(named("petersen"))

	def test_disconnected(self)->None:
		with pytest.raises(ValueError):
			tsp_multigraph_bruteforce(Graph.build(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]))


class TestVerifyWalk:
	def test_failures(self)->None:
		g=Graph.cycle(4)
		assert verify_walk(g, [0, 1, 2, 3, 0])
		assert verify_walk(g, [0, 1, 2, 3]).failures==("walk is not closed",)
		assert verify_walk(g, [0, 2, 1, 0]).failures==("step 0 -> 2 is not an edge", "uncovered vertex 3")
		assert verify_walk(g, []).failures==("empty walk",)

	def test_verdict(self)->None:
		assert Verdict()
		assert not Verdict(("x",))
		assert Verdict((), 3).checked==3

	def test_isolated_excess(self)->None:
		g=named("k4")
		assert EulerianSubgraph.empty(g).exc==4
