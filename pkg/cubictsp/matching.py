r"""
Perfect matchings of cubic multigraphs, and the exact decomposition of the vector with
every coordinate ``1/3`` into perfect matchings.

In a 2-edge-connected cubic multigraph that vector lies in the perfect matching polytope, so it is a convex
combination of perfect matchings. Complementing each matching gives a 2-factor; expanded back to the
subcubic graph these form a family of spanning Eulerian subgraphs in which every edge appears with
probability exactly ``2/3``.

>>> d=decompose_uniform(suppress_degree_two(named("petersen")))
>>> d.size, set(d.coefficients)
(6, {Fraction(1, 6)})
>>> family=eulerian_family(named("k4"), decompose_uniform(suppress_degree_two(named("k4"))))
>>> [f.exc for f in family.subgraphs], family.probabilities
([2, 2, 2], (Fraction(1, 3), Fraction(1, 3), Fraction(1, 3)))
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional, Sequence

import networkx as nx  # type: ignore

from .config import DecompositionMethod, GlobalConfiguration, get_config
from .eulerian import EulerianSubgraph
from .graph import DegreeNotThree, Graph, Multigraph, NotTwoEdgeConnected, suppress_degree_two
from .simplex import ExactSimplex, IterationLimit, caratheodory_prune

logger=logging.getLogger(__name__)

class NoPerfectMatching(ValueError): pass
class DecompositionFailed(RuntimeError): pass
class MismatchedDecomposition(ValueError): pass

THIRD=Fraction(1, 3)


@dataclass(frozen=True)
class PerfectMatching:
	multigraph: Multigraph
	edges: frozenset[int]

	@staticmethod
	def from_edges(mg: Multigraph, edges: Sequence[int])->PerfectMatching:
		ids=frozenset(edges)
		covered=[0]*mg.n
		for e in ids:
			a, b=mg.ends[e]
			if a==b: raise NoPerfectMatching(f"edge {e} is a loop")
			covered[a]+=1
			covered[b]+=1
		for v, count in enumerate(covered):
			if count!=1: raise NoPerfectMatching(f"vertex {v} is covered {count} times")
		return PerfectMatching(mg, ids)

	def vector(self)->tuple[Fraction, ...]:
		return tuple(Fraction(int(e in self.edges)) for e in range(self.multigraph.m))

	def sorted_edges(self)->tuple[int, ...]:
		return tuple(sorted(self.edges))


@dataclass(frozen=True)
class MatchingDecomposition:
	"""
	``sum(coefficients[i] * matchings[i])`` is ``1/3`` on every edge and the coefficients add up to 1.
	"""
	multigraph: Multigraph
	matchings: tuple[PerfectMatching, ...]
	coefficients: tuple[Fraction, ...]
	method: str=""

	@property
	def size(self)->int:
		return len(self.matchings)

	def edge_sums(self)->list[Fraction]:
		result=[Fraction(0)]*self.multigraph.m
		for matching, a in zip(self.matchings, self.coefficients):
			for e in matching.edges:
				result[e]+=a
		return result

	def verify(self)->None:
		"""
		Raise :class:`DecompositionFailed` unless the decomposition is exact.
		"""
		if len(self.matchings)!=len(self.coefficients): raise DecompositionFailed("length mismatch")
		if any(a<=0 for a in self.coefficients): raise DecompositionFailed("nonpositive coefficient")
		if sum(self.coefficients, Fraction(0))!=1: raise DecompositionFailed(f"coefficients add up to {sum(self.coefficients)}")
		for e, total in enumerate(self.edge_sums()):
			if total!=THIRD: raise DecompositionFailed(f"edge {e} is covered with weight {total}")
		if 2*self.size>self.multigraph.n+4:
			raise DecompositionFailed(f"{self.size} matchings exceed n/2+2 for n={self.multigraph.n}")


@dataclass(frozen=True)
class EulerianFamily:
	host: Graph
	subgraphs: tuple[EulerianSubgraph, ...]
	probabilities: tuple[Fraction, ...]

	def edge_probabilities(self)->list[Fraction]:
		result=[Fraction(0)]*self.host.m
		for f, p in zip(self.subgraphs, self.probabilities):
			for e in f.edge_ids:
				result[e]+=p
		return result

	def best(self)->EulerianSubgraph:
		"""
		Minimum excess member, lowest index on ties.
		"""
		return min(self.subgraphs, key=lambda f: f.exc)

	def expected_excess(self)->Fraction:
		return sum((p*f.exc for f, p in zip(self.subgraphs, self.probabilities)), Fraction(0))


def _require_cubic_bridgeless(mg: Multigraph)->None:
	if not mg.is_cubic(): raise DegreeNotThree("multigraph is not cubic")
	if not mg.is_two_edge_connected(): raise NotTwoEdgeConnected("multigraph is not 2-edge-connected")

def enumerate_perfect_matchings(mg: Multigraph)->Iterator[PerfectMatching]:
	"""
	Every perfect matching, parallel edges counted separately.

	>>> sum(1 for _ in enumerate_perfect_matchings(suppress_degree_two(named("petersen"))))
	6
	"""
	incidence: list[list[int]]=[[] for _ in range(mg.n)]
	for e, (a, b) in enumerate(mg.ends):
		if a!=b:
			incidence[a].append(e)
			incidence[b].append(e)
	covered=[False]*mg.n
	chosen: list[int]=[]

	def go()->Iterator[PerfectMatching]:
		v=next((u for u in range(mg.n) if not covered[u]), None)
		if v is None:
			yield PerfectMatching(mg, frozenset(chosen))
			return
		covered[v]=True
		for e in incidence[v]:
			a, b=mg.ends[e]
			w=b if a==v else a
			if covered[w]: continue
			covered[w]=True
			chosen.append(e)
			yield from go()
			chosen.pop()
			covered[w]=False
		covered[v]=False

	yield from go()

def min_weight_perfect_matching(mg: Multigraph, weights: Sequence[Fraction])->PerfectMatching:
	"""
	Perfect matching of least total weight, by the blossom algorithm on integer-scaled weights.
	Of parallel edges only the cheapest (lowest id on ties) is considered.

	>>> mg=suppress_degree_two(named("k4"))
	>>> sorted(mg.ends[e] for e in min_weight_perfect_matching(mg, [0, 0, -1, -1, 0, 0]).edges)
	[(0, 3), (1, 2)]
	"""
	_require_cubic_bridgeless(mg)
	exact=[Fraction(w) for w in weights]
	assert len(exact)==mg.m
	cheapest: dict[tuple[int, int], int]={}
	for e, (a, b) in enumerate(mg.ends):
		if a==b: continue
		key=(min(a, b), max(a, b))
		if key not in cheapest or exact[e]<exact[cheapest[key]]: cheapest[key]=e
	scale=math.lcm(*(w.denominator for w in exact)) if exact else 1
	integer={e: int(exact[e]*scale) for e in cheapest.values()}
	top=max(integer.values(), default=0)+1
	nx_graph=nx.Graph()
	nx_graph.add_nodes_from(range(mg.n))
	for (a, b), e in sorted(cheapest.items()):
		nx_graph.add_edge(a, b, weight=top-integer[e], edge_id=e)
	mate=nx.max_weight_matching(nx_graph, maxcardinality=True, weight="weight")
	if 2*len(mate)!=mg.n: raise NoPerfectMatching(f"maximum matching has {len(mate)} edges on {mg.n} vertices")
	return PerfectMatching(mg, frozenset(nx_graph.edges[u, v]["edge_id"] for u, v in mate))

def perfect_matching(mg: Multigraph)->PerfectMatching:
	"""
	>>> len(perfect_matching(suppress_degree_two(named("k33"))).edges)
	3
	"""
	return min_weight_perfect_matching(mg, [Fraction(0)]*mg.m)


def _three_edge_colouring(mg: Multigraph)->Optional[tuple[PerfectMatching, PerfectMatching, PerfectMatching]]:
	"""
	A perfect matching whose complementary 2-factor has only even cycles, split into three matchings.
	"""
	first=perfect_matching(mg)
	rest: list[list[int]]=[[] for _ in range(mg.n)]
	for e, (a, b) in enumerate(mg.ends):
		if e not in first.edges:
			rest[a].append(e)
			rest[b].append(e)
	colour: dict[int, int]={}
	for start in range(mg.m):
		if start in first.edges or start in colour: continue
		e=start
		v=mg.ends[e][1]
		current=0
		while True:
			colour[e]=current
			current^=1
			e=next(f for f in rest[v] if f!=e)
			if e==start: break
			a, b=mg.ends[e]
			v=b if a==v else a
		if current!=0:
			logger.debug("complementary 2-factor has an odd cycle")
			return None
	second=PerfectMatching.from_edges(mg, [e for e, c in colour.items() if c==0])
	third=PerfectMatching.from_edges(mg, [e for e, c in colour.items() if c==1])
	return first, second, third

def _solve_pool(mg: Multigraph, pool: list[PerfectMatching], generate: bool)->dict[int, Fraction]:
	# one row per edge plus the convexity row
	lp=ExactSimplex([THIRD]*mg.m+[Fraction(1)])
	def column(matching: PerfectMatching)->tuple[Fraction, ...]:
		return (*matching.vector(), Fraction(1))
	for matching in pool:
		lp.add_column(column(matching))

	def price(duals: list[Fraction])->Optional[tuple[Fraction, ...]]:
		if not generate: return None
		# reduced cost of a matching is minus the dual weight it collects
		matching=min_weight_perfect_matching(mg, [-y for y in duals[:mg.m]])
		candidate=column(matching)
		if lp.reduced_cost(candidate, duals)>=0: return None
		pool.append(matching)
		return candidate

	try:
		feasible=lp.run(price)
	except IterationLimit as e:
		raise DecompositionFailed(str(e)) from e
	if not feasible: raise DecompositionFailed("the uniform vector is not a convex combination of perfect matchings")
	logger.debug("simplex: %d columns, %d pivots", len(pool), lp.iterations)
	return lp.solution()

def decompose_uniform(mg: Multigraph, *, config: Optional[GlobalConfiguration]=None, method: Optional[DecompositionMethod]=None)->MatchingDecomposition:
	"""
	Exact convex combination of at most ``n/2+2`` perfect matchings equal to ``1/3`` on every edge.

	:param method: ``"auto"`` tries a 3-edge-colouring read off one perfect matching first and
		otherwise runs column generation; ``"enumerate"`` lists every perfect matching and solves
		the same program over all of them.
	"""
	_require_cubic_bridgeless(mg)
	method=method or get_config(config).decomposition_method
	used: str=method
	matchings: list[PerfectMatching]
	coefficients: list[Fraction]
	colouring=_three_edge_colouring(mg) if method=="auto" else None
	if colouring is not None:
		matchings=list(colouring)
		coefficients=[THIRD]*3
		used="colouring"
	else:
		if method=="enumerate":
			pool=list(enumerate_perfect_matchings(mg))
			solution=_solve_pool(mg, pool, generate=False)
		else:
			pool=[perfect_matching(mg)]
			solution=_solve_pool(mg, pool, generate=True)
			used="column-generation"
		indices=sorted(solution)
		pruned=caratheodory_prune([pool[j].vector() for j in indices], [solution[j] for j in indices])
		matchings=[pool[indices[j]] for j in sorted(pruned)]
		coefficients=[pruned[j] for j in sorted(pruned)]
	order=sorted(range(len(matchings)), key=lambda j: matchings[j].sorted_edges())
	result=MatchingDecomposition(mg, tuple(matchings[j] for j in order), tuple(coefficients[j] for j in order), used)
	result.verify()
	logger.info("decomposition of n=%d by %s: %d matchings", mg.n, used, result.size)
	return result

def eulerian_family(g: Graph, d: MatchingDecomposition)->EulerianFamily:
	"""
	Complement every matching of ``d`` to a 2-factor of the suppressed multigraph and expand it in ``g``.

	>>> g=named("k23")
	>>> family=eulerian_family(g, decompose_uniform(suppress_degree_two(g), method="enumerate"))
	>>> sorted(f.isolated for f in family.subgraphs)
	[(2,), (3,), (4,)]
	"""
	mg=suppress_degree_two(g)
	if mg!=d.multigraph: raise MismatchedDecomposition("decomposition is not of the suppression of this graph")
	subgraphs=[]
	for matching in d.matchings:
		ids=[h for e in range(mg.m) if e not in matching.edges for h in mg.host_edges[e]]
		subgraphs.append(EulerianSubgraph.from_edge_ids(g, ids))
	family=EulerianFamily(g, tuple(subgraphs), d.coefficients)
	assert all(p==2*THIRD for p in family.edge_probabilities())
	return family
