r"""
Spanning Eulerian subgraphs of subcubic graphs and their excess.

A spanning Eulerian subgraph of a subcubic graph is a disjoint union of cycles and isolated vertices.
Its excess is ``2c+i`` where ``c`` counts the cycles and ``i`` the isolated vertices;
a TSP walk of length ``n+exc-2`` can be read off it (see :mod:`cubictsp.walk`).

>>> k4=named("k4")
>>> f=EulerianSubgraph.from_edges(k4, [(0, 1), (1, 2), (2, 3), (0, 3)])
>>> f.c, f.i, excess(f)
(1, 0, 2)
"""

from __future__ import annotations

import functools
import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .config import GlobalConfiguration, get_config
from .graph import CycleDescriptor, EdgeLike, Graph, ShapeKind, VertexType, classify_shape, suppress_degree_two, vertex_type

logger=logging.getLogger(__name__)

class NotSpanning(ValueError): pass
class NotEulerian(ValueError): pass
class NotBasic(ValueError): pass
class NotClean(ValueError): pass
class CleanBoundViolated(RuntimeError): pass


@dataclass(frozen=True)
class EulerianSubgraph:
	"""
	Spanning subgraph of ``host`` given by a set of edge ids, every vertex having degree 0 or 2.

	Build it with :meth:`from_edge_ids` or :meth:`from_edges`, which validate.
	"""
	host: Graph
	edge_ids: frozenset[int]

	@staticmethod
	def from_edge_ids(host: Graph, edge_ids: Iterable[int])->EulerianSubgraph:
		ids=frozenset(edge_ids)
		if any(not 0<=e<host.m for e in ids): raise NotSpanning("edge id outside the host graph")
		degree=[0]*host.n
		for e in ids:
			u, v=host.edges[e]
			degree[u]+=1
			degree[v]+=1
		bad=[v for v in range(host.n) if degree[v] not in (0, 2)]
		if bad: raise NotEulerian(f"vertex {bad[0]} has degree {degree[bad[0]]}")
		return EulerianSubgraph(host, ids)

	@staticmethod
	def from_edges(host: Graph, edges: Iterable[EdgeLike])->EulerianSubgraph:
		try:
			return EulerianSubgraph.from_edge_ids(host, [host.as_edge_id(e) for e in edges])
		except KeyError as e:
			raise NotSpanning(f"edge {e} is not an edge of the host graph") from None

	@staticmethod
	def empty(host: Graph)->EulerianSubgraph:
		return EulerianSubgraph(host, frozenset())

	def degree(self, v: int)->int:
		return sum(1 for e in self.host.incident[v] if e in self.edge_ids)

	def contains(self, u: int, v: int)->bool:
		return self.host.has_edge(u, v) and self.host.edge_id(u, v) in self.edge_ids

	@property
	def edges(self)->list[tuple[int, int]]:
		return [self.host.edges[e] for e in sorted(self.edge_ids)]

	@functools.cached_property
	def cycles(self)->tuple[tuple[int, ...], ...]:
		"""
		Vertex sequences of the cycles, each starting at its smallest vertex.
		"""
		seen: set[int]=set()
		result: list[tuple[int, ...]]=[]
		for s in range(self.host.n):
			if s in seen or self.degree(s)==0: continue
			cycle=[s]
			seen.add(s)
			prev=-1
			v=s
			while True:
				w=next(self.host.other(e, v) for e in self.host.incident[v]
						if e in self.edge_ids and self.host.other(e, v)!=prev)
				if w==s: break
				cycle.append(w)
				seen.add(w)
				prev, v=v, w
			result.append(tuple(cycle))
		return tuple(result)

	@functools.cached_property
	def isolated(self)->tuple[int, ...]:
		return tuple(v for v in range(self.host.n) if self.degree(v)==0)

	@property
	def c(self)->int:
		return len(self.cycles)

	@property
	def i(self)->int:
		return len(self.isolated)

	@property
	def exc(self)->int:
		return 2*self.c+self.i

	def components(self)->list[tuple[int, ...]]:
		"""
		Cycles first, then isolated vertices as singletons.
		"""
		return [*self.cycles, *((v,) for v in self.isolated)]


def excess(f: EulerianSubgraph)->int:
	"""
	>>> p=named("petersen")
	>>> excess(EulerianSubgraph.from_edges(p, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (5, 7), (7, 9), (9, 6), (6, 8), (5, 8)]))
	4
	>>> excess(EulerianSubgraph.from_edges(p, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 9), (9, 6), (6, 8), (8, 5), (0, 5)]))
	3
	"""
	return 2*f.c+f.i

def solve_basic(g: Graph)->EulerianSubgraph:
	"""
	Minimum excess spanning Eulerian subgraph of a cycle, a theta graph or `K_4`.

	>>> solve_basic(Graph.cycle(9)).exc
	2
	>>> solve_basic(named("k23")).exc
	3
	>>> solve_basic(named("k4")).exc
	2
	>>> solve_basic(named("prism"))
	Traceback (most recent call last):
		...
	cubictsp.eulerian.NotBasic: graph on 6 vertices is not a cycle, a theta graph or K4
	"""
	shape=classify_shape(g)
	if shape.kind==ShapeKind.cycle:
		return EulerianSubgraph.from_edge_ids(g, range(g.m))
	if shape.kind==ShapeKind.k4:
		return EulerianSubgraph.from_edges(g, [(0, 1), (1, 2), (2, 3), (0, 3)])
	if shape.kind==ShapeKind.theta_graph:
		mg=suppress_degree_two(g)
		longest=sorted(range(3), key=lambda j: (-len(mg.payloads[j]), j))[:2]
		return EulerianSubgraph.from_edge_ids(g, (e for j in longest for e in mg.host_edges[j]))
	raise NotBasic(f"graph on {g.n} vertices is not a cycle, a theta graph or K4")

def basic_bound(g: Graph)->Fraction:
	return Fraction(g.n+g.n2, 4)+1

def clean_bound(g: Graph)->Fraction:
	"""
	>>> clean_bound(named("heawood"))
	Fraction(4, 1)
	"""
	return Fraction(2*(g.n+g.n2), 7)

def solve_clean(g: Graph, *, config: Optional[GlobalConfiguration]=None)->EulerianSubgraph:
	"""
	Best member of the Eulerian family induced by a uniform matching decomposition.
	"""
	from .matching import decompose_uniform, eulerian_family
	from .reduction import GraphKind, classify_graph
	config=get_config(config)
	kind=classify_graph(g)
	if kind!=GraphKind.clean: raise NotClean(f"graph is {kind.name}")
	mg=suppress_degree_two(g)
	family=eulerian_family(g, decompose_uniform(mg, config=config))
	best=min(family.subgraphs, key=lambda f: f.exc)
	bound=clean_bound(g)
	logger.info("clean solve: n=%d n2=%d family=%d best exc=%d bound=%s", g.n, g.n2, len(family.subgraphs), best.exc, bound)
	if config.check_clean_bound and best.exc>bound:
		raise CleanBoundViolated(f"excess {best.exc} exceeds {bound}")
	return best

def discharge_charges(f: EulerianSubgraph)->dict[int, Fraction]:
	"""
	Final charge of every vertex: ``2/k`` for a vertex on a ``k``-cycle, 1 for an isolated vertex.

	The charges add up to the excess.

	>>> sum(discharge_charges(solve_basic(named("k23"))).values())
	Fraction(3, 1)
	"""
	result: dict[int, Fraction]={}
	for cycle in f.cycles:
		for v in cycle:
			result[v]=Fraction(2, len(cycle))
	for v in f.isolated:
		result[v]=Fraction(1)
	return result

def initial_charges(g: Graph)->dict[int, Fraction]:
	return {v: Fraction(4 if g.degree(v)==2 else 2, 7) for v in range(g.n)}


SIX_CYCLE_TYPE_MULTISETS: tuple[tuple[VertexType, ...], ...]=tuple(
		tuple(VertexType(t) for t in multiset) for multiset in (
			((6, 7, 7), (6, 7, 7), (6, 8, 8), (6, 8, 8), (6, 8, 8), (6, 8, 8)),
			((6, 7, 7), (6, 7, 8), (6, 7, 8), (6, 8, 8), (6, 8, 8), (6, 8, 8)),
			((6, 7, 7), (6, 7, 8), (6, 7, 9), (6, 7, 9), (6, 8, 8), (6, 8, 8)),
			))
"""
Lower bounds on the types of the vertices of a non-theta 6-cycle in a clean graph.
"""

@dataclass(frozen=True)
class SixCycleTypeReport:
	cycle: CycleDescriptor
	types: tuple[VertexType, ...]
	multiset_index: Optional[int]
	bijection: Optional[tuple[int, ...]]
	"""
	``types[j]`` dominates ``SIX_CYCLE_TYPE_MULTISETS[multiset_index][bijection[j]]``.
	"""

	@property
	def ok(self)->bool:
		return self.multiset_index is not None

def dominating_bijection(types: Sequence[VertexType], multiset: Sequence[VertexType])->Optional[tuple[int, ...]]:
	"""
	>>> dominating_bijection([VertexType((6, 8, 8))]*6, SIX_CYCLE_TYPE_MULTISETS[0])
	(0, 1, 2, 3, 4, 5)
	>>> dominating_bijection([VertexType((6, 6, 6))]*6, SIX_CYCLE_TYPE_MULTISETS[0]) is None
	True
	"""
	assert len(types)==len(multiset)
	for perm in itertools.permutations(range(len(multiset))):
		if all(t.dominates(multiset[j]) for t, j in zip(types, perm)):
			return perm
	return None

def check_six_cycle_types(g: Graph, k: CycleDescriptor)->SixCycleTypeReport:
	types=tuple(vertex_type(g, v) for v in k.vertices)
	for index, multiset in enumerate(SIX_CYCLE_TYPE_MULTISETS):
		bijection=dominating_bijection(types, multiset)
		if bijection is not None:
			return SixCycleTypeReport(k, types, index, bijection)
	logger.warning("6-cycle %s has types %s dominating none of the bounds", k.vertices, [str(t) for t in types])
	return SixCycleTypeReport(k, types, None, None)
