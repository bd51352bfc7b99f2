"""
Lifting spanning Eulerian subgraphs back through a reduction.

Every reduction rebuilds the graph around one cycle ``K``: some or all of its vertices are removed
and a small gadget of new edges, paths and vertices takes their place. Away from ``K`` and its exits
nothing changes, and a lift keeps the reduced subgraph ``F'`` there as it is. That fixes, by parity,
which exits of ``K`` the lifted subgraph uses: an outside vertex with one kept edge needs its exit, one with
two kept edges must not use it. The exits in use split ``K`` into arcs, and the arcs between consecutive
exits alternate between two systems. :func:`reroute` builds both and keeps the one of smaller excess,
recording which gadget pieces ``F'`` used and which system closed the exits.

:func:`complete_locally` is an exhaustive search over a larger region, kept to cross-check lifts.
"""

from __future__ import annotations

import itertools
import logging
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .config import GlobalConfiguration, get_config
from .eulerian import EulerianSubgraph, NotSpanning
from .graph import Edge, Graph

logger=logging.getLogger(__name__)

class LiftBoundViolated(RuntimeError): pass


@dataclass(frozen=True)
class Gadget:
	"""
	What a reduction put in place of a cycle of the original graph.

	:ivar cycle: the cycle ``K``, in order, as vertices of the original graph.
	:ivar removed: vertices of ``K`` that are not in the reduced graph.
	:ivar pieces: every added edge, path and star branch, named, as a path of the reduced graph that starts at an old vertex.
	:ivar subdivided: every edge id of the original graph that became a path, with that path in the reduced graph.
	"""
	cycle: tuple[int, ...]
	removed: frozenset[int]
	pieces: tuple[tuple[str, tuple[int, ...]], ...]=()
	subdivided: tuple[tuple[int, tuple[int, ...]], ...]=()

	def __post_init__(self)->None:
		assert self.removed<=frozenset(self.cycle), (self.removed, self.cycle)
		assert all(len(path)>=2 for _, path in self.pieces)

	def used_pieces(self, f_after: EulerianSubgraph)->tuple[str, ...]:
		return tuple(name for name, path in self.pieces if f_after.contains(path[0], path[1]))


@dataclass(frozen=True)
class Rerouting:
	"""
	A lifted subgraph together with the case that built it.

	:ivar used: the gadget pieces the reduced subgraph contains.
	:ivar exits: vertices of the cycle whose exit the lifted subgraph uses.
	:ivar arcs: which way the cycle was closed.
	"""
	subgraph: EulerianSubgraph
	used: tuple[str, ...]
	exits: tuple[int, ...]
	arcs: str

	@property
	def case(self)->str:
		return f"uses {'+'.join(self.used) or 'nothing'}; {len(self.exits)} exits; {self.arcs}"


def arc_systems(cycle: Sequence[int], ends: frozenset[int])->list[tuple[str, list[Edge]]]:
	"""
	The two ways to give every vertex of ``ends`` one cycle edge and every other vertex zero or two.

	>>> arc_systems([0, 1, 2, 3, 4, 5], frozenset({1, 3}))
	[('arcs leaving 1', [(1, 2), (2, 3)]), ('arcs entering 1', [(3, 4), (4, 5), (5, 0), (0, 1)])]
	>>> [label for label, _ in arc_systems([0, 1, 2], frozenset())]
	['cycle added', 'cycle isolated']
	"""
	length=len(cycle)
	edges=[(cycle[i], cycle[(i+1)%length]) for i in range(length)]
	if not ends: return [("cycle added", edges), ("cycle isolated", [])]
	assert len(ends)%2==0, ends
	start=next(i for i, v in enumerate(cycle) if v in ends)
	leaving: list[Edge]=[]
	entering: list[Edge]=[]
	inside=True
	for t in range(length):
		i=(start+t)%length
		(leaving if inside else entering).append(edges[i])
		if cycle[(i+1)%length] in ends: inside=not inside
	return [(f"arcs leaving {cycle[start]}", leaving), (f"arcs entering {cycle[start]}", entering)]

def reroute(before: Graph, after: Graph, origin: Sequence[Optional[int]], gadget: Gadget, f_after: EulerianSubgraph)->Rerouting:
	"""
	Lift ``f_after`` through the reduction described by ``gadget``.

	Edges away from the cycle are kept as ``f_after`` has them, a subdivided edge being kept when its path is.
	An exit from a removed vertex is used exactly when its outside end would otherwise have odd degree;
	an outside end with no kept edge and two such exits may use both or neither.
	"""
	if f_after.host!=after: raise NotSpanning("subgraph does not span the reduced graph")
	new_of={o: j for j, o in enumerate(origin) if o is not None}
	cycle=gadget.cycle
	on_cycle=frozenset(cycle)
	cycle_edges=frozenset(before.edge_id(cycle[i], cycle[(i+1)%len(cycle)]) for i in range(len(cycle)))
	paths=dict(gadget.subdivided)

	kept: list[int]=[]
	loose: dict[int, list[int]]={}
	for e, (u, v) in enumerate(before.edges):
		if e in cycle_edges: continue
		if u in gadget.removed or v in gadget.removed:
			x=v if u in gadget.removed else u
			assert x not in on_cycle, (u, v)
			loose.setdefault(x, []).append(e)
			continue
		path=paths.get(e, (new_of[u], new_of[v]))
		assert after.has_edge(path[0], path[1]), (u, v)
		if f_after.contains(path[0], path[1]): kept.append(e)

	degree=Counter(w for e in kept for w in before.edges[e])
	choices=[
			[subset for size in (0, 1, 2) if degree[x]+size in (0, 2) for subset in itertools.combinations(loose[x], size)]
			for x in sorted(loose)]
	kept_exits=[e for e in kept if on_cycle.intersection(before.edges[e])]
	used=gadget.used_pieces(f_after)

	best: Optional[Rerouting]=None
	for picked in itertools.product(*choices):
		exits=[*kept_exits, *itertools.chain.from_iterable(picked)]
		ends=frozenset(w for e in exits for w in before.edges[e] if w in on_cycle)
		for label, arcs in arc_systems(cycle, ends):
			f=EulerianSubgraph.from_edge_ids(before, [*kept, *itertools.chain.from_iterable(picked), *(before.edge_id(a, b) for a, b in arcs)])
			if best is None or f.exc<best.subgraph.exc:
				best=Rerouting(f, used, tuple(v for v in cycle if v in ends), label)
	if best is None: raise LiftBoundViolated(f"no way to close the exits of the cycle {cycle}")
	return best


def changed_vertices(before: Graph, after: Graph, origin: Sequence[Optional[int]])->frozenset[int]:
	"""
	Vertices of ``before`` that were removed, or whose neighborhood differs in ``after``.

	>>> from cubictsp.graph import GraphEditor
	>>> editor=GraphEditor(Graph.cycle(5))
	>>> _=editor.subdivide(0, 1)
	>>> after, origin=editor.finish()
	>>> sorted(changed_vertices(Graph.cycle(5), after, origin))
	[0, 1]
	"""
	new_of={o: j for j, o in enumerate(origin) if o is not None}
	result=set(range(before.n))-set(new_of)
	for v, j in new_of.items():
		image=frozenset(origin[w] for w in after.adjacency[j])
		if image!=frozenset(before.adjacency[v]): result.add(v)
	return frozenset(result)


@dataclass
class _Search:
	before: Graph
	region: frozenset[int]
	free: list[int]
	"""
	Free edge ids of ``before`` in decision order.
	"""
	need: dict[int, tuple[int, ...]]
	"""
	Allowed free degree of every vertex touched by a free edge.
	"""
	base_parent: list[int]
	"""
	Union-find roots of the copied subgraph on the untouched vertices.
	"""
	base_nontrivial: frozenset[int]
	"""
	Roots of copied components that contain an edge.
	"""
	constant_exc: int
	boundary: tuple[int, ...]

	def score(self, chosen: list[int])->int:
		parent: dict[object, object]={}
		def find(a: object)->object:
			while parent.get(a, a)!=a:
				a=parent[a]
			return a
		def node(v: int)->object:
			return ("r", v) if v in self.region else ("b", self.base_parent[v])
		degree: dict[int, int]={}
		for e in chosen:
			u, v=self.before.edges[e]
			degree[u]=degree.get(u, 0)+1
			degree[v]=degree.get(v, 0)+1
			a, b=find(node(u)), find(node(v))
			if a!=b: parent[a]=b
		roots: set[object]=set()
		isolated=0
		for v in self.region:
			if degree.get(v, 0): roots.add(find(("r", v)))
			else: isolated+=1
		for v in self.boundary:
			root=self.base_parent[v]
			if degree.get(v, 0) or root in self.base_nontrivial: roots.add(find(("b", root)))
			else: isolated+=1
		return self.constant_exc+2*len(roots)+isolated

	def run(self)->Optional[tuple[int, list[int]]]:
		best: Optional[tuple[int, list[int]]]=None
		current: dict[int, int]={v: 0 for v in self.need}
		remaining: dict[int, int]={v: 0 for v in self.need}
		for e in self.free:
			for v in self.before.edges[e]:
				remaining[v]+=1
		chosen: list[int]=[]

		def feasible(v: int)->bool:
			allowed=self.need[v]
			c=current[v]
			return any(c<=a<=c+remaining[v] for a in allowed)

		def go(index: int)->None:
			nonlocal best
			if index==len(self.free):
				value=self.score(chosen)
				if best is None or value<best[0]:
					best=(value, list(chosen))
				return
			e=self.free[index]
			u, v=self.before.edges[e]
			remaining[u]-=1
			remaining[v]-=1
			for take in (True, False):
				if take:
					current[u]+=1
					current[v]+=1
					chosen.append(e)
				if feasible(u) and feasible(v):
					go(index+1)
				if take:
					current[u]-=1
					current[v]-=1
					chosen.pop()
			remaining[u]+=1
			remaining[v]+=1

		go(0)
		return best


def _order_free_edges(before: Graph, region: frozenset[int], free: set[int])->list[int]:
	# breadth first from the region so that vertex constraints close early
	order: list[int]=[]
	seen_edges: set[int]=set()
	seen_vertices: set[int]=set()
	queue=sorted(region)
	for s in queue:
		if s in seen_vertices: continue
		seen_vertices.add(s)
		frontier=[s]
		while frontier:
			v=frontier.pop(0)
			for e in before.incident[v]:
				if e in free and e not in seen_edges:
					seen_edges.add(e)
					order.append(e)
					w=before.other(e, v)
					if w not in seen_vertices and w in region:
						seen_vertices.add(w)
						frontier.append(w)
	assert seen_edges==free
	return order

def complete_locally(before: Graph, after: Graph, origin: Sequence[Optional[int]], region: frozenset[int],
		f_after: EulerianSubgraph)->EulerianSubgraph:
	"""
	Minimum excess spanning Eulerian subgraph of ``before`` that agrees with ``f_after`` outside ``region``.

	``region`` must contain every vertex reported by :func:`changed_vertices`.
	"""
	if f_after.host!=after: raise NotSpanning("subgraph does not span the reduced graph")
	assert changed_vertices(before, after, origin)<=region
	new_of={o: j for j, o in enumerate(origin) if o is not None}

	fixed: list[int]=[]
	free: set[int]=set()
	for e, (u, v) in enumerate(before.edges):
		if u in region or v in region:
			free.add(e)
		elif f_after.contains(new_of[u], new_of[v]):
			fixed.append(e)

	parent=list(range(before.n))
	def find(a: int)->int:
		while parent[a]!=a:
			parent[a]=parent[parent[a]]
			a=parent[a]
		return a
	fixed_degree=[0]*before.n
	for e in fixed:
		u, v=before.edges[e]
		fixed_degree[u]+=1
		fixed_degree[v]+=1
		a, b=find(u), find(v)
		if a!=b: parent[a]=b
	roots=[find(v) for v in range(before.n)]
	nontrivial=frozenset(roots[v] for v in range(before.n) if fixed_degree[v])

	boundary=tuple(sorted({w for e in free for w in before.edges[e] if w not in region}))
	boundary_roots={roots[v] for v in boundary}
	constant_exc=0
	for root in nontrivial-boundary_roots:
		constant_exc+=2
	for v in range(before.n):
		if v not in region and fixed_degree[v]==0 and v not in boundary:
			constant_exc+=1

	need: dict[int, tuple[int, ...]]={}
	for v in region:
		need[v]=(0, 2)
	for v in boundary:
		need[v]={0: (0, 2), 1: (1,), 2: (0,)}[fixed_degree[v]]

	search=_Search(before, region, _order_free_edges(before, region, free), need, roots, nontrivial, constant_exc, boundary)
	found=search.run()
	if found is None:
		raise LiftBoundViolated(f"no Eulerian completion over a region of {len(region)} vertices")
	value, chosen=found
	result=EulerianSubgraph.from_edge_ids(before, [*fixed, *chosen])
	assert result.exc==value, (result.exc, value)
	return result

def check_lift_bound(f: EulerianSubgraph, f_after: EulerianSubgraph, delta: int, *, config: Optional[GlobalConfiguration]=None)->None:
	"""
	Raise :class:`LiftBoundViolated` unless ``exc(f) <= exc(f_after) + delta/4``.
	"""
	if not get_config(config).check_lift_bound: return
	if Fraction(f.exc)>f_after.exc+Fraction(delta, 4):
		raise LiftBoundViolated(f"lifted excess {f.exc} exceeds {f_after.exc}+{delta}/4")
