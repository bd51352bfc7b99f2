r"""
Simple subcubic graphs and the structural queries the rest of the package is built on.

Vertices are the integers ``0..n-1``. Edges are stored as sorted pairs in a sorted tuple,
the position of an edge in that tuple is its *edge id*; subgraphs everywhere else in the package
are sets of edge ids.

>>> g=Graph.build(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 3)])
>>> g.n, g.m, g.n2
(4, 6, 0)
>>> connectivity_report(g).two_connected
True
>>> classify_shape(g).kind
<ShapeKind.k4: 3>

.. seealso::
	:func:`suppress_degree_two` for the cubic multigraph view,
	:func:`enumerate_cycles_bounded` and :func:`short_cycles` for cycle listing.
"""

from __future__ import annotations

import enum
import functools
import itertools
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, Sequence, Union

Edge=tuple[int, int]
EdgeLike=Union[int, Edge]

INFINITE: int=1<<62
"""
Sentinel used for a :class:`VertexType` coordinate when no cycle exists.
Larger than any vertex count, so domination stays a plain integer comparison.
"""

class InvalidGraph(ValueError): pass
class DuplicateEdge(InvalidGraph): pass
class SelfLoop(InvalidGraph): pass
class DegreeExceeded(InvalidGraph): pass
class BadIndex(InvalidGraph): pass

class NotTwoEdgeConnected(ValueError): pass
class NotTwoConnected(ValueError): pass
class IsCycle(ValueError): pass
class DegreeNotThree(ValueError): pass


@dataclass(frozen=True)
class Graph:
	"""
	Immutable simple undirected graph of maximum degree 3.

	Do not call the constructor directly, use :meth:`build` which validates the input.

	:param n: number of vertices.
	:param edges: sorted tuple of sorted vertex pairs. The index of an edge is its edge id.
	"""
	n: int
	edges: tuple[Edge, ...]

	@staticmethod
	def build(n: int, edge_list: Iterable[Sequence[int]])->Graph:
		"""
		Validate and construct a graph.

		>>> Graph.build(3, [(0, 1), (1, 2), (2, 0), (0, 1)])
		Traceback (most recent call last):
			...
		cubictsp.graph.DuplicateEdge: edge (0, 1) given twice
		>>> Graph.build(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).n2
		3
		"""
		if n<1: raise BadIndex(f"vertex count must be positive, got {n}")
		seen: set[Edge]=set()
		degree=[0]*n
		for pair in edge_list:
			u, v=pair
			if not (0<=u<n and 0<=v<n): raise BadIndex(f"edge ({u}, {v}) has an endpoint outside 0..{n-1}")
			if u==v: raise SelfLoop(f"self-loop at vertex {u}")
			e=(min(u, v), max(u, v))
			if e in seen: raise DuplicateEdge(f"edge {e} given twice")
			seen.add(e)
			degree[u]+=1
			degree[v]+=1
			if degree[u]>3 or degree[v]>3:
				raise DegreeExceeded(f"vertex {u if degree[u]>3 else v} has degree more than 3")
		return Graph(n, tuple(sorted(seen)))

	@staticmethod
	def cycle(n: int)->Graph:
		return Graph.build(n, [(i, (i+1)%n) for i in range(n)])

	@staticmethod
	def from_networkx(nx_graph)->Graph:
		"""
		Convert a :mod:`networkx` graph, relabelling its nodes to ``0..n-1`` in sorted order.
		"""
		nodes=sorted(nx_graph.nodes())
		index={v: i for i, v in enumerate(nodes)}
		return Graph.build(len(nodes), [(index[u], index[v]) for u, v in nx_graph.edges()])

	def to_networkx(self):
		import networkx as nx  # type: ignore
		result=nx.Graph()
		result.add_nodes_from(range(self.n))
		result.add_edges_from(self.edges)
		return result

	@property
	def m(self)->int:
		return len(self.edges)

	@functools.cached_property
	def edge_index(self)->dict[Edge, int]:
		return {e: i for i, e in enumerate(self.edges)}

	@functools.cached_property
	def incident(self)->tuple[tuple[int, ...], ...]:
		"""
		``incident[v]`` is the tuple of edge ids at ``v``, in increasing order.
		"""
		result: list[list[int]]=[[] for _ in range(self.n)]
		for i, (u, v) in enumerate(self.edges):
			result[u].append(i)
			result[v].append(i)
		return tuple(tuple(x) for x in result)

	@functools.cached_property
	def adjacency(self)->tuple[tuple[int, ...], ...]:
		return tuple(tuple(sorted(self.other(e, v) for e in self.incident[v])) for v in range(self.n))

	def degree(self, v: int)->int:
		return len(self.incident[v])

	@functools.cached_property
	def n2(self)->int:
		"""
		Number of vertices of degree two.
		"""
		return sum(1 for v in range(self.n) if self.degree(v)==2)

	@functools.cached_property
	def n3(self)->int:
		return sum(1 for v in range(self.n) if self.degree(v)==3)

	@functools.cached_property
	def n0(self)->int:
		return sum(1 for v in range(self.n) if self.degree(v)==0)

	def other(self, e: int, v: int)->int:
		a, b=self.edges[e]
		assert v==a or v==b, (e, v)
		return b if v==a else a

	def has_edge(self, u: int, v: int)->bool:
		return (min(u, v), max(u, v)) in self.edge_index

	def edge_id(self, u: int, v: int)->int:
		return self.edge_index[min(u, v), max(u, v)]

	def as_edge_id(self, e: EdgeLike)->int:
		if isinstance(e, int): return e
		return self.edge_id(*e)

	def is_cubic(self)->bool:
		return all(self.degree(v)==3 for v in range(self.n))

	@functools.cached_property
	def cut_partners(self)->tuple[frozenset[int], ...]:
		"""
		``cut_partners[e]`` is the set of edges ``f`` such that ``{e, f}`` is an edge cut,
		that is, the bridges of the graph with ``e`` removed.

		Only meaningful for 2-edge-connected graphs, see :func:`two_edge_cut_partners`.
		"""
		return tuple(frozenset(_bridges(self.n, self.edges, skip=frozenset([e]))) for e in range(self.m))

	def __repr__(self)->str:
		return f"Graph.build({self.n}, {list(self.edges)})"


@dataclass(frozen=True)
class ConnectivityReport:
	connected: bool
	two_connected: bool
	two_edge_connected: bool
	bridges: frozenset[int]
	cut_vertices: frozenset[int]
	blocks: tuple[frozenset[int], ...]
	"""
	Vertex sets of the blocks, in discovery order. Isolated vertices are blocks of their own.
	"""


def _incidence(n: int, ends: Sequence[Edge])->list[list[int]]:
	result: list[list[int]]=[[] for _ in range(n)]
	for i, (a, b) in enumerate(ends):
		if a==b: continue  # loops never matter for connectivity
		result[a].append(i)
		result[b].append(i)
	return result

def _bridges(n: int, ends: Sequence[Edge], skip: frozenset[int]=frozenset(), removed: frozenset[int]=frozenset())->list[int]:
	"""
	Bridges of the (multi)graph with edge endpoints ``ends``, ignoring the edge ids in ``skip`` and the vertices in ``removed``.

	Parallel edges are told apart by id so a doubled edge is never a bridge.
	"""
	incidence=_incidence(n, ends)
	disc=[-1]*n
	low=[0]*n
	result: list[int]=[]
	t=0
	for root in range(n):
		if disc[root]>=0 or root in removed: continue
		disc[root]=low[root]=t; t+=1
		stack: list[tuple[int, int, Iterator[int]]]=[(root, -1, iter(incidence[root]))]
		while stack:
			v, parent_edge, it=stack[-1]
			for e in it:
				if e==parent_edge or e in skip: continue
				a, b=ends[e]
				w=b if v==a else a
				if w in removed: continue
				if disc[w]<0:
					disc[w]=low[w]=t; t+=1
					stack.append((w, e, iter(incidence[w])))
					break
				low[v]=min(low[v], disc[w])
			else:
				stack.pop()
				if stack:
					u=stack[-1][0]
					low[u]=min(low[u], low[v])
					if low[v]>disc[u]: result.append(parent_edge)
	result.sort()
	return result

def connectivity_report(g: Graph)->ConnectivityReport:
	"""
	DFS lowpoint computation of bridges, cut vertices and blocks.

	>>> r=connectivity_report(Graph.build(3, [(0, 1), (1, 2)]))
	>>> sorted(r.bridges), r.two_connected
	([0, 1], False)
	>>> r=connectivity_report(Graph.build(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (2, 3)]))
	>>> sorted(r.bridges), sorted(r.cut_vertices), len([b for b in r.blocks if len(b)>2])
	([3], [2, 3], 2)
	"""
	disc=[-1]*g.n
	low=[0]*g.n
	cut_vertices: set[int]=set()
	blocks: list[frozenset[int]]=[]
	bridges: list[int]=[]
	components=0
	t=0
	for root in range(g.n):
		if disc[root]>=0: continue
		components+=1
		disc[root]=low[root]=t; t+=1
		if not g.incident[root]:
			blocks.append(frozenset([root]))
			continue
		root_children=0
		edge_stack: list[int]=[]
		stack: list[tuple[int, int, Iterator[int]]]=[(root, -1, iter(g.incident[root]))]
		while stack:
			v, parent_edge, it=stack[-1]
			for e in it:
				if e==parent_edge: continue
				w=g.other(e, v)
				if disc[w]<0:
					edge_stack.append(e)
					disc[w]=low[w]=t; t+=1
					stack.append((w, e, iter(g.incident[w])))
					break
				if disc[w]<disc[v]:
					edge_stack.append(e)
				low[v]=min(low[v], disc[w])
			else:
				stack.pop()
				if not stack: continue
				u=stack[-1][0]
				low[u]=min(low[u], low[v])
				if low[v]>disc[u]: bridges.append(parent_edge)
				if low[v]>=disc[u]:
					if u==root: root_children+=1
					else: cut_vertices.add(u)
					block: set[int]=set()
					while True:
						f=edge_stack.pop()
						block.update(g.edges[f])
						if f==parent_edge: break
					blocks.append(frozenset(block))
		if root_children>1: cut_vertices.add(root)
	connected=components==1
	return ConnectivityReport(
			connected=connected,
			two_connected=connected and g.n>=3 and not cut_vertices,
			two_edge_connected=connected and g.n>=2 and not bridges,
			bridges=frozenset(bridges),
			cut_vertices=frozenset(cut_vertices),
			blocks=tuple(blocks),
			)

def is_two_connected(g: Graph)->bool:
	return connectivity_report(g).two_connected

def require_two_connected(g: Graph)->None:
	if not is_two_connected(g): raise NotTwoConnected(f"graph on {g.n} vertices is not 2-connected")

def two_edge_cut_partners(g: Graph, e: EdgeLike)->frozenset[int]:
	"""
	All edges ``f`` such that ``{e, f}`` is an edge cut.

	>>> g=Graph.build(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)])
	>>> sorted(two_edge_cut_partners(g, (0, 2)))
	[3]
	"""
	if not connectivity_report(g).two_edge_connected:
		raise NotTwoEdgeConnected(f"graph on {g.n} vertices is not 2-edge-connected")
	return g.cut_partners[g.as_edge_id(e)]

def edge_in_2_edge_cut(g: Graph, e: EdgeLike)->bool:
	"""
	>>> edge_in_2_edge_cut(named("k4"), (0, 1))
	False
	"""
	return bool(two_edge_cut_partners(g, e))

def is_two_edge_cut(g: Graph, e: EdgeLike, f: EdgeLike)->bool:
	return g.as_edge_id(f) in g.cut_partners[g.as_edge_id(e)]

def components(g: Graph, removed: Iterable[int]=())->list[frozenset[int]]:
	"""
	Connected components of ``g`` minus the vertices ``removed``, ordered by smallest vertex.
	"""
	removed_set=frozenset(removed)
	seen: set[int]=set(removed_set)
	result: list[frozenset[int]]=[]
	for s in range(g.n):
		if s in seen: continue
		seen.add(s)
		component=[s]
		queue=deque([s])
		while queue:
			v=queue.popleft()
			for w in g.adjacency[v]:
				if w not in seen:
					seen.add(w)
					component.append(w)
					queue.append(w)
		result.append(frozenset(component))
	return result


@dataclass(frozen=True)
class Partition:
	"""
	A split of the vertices of ``g`` minus some removed set into sides ``a`` and ``b``;
	``cut`` lists the edge ids between the sides.
	"""
	a: frozenset[int]
	b: frozenset[int]
	cut: tuple[int, ...]

def separating_partition(g: Graph, removed: Iterable[int], side_a: Iterable[int], side_b: Iterable[int], max_cut: int, *, connected_sides: bool=False)->Optional[Partition]:
	"""
	Find a partition of ``V(g) - removed`` with ``side_a`` on one side, ``side_b`` on the other
	and at most ``max_cut`` (0 or 1) edges between the sides.

	:param connected_sides: additionally require exactly one edge between the sides and both sides connected.

	>>> p=separating_partition(Graph.build(4, [(0, 1), (1, 2), (2, 3)]), [], [0], [3], 1)
	>>> p is not None and len(p.cut)
	1
	>>> separating_partition(Graph.cycle(4), [], [0], [2], 1) is None
	True
	"""
	assert max_cut in (0, 1)
	removed_set=frozenset(removed)
	a_terms=frozenset(side_a)
	b_terms=frozenset(side_b)
	if a_terms & b_terms: return None
	comps=components(g, removed_set)
	if connected_sides and len(comps)!=1: return None
	a: set[int]=set()
	b: set[int]=set()
	mixed: list[frozenset[int]]=[]
	for c in comps:
		has_a=bool(c & a_terms)
		has_b=bool(c & b_terms)
		if has_a and has_b: mixed.append(c)
		elif has_a: a|=c
		else: b|=c
	if not mixed:
		if connected_sides: return None
		return Partition(frozenset(a), frozenset(b), ())
	if max_cut==0 or len(mixed)>1: return None
	comp,=mixed
	inside=removed_set|(frozenset(range(g.n))-comp)
	for e in _bridges(g.n, g.edges, removed=inside):
		u, v=g.edges[e]
		side=_reach(g, u, inside, skip_edge=e)
		if a_terms & comp<=side and not (b_terms & side):
			return Partition(frozenset(a|side), frozenset(b|(comp-side)), (e,))
		if b_terms & comp<=side and not (a_terms & side):
			return Partition(frozenset(a|(comp-side)), frozenset(b|side), (e,))
	return None

def _reach(g: Graph, s: int, removed: frozenset[int], skip_edge: int=-1)->frozenset[int]:
	seen={s}
	queue=deque([s])
	while queue:
		v=queue.popleft()
		for e in g.incident[v]:
			if e==skip_edge: continue
			w=g.other(e, v)
			if w not in seen and w not in removed:
				seen.add(w)
				queue.append(w)
	return frozenset(seen)


@dataclass(frozen=True)
class Multigraph:
	"""
	Image of :func:`suppress_degree_two`.

	Vertex ``i`` of the multigraph is vertex ``vertices[i]`` of the host graph.
	Edge ``j`` joins ``ends[j]``; ``payloads[j]`` lists the suppressed degree-two host vertices
	in order from ``ends[j][0]`` to ``ends[j][1]``, ``host_edges[j]`` the host edge ids along that path.
	"""
	host_n: int
	vertices: tuple[int, ...]
	ends: tuple[Edge, ...]
	payloads: tuple[tuple[int, ...], ...]
	host_edges: tuple[tuple[int, ...], ...]

	@property
	def n(self)->int:
		return len(self.vertices)

	@property
	def m(self)->int:
		return len(self.ends)

	def degree(self, v: int)->int:
		return sum((a==v)+(b==v) for a, b in self.ends)

	def is_cubic(self)->bool:
		return all(self.degree(v)==3 for v in range(self.n))

	def is_two_edge_connected(self)->bool:
		if self.n<1: return False
		incidence=_incidence(self.n, self.ends)
		seen={0}
		queue=deque([0])
		while queue:
			v=queue.popleft()
			for e in incidence[v]:
				for w in self.ends[e]:
					if w not in seen:
						seen.add(w)
						queue.append(w)
		return len(seen)==self.n and not _bridges(self.n, self.ends)

	def expand(self)->Graph:
		"""
		Rebuild the host graph from the payload paths.
		"""
		result: list[Edge]=[]
		for (a, b), payload in zip(self.ends, self.payloads):
			path=[self.vertices[a], *payload, self.vertices[b]]
			result.extend(zip(path, path[1:]))
		return Graph.build(self.host_n, result)

def suppress_degree_two(g: Graph)->Multigraph:
	"""
	Absorb every degree-two vertex into the payload of a multigraph edge.

	>>> mg=suppress_degree_two(Graph.build(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]))
	>>> mg.n, mg.ends, mg.payloads
	(2, ((0, 1), (0, 1), (0, 1)), ((2,), (3,), (4,)))
	"""
	if g.n<=2: raise NotTwoConnected("graphs with at most two vertices are never treated as 2-connected")
	if any(g.degree(v)<2 for v in range(g.n)): raise NotTwoConnected("vertex of degree less than two")
	branch=[v for v in range(g.n) if g.degree(v)==3]
	if not branch: raise IsCycle("a cycle has no vertex of degree three")
	index={v: i for i, v in enumerate(branch)}
	used=[False]*g.m
	ends: list[Edge]=[]
	payloads: list[tuple[int, ...]]=[]
	host_edges: list[tuple[int, ...]]=[]
	for v in branch:
		for e in g.incident[v]:
			if used[e]: continue
			path: list[int]=[]
			path_edges=[e]
			used[e]=True
			w=g.other(e, v)
			while g.degree(w)==2:
				path.append(w)
				f,=[f for f in g.incident[w] if f!=path_edges[-1]]
				used[f]=True
				path_edges.append(f)
				w=g.other(f, w)
			ends.append((index[v], index[w]))
			payloads.append(tuple(path))
			host_edges.append(tuple(path_edges))
	return Multigraph(g.n, tuple(branch), tuple(ends), tuple(payloads), tuple(host_edges))


@dataclass(frozen=True)
class CycleDescriptor:
	"""
	A cycle of a graph, stored canonically (smallest vertex first, then the smaller neighbor).

	``outside[i]`` is the neighbor of ``vertices[i]`` off the cycle, or ``None`` when ``vertices[i]`` has degree two.
	"""
	vertices: tuple[int, ...]
	outside: tuple[Optional[int], ...]
	deg3: int
	is_theta_cycle: bool=False
	poles: Optional[tuple[int, int]]=None

	@property
	def length(self)->int:
		return len(self.vertices)

	@property
	def vertex_set(self)->frozenset[int]:
		return frozenset(self.vertices)

	def edge_ids(self, g: Graph)->tuple[int, ...]:
		"""
		Edge ids ``vertices[i] vertices[i+1]``, in cycle order.
		"""
		k=self.vertices
		return tuple(g.edge_id(k[i], k[(i+1)%len(k)]) for i in range(len(k)))

	def exits(self, g: Graph)->tuple[Optional[int], ...]:
		return tuple(None if x is None else g.edge_id(v, x) for v, x in zip(self.vertices, self.outside))

	def labeling(self, start: int, reverse: bool=False)->tuple[list[int], list[Optional[int]]]:
		"""
		The cycle read from position ``start``, backwards if ``reverse``, with the matching outside neighbors.

		>>> c=CycleDescriptor((0, 1, 2, 3), (None, 5, 6, None), 2)
		>>> c.labeling(1, reverse=True)
		([1, 0, 3, 2], [5, None, None, 6])
		"""
		k=self.length
		sign=-1 if reverse else 1
		order=[(start+sign*i)%k for i in range(k)]
		return [self.vertices[i] for i in order], [self.outside[i] for i in order]

def canonical_cycle(vertices: Sequence[int])->tuple[int, ...]:
	"""
	>>> canonical_cycle([3, 1, 2])
	(1, 2, 3)
	>>> canonical_cycle([5, 2, 7, 0])
	(0, 5, 2, 7)
	"""
	k=len(vertices)
	i=min(range(k), key=lambda j: vertices[j])
	forward=tuple(vertices[(i+j)%k] for j in range(k))
	backward=tuple(vertices[(i-j)%k] for j in range(k))
	return min(forward, backward)

def describe_cycle(g: Graph, vertices: Sequence[int])->CycleDescriptor:
	vs=canonical_cycle(vertices)
	k=len(vs)
	assert k>=3 and len(set(vs))==k
	outside: list[Optional[int]]=[]
	for i, v in enumerate(vs):
		assert g.has_edge(v, vs[(i+1)%k])
		rest=[w for w in g.adjacency[v] if w!=vs[i-1] and w!=vs[(i+1)%k]]
		outside.append(rest[0] if rest else None)
	deg3=sum(1 for x in outside if x is not None)
	poles=_theta_poles(g, vs, outside)
	return CycleDescriptor(vs, tuple(outside), deg3, poles is not None, poles)

def _theta_poles(g: Graph, vs: tuple[int, ...], outside: list[Optional[int]])->Optional[tuple[int, int]]:
	if len(vs)!=6 or any(x is None for x in outside): return None
	xs=[x for x in outside if x is not None]
	if len(set(xs))!=6 or set(xs)&set(vs): return None
	comps=components(g, vs)
	if len(comps)!=3: return None
	where={x: i for i, c in enumerate(comps) for x in xs if x in c}
	for r in range(3):
		if (where[xs[r]]==where[xs[r+1]] and where[xs[r+3]]==where[xs[(r+4)%6]]
				and where[xs[r+2]]==where[xs[(r+5)%6]]
				and len({where[xs[r]], where[xs[r+3]], where[xs[r+2]]})==3):
			a, b=vs[r+2], vs[(r+5)%6]
			return (min(a, b), max(a, b))
	return None

def short_cycles(g: Graph, max_length: int)->list[CycleDescriptor]:
	"""
	All cycles of length at most ``max_length``, sorted by length then vertices.

	>>> [c.vertices for c in short_cycles(named("k4"), 3)]
	[(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]
	"""
	found: list[tuple[int, ...]]=[]
	for s in range(g.n):
		path=[s]
		on_path={s}
		def extend()->None:
			v=path[-1]
			for w in g.adjacency[v]:
				if w==s and len(path)>=3 and path[1]<path[-1]:
					found.append(tuple(path))
				elif w>s and w not in on_path and len(path)<max_length:
					path.append(w)
					on_path.add(w)
					extend()
					path.pop()
					on_path.discard(w)
		extend()
	return sorted((describe_cycle(g, c) for c in found), key=lambda c: (c.length, c.vertices))

def enumerate_cycles_bounded(g: Graph, k: int)->list[CycleDescriptor]:
	"""
	All cycles with at most ``k`` vertices of degree three.

	The search runs on the suppressed multigraph, where such cycles have at most ``k`` vertices.

	>>> len(enumerate_cycles_bounded(named("k4"), 3))
	4
	>>> enumerate_cycles_bounded(named("petersen"), 4)
	[]
	>>> len(enumerate_cycles_bounded(named("k23"), 2))
	3
	"""
	assert 0<=k<=7
	if classify_shape(g).kind==ShapeKind.cycle:
		return [describe_cycle(g, _walk_cycle(g))]
	mg=suppress_degree_two(g)
	incidence=_incidence(mg.n, mg.ends)
	found: list[tuple[int, list[int]]]=[]
	for e, (a, b) in enumerate(mg.ends):
		if a==b and k>=1: found.append((a, [e]))
	for s in range(mg.n):
		edges: list[int]=[]
		on_path={s}
		def extend(v: int)->None:
			for e in incidence[v]:
				if edges and e==edges[-1]: continue
				a, b=mg.ends[e]
				w=b if v==a else a
				if w==s and edges and edges[0]<e:
					found.append((s, edges+[e]))
				elif w>s and w not in on_path and len(on_path)<k:
					edges.append(e)
					on_path.add(w)
					extend(w)
					edges.pop()
					on_path.discard(w)
		extend(s)
	result: list[CycleDescriptor]=[]
	for v, cycle_edges in found:
		vertices: list[int]=[]
		for e in cycle_edges:
			a, b=mg.ends[e]
			if a==v:
				vertices.append(mg.vertices[a]); vertices.extend(mg.payloads[e]); v=b
			else:
				vertices.append(mg.vertices[b]); vertices.extend(reversed(mg.payloads[e])); v=a
		result.append(describe_cycle(g, vertices))
	result.sort(key=lambda c: (c.deg3, c.length, c.vertices))
	return result

def _walk_cycle(g: Graph)->list[int]:
	result=[0]
	prev=-1
	v=0
	while True:
		w=next(x for x in g.adjacency[v] if x!=prev)
		if w==0: return result
		result.append(w)
		prev, v=v, w

def six_cycles(g: Graph)->list[CycleDescriptor]:
	return [c for c in short_cycles(g, 6) if c.length==6]

def detect_theta_cycles(g: Graph)->list[CycleDescriptor]:
	"""
	>>> detect_theta_cycles(named("k4"))
	[]
	>>> [c.poles for c in detect_theta_cycles(named("theta_figure"))]
	[(2, 5)]
	"""
	return [c for c in six_cycles(g) if c.is_theta_cycle]

def detect_diamonds(g: Graph)->list[tuple[int, int, int, int]]:
	"""
	Induced copies of K4 minus an edge, as ``(v1, v2, w1, w2)`` where ``v1, v2`` are the two
	vertices of degree two inside the diamond and ``w1 w2`` is its middle edge.

	>>> detect_diamonds(named("k4"))
	[]
	>>> detect_diamonds(named("two_diamonds"))
	[(0, 1, 2, 3), (4, 5, 6, 7)]
	"""
	result: list[tuple[int, int, int, int]]=[]
	for w1, w2 in g.edges:
		common=sorted(set(g.adjacency[w1])&set(g.adjacency[w2]))
		if len(common)==2 and not g.has_edge(*common):
			result.append((common[0], common[1], w1, w2))
	result.sort()
	return result


@dataclass(frozen=True, order=True)
class VertexType:
	"""
	Sorted triple of shortest cycle lengths through the three pairs of edges at a vertex.
	"""
	lengths: tuple[int, int, int]

	def __post_init__(self)->None:
		assert list(self.lengths)==sorted(self.lengths)

	def dominates(self, other: VertexType)->bool:
		"""
		>>> VertexType((6, 8, 8)).dominates(VertexType((6, 7, 8)))
		True
		"""
		return all(a>=b for a, b in zip(self.lengths, other.lengths))

	def __str__(self)->str:
		return "("+",".join("inf" if x>=INFINITE else str(x) for x in self.lengths)+")"

def _distance_avoiding(g: Graph, s: int, t: int, avoid: int)->int:
	dist={s: 0}
	queue=deque([s])
	while queue:
		v=queue.popleft()
		if v==t: return dist[v]
		for w in g.adjacency[v]:
			if w!=avoid and w not in dist:
				dist[w]=dist[v]+1
				queue.append(w)
	return INFINITE

def vertex_type(g: Graph, v: int)->VertexType:
	"""
	>>> vertex_type(named("k4"), 0)
	VertexType(lengths=(3, 3, 3))
	>>> vertex_type(named("petersen"), 0)
	VertexType(lengths=(5, 5, 5))
	"""
	if g.degree(v)!=3: raise DegreeNotThree(f"vertex {v} has degree {g.degree(v)}")
	result=[]
	for a, b in itertools.combinations(g.adjacency[v], 2):
		d=_distance_avoiding(g, a, b, v)
		result.append(INFINITE if d>=INFINITE else d+2)
	a, b, c=sorted(result)
	return VertexType((a, b, c))


class ShapeKind(enum.Enum):
	cycle=enum.auto()
	theta_graph=enum.auto()
	k4=enum.auto()
	other=enum.auto()

@dataclass(frozen=True)
class Shape:
	kind: ShapeKind
	paths: Optional[tuple[int, int, int]]=None
	"""
	For a theta graph, the numbers of internal vertices of its three paths, sorted.
	"""

	@property
	def basic(self)->bool:
		return self.kind!=ShapeKind.other

def classify_shape(g: Graph)->Shape:
	"""
	>>> classify_shape(Graph.cycle(7)).kind
	<ShapeKind.cycle: 1>
	>>> classify_shape(named("k23"))
	Shape(kind=<ShapeKind.theta_graph: 2>, paths=(1, 1, 1))
	>>> classify_shape(named("prism")).kind
	<ShapeKind.other: 4>
	"""
	report=connectivity_report(g)
	if not report.connected or g.n<3: return Shape(ShapeKind.other)
	degrees=[g.degree(v) for v in range(g.n)]
	if all(d==2 for d in degrees): return Shape(ShapeKind.cycle)
	if g.n==4 and g.m==6: return Shape(ShapeKind.k4)
	if sum(1 for d in degrees if d==3)==2 and all(d in (2, 3) for d in degrees):
		mg=suppress_degree_two(g)
		if mg.n==2 and all(a!=b for a, b in mg.ends):
			a, b, c=sorted(len(p) for p in mg.payloads)
			return Shape(ShapeKind.theta_graph, (a, b, c))
	return Shape(ShapeKind.other)


class GraphEditor:
	"""
	Mutable scratch copy of a graph used to build reduced graphs and generator outputs.

	Old vertices keep their ids, new vertices get ids from ``g.n`` upwards.
	:meth:`finish` relabels the surviving vertices to ``0..n'-1`` (old ones first, in order)
	and returns the origin of every new id.
	"""
	def __init__(self, g: Graph)->None:
		self.g=g
		self.alive: set[int]=set(range(g.n))
		self.edge_set: set[Edge]=set(g.edges)
		self.next_id=g.n

	def _key(self, u: int, v: int)->Edge:
		return (min(u, v), max(u, v))

	def remove_vertices(self, vs: Iterable[int])->None:
		for v in vs:
			self.alive.discard(v)
		self.edge_set={e for e in self.edge_set if e[0] in self.alive and e[1] in self.alive}

	def remove_edge(self, u: int, v: int)->None:
		self.edge_set.remove(self._key(u, v))

	def new_vertex(self)->int:
		v=self.next_id
		self.next_id+=1
		self.alive.add(v)
		return v

	def add_edge(self, u: int, v: int)->None:
		"""
		Raise :class:`DuplicateEdge` or :class:`SelfLoop` instead of building a multigraph.
		"""
		if u==v: raise SelfLoop(f"self-loop at {u}")
		key=self._key(u, v)
		if key in self.edge_set: raise DuplicateEdge(f"edge {key} already present")
		assert u in self.alive and v in self.alive
		self.edge_set.add(key)

	def add_path(self, u: int, v: int, internal: int)->list[int]:
		"""
		Join ``u`` and ``v`` by a path with ``internal`` new internal vertices; return them.
		"""
		inner=[self.new_vertex() for _ in range(internal)]
		path=[u, *inner, v]
		for a, b in zip(path, path[1:]):
			self.add_edge(a, b)
		return inner

	def subdivide(self, u: int, v: int, times: int=1)->list[int]:
		self.remove_edge(u, v)
		return self.add_path(u, v, times)

	def relabelling(self)->dict[int, int]:
		"""
		Position of every alive vertex in the graph returned by :meth:`finish`.
		"""
		return {v: i for i, v in enumerate(sorted(self.alive))}

	def finish(self)->tuple[Graph, tuple[Optional[int], ...]]:
		order=sorted(self.alive)
		relabel=self.relabelling()
		graph=Graph.build(len(order), [(relabel[a], relabel[b]) for a, b in self.edge_set])
		origin=tuple(v if v<self.g.n else None for v in order)
		return graph, origin


_NAMED: dict[str, tuple[int, list[Edge]]]={
		"k4": (4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
		"k33": (6, [(a, b) for a in range(3) for b in range(3, 6)]),
		"k23": (5, [(a, b) for a in range(2) for b in range(2, 5)]),
		"prism": (6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)]),
		"petersen": (10, [(i, (i+1)%5) for i in range(5)]+[(i, i+5) for i in range(5)]+[(5+i, 5+(i+2)%5) for i in range(5)]),
		"heawood": (14, [(i, (i+1)%14) for i in range(14)]+[(i, (i+5)%14) for i in range(0, 14, 2)]),
		# two diamonds, the degree-two vertices of one joined to those of the other
		"two_diamonds": (8, [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (4, 6), (4, 7), (5, 6), (5, 7), (6, 7), (0, 4), (1, 5)]),
		# a 6-cycle 0..5 whose outside neighbors pair up as {x0,x1}, {x3,x4}, {x2,x5}
		"theta_figure": (12, [(i, (i+1)%6) for i in range(6)]
			+[(0, 6), (1, 7), (6, 7), (3, 8), (4, 9), (8, 9), (2, 10), (5, 11), (10, 11)]),
		}

def named(name: str)->Graph:
	"""
	A few small graphs used throughout tests and docs.

	>>> named("petersen").is_cubic(), named("heawood").n
	(True, 14)
	"""
	n, edges=_NAMED[name]
	return Graph.build(n, edges)

def named_graphs()->list[str]:
	return sorted(_NAMED)
