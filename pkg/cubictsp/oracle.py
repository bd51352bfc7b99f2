r"""
Brute force ground truth for small graphs.

Nothing here is clever, and nothing here shares code with the reduction engine or the matching
machinery beyond the graph and subgraph types, so that tests can compare the two.

>>> sum(1 for _ in enumerate_eulerian(named("k4")))
8
>>> minexc_bruteforce(named("petersen")), tsp_bruteforce(named("petersen"))
(3, 11)
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional, Sequence, Union

from .completion import LiftBoundViolated
from .config import GlobalConfiguration, get_config
from .eulerian import EulerianSubgraph
from .graph import Graph, connectivity_report
from .matching import DecompositionFailed, MatchingDecomposition, NoPerfectMatching, PerfectMatching
from .reduction import ReductionStep
from .walk import TspWalk

logger=logging.getLogger(__name__)

class TooLarge(ValueError): pass
class OracleMismatch(RuntimeError): pass


@dataclass(frozen=True)
class Verdict:
	"""
	Result of a check. Falsy when some invariant fails; ``failures`` names each violation.
	"""
	failures: tuple[str, ...]=()
	checked: int=0

	@property
	def ok(self)->bool:
		return not self.failures

	def __bool__(self)->bool:
		return self.ok


def _check_size(g: Graph, limit: int, what: str)->None:
	if g.n>limit: raise TooLarge(f"{what} is limited to {limit} vertices, graph has {g.n}")

def enumerate_eulerian(g: Graph, *, config: Optional[GlobalConfiguration]=None)->Iterator[EulerianSubgraph]:
	"""
	All spanning Eulerian subgraphs, as packings of vertex-disjoint cycles.
	Each packing is generated once: the smallest undecided vertex is either isolated or
	on a cycle through larger undecided vertices only.

	>>> sum(1 for _ in enumerate_eulerian(named("k23")))
	4
	"""
	_check_size(g, get_config(config).oracle_vertex_limit, "cycle packing enumeration")
	decided=[False]*g.n
	chosen: list[int]=[]

	def cycles_through(s: int)->Iterator[list[int]]:
		path=[s]
		def extend()->Iterator[list[int]]:
			v=path[-1]
			for w in g.adjacency[v]:
				if w==s and len(path)>=3 and path[1]<path[-1]:
					yield list(path)
				elif w>s and not decided[w] and w not in path:
					path.append(w)
					yield from extend()
					path.pop()
		yield from extend()

	def go()->Iterator[EulerianSubgraph]:
		s=next((v for v in range(g.n) if not decided[v]), None)
		if s is None:
			yield EulerianSubgraph(g, frozenset(chosen))
			return
		decided[s]=True
		yield from go()
		for cycle in list(cycles_through(s)):
			ids=[g.edge_id(cycle[i], cycle[(i+1)%len(cycle)]) for i in range(len(cycle))]
			for v in cycle[1:]:
				decided[v]=True
			chosen.extend(ids)
			yield from go()
			del chosen[-len(ids):]
			for v in cycle[1:]:
				decided[v]=False
		decided[s]=False

	yield from go()

def _fundamental_cycles(g: Graph)->list[frozenset[int]]:
	parent_edge=[-1]*g.n
	depth=[-1]*g.n
	tree: set[int]=set()
	for root in range(g.n):
		if depth[root]>=0: continue
		depth[root]=0
		stack=[root]
		while stack:
			v=stack.pop()
			for e in g.incident[v]:
				w=g.other(e, v)
				if depth[w]<0:
					depth[w]=depth[v]+1
					parent_edge[w]=e
					tree.add(e)
					stack.append(w)
	result=[]
	for e, (u, v) in enumerate(g.edges):
		if e in tree: continue
		cycle={e}
		while u!=v:
			if depth[u]<depth[v]: u, v=v, u
			cycle^={parent_edge[u]}
			u=g.other(parent_edge[u], u)
		result.append(frozenset(cycle))
	return result

def cycle_space_dimension(g: Graph)->int:
	return len(_fundamental_cycles(g))

def enumerate_even_subgraphs(g: Graph, *, limit: Optional[int]=None, config: Optional[GlobalConfiguration]=None)->Iterator[EulerianSubgraph]:
	"""
	All even subgraphs by a Gray code walk over a cycle basis. In a subcubic graph every vertex of an even
	subgraph has degree 0 or 2, so these are exactly the spanning Eulerian subgraphs.

	>>> sum(1 for _ in enumerate_even_subgraphs(named("k4")))
	8
	"""
	basis=_fundamental_cycles(g)
	limit=get_config(config).verify_step_dimension_limit if limit is None else limit
	if len(basis)>limit: raise TooLarge(f"cycle space dimension {len(basis)} exceeds {limit}")
	current: frozenset[int]=frozenset()
	yield EulerianSubgraph(g, current)
	for step in range(1, 1<<len(basis)):
		# flip the basis element of the lowest set bit
		current=current^basis[(step&-step).bit_length()-1]
		yield EulerianSubgraph(g, current)

def minexc_bruteforce(g: Graph, *, config: Optional[GlobalConfiguration]=None)->int:
	"""
	>>> minexc_bruteforce(named("k4")), minexc_bruteforce(named("k23"))
	(2, 3)
	"""
	return min(f.exc for f in enumerate_eulerian(g, config=config))

def tsp_multigraph_bruteforce(g: Graph, *, config: Optional[GlobalConfiguration]=None)->int:
	"""
	Fewest edges of a connected spanning Eulerian multigraph using every edge at most twice.

	Depth first over the multiplicity (0, 1 or 2) of each edge. A vertex is checked as soon as its
	last edge is decided: its degree must be even and positive. Connectivity is checked on complete
	assignments, and a partial assignment is dropped once it cannot beat the best one found.

	>>> tsp_multigraph_bruteforce(named("k23")), tsp_multigraph_bruteforce(Graph.cycle(5))
	(6, 5)
	"""
	_check_size(g, get_config(config).oracle_multigraph_limit, "multigraph search")
	if not connectivity_report(g).connected: raise ValueError("graph is not connected")
	if g.n==1: return 0
	order=_edges_breadth_first(g)
	degree=[0]*g.n
	remaining=[g.degree(v) for v in range(g.n)]
	multiplicity=[0]*g.m
	# a doubled spanning tree is always feasible
	best=2*(g.n-1)

	def deficit()->int:
		need=sum(2 if d==0 else d%2 for d in degree)
		return (need+1)//2

	def connected()->bool:
		parent=list(range(g.n))
		def find(a: int)->int:
			while parent[a]!=a:
				parent[a]=parent[parent[a]]
				a=parent[a]
			return a
		count=g.n
		for e, k in enumerate(multiplicity):
			if not k: continue
			a, b=(find(v) for v in g.edges[e])
			if a!=b:
				parent[a]=b
				count-=1
		return count==1

	def go(index: int, cost: int)->None:
		nonlocal best
		if cost+deficit()>=best: return
		if index==len(order):
			if connected(): best=cost
			return
		e=order[index]
		u, v=g.edges[e]
		remaining[u]-=1
		remaining[v]-=1
		for k in (1, 0, 2):
			degree[u]+=k
			degree[v]+=k
			multiplicity[e]=k
			if all(remaining[w] or (degree[w] and degree[w]%2==0) for w in (u, v)):
				go(index+1, cost+k)
			degree[u]-=k
			degree[v]-=k
		multiplicity[e]=0
		remaining[u]+=1
		remaining[v]+=1

	go(0, 0)
	return best

def _edges_breadth_first(g: Graph)->list[int]:
	# vertices close early, so that parity prunes high in the search tree
	order: list[int]=[]
	seen_edges: set[int]=set()
	seen={0}
	queue=[0]
	for v in queue:
		for e in g.incident[v]:
			if e in seen_edges: continue
			seen_edges.add(e)
			order.append(e)
			w=g.other(e, v)
			if w not in seen:
				seen.add(w)
				queue.append(w)
	return order

def tsp_bruteforce(g: Graph, *, config: Optional[GlobalConfiguration]=None)->int:
	"""
	``n-2+minexc``, checked against :func:`tsp_multigraph_bruteforce` when the graph is small enough.

	>>> tsp_bruteforce(Graph.cycle(5))
	5
	"""
	config=get_config(config)
	by_excess=g.n-2+minexc_bruteforce(g, config=config)
	if g.n<=config.oracle_multigraph_limit:
		by_multigraph=tsp_multigraph_bruteforce(g, config=config)
		if by_multigraph!=by_excess:
			raise OracleMismatch(f"n-2+minexc gives {by_excess}, multigraph search gives {by_multigraph}")
	return by_excess


def verify_walk(g: Graph, walk: Union[TspWalk, Sequence[int]])->Verdict:
	"""
	>>> verify_walk(Graph.cycle(5), [0, 1, 2, 3, 4, 0]).ok
	True
	>>> verify_walk(Graph.cycle(5), [0, 1, 2, 1, 0]).failures
	('uncovered vertex 3', 'uncovered vertex 4')
	"""
	vertices=list(walk.vertices if isinstance(walk, TspWalk) else walk)
	failures: list[str]=[]
	if not vertices: return Verdict(("empty walk",))
	if vertices[0]!=vertices[-1]: failures.append("walk is not closed")
	for u, v in zip(vertices, vertices[1:]):
		if not (0<=u<g.n and 0<=v<g.n and u!=v and g.has_edge(u, v)):
			failures.append(f"step {u} -> {v} is not an edge")
	seen=set(vertices)
	failures.extend(f"uncovered vertex {v}" for v in range(g.n) if v not in seen)
	return Verdict(tuple(failures), len(vertices)-1)

def verify_decomposition(d: MatchingDecomposition)->Verdict:
	failures: list[str]=[]
	for index, matching in enumerate(d.matchings):
		try:
			PerfectMatching.from_edges(d.multigraph, sorted(matching.edges))
		except NoPerfectMatching as e:
			failures.append(f"matching {index}: {e}")
	try:
		d.verify()
	except DecompositionFailed as e:
		failures.append(str(e))
	return Verdict(tuple(failures), d.size)

def verify_step(step: ReductionStep, *, config: Optional[GlobalConfiguration]=None)->Verdict:
	"""
	Lift every spanning Eulerian subgraph of ``step.after`` and check ``exc(F) <= exc(F')+delta/4``.
	Also checks the size bookkeeping of the step.
	"""
	config=get_config(config)
	before, after=step.before, step.after
	failures: list[str]=[]
	if not connectivity_report(after).two_connected: failures.append("reduced graph is not 2-connected")
	if after.n>=before.n: failures.append(f"vertex count did not decrease ({before.n} -> {after.n})")
	delta=(before.n+before.n2)-(after.n+after.n2)
	if delta!=step.delta: failures.append(f"delta is {delta}, step reports {step.delta}")
	if delta<0: failures.append(f"negative delta {delta}")
	checked=0
	bound=Fraction(delta, 4)
	for f_after in enumerate_even_subgraphs(after, config=config):
		checked+=1
		try:
			f=step.lift(f_after, config=config)
		except LiftBoundViolated as e:
			failures.append(f"F' with edges {f_after.edges}: {e}")
			continue
		if f.exc>f_after.exc+bound:
			failures.append(f"F' with edges {f_after.edges}: lifted excess {f.exc} exceeds {f_after.exc}+{delta}/4")
	logger.debug("verified %s on %d subgraphs, %d failures", step.rule.code, checked, len(failures))
	return Verdict(tuple(failures), checked)
