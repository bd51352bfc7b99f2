r"""
From spanning Eulerian subgraphs to TSP walks, and the two end-to-end algorithms.

A spanning Eulerian subgraph ``F`` with ``c`` cycles and ``i`` isolated vertices is connected
into a closed walk by doubling the ``c+i-1`` edges of a spanning tree of the graph with the
components of ``F`` contracted, giving length ``n-2+exc(F)``.

>>> walk=tsp_walk_subcubic(named("k4"))
>>> walk.length, walk.length<=subcubic_bound(named("k4"))
(4, True)
>>> tsp_walk_subcubic(named("k23")).length
6
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

import networkx as nx  # type: ignore

from .config import GlobalConfiguration, get_config
from .eulerian import EulerianSubgraph, NotSpanning, solve_basic, solve_clean
from .graph import Edge, Graph, GraphEditor, components, connectivity_report, require_two_connected
from .reduction import GraphKind, ReductionTrace, lift_cases, reduce_to_terminal

logger=logging.getLogger(__name__)

class NotConnected(ValueError): pass
class NotCubic(ValueError): pass
class WalkBoundViolated(RuntimeError): pass


@dataclass(frozen=True)
class TspWalk:
	"""
	Closed walk ``vertices[0], ..., vertices[-1]==vertices[0]``; its length is the number of steps.
	"""
	host: Graph
	vertices: tuple[int, ...]

	def __post_init__(self)->None:
		assert self.vertices and self.vertices[0]==self.vertices[-1]
		assert all(self.host.has_edge(u, v) for u, v in zip(self.vertices, self.vertices[1:]))

	@property
	def length(self)->int:
		return len(self.vertices)-1

	def covers(self)->bool:
		return set(self.vertices)==set(range(self.host.n))


def _euler_tour(n: int, edges: Iterable[Edge], start: int)->tuple[int, ...]:
	multigraph=nx.MultiGraph()
	multigraph.add_nodes_from(range(n))
	multigraph.add_edges_from(edges)
	if multigraph.number_of_edges()==0: return (start,)
	tour=[start]
	for _, v in nx.eulerian_circuit(multigraph, source=start):
		tour.append(v)
	return tuple(tour)

def connector_edges(g: Graph, f: EulerianSubgraph)->list[Edge]:
	"""
	Edges of a spanning tree of ``g`` with the components of ``f`` contracted,
	found by breadth first search from vertex 0.
	"""
	component=[-1]*g.n
	for index, members in enumerate(f.components()):
		for v in members:
			component[v]=index
	reached={component[0]}
	result: list[Edge]=[]
	queue=deque(sorted(v for v in range(g.n) if component[v]==component[0]))
	while queue:
		v=queue.popleft()
		for w in g.adjacency[v]:
			if component[w] in reached: continue
			reached.add(component[w])
			result.append((v, w))
			queue.extend(sorted(u for u in range(g.n) if component[u]==component[w]))
	if len(reached)!=len(f.components()): raise NotConnected("graph is not connected")
	return result

def assemble_walk(g: Graph, f: EulerianSubgraph)->TspWalk:
	"""
	>>> prism=named("prism")
	>>> assemble_walk(prism, EulerianSubgraph.from_edges(prism, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])).length
	8
	"""
	if f.host!=g: raise NotSpanning("subgraph does not span this graph")
	connectors=connector_edges(g, f)
	walk=TspWalk(g, _euler_tour(g.n, [*f.edges, *connectors, *connectors], 0))
	assert walk.length==g.n-2+f.exc, (walk.length, g.n, f.exc)
	return walk

def double_tree_walk(g: Graph)->TspWalk:
	"""
	Baseline: double a breadth first spanning tree, length ``2(n-1)``.
	"""
	tree=connector_edges(g, EulerianSubgraph.empty(g))
	return TspWalk(g, _euler_tour(g.n, [*tree, *tree], 0))

def subcubic_bound(g: Graph)->Fraction:
	"""
	>>> subcubic_bound(named("k23"))
	Fraction(44, 7)
	"""
	return Fraction(9*g.n+2*g.n2, 7)-1

def cubic_bound(g: Graph)->Fraction:
	"""
	``9/7`` of the vertices outside single-vertex 2-edge-connected components, plus two per bridge.
	"""
	bridges=connectivity_report(g).bridges
	trivial=sum(1 for c in _bridge_components(g, bridges) if len(c)==1)
	return Fraction(9*(g.n-trivial), 7)+2*len(bridges)


@dataclass(frozen=True)
class SolveReport:
	walk: TspWalk
	bound: Fraction
	excess: int
	steps: int=0
	terminal_kind: Optional[str]=None
	bridges: int=0
	traces: tuple[ReductionTrace, ...]=field(default=(), compare=False, repr=False)
	lift_cases: tuple[tuple[str, ...], ...]=field(default=(), compare=False, repr=False)

	def record(self)->dict:
		return {
				"n": self.walk.host.n,
				"n2": self.walk.host.n2,
				"length": self.walk.length,
				"bound": str(self.bound),
				"bound_float": float(self.bound),
				"excess": self.excess,
				"steps": self.steps,
				"terminal": self.terminal_kind,
				"bridges": self.bridges,
				}


def solve_subcubic(g: Graph, *, config: Optional[GlobalConfiguration]=None)->tuple[SolveReport, ReductionTrace]:
	"""
	Reduce, solve the terminal graph, lift back and assemble the walk.
	"""
	config=get_config(config)
	require_two_connected(g)
	trace=reduce_to_terminal(g)
	if trace.terminal_kind==GraphKind.basic:
		f_terminal=solve_basic(trace.terminal)
	else:
		f_terminal=solve_clean(trace.terminal, config=config)
	f, cases=lift_cases(trace, f_terminal, config=config)
	walk=assemble_walk(g, f)
	bound=subcubic_bound(g)
	if walk.length>bound: raise WalkBoundViolated(f"walk of length {walk.length} exceeds {bound}")
	logger.info("n=%d n2=%d: walk length %d, bound %s", g.n, g.n2, walk.length, bound)
	return SolveReport(walk, bound, f.exc, len(trace.steps), trace.terminal_kind.name, 0, (trace,), (cases,)), trace

def tsp_walk_subcubic(g: Graph, *, config: Optional[GlobalConfiguration]=None)->TspWalk:
	return solve_subcubic(g, config=config)[0].walk


def _bridge_components(g: Graph, bridges: Iterable[int])->list[frozenset[int]]:
	editor=GraphEditor(g)
	for e in bridges:
		editor.remove_edge(*g.edges[e])
	rest, _=editor.finish()
	return components(rest)

def _induced(g: Graph, vertices: frozenset[int])->tuple[Graph, tuple[int, ...]]:
	editor=GraphEditor(g)
	editor.remove_vertices(v for v in range(g.n) if v not in vertices)
	sub, origin=editor.finish()
	return sub, tuple(v for v in origin if v is not None)

def solve_cubic(g: Graph, *, config: Optional[GlobalConfiguration]=None)->SolveReport:
	"""
	Solve every 2-edge-connected component on its own and join the walks through doubled bridges.

	The walks are not spliced one by one. The edges of every component walk and two copies of every bridge
	form a connected multigraph with all degrees even, and a single Euler tour of it is the result.
	This is the same walk family as rotating each component tour to start at a bridge end and splicing
	it in where the doubled bridge arrives: both traverse each component walk once and each bridge twice,
	so the lengths agree.

	>>> g=Graph.build(8, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (0, 4), (4, 5), (4, 6), (5, 6), (5, 7), (6, 7), (3, 7)])
	>>> report=solve_cubic(g)
	>>> report.bridges, report.walk.length<=report.bound
	(0, True)
	"""
	config=get_config(config)
	report=connectivity_report(g)
	if not report.connected: raise NotConnected("graph is not connected")
	if not g.is_cubic(): raise NotCubic(f"graph has {g.n2} vertices of degree two and {g.n-g.n2-g.n3} of lower degree")
	if not report.bridges:
		result, _=solve_subcubic(g, config=config)
		return SolveReport(result.walk, cubic_bound(g), result.excess, result.steps, result.terminal_kind, 0, result.traces, result.lift_cases)

	edges: list[Edge]=[g.edges[e] for e in report.bridges]*2
	traces: list[ReductionTrace]=[]
	cases: list[tuple[str, ...]]=[]
	for members in _bridge_components(g, report.bridges):
		if len(members)==1: continue
		sub, origin=_induced(g, members)
		sub_report, trace=solve_subcubic(sub, config=config)
		traces.append(trace)
		cases.extend(sub_report.lift_cases)
		walk=sub_report.walk.vertices
		edges.extend((origin[u], origin[v]) for u, v in zip(walk, walk[1:]))
	walk=TspWalk(g, _euler_tour(g.n, edges, 0))
	bound=cubic_bound(g)
	if walk.length>bound: raise WalkBoundViolated(f"walk of length {walk.length} exceeds {bound}")
	logger.info("cubic n=%d with %d bridges: walk length %d, bound %s", g.n, len(report.bridges), walk.length, bound)
	return SolveReport(walk, bound, walk.length-g.n+2, sum(len(t.steps) for t in traces), None, len(report.bridges), tuple(traces), tuple(cases))

def approximate_cubic_tsp(g: Graph, *, config: Optional[GlobalConfiguration]=None)->TspWalk:
	return solve_cubic(g, config=config).walk

def lower_bound(g: Graph)->int:
	"""
	Every TSP walk of a connected graph visits ``n`` vertices and crosses each bridge twice.
	"""
	bridges=connectivity_report(g).bridges
	trivial=sum(1 for c in _bridge_components(g, bridges) if len(c)==1)
	return max(g.n, g.n-trivial+2*len(bridges))
