r"""
Reductions of 2-connected subcubic graphs.

A reduction replaces a small configuration around a cycle by a smaller gadget, giving a 2-connected
subcubic graph ``G'`` with ``n(G') < n(G)`` and ``delta = (n+n2)(G) - (n+n2)(G') >= 0``,
such that every spanning Eulerian subgraph ``F'`` of ``G'`` lifts to one of ``G`` with
``exc(F) <= exc(F') + delta/4``.

Repeating :func:`find_reduction` ends in a graph that is *basic* (a cycle, a theta graph or `K_4`)
or *clean* (see :func:`classify_graph`).

>>> trace=reduce_to_terminal(named("prism"))
>>> [step.rule.code for step in trace.steps], trace.terminal_kind
(['R-C3', 'R-C3'], <GraphKind.basic: 1>)
>>> classify_graph(named("petersen"))
<GraphKind.improper: 4>

.. seealso::
	:mod:`cubictsp.completion` for how a step lifts subgraphs.
"""

from __future__ import annotations

import enum
import itertools
import json
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Optional, Sequence, Union

from .completion import Gadget, Rerouting, changed_vertices, check_lift_bound, reroute
from .config import GlobalConfiguration, get_config
from .eulerian import EulerianSubgraph, NotSpanning
from .graph import (
		CycleDescriptor, Graph, GraphEditor, InvalidGraph, Multigraph, NotTwoEdgeConnected, Partition,
		classify_shape, components, describe_cycle, enumerate_cycles_bounded, is_two_connected, require_two_connected,
		separating_partition, short_cycles,
		)

logger=logging.getLogger(__name__)

class HypothesisViolated(ValueError):
	def __init__(self, rule: RuleId, reason: str)->None:
		super().__init__(f"{rule.code}: {reason}")
		self.rule=rule
		self.reason=reason

class InternalCatalogGap(RuntimeError): pass
class DegreeTooSmall(ValueError): pass


class GraphKind(enum.Enum):
	basic=enum.auto()
	proper_not_clean=enum.auto()
	clean=enum.auto()
	improper=enum.auto()

class RuleId(enum.Enum):
	"""
	The reduction rules. ``code`` is the short name used in traces, ``anchor`` describes the configuration.
	"""
	c2e=("R-C2E", "cycle with at most two vertices of degree three")
	c3=("R-C3", "cycle with three vertices of degree three")
	c4=("R-C4", "cycle with four vertices of degree three")
	c5=("R-C5", "cycle of length five or six with five vertices of degree three")
	six_opp3=("R6-OPP3", "alternate exits of a 6-cycle split with no edge between the sides")
	six_ob1=("R6-OB1", "two exits at distance two split off by at most one edge")
	six_ob0=("R6-OB0", "two adjacent exits split off with no edge, not a theta-cycle")
	six_oppa=("R6-OPPA", "opposite exits in different components")
	six_nocut=("R6-NOCUT", "6-cycle edge in a 2-edge-cut")
	six_main=("R6-MAIN", "exit not contained in a 2-edge-cut")
	six_no2e=("R6-NO2E", "opposite exits both outside 2-edge-cuts")
	six_no26=("R6-NO26", "intersecting 6-cycles, one not a theta-cycle")
	six_adj=("R6-ADJ", "two non-opposite exits forming a 2-edge-cut")
	six_oppcuts=("R6-OPPCUTS", "two pairs of opposite exits forming 2-edge-cuts")
	seven_deg2=("R7-DEG2", "7-cycle with a vertex of degree two")
	seven_cuts=("R7-CUTS", "cycle edges each in a 2-edge-cut but not forming one together")

	@property
	def code(self)->str:
		return self.value[0]

	@property
	def anchor(self)->str:
		return self.value[1]

	@staticmethod
	def from_code(code: str)->RuleId:
		for rule in RuleId:
			if rule.code==code: return rule
		raise KeyError(code)

Witness=Union[CycleDescriptor, tuple[CycleDescriptor, CycleDescriptor]]

def witness_cycles(witness: Witness)->tuple[CycleDescriptor, ...]:
	return witness if isinstance(witness, tuple) else (witness,)


@dataclass(frozen=True)
class ReductionStep:
	"""
	One reduction ``before -> after``.

	:ivar rule: the rule whose configuration was found.
	:ivar construction: the rule whose gadget built ``after``; differs from ``rule`` when a rule
		delegates to another one.
	:ivar case_tag: the variant of the construction that was built.
	:ivar region: the witness, its neighbors and every vertex whose neighborhood changed.
	:ivar origin: for every vertex of ``after``, the vertex of ``before`` it is, or ``None`` if new.
	:ivar gadget: what replaced the cycle, used to lift.
	"""
	rule: RuleId
	construction: RuleId
	witness: Witness
	before: Graph
	after: Graph
	delta: int
	case_tag: str
	region: frozenset[int]
	origin: tuple[Optional[int], ...]
	gadget: Gadget

	def lift_case(self, f_after: EulerianSubgraph, *, config: Optional[GlobalConfiguration]=None)->Rerouting:
		"""
		The lifted subgraph together with the case that built it.
		"""
		rerouting=reroute(self.before, self.after, self.origin, self.gadget, f_after)
		check_lift_bound(rerouting.subgraph, f_after, self.delta, config=config)
		logger.debug("lift %s (%s) %s: exc %d -> %d (delta %d)",
				self.rule.code, self.construction.code, rerouting.case, f_after.exc, rerouting.subgraph.exc, self.delta)
		return rerouting

	def lift(self, f_after: EulerianSubgraph, *, config: Optional[GlobalConfiguration]=None)->EulerianSubgraph:
		return self.lift_case(f_after, config=config).subgraph

	@property
	def witness_vertices(self)->tuple[int, ...]:
		return tuple(sorted({v for c in witness_cycles(self.witness) for v in c.vertices}))

	def record(self, index: int)->dict:
		return {
				"step": index,
				"rule": self.rule.code,
				"anchor": self.rule.anchor,
				"construction": self.construction.code,
				"case": self.case_tag,
				"witness": [list(c.vertices) for c in witness_cycles(self.witness)],
				"delta": self.delta,
				"before": {"n": self.before.n, "n2": self.before.n2},
				"after": {"n": self.after.n, "n2": self.after.n2},
				}

@dataclass(frozen=True)
class ReductionTrace:
	source: Graph
	steps: tuple[ReductionStep, ...]
	terminal: Graph
	terminal_kind: GraphKind

	def __post_init__(self)->None:
		current=self.source
		for step in self.steps:
			assert step.before==current
			current=step.after
		assert current==self.terminal

	@property
	def total_delta(self)->int:
		return sum(step.delta for step in self.steps)

	def records(self)->list[dict]:
		return [step.record(index) for index, step in enumerate(self.steps)]

	def to_json(self)->str:
		"""
		One JSON object per step, one per line, then a summary line.
		"""
		lines=[json.dumps(r) for r in self.records()]
		lines.append(json.dumps({"terminal": {"n": self.terminal.n, "n2": self.terminal.n2, "kind": self.terminal_kind.name},
			"steps": len(self.steps), "total_delta": self.total_delta}))
		return "\n".join(lines)


# ======== structural predicates

def _exit_in_cut(g: Graph, v: int, x: int)->bool:
	return bool(g.cut_partners[g.edge_id(v, x)])

def _pair_is_cut(g: Graph, a: tuple[int, int], b: tuple[int, int])->bool:
	return g.edge_id(*b) in g.cut_partners[g.edge_id(*a)]

def _sep(g: Graph, k: CycleDescriptor, side_a: Sequence[int], side_b: Sequence[int], max_cut: int, *, connected_sides: bool=False)->Optional[Partition]:
	return separating_partition(g, k.vertices, side_a, side_b, max_cut, connected_sides=connected_sides)

def _xs(k: CycleDescriptor, start: int, reverse: bool=False)->tuple[list[int], list[int]]:
	v, x=k.labeling(start, reverse)
	assert all(a is not None for a in x), k
	return v, [a for a in x if a is not None]

def _labelings(k: CycleDescriptor)->Iterator[tuple[int, bool, list[int], list[int]]]:
	for start in range(k.length):
		for reverse in (False, True):
			v, x=_xs(k, start, reverse)
			yield start, reverse, v, x

def _is_full_six(g: Graph, k: CycleDescriptor)->bool:
	return k.length==6 and k.deg3==6 and len(set(k.outside))==6

def _noncut_exits(g: Graph, k: CycleDescriptor)->list[int]:
	return [i for i, (v, x) in enumerate(zip(k.vertices, k.outside)) if x is not None and not _exit_in_cut(g, v, x)]

def _opposite_noncut(g: Graph, k: CycleDescriptor)->list[int]:
	noncut=set(_noncut_exits(g, k))
	return [i for i in range(3) if i in noncut and i+3 in noncut]

def _cycle_edge_in_cut(g: Graph, k: CycleDescriptor)->bool:
	return any(g.cut_partners[e] for e in k.edge_ids(g))

def _exit_cut_pairs(g: Graph, k: CycleDescriptor)->list[tuple[int, int]]:
	exits=k.exits(g)
	result=[]
	for i, j in itertools.combinations(range(6), 2):
		a, b=exits[i], exits[j]
		if a is not None and b is not None and b in g.cut_partners[a]:
			result.append((i, j))
	return result

def _opposite_split(g: Graph, k: CycleDescriptor)->bool:
	"""
	Some pair of opposite exits ends in different components of ``G-V(K)``.
	"""
	where={v: index for index, c in enumerate(components(g, k.vertices)) for v in c}
	return any(where[k.outside[i]]!=where[k.outside[i+3]] for i in range(3))  # type: ignore


# ======== surgery

Op=tuple
"""
One editing operation:
``("edge", u, v)``, ``("path", u, v, internal)``, ``("star", (a, b, c), (ka, kb, kc))`` (a new vertex joined to
``a, b, c`` through paths with that many internal vertices) or ``("subdivide", u, v, times)``.
"""

@dataclass(frozen=True)
class _Surgery:
	construction: RuleId
	case_tag: str
	after: Graph
	origin: tuple[Optional[int], ...]
	gadget: Gadget

def _apply_op(editor: GraphEditor, op: Op)->list[tuple[str, list[int]]]:
	"""
	Apply one operation and return the pieces it added as named paths of editor vertices.
	A subdivision is returned under the name ``"=u,v"``.
	"""
	kind=op[0]
	if kind=="edge":
		editor.add_edge(op[1], op[2])
		return [(f"{op[1]}-{op[2]}", [op[1], op[2]])]
	if kind=="path":
		inner=editor.add_path(op[1], op[2], op[3])
		return [(f"{op[1]}~{op[2]}", [op[1], *inner, op[2]])]
	if kind=="star":
		center=editor.new_vertex()
		branches=[]
		for end, internal in zip(op[1], op[2]):
			inner=editor.add_path(center, end, internal)
			branches.append((f"*{end}", [end, *reversed(inner), center]))
		return branches
	if kind=="subdivide":
		inner=editor.subdivide(op[1], op[2], op[3])
		return [(f"={op[1]},{op[2]}", [op[1], *inner, op[2]])]
	assert False, op

def _surgery(g: Graph, k: CycleDescriptor, construction: RuleId, case_tag: str, removed: Iterable[int], ops: Sequence[Op])->Optional[_Surgery]:
	"""
	Apply the operations to ``g`` minus ``removed``, which are vertices of the cycle ``k``.
	``None`` if the result is not a simple 2-connected subcubic graph.
	"""
	editor=GraphEditor(g)
	removed=frozenset(removed)
	editor.remove_vertices(removed)
	try:
		added=[piece for op in ops for piece in _apply_op(editor, op)]
		after, origin=editor.finish()
	except (InvalidGraph, KeyError):
		return None
	if after.n<3 or not is_two_connected(after): return None
	position=editor.relabelling()
	pieces=[]
	subdivided=[]
	for name, path in added:
		image=tuple(position[v] for v in path)
		if name.startswith("="): subdivided.append((g.edge_id(path[0], path[-1]), image))
		else: pieces.append((name, image))
	return _Surgery(construction, case_tag, after, origin, Gadget(k.vertices, removed, tuple(pieces), tuple(subdivided)))


# ======== proper-graph rules

def _rule_c2e(g: Graph, k: CycleDescriptor)->Optional[_Surgery]:
	branch=[i for i, x in enumerate(k.outside) if x is not None]
	if len(branch)!=2: return None
	i, j=branch
	x1, x2=k.outside[i], k.outside[j]
	assert x1 is not None and x2 is not None
	if k.length==3:
		z=next(v for v, x in zip(k.vertices, k.outside) if x is None)
		return _surgery(g, k, RuleId.c2e, "triangle", [z], [])
	return _surgery(g, k, RuleId.c2e, "path", k.vertices, [("path", x1, x2, 1)])

def _rule_c3(g: Graph, k: CycleDescriptor)->Optional[_Surgery]:
	pos=[i for i, x in enumerate(k.outside) if x is not None]
	if len(pos)!=3: return None
	# opposite[t]: internal vertices of the path between the other two branch vertices
	opposite=[(pos[(t+2)%3]-pos[(t+1)%3])%k.length-1 for t in range(3)]
	for perm in itertools.permutations(range(3)):
		ks=[opposite[t] for t in perm]
		if ks!=sorted(ks): continue
		xs=tuple(k.outside[pos[t]] for t in perm)
		surgery=_surgery(g, k, RuleId.c3, f"k={ks[0]},{ks[1]},{ks[2]}", k.vertices, [("star", xs, (ks[0]+1, ks[1], ks[2]))])
		if surgery: return surgery
	return None

def _rule_c4(g: Graph, k: CycleDescriptor)->Optional[_Surgery]:
	pos=[i for i, x in enumerate(k.outside) if x is not None]
	if len(pos)!=4: return None
	length=k.length
	for rotation in (0, 1):
		p=[pos[(rotation+t)%4] for t in range(4)]
		v=[k.vertices[q] for q in p]
		x=[k.outside[q] for q in p]
		inner=[[k.vertices[(p[t]+s)%length] for s in range(1, (p[(t+1)%4]-p[t])%length)] for t in range(4)]
		ks=[len(a) for a in inner]
		total=sum(ks)

		editor=GraphEditor(g)
		editor.remove_vertices([*inner[0], *inner[2]])
		if ks[0]==0: editor.remove_edge(v[0], v[1])
		if ks[2]==0: editor.remove_edge(v[2], v[3])
		if not is_two_connected(editor.finish()[0]): continue

		if ks[0]==ks[2]==0:
			surgery=_surgery(g, k, RuleId.c4, f"paths k={total}", k.vertices, [("path", x[0], x[3], 1), ("path", x[1], x[2], 1)])
		elif total>=2:
			surgery=_surgery(g, k, RuleId.c4, f"edges k={total}", k.vertices, [("edge", x[0], x[3]), ("edge", x[1], x[2])])
		else:
			if ks[2]==1: x=[x[2], x[3], x[0], x[1]]
			surgery=_surgery(g, k, RuleId.c4, "edge and path k=1", k.vertices, [("edge", x[0], x[3]), ("path", x[1], x[2], 1)])
		if surgery: return surgery
	return None

def _rule_c5(g: Graph, k: CycleDescriptor)->Optional[_Surgery]:
	if k.length not in (5, 6) or k.deg3!=5: return None
	if k.length==5:
		starts=[(s, r) for s in range(5) for r in (False, True)]
	else:
		z=k.outside.index(None)
		starts=[((z+1)%6, False), ((z-1)%6, True)]
	subdivide=1 if k.length==6 else 0
	for start, reverse in starts:
		_, x=k.labeling(start, reverse)
		x0, x1, x2, x3, x4=x[:5]
		for tag, ops in (
				("G1", [("edge", x4, x0), ("star", (x1, x2, x3), (0, 0, 0))]),
				("G2", [("edge", x1, x4), ("star", (x0, x2, x3), (0, subdivide, 0))]),
				):
			surgery=_surgery(g, k, RuleId.c5, tag, k.vertices, ops)
			if surgery: return surgery
	return None


# ======== 6-cycles

def _opp3(g: Graph, k: CycleDescriptor)->Optional[_Surgery]:
	for start in (0, 1):
		_, x=_xs(k, start)
		if _sep(g, k, [x[0], x[2], x[4]], [x[1], x[3], x[5]], 0) is None: continue
		surgery=_surgery(g, k, RuleId.six_opp3, "three paths", k.vertices,
				[("path", x[0], x[1], 1), ("path", x[2], x[3], 1), ("path", x[4], x[5], 1)])
		if surgery: return surgery
	return None

def _ob1_holds(g: Graph, k: CycleDescriptor, x: list[int])->bool:
	"""
	``G-E(K)`` splits with ``v0, v2`` on one side and at most one edge across.
	"""
	if _sep(g, k, [x[0], x[2]], [x[1], x[3], x[4], x[5]], 1): return True
	# the crossing edge is an exit edge and the rest splits with no edge
	for i in (0, 2):
		if _sep(g, k, [x[2-i]], [x[j] for j in range(6) if j!=2-i], 0): return True
	for i in (1, 3, 4, 5):
		if _sep(g, k, [x[0], x[2], x[i]], [x[j] for j in (1, 3, 4, 5) if j!=i], 0): return True
	return False

def _ob1(g: Graph, k: CycleDescriptor)->Optional[_Surgery]:
	for start, reverse, v, x in _labelings(k):
		if not _ob1_holds(g, k, x): continue
		# identify v0 with v4, v1 with v3, v2 with v5 in G-E(K)
		surgery=_surgery(g, k, RuleId.six_ob1, "identify", k.vertices,
				[("path", x[0], x[4], 1), ("path", x[1], x[3], 1), ("path", x[2], x[5], 1)])
		if surgery: return surgery
	return _opp3(g, k)

def _ob0_labelings(g: Graph, k: CycleDescriptor)->list[tuple[list[int], Partition]]:
	result=[]
	for start, reverse, v, x in _labelings(k):
		partition=_sep(g, k, [x[0], x[1]], x[2:], 0)
		if partition is not None: result.append((x, partition))
	return result

def _ob0(g: Graph, k: CycleDescriptor)->Optional[_Surgery]:
	if k.is_theta_cycle: return None
	labelings=_ob0_labelings(g, k)
	if not labelings: return None
	surgery=_ob1(g, k)
	if surgery: return surgery
	for x, partition in labelings:
		surgery=_surgery(g, k, RuleId.six_ob0, "G1", k.vertices,
				[("path", x[0], x[3], 1), ("path", x[1], x[4], 1), ("path", x[2], x[5], 1)])
		if surgery: return surgery
		inner=separating_partition(g, set(k.vertices)|partition.a, [x[2], x[5]], [x[3], x[4]], 1)
		if inner is None or len(inner.cut)!=1: continue
		u, w=g.edges[inner.cut[0]]
		surgery=_surgery(g, k, RuleId.six_ob0, "G2", k.vertices,
				[("edge", x[1], x[2]), ("edge", x[0], x[3]), ("edge", x[4], x[5]), ("subdivide", u, w, 1)])
		if surgery: return surgery
	return None

def _oppa(g: Graph, k: CycleDescriptor)->Optional[_Surgery]:
	if k.is_theta_cycle or not _opposite_split(g, k): return None
	return _ob1(g, k) or _ob0(g, k)

def _nocut(g: Graph, k: CycleDescriptor)->Optional[_Surgery]:
	if k.is_theta_cycle or not _cycle_edge_in_cut(g, k): return None
	return _ob0(g, k) or _oppa(g, k) or _ob1(g, k)

def _main_at(g: Graph, k: CycleDescriptor, i: int)->Optional[_Surgery]:
	_, x=_xs(k, i)
	if _opposite_split(g, k):
		surgery=_oppa(g, k)
		if surgery: return surgery
	surgery=_surgery(g, k, RuleId.six_main, f"G1 at {k.vertices[i]}", k.vertices,
			[("edge", x[1], x[5]), ("star", (x[2], x[3], x[4]), (0, 0, 0))])
	if surgery: return surgery
	return _ob1(g, k)

def _main(g: Graph, k: CycleDescriptor)->Optional[_Surgery]:
	for i in _noncut_exits(g, k):
		surgery=_main_at(g, k, i)
		if surgery: return surgery
	return None

def _no2e(g: Graph, k: CycleDescriptor)->Optional[_Surgery]:
	starts=[j for i in _opposite_noncut(g, k) for j in (i, i+3)]
	for j in starts:
		surgery=_main_at(g, k, j)
		if surgery: return surgery
	for j in starts:
		_, x=_xs(k, j)
		partition=_sep(g, k, [x[0], x[1], x[5]], [x[2], x[3], x[4]], 1, connected_sides=True)
		if partition is None or len(partition.cut)!=1: continue
		u, w=g.edges[partition.cut[0]]
		surgery=_surgery(g, k, RuleId.six_no2e, "partition", k.vertices,
				[("edge", x[1], x[2]), ("edge", x[4], x[5]), ("subdivide", u, w, 2)])
		if surgery: return surgery
	return None

def _no26(g: Graph, pair: tuple[CycleDescriptor, CycleDescriptor])->Optional[_Surgery]:
	for k in pair:
		if k.is_theta_cycle: continue
		if _cycle_edge_in_cut(g, k):
			surgery=_nocut(g, k)
			if surgery: return surgery
		if _opposite_noncut(g, k):
			surgery=_no2e(g, k)
			if surgery: return surgery
		surgery=_main(g, k)
		if surgery: return surgery
	return None

def _adj(g: Graph, k: CycleDescriptor)->Optional[_Surgery]:
	for i, j in _exit_cut_pairs(g, k):
		distance=min(j-i, 6-(j-i))
		if distance==3: continue
		surgery=_nocut(g, k) if distance==1 else _ob1(g, k)
		if surgery: return surgery
	return None

def _oppcuts_starts(g: Graph, k: CycleDescriptor)->list[int]:
	pairs=set(_exit_cut_pairs(g, k))
	opposite=[(i, i+3) in pairs for i in range(3)]
	return [r for r in range(3) if opposite[r] and opposite[(r+1)%3]]

def _oppcuts(g: Graph, k: CycleDescriptor)->Optional[_Surgery]:
	for r in _oppcuts_starts(g, k):
		_, x=_xs(k, r)
		surgery=_surgery(g, k, RuleId.six_oppcuts, f"pairs at {k.vertices[r]}", k.vertices,
				[("edge", x[0], x[4]), ("edge", x[1], x[5]), ("path", x[2], x[3], 1)])
		if surgery: return surgery
	return None


# ======== 7-cycles and the splitting of a contracted cycle

def contract_cycle(g: Graph, vertices: Iterable[int])->tuple[Multigraph, int]:
	"""
	Contract the given vertices to one new vertex, returned as its index in the multigraph.
	The multigraph vertex labels are host vertices, the new vertex is labelled ``g.n``.

	>>> mg, w=contract_cycle(named("k4"), [0, 1, 2])
	>>> mg.degree(w), mg.m
	(3, 3)
	"""
	inside=frozenset(vertices)
	keep=[v for v in range(g.n) if v not in inside]
	index={v: i for i, v in enumerate(keep)}
	w=len(keep)
	ends=[]
	for a, b in g.edges:
		if a in inside and b in inside: continue
		ia, ib=index.get(a, w), index.get(b, w)
		ends.append((min(ia, ib), max(ia, ib)))
	empty=((),)*len(ends)
	return Multigraph(g.n+1, (*keep, g.n), tuple(ends), empty, empty), w

def _other_end(mg: Multigraph, e: int, v: int)->int:
	a, b=mg.ends[e]
	assert v in (a, b)
	return b if a==v else a

def split_off(mg: Multigraph, v: int, e1: int, e2: int)->Multigraph:
	"""
	Remove the edges ``e1 = v u1`` and ``e2 = v u2`` and add ``u1 u2`` as the last edge.
	"""
	if mg.degree(v)<4: raise DegreeTooSmall(f"vertex {v} has degree {mg.degree(v)}")
	assert e1!=e2
	u1, u2=_other_end(mg, e1, v), _other_end(mg, e2, v)
	keep=[e for e in range(mg.m) if e not in (e1, e2)]
	ends=(*(mg.ends[e] for e in keep), (min(u1, u2), max(u1, u2)))
	payloads=(*(mg.payloads[e] for e in keep), ())
	host_edges=(*(mg.host_edges[e] for e in keep), ())
	return Multigraph(mg.host_n, mg.vertices, ends, payloads, host_edges)

def split_off_2ec(mg: Multigraph, v: int, e1: int, e2: int, e3: int)->tuple[Multigraph, tuple[int, int]]:
	"""
	Split off ``e1, e2`` or else ``e2, e3`` at ``v`` so that the result stays 2-edge-connected.
	The pair ``e1, e3`` is tried last for a cut vertex ``v`` whose blocks separate differently.

	>>> mg, w=contract_cycle(named("petersen"), [0, 1, 2, 3, 4])
	>>> _, pair=split_off_2ec(mg, w, 0, 1, 2)
	>>> pair in ((0, 1), (1, 2))
	True
	"""
	if mg.degree(v)<4: raise DegreeTooSmall(f"vertex {v} has degree {mg.degree(v)}")
	if not mg.is_two_edge_connected(): raise NotTwoEdgeConnected("multigraph is not 2-edge-connected")
	for a, b in ((e1, e2), (e2, e3), (e1, e3)):
		result=split_off(mg, v, a, b)
		if result.is_two_edge_connected(): return result, (a, b)
	raise NotTwoEdgeConnected(f"no pairing of the edges at {v} keeps 2-edge-connectivity")

def _edge_between(mg: Multigraph, v: int, label: int)->int:
	u=mg.vertices.index(label)
	return next(e for e, (a, b) in enumerate(mg.ends) if {a, b}=={u, v})

def _split_order(mg: Multigraph, w: int, x: Sequence[int], a: int, b: int, c: int)->list[tuple[int, int]]:
	"""
	The pairs ``(a, b)`` and ``(b, c)`` of exits at ``w``, the one whose splitting keeps 2-edge-connectivity first.
	"""
	ea, eb, ec=(_edge_between(mg, w, x[t]) for t in (a, b, c))
	try:
		_, pair=split_off_2ec(mg, w, ea, eb, ec)
	except (NotTwoEdgeConnected, DegreeTooSmall):
		return [(a, b), (b, c)]
	return [(b, c), (a, b)] if pair==(eb, ec) else [(a, b), (b, c)]

def _seven_deg2(g: Graph, k: CycleDescriptor)->Optional[_Surgery]:
	branch=[i for i, x in enumerate(k.outside) if x is not None]
	count=len(branch)
	if k.length!=7 or count not in (5, 6): return None
	mg, w=contract_cycle(g, k.vertices)
	for start in range(count):
		for reverse in (False, True):
			sign=-1 if reverse else 1
			x: list[int]=[k.outside[branch[(start+sign*t)%count]] for t in range(count)]  # type: ignore
			for a, b in _split_order(mg, w, x, 0, 1, 2):
				if count==5:
					rest=tuple(x[t] for t in range(5) if t not in (a, b))
					surgery=_surgery(g, k, RuleId.seven_deg2, f"split {a}{b}", k.vertices,
							[("edge", x[a], x[b]), ("star", rest, (0, 0, 0))])
					if surgery: return surgery
					continue
				c=b+1
				split_graph=split_off(mg, w, _edge_between(mg, w, x[a]), _edge_between(mg, w, x[b]))
				for first, second in _split_order(split_graph, w, x, c+1, c, c+2):
					last=[t for t in range(6) if t not in (a, b, first, second)]
					surgery=_surgery(g, k, RuleId.seven_deg2, f"split {a}{b} {min(first, second)}{max(first, second)}", k.vertices,
							[("edge", x[a], x[b]), ("edge", x[first], x[second]), ("edge", x[last[0]], x[last[1]])])
					if surgery: return surgery
	return None

def _seven_cuts_starts(g: Graph, k: CycleDescriptor)->list[tuple[int, bool]]:
	result=[]
	for start in range(k.length):
		for reverse in (False, True):
			v, _=k.labeling(start, reverse)
			first, second=(v[0], v[-1]), (v[1], v[2])
			if (g.cut_partners[g.edge_id(*first)] and g.cut_partners[g.edge_id(*second)]
					and not _pair_is_cut(g, first, second)):
				result.append((start, reverse))
	return result

def _seven_cuts(g: Graph, k: CycleDescriptor)->Optional[_Surgery]:
	if k.length==6: return _nocut(g, k)
	if k.length!=7 or k.deg3!=7: return None
	for start, reverse in _seven_cuts_starts(g, k):
		v, x=_xs(k, start, reverse)
		surgery=_surgery(g, k, RuleId.seven_cuts, f"remove {v[0]},{v[1]}", [v[0], v[1]],
				[("edge", v[2], x[0]), ("edge", v[6], x[1]), ("subdivide", v[4], x[4], 1)])
		if surgery: return surgery
	return None


# ======== hypotheses

def _is_cycle_of(g: Graph, k: CycleDescriptor)->bool:
	try:
		return describe_cycle(g, k.vertices)==k
	except (AssertionError, KeyError, IndexError):
		return False

def _hypothesis(g: Graph, rule: RuleId, witness: Witness)->Optional[str]:
	"""
	Why ``witness`` does not match the configuration of ``rule``, or ``None``.
	"""
	if rule==RuleId.six_no26:
		if not (isinstance(witness, tuple) and len(witness)==2): return "expected two 6-cycles"
		a, b=witness
		if not (_is_cycle_of(g, a) and _is_cycle_of(g, b)): return "not a cycle of the graph"
		if not (a.length==b.length==6 and a.vertices!=b.vertices): return "expected two distinct 6-cycles"
		if not (a.vertex_set & b.vertex_set): return "the 6-cycles are disjoint"
		if a.is_theta_cycle and b.is_theta_cycle: return "both 6-cycles are theta-cycles"
		return None
	if isinstance(witness, tuple): return "expected a single cycle"
	k=witness
	if not _is_cycle_of(g, k): return "not a cycle of the graph"
	if rule in (RuleId.c2e, RuleId.c3, RuleId.c4):
		if classify_shape(g).basic: return "graph is basic"
		want={RuleId.c2e: (0, 1, 2), RuleId.c3: (3,), RuleId.c4: (4,)}[rule]
		if k.deg3 not in want: return f"cycle has {k.deg3} vertices of degree three"
		return None
	if rule==RuleId.c5:
		if k.length not in (5, 6) or k.deg3!=5: return "expected a 5- or 6-cycle with five vertices of degree three"
		return None
	if rule==RuleId.seven_deg2:
		if k.length!=7 or k.deg3==7: return "expected a 7-cycle with a vertex of degree two"
		if k.deg3<5: return "graph is not proper"
		return None
	if rule==RuleId.seven_cuts:
		if k.length not in (6, 7) or k.deg3!=k.length: return "expected a 6- or 7-cycle of vertices of degree three"
		if k.length==6 and k.is_theta_cycle: return "cycle is a theta-cycle"
		if not _seven_cuts_starts(g, k): return "no two cycle edges at distance two are in separate 2-edge-cuts"
		return None
	if not _is_full_six(g, k): return "expected a 6-cycle of degree-three vertices with distinct outside neighbors"
	if rule==RuleId.six_opp3:
		if not any(_sep(g, k, x[0::2], x[1::2], 0) for x in (_xs(k, 0)[1], _xs(k, 1)[1])): return "no partition of alternate exits"
	elif rule==RuleId.six_ob1:
		if not any(_ob1_holds(g, k, x) for *_, x in _labelings(k)): return "no partition with at most one edge across"
	elif rule==RuleId.six_ob0:
		if k.is_theta_cycle: return "cycle is a theta-cycle"
		if not _ob0_labelings(g, k): return "no partition of two adjacent exits"
	elif rule==RuleId.six_oppa:
		if k.is_theta_cycle: return "cycle is a theta-cycle"
		if not _opposite_split(g, k): return "all opposite exits are connected outside the cycle"
	elif rule==RuleId.six_nocut:
		if k.is_theta_cycle: return "cycle is a theta-cycle"
		if not _cycle_edge_in_cut(g, k): return "no cycle edge in a 2-edge-cut"
	elif rule==RuleId.six_main:
		if not _noncut_exits(g, k): return "every exit is in a 2-edge-cut"
	elif rule==RuleId.six_no2e:
		if not _opposite_noncut(g, k): return "no opposite exits outside 2-edge-cuts"
	elif rule==RuleId.six_adj:
		if k.is_theta_cycle: return "cycle is a theta-cycle"
		if not any(min(j-i, 6-j+i)!=3 for i, j in _exit_cut_pairs(g, k)): return "no non-opposite exit pair forms a 2-edge-cut"
	elif rule==RuleId.six_oppcuts:
		if not _oppcuts_starts(g, k): return "fewer than two opposite exit pairs form 2-edge-cuts"
	return None

_RULES: dict[RuleId, Callable[[Graph, Witness], Optional[_Surgery]]]={
		RuleId.c2e: _rule_c2e,  # type: ignore
		RuleId.c3: _rule_c3,  # type: ignore
		RuleId.c4: _rule_c4,  # type: ignore
		RuleId.c5: _rule_c5,  # type: ignore
		RuleId.six_opp3: _opp3,  # type: ignore
		RuleId.six_ob1: _ob1,  # type: ignore
		RuleId.six_ob0: _ob0,  # type: ignore
		RuleId.six_oppa: _oppa,  # type: ignore
		RuleId.six_nocut: _nocut,  # type: ignore
		RuleId.six_main: _main,  # type: ignore
		RuleId.six_no2e: _no2e,  # type: ignore
		RuleId.six_no26: _no26,  # type: ignore
		RuleId.six_adj: _adj,  # type: ignore
		RuleId.six_oppcuts: _oppcuts,  # type: ignore
		RuleId.seven_deg2: _seven_deg2,  # type: ignore
		RuleId.seven_cuts: _seven_cuts,  # type: ignore
		}


def apply_rule(g: Graph, rule: RuleId, witness: Witness)->ReductionStep:
	"""
	Build the reduction of ``g`` by ``rule`` at ``witness``.

	>>> g=Graph.build(6, [(0, 1), (1, 2), (2, 0), (0, 3), (1, 4), (3, 4), (3, 5), (4, 5)])
	>>> step=apply_rule(g, RuleId.c2e, describe_cycle(g, [0, 1, 2]))
	>>> step.after.n, step.delta, step.case_tag
	(5, 0, 'triangle')

	A subgraph using the edge ``0 1`` of the reduced graph lifts through the removed vertex ``2``:

	>>> rerouting=step.lift_case(EulerianSubgraph.from_edges(step.after, [(0, 1), (1, 3), (3, 2), (2, 0)]))
	>>> rerouting.subgraph.edges, rerouting.case
	([(0, 2), (0, 3), (1, 2), (1, 4), (3, 4)], 'uses nothing; 2 exits; arcs entering 0')
	>>> apply_rule(g, RuleId.c3, describe_cycle(g, [0, 1, 2]))
	Traceback (most recent call last):
		...
	cubictsp.reduction.HypothesisViolated: R-C3: cycle has 2 vertices of degree three
	"""
	require_two_connected(g)
	reason=_hypothesis(g, rule, witness)
	if reason is not None: raise HypothesisViolated(rule, reason)
	surgery=_RULES[rule](g, witness)
	if surgery is None: raise HypothesisViolated(rule, "no candidate reduction is simple and 2-connected")
	after=surgery.after
	delta=(g.n+g.n2)-(after.n+after.n2)
	assert delta>=0 and after.n<g.n, (rule, delta, g.n, after.n)
	core={v for c in witness_cycles(witness) for v in c.vertices}
	region=frozenset(core|{w for v in core for w in g.adjacency[v]}|changed_vertices(g, after, surgery.origin))
	step=ReductionStep(rule, surgery.construction, witness, g, after, delta, surgery.case_tag, region, surgery.origin, surgery.gadget)
	logger.info("%s (%s, %s): n %d -> %d, n2 %d -> %d, delta %d",
			rule.code, surgery.construction.code, surgery.case_tag, g.n, after.n, g.n2, after.n2, delta)
	return step


# ======== classification

def _cycles_upto_seven(g: Graph)->list[CycleDescriptor]:
	return short_cycles(g, 7)

def improper_witness(g: Graph)->Optional[CycleDescriptor]:
	"""
	A cycle with at most four vertices of degree three (shortest first among those with four),
	or a 5- or 6-cycle with five, preferring length five.
	"""
	few=enumerate_cycles_bounded(g, 4)
	if few: return few[0]
	for k in short_cycles(g, 6):
		if k.deg3==5: return k
	return None

def _ct1_witness(cycles: list[CycleDescriptor])->Optional[CycleDescriptor]:
	return next((k for k in cycles if k.deg3<k.length), None)

def _ct2_witness(cycles: list[CycleDescriptor])->Optional[tuple[CycleDescriptor, CycleDescriptor]]:
	sixes=[k for k in cycles if k.length==6]
	for a, b in itertools.combinations(sixes, 2):
		if a.vertex_set & b.vertex_set and not (a.is_theta_cycle and b.is_theta_cycle):
			return (b, a) if a.is_theta_cycle else (a, b)
	return None

def _ct3_witness(g: Graph, cycles: list[CycleDescriptor])->Optional[CycleDescriptor]:
	# literally read, every theta-cycle fails this condition and no rule reduces it: theta-cycles are exempt
	for k in cycles:
		if k.length==6 and k.is_theta_cycle: continue
		if _seven_cuts_starts(g, k): return k
	return None

def ct4_holds(g: Graph, k: CycleDescriptor)->bool:
	"""
	Whether the 6-cycle ``k`` satisfies one of the four allowed exit patterns of a clean graph.
	"""
	if k.is_theta_cycle: return True
	noncut=_noncut_exits(g, k)
	if not noncut:
		pairs=_exit_cut_pairs(g, k)
		return not pairs or (len(pairs)==1 and pairs[0][1]-pairs[0][0]==3)
	if len(noncut)==1:
		_, x=_xs(k, noncut[0])
		partition=_sep(g, k, [x[0], x[1], x[5]], [x[2], x[3], x[4]], 1, connected_sides=True)
		return partition is not None and len(partition.cut)==1
	return False

def _ct4_witness(g: Graph, cycles: list[CycleDescriptor])->Optional[CycleDescriptor]:
	return next((k for k in cycles if k.length==6 and not ct4_holds(g, k)), None)

def _ct4_rule(g: Graph, k: CycleDescriptor)->RuleId:
	if _opposite_noncut(g, k): return RuleId.six_no2e
	if _noncut_exits(g, k): return RuleId.six_main
	if any(min(j-i, 6-j+i)!=3 for i, j in _exit_cut_pairs(g, k)): return RuleId.six_adj
	return RuleId.six_oppcuts

@dataclass(frozen=True)
class CleanConditions:
	proper: bool
	ct1: bool
	ct2: bool
	ct3: bool
	ct4: bool

	@property
	def clean(self)->bool:
		return self.proper and self.ct1 and self.ct2 and self.ct3 and self.ct4

def clean_conditions(g: Graph)->CleanConditions:
	"""
	Evaluate every condition independently (nothing short-circuits), for diagnostics.

	>>> clean_conditions(named("heawood"))
	CleanConditions(proper=True, ct1=True, ct2=False, ct3=True, ct4=False)
	"""
	require_two_connected(g)
	cycles=_cycles_upto_seven(g)
	proper=not classify_shape(g).basic and improper_witness(g) is None
	return CleanConditions(
			proper=proper,
			ct1=_ct1_witness(cycles) is None,
			ct2=_ct2_witness(cycles) is None,
			ct3=_ct3_witness(g, cycles) is None,
			ct4=_ct4_witness(g, cycles) is None,
			)

def classify_graph(g: Graph)->GraphKind:
	"""
	>>> classify_graph(named("k4")), classify_graph(named("prism"))
	(<GraphKind.basic: 1>, <GraphKind.improper: 4>)
	>>> classify_graph(Graph.build(3, [(0, 1), (1, 2)]))
	Traceback (most recent call last):
		...
	cubictsp.graph.NotTwoConnected: graph on 3 vertices is not 2-connected
	"""
	require_two_connected(g)
	if classify_shape(g).basic: return GraphKind.basic
	if improper_witness(g) is not None: return GraphKind.improper
	cycles=_cycles_upto_seven(g)
	if (_ct1_witness(cycles) or _ct2_witness(cycles) or _ct3_witness(g, cycles)
			or _ct4_witness(g, cycles)):
		return GraphKind.proper_not_clean
	return GraphKind.clean

def _detect(g: Graph)->Optional[tuple[RuleId, Witness]]:
	if classify_shape(g).basic: return None
	few=enumerate_cycles_bounded(g, 4)
	for wanted, rule in (((0, 1, 2), RuleId.c2e), ((3,), RuleId.c3), ((4,), RuleId.c4)):
		k=next((k for k in few if k.deg3 in wanted), None)
		if k is not None: return rule, k
	five=next((k for k in short_cycles(g, 6) if k.deg3==5), None)
	if five is not None: return RuleId.c5, five
	cycles=_cycles_upto_seven(g)
	k=_ct1_witness(cycles)
	if k is not None: return RuleId.seven_deg2, k
	pair=_ct2_witness(cycles)
	if pair is not None: return RuleId.six_no26, pair
	k=_ct3_witness(g, cycles)
	if k is not None: return RuleId.seven_cuts, k
	k=_ct4_witness(g, cycles)
	if k is not None: return _ct4_rule(g, k), k
	return None

def find_reduction(g: Graph)->Optional[ReductionStep]:
	"""
	The first applicable reduction in rule priority order, or ``None`` for basic and clean graphs.

	>>> find_reduction(named("k23")) is None
	True
	>>> find_reduction(named("petersen")).rule.code
	'R-C5'
	"""
	require_two_connected(g)
	found=_detect(g)
	if found is None: return None
	rule, witness=found
	try:
		return apply_rule(g, rule, witness)
	except HypothesisViolated as e:
		raise InternalCatalogGap(f"{rule.code} detected at {[c.vertices for c in witness_cycles(witness)]} but failed: {e.reason}") from e

def reduce_to_terminal(g: Graph)->ReductionTrace:
	require_two_connected(g)
	steps: list[ReductionStep]=[]
	current=g
	while True:
		step=find_reduction(current)
		if step is None: break
		steps.append(step)
		current=step.after
	kind=classify_graph(current)
	assert kind in (GraphKind.basic, GraphKind.clean), kind
	logger.info("reduced n=%d to %s graph with n=%d in %d steps", g.n, kind.name, current.n, len(steps))
	return ReductionTrace(g, tuple(steps), current, kind)

def lift_cases(trace: ReductionTrace, f_terminal: EulerianSubgraph, *, config: Optional[GlobalConfiguration]=None)->tuple[EulerianSubgraph, tuple[str, ...]]:
	"""
	Lift a spanning Eulerian subgraph of the terminal graph back to the source graph,
	also returning the case of every step's lift, in step order.
	"""
	if f_terminal.host!=trace.terminal: raise NotSpanning("subgraph does not span the terminal graph")
	f=f_terminal
	cases: list[str]=[]
	for step in reversed(trace.steps):
		rerouting=step.lift_case(f, config=config)
		cases.append(rerouting.case)
		f=rerouting.subgraph
	if get_config(config).check_lift_bound:
		assert f.exc<=f_terminal.exc+Fraction(trace.total_delta, 4)
	return f, tuple(reversed(cases))

def lift_through(trace: ReductionTrace, f_terminal: EulerianSubgraph, *, config: Optional[GlobalConfiguration]=None)->EulerianSubgraph:
	"""
	Lift a spanning Eulerian subgraph of the terminal graph back to the source graph.
	"""
	return lift_cases(trace, f_terminal, config=config)[0]

def step_to_dot(step: ReductionStep, index: int=0)->str:
	"""
	Graphviz snapshot: the graph before the step with its witness highlighted, and the graph after it
	with the new vertices highlighted.
	"""
	from .graphio import to_dot
	before=to_dot(step.before, f"before_{index}", highlight=step.witness_vertices, cluster=True,
			label=f"{step.rule.code} delta={step.delta}")
	after=to_dot(step.after, f"after_{index}", highlight=[j for j, o in enumerate(step.origin) if o is None], cluster=True,
			label=f"{step.construction.code} {step.case_tag}")
	return f"graph step_{index} {{\n{before}\n{after}\n}}\n"
