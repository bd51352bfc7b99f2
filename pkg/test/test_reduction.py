import functools
import json
from collections import Counter
from typing import Callable, Optional, Sequence

import pytest

from cubictsp.completion import complete_locally
from cubictsp.eulerian import solve_basic, solve_clean
from cubictsp.generators import family_drepl, family_qrepl, random_subcubic
from cubictsp.graph import Edge, Graph, GraphEditor, connectivity_report, describe_cycle, named
from cubictsp.oracle import cycle_space_dimension, enumerate_even_subgraphs, verify_step
from cubictsp.reduction import (
		DegreeTooSmall, GraphKind, HypothesisViolated, ReductionStep, RuleId, Witness, apply_rule, classify_graph, clean_conditions,
		contract_cycle, find_reduction, improper_witness, lift_cases, lift_through, reduce_to_terminal, split_off, split_off_2ec, step_to_dot,
		)
from cubictsp.walk import solve_subcubic

EXHAUSTIVE_DIMENSION=10

def around_cycle(outside: Sequence[Edge], length: int=6, exits: int=6)->tuple[Graph, Witness]:
	"""
	The cycle ``0..length-1`` where vertex ``i<exits`` has the exit ``i, length+i``, plus the ``outside`` edges.
	"""
	edges=[(i, (i+1)%length) for i in range(length)]+[(i, length+i) for i in range(exits)]+list(outside)
	g=Graph.build(1+max(v for e in edges for v in e), edges)
	return g, describe_cycle(g, list(range(length)))

def petersen_piece(ends: Sequence[int], base: int, drop: Sequence[int]=(), drop_edge: Optional[Edge]=None)->list[Edge]:
	"""
	The Petersen graph minus the vertices ``drop`` or the edge ``drop_edge``, its vertices of degree two renamed
	to ``ends`` in increasing order and the others numbered from ``base``.
	"""
	p=named("petersen")
	edges=[e for e in p.edges if e!=drop_edge and not set(e)&set(drop)]
	degree=Counter(v for e in edges for v in e)
	low=[v for v in range(p.n) if degree[v]==2]
	rest=[v for v in range(p.n) if degree[v]==3]
	assert len(low)==len(ends)
	name={**dict(zip(low, ends)), **{v: base+i for i, v in enumerate(rest)}}
	return [(name[a], name[b]) for a, b in edges]

def host_of(pieces: Sequence[Sequence[Edge]], length: int=6, exits: int=6, times: int=3)->tuple[Graph, Witness]:
	"""
	:func:`around_cycle` with the ``pieces`` outside, every outside edge subdivided ``times`` times,
	so that the cycle is the only short one.
	"""
	g, k=around_cycle([e for piece in pieces for e in piece], length, exits)
	editor=GraphEditor(g)
	for u, v in g.edges:
		if u>=length and v>=length: editor.subdivide(u, v, times)
	g, _=editor.finish()
	return g, describe_cycle(g, list(range(length)))

def cube()->Graph:
	return Graph.build(8, [(i, (i+1)%4) for i in range(4)]+[(4+i, 4+(i+1)%4) for i in range(4)]+[(i, i+4) for i in range(4)])

def _cycle_of(g: Graph, *vertices: Sequence[int])->tuple[Graph, Witness]:
	cycles=tuple(describe_cycle(g, list(c)) for c in vertices)
	return g, cycles[0] if len(cycles)==1 else cycles  # type: ignore

_OPP3=[(12, 6), (12, 8), (12, 10), (13, 7), (13, 9), (13, 11)]
_OB1=[(6, 8), (12, 7), (12, 10), (12, 13), (13, 9), (13, 11)]
_OB0=[(6, 7), (12, 8), (12, 9), (12, 13), (13, 10), (13, 11)]

FIXTURES: list[tuple[RuleId, Callable[[], tuple[Graph, Witness]], Optional[RuleId]]]=[
		(RuleId.c2e, lambda: _cycle_of(Graph.build(6, [(0, 1), (1, 2), (2, 0), (0, 3), (1, 4), (3, 4), (3, 5), (4, 5)]), [0, 1, 2]), RuleId.c2e),
		(RuleId.c3, lambda: _cycle_of(named("prism"), [0, 1, 2]), RuleId.c3),
		(RuleId.c4, lambda: _cycle_of(cube(), [0, 1, 2, 3]), RuleId.c4),
		(RuleId.c5, lambda: _cycle_of(named("petersen"), [0, 1, 2, 3, 4]), RuleId.c5),
		(RuleId.six_opp3, lambda: around_cycle(_OPP3), RuleId.six_opp3),
		(RuleId.six_ob1, lambda: around_cycle(_OB1), RuleId.six_ob1),
		(RuleId.six_ob0, lambda: around_cycle(_OB0), RuleId.six_ob0),
		(RuleId.six_oppa, lambda: around_cycle(_OB0), RuleId.six_ob0),
		(RuleId.six_nocut, lambda: around_cycle(_OB0), RuleId.six_ob0),
		(RuleId.six_main, lambda: around_cycle([(6, 9), (9, 7), (7, 10), (10, 8), (8, 11), (11, 6)]), RuleId.six_main),
		(RuleId.six_no2e, lambda: around_cycle([(6, 7), (6, 11), (9, 8), (9, 10), (12, 8), (7, 12)]), RuleId.six_no2e),
		(RuleId.six_no26, lambda: _cycle_of(named("heawood"), [0, 5, 4, 9, 8, 13], [0, 1, 2, 7, 6, 5]), None),
		(RuleId.six_adj, lambda: around_cycle(_OB0), RuleId.six_ob0),
		(RuleId.six_adj, lambda: around_cycle(_OB1), RuleId.six_ob1),
		(RuleId.six_oppcuts, lambda: around_cycle([(6, 9), (7, 10), (8, 11)]), RuleId.six_oppcuts),
		(RuleId.seven_deg2, lambda: around_cycle([(7, 10), (8, 11), (9, 12)], length=7, exits=6), RuleId.seven_deg2),
		(RuleId.seven_cuts, lambda: around_cycle([(9, 10), (12, 13), (14, 7), (14, 8), (14, 11)], length=7, exits=7), RuleId.seven_cuts),
		]
"""
For every rule a small configuration it applies to, with the rule whose gadget is expected to be built.
"""

PROPER: list[tuple[str, Callable[[], tuple[Graph, Witness]], RuleId, RuleId]]=[
		("three paths", lambda: host_of([petersen_piece([6, 8, 10], 12, drop=[0]), petersen_piece([7, 9, 11], 18, drop=[0])]),
			RuleId.six_no2e, RuleId.six_opp3),
		("identify", lambda: host_of([petersen_piece([6, 8], 12, drop_edge=(0, 1)), petersen_piece([7, 9, 10, 11], 20, drop=[0, 1])]),
			RuleId.six_no2e, RuleId.six_ob1),
		("adjacent exits", lambda: host_of([petersen_piece([6, 7], 12, drop_edge=(0, 1)), petersen_piece([20, 21, 22, 23], 24, drop=[0, 1]),
			[(8, 20), (9, 21), (10, 22), (11, 23)]]), RuleId.six_adj, RuleId.six_ob0),
		("partition", lambda: host_of([petersen_piece([6, 20, 21, 22], 12, drop=[0, 1]), petersen_piece([9, 23, 24, 25], 16, drop=[0, 1]),
			[(7, 20), (11, 21), (8, 23), (10, 24), (22, 25)]]), RuleId.six_no2e, RuleId.six_no2e),
		("opposite cuts", lambda: host_of([petersen_piece([6, 9], 12, drop_edge=(0, 1)), petersen_piece([7, 10], 20, drop_edge=(0, 1)),
			petersen_piece([8, 11], 28, drop_edge=(0, 1))]), RuleId.six_oppcuts, RuleId.six_oppcuts),
		("7-cycle cuts", lambda: host_of([petersen_piece([9, 10], 14, drop_edge=(0, 1)), petersen_piece([12, 13], 22, drop_edge=(0, 1)),
			petersen_piece([7, 8, 11], 30, drop=[0])], length=7, exits=7), RuleId.seven_cuts, RuleId.seven_cuts),
		("7-cycle degree two", lambda: host_of([petersen_piece([7, 9, 11], 13, drop=[0]), petersen_piece([8, 10, 12], 19, drop=[0])],
			length=7, exits=6), RuleId.seven_deg2, RuleId.seven_deg2),
		]
"""
Proper graphs, each with one short cycle, reduced first at that cycle: name, graph and cycle, detected rule, construction.
"""

def corpus()->list[Graph]:
	graphs=[named(name) for name in ("prism", "petersen", "heawood", "two_diamonds", "theta_figure", "k33")]
	graphs+=[family_drepl(t) for t in range(3)]+[family_qrepl(t) for t in range(2)]
	graphs+=[random_subcubic(n, 0, seed) for n in (10, 12, 14, 16, 18, 20, 22) for seed in range(6)]
	graphs+=[random_subcubic(n3+n2, n2, seed) for n3 in (8, 12, 16) for n2 in (1, 3, 6) for seed in range(4)]
	graphs+=[fixture()[0] for _, fixture, *_ in PROPER]
	return graphs

@functools.lru_cache(maxsize=None)
def corpus_steps()->tuple[ReductionStep, ...]:
	return tuple(step for g in corpus() for step in reduce_to_terminal(g).steps)


class TestRuleId:
	def test_codes(self)->None:
		assert len(RuleId)==16
		assert len({rule.code for rule in RuleId})==16
		for rule in RuleId:
			assert RuleId.from_code(rule.code)==rule
		with pytest.raises(KeyError):
			RuleId.from_code("R-NOPE")


class TestApply:
	def test_hypothesis_violated(self)->None:
		g=named("prism")
		triangle=describe_cycle(g, [0, 1, 2])
		with pytest.raises(HypothesisViolated) as info:
			apply_rule(g, RuleId.c4, triangle)
		assert info.value.rule==RuleId.c4
		assert info.value.reason=="cycle has 3 vertices of degree three"
		with pytest.raises(HypothesisViolated, match="expected two 6-cycles"):
			apply_rule(g, RuleId.six_no26, triangle)

	def test_basic_graph_is_not_reduced(self)->None:
		g=named("k4")
		with pytest.raises(HypothesisViolated, match="graph is basic"):
			apply_rule(g, RuleId.c3, describe_cycle(g, [0, 1, 2]))

	def test_triangle_of_prism(self)->None:
		g=named("prism")
		step=apply_rule(g, RuleId.c3, describe_cycle(g, [0, 1, 2]))
		assert step.construction==RuleId.c3
		assert step.after.n<g.n
		assert step.delta==(g.n+g.n2)-(step.after.n+step.after.n2)
		assert set(step.witness_vertices)=={0, 1, 2}
		assert verify_step(step).ok

	def test_petersen_five_cycle(self)->None:
		step=find_reduction(named("petersen"))
		assert step is not None and step.rule==RuleId.c5
		assert verify_step(step).ok

	def test_heawood_intersecting_six_cycles(self)->None:
		step=find_reduction(named("heawood"))
		assert step is not None and step.rule==RuleId.six_no26
		assert verify_step(step).ok

	def test_contract_cycle(self)->None:
		mg, w=contract_cycle(named("prism"), [0, 1, 2])
		assert mg.n==4 and mg.degree(w)==3
		with pytest.raises(DegreeTooSmall):
			split_off(mg, w, 0, 1)

	def test_split_off(self)->None:
		mg, w=contract_cycle(named("petersen"), [0, 1, 2, 3, 4])
		at_w=[e for e, (a, b) in enumerate(mg.ends) if w in (a, b)]
		assert len(at_w)==5
		h=split_off(mg, w, at_w[0], at_w[1])
		assert h.degree(w)==3 and h.m==mg.m-1
		assert all(h.degree(v)==mg.degree(v) for v in range(mg.n) if v!=w)
		h, pair=split_off_2ec(mg, w, *at_w[:3])
		assert h.is_two_edge_connected() and pair[0] in at_w and pair[1] in at_w


class TestClassify:
	@pytest.mark.parametrize("g, kind", [
		(Graph.cycle(5), GraphKind.basic),
		(named("k23"), GraphKind.basic),
		(named("prism"), GraphKind.improper),
		(named("petersen"), GraphKind.improper),
		(named("heawood"), GraphKind.proper_not_clean),
		])
	def test_kind(self, g: Graph, kind: GraphKind)->None:
		assert classify_graph(g)==kind

	def test_petersen_is_improper_through_five_cycles(self)->None:
		witness=improper_witness(named("petersen"))
		assert witness is not None and witness.length==5 and witness.deg3==5

	def test_conditions_of_heawood(self)->None:
		conditions=clean_conditions(named("heawood"))
		assert conditions.proper and not conditions.clean

	@pytest.mark.parametrize("g", [named("k4"), named("k23"), Graph.cycle(6)])
	def test_basic_needs_no_reduction(self, g: Graph)->None:
		assert find_reduction(g) is None


class TestTraces:
	def test_prism(self)->None:
		trace=reduce_to_terminal(named("prism"))
		assert trace.steps and trace.steps[0].rule==RuleId.c3
		assert trace.terminal_kind==GraphKind.basic
		assert trace.terminal.n<6
		assert trace.total_delta==sum(step.delta for step in trace.steps)

	def test_json(self)->None:
		trace=reduce_to_terminal(named("petersen"))
		lines=trace.to_json().splitlines()
		assert len(lines)==len(trace.steps)+1
		first=json.loads(lines[0])
		assert first["step"]==0 and first["rule"]=="R-C5"
		assert first["before"]=={"n": 10, "n2": 0}
		summary=json.loads(lines[-1])
		assert summary["steps"]==len(trace.steps)
		assert summary["terminal"]["n"]==trace.terminal.n

	def test_dot(self)->None:
		step=find_reduction(named("prism"))
		assert step is not None
		dot=step_to_dot(step, 3)
		assert dot.startswith("graph step_3 {")
		assert "subgraph cluster_before_3 {" in dot and "subgraph cluster_after_3 {" in dot
		assert "R-C3 delta=" in dot

	def test_deterministic(self)->None:
		g=random_subcubic(20, 4, seed=11)
		assert reduce_to_terminal(g)==reduce_to_terminal(g)

	@pytest.mark.parametrize("g", corpus())
	def test_steps_are_sound(self, g: Graph)->None:
		trace=reduce_to_terminal(g)
		assert trace.terminal_kind in (GraphKind.basic, GraphKind.clean)
		for step in trace.steps:
			assert step.after.n<step.before.n
			assert step.delta>=0
			assert connectivity_report(step.after).two_connected
			assert all(step.after.degree(v) in (2, 3) for v in range(step.after.n))
		f_terminal=solve_basic(trace.terminal) if trace.terminal_kind==GraphKind.basic else solve_clean(trace.terminal)
		f=lift_through(trace, f_terminal)
		assert f.host==g
		assert 4*f.exc<=4*f_terminal.exc+trace.total_delta


class TestCatalog:
	@pytest.mark.parametrize("rule, fixture, construction", FIXTURES, ids=[f"{rule.code}-{i}" for i, (rule, _, _) in enumerate(FIXTURES)])
	def test_lift_is_exhaustively_sound(self, rule: RuleId, fixture: Callable[[], tuple[Graph, Witness]], construction: Optional[RuleId])->None:
		g, witness=fixture()
		step=apply_rule(g, rule, witness)
		assert step.rule==rule
		if construction is not None: assert step.construction==construction
		dimension=cycle_space_dimension(step.after)
		assert dimension<=EXHAUSTIVE_DIMENSION
		verdict=verify_step(step)
		assert verdict.ok, verdict.failures
		assert verdict.checked==2**dimension

	def test_every_rule_has_a_fixture(self)->None:
		assert {rule for rule, _, _ in FIXTURES}==set(RuleId)
		assert {construction for *_, construction in FIXTURES}>=set(RuleId)-{RuleId.six_oppa, RuleId.six_nocut, RuleId.six_adj, RuleId.six_no26}

	@pytest.mark.parametrize("rule, fixture", [(rule, fixture) for rule, fixture, _ in FIXTURES if rule!=RuleId.six_no26],
			ids=[f"{rule.code}-{i}" for i, (rule, _, _) in enumerate(FIXTURES) if rule!=RuleId.six_no26])
	def test_rerouting_matches_local_search(self, rule: RuleId, fixture: Callable[[], tuple[Graph, Witness]])->None:
		g, witness=fixture()
		step=apply_rule(g, rule, witness)
		for f_after in enumerate_even_subgraphs(step.after):
			f=step.lift(f_after)
			best=complete_locally(step.before, step.after, step.origin, step.region, f_after)
			assert best.exc<=f.exc
			assert 4*f.exc<=4*f_after.exc+step.delta

	def test_sampled_steps(self)->None:
		steps=[step for step in corpus_steps() if cycle_space_dimension(step.after)<=EXHAUSTIVE_DIMENSION]
		assert steps
		for step in steps[::7]:
			verdict=verify_step(step)
			assert verdict.ok, (step.rule, verdict.failures)


class TestProperGraphs:
	@pytest.mark.parametrize("name, fixture, rule, construction", PROPER, ids=[name for name, *_ in PROPER])
	def test_first_reduction(self, name: str, fixture: Callable[[], tuple[Graph, Witness]], rule: RuleId, construction: RuleId)->None:
		g, k=fixture()
		assert classify_graph(g)==GraphKind.proper_not_clean
		report, trace=solve_subcubic(g)
		first=trace.steps[0]
		assert (first.rule, first.construction)==(rule, construction)
		assert set(first.witness_vertices)==set(k.vertices)  # type: ignore
		assert report.walk.length<=report.bound
		assert len(report.lift_cases[0])==len(trace.steps)

	def test_lift_cases_name_the_rerouting(self)->None:
		g=Graph.build(6, [(0, 1), (1, 2), (2, 0), (0, 3), (1, 4), (3, 4), (3, 5), (4, 5)])
		trace=reduce_to_terminal(g)
		f, cases=lift_cases(trace, solve_basic(trace.terminal))
		assert f.host==g
		assert cases and len(cases)==len(trace.steps)
		assert all(case.startswith("uses ") and " exits; " in case for case in cases)
