"""
Command line interface.

Every subcommand prints one JSON object per line on stdout; diagnostics go to stderr.
The exit status is 0 on success, 1 for an unreadable or invalid graph or manifest (or generator
parameters no graph satisfies), 2 when the graph does not meet the precondition of the requested
operation and 3 for an internal failure, which includes a reduction whose hypothesis does not hold.

.. argparse::
	:module: cubictsp.cli
	:func: get_parser
	:prog: cubictsp
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable, Optional, Sequence

import psutil  # type: ignore

from .config import GlobalConfiguration, setup_logging, use_config
from .generators import CorpusEntry, Infeasible, ManifestError, NotDegreeTwo, NotDiamond, build_corpus, read_manifest, write_manifest
from .graph import DegreeNotThree, Graph, InvalidGraph, IsCycle, NotTwoConnected, NotTwoEdgeConnected, suppress_degree_two
from .graphio import format_text, read_graph, write_graph
from .matching import decompose_uniform
from .oracle import TooLarge, minexc_bruteforce, tsp_bruteforce, verify_decomposition, verify_walk
from .reduction import reduce_to_terminal, step_to_dot
from .walk import NotConnected, NotCubic, SolveReport, WalkBoundViolated, double_tree_walk, solve_cubic, solve_subcubic

logger=logging.getLogger(__name__)

EXIT_OK=0
EXIT_INVALID=1
EXIT_PRECONDITION=2
EXIT_INTERNAL=3

PRECONDITION_ERRORS=(NotTwoConnected, NotTwoEdgeConnected, NotCubic, NotConnected, TooLarge, IsCycle, DegreeNotThree)
INPUT_ERRORS=(InvalidGraph, ManifestError, Infeasible, NotDegreeTwo, NotDiamond)

TREND_SIZES=(20, 40, 60)


def _emit(record: dict)->None:
	print(json.dumps(record), flush=True)

def _ratio(length: int, optimum: int)->dict:
	return {"tsp": optimum, "ratio": str(Fraction(length, optimum)), "ratio_float": length/optimum}

def _solve(g: Graph, mode: str, config: GlobalConfiguration)->SolveReport:
	if mode=="cubic": return solve_cubic(g, config=config)
	return solve_subcubic(g, config=config)[0]


def cmd_solve(args: argparse.Namespace, config: GlobalConfiguration)->int:
	g=read_graph(args.input)
	report=_solve(g, args.mode, config)
	record: dict[str, Any]={"input": str(args.input), "mode": args.mode, **report.record(), "walk": list(report.walk.vertices)}
	if args.trace is not None:
		Path(args.trace).write_text("".join(trace.to_json()+"\n" for trace in report.traces))
	if args.verify:
		verdict=verify_walk(g, report.walk)
		record["verified"]=verdict.ok
		if not verdict: raise WalkBoundViolated("walk failed verification: "+"; ".join(verdict.failures))
	if args.oracle:
		record.update(_ratio(report.walk.length, tsp_bruteforce(g, config=config)))
	_emit(record)
	return EXIT_OK

def cmd_oracle(args: argparse.Namespace, config: GlobalConfiguration)->int:
	g=read_graph(args.input)
	record: dict[str, Any]={"input": str(args.input), "n": g.n, "n2": g.n2}
	if args.quantity=="tsp":
		record["tsp"]=tsp_bruteforce(g, config=config)
	elif args.quantity=="minexc":
		record["minexc"]=minexc_bruteforce(g, config=config)
	else:
		d=decompose_uniform(suppress_degree_two(g), config=config)
		verdict=verify_decomposition(d)
		record.update({"method": d.method, "matchings": d.size, "coefficients": [str(a) for a in d.coefficients], "verified": verdict.ok})
	_emit(record)
	return EXIT_OK

def _gen_entry(args: argparse.Namespace)->CorpusEntry:
	family=args.family
	if family in ("drepl", "qrepl"):
		return CorpusEntry(family, {"t": int(args.value or 0)})
	if family=="named":
		if args.value is None: raise InvalidGraph("named graph requires a name")
		return CorpusEntry("named", {"name": args.value})
	if family=="random":
		return CorpusEntry("random", {"n": args.n, "n2": args.n2}, args.seed)
	return CorpusEntry("bridges", {"blocks": args.blocks, "block_size": args.block_size, "hub": args.hub}, args.seed)

def cmd_gen(args: argparse.Namespace, config: GlobalConfiguration)->int:
	if args.family=="corpus":
		entries=build_corpus(drepl_max=args.drepl_max, qrepl_max=args.qrepl_max, random_count=args.random_count, seed=args.seed or 0)
		if args.out is None:
			sys.stdout.write("".join(e.to_json()+"\n" for e in entries))
		else:
			write_manifest(args.out, entries)
			_emit({"manifest": str(args.out), "entries": len(entries)})
		return EXIT_OK
	entry=_gen_entry(args)
	try:
		g=entry.build()
	except KeyError as e:
		raise InvalidGraph(f"unknown named graph {args.value!r}") from e
	if args.out is None:
		sys.stdout.write(format_text(g, entry.to_json()))
	else:
		write_graph(g, args.out, entry.to_json())
		_emit({"output": str(args.out), "n": g.n, "n2": g.n2, "m": g.m})
	return EXIT_OK

def cmd_reduce(args: argparse.Namespace, config: GlobalConfiguration)->int:
	g=read_graph(args.input)
	trace=reduce_to_terminal(g)
	out=Path(args.out_dir)
	out.mkdir(parents=True, exist_ok=True)
	for index, step in enumerate(trace.steps):
		record=step.record(index)
		write_graph(step.after, out/f"step_{index:03}.txt", json.dumps(record))
		(out/f"step_{index:03}.dot").write_text(step_to_dot(step, index))
		_emit(record)
	write_graph(trace.terminal, out/"terminal.txt", f"{trace.terminal_kind.name} terminal graph")
	(out/"trace.jsonl").write_text(trace.to_json()+"\n")
	_emit({"terminal": trace.terminal_kind.name, "n": trace.terminal.n, "n2": trace.terminal.n2,
		"steps": len(trace.steps), "total_delta": trace.total_delta})
	return EXIT_OK


def _rss_kb()->int:
	return psutil.Process().memory_info().rss//1024

def bench_instance(entry: CorpusEntry, config: GlobalConfiguration, oracle: bool)->dict:
	"""
	Solve one manifest entry and measure it. Bridged instances go through the cubic algorithm.
	"""
	with use_config(config):
		g=entry.build()
		mode="cubic" if entry.generator=="bridges" else "subcubic"
		start=time.perf_counter()
		report=_solve(g, mode, config)
		seconds=time.perf_counter()-start
		record: dict[str, Any]={"generator": entry.generator, "params": entry.params, "seed": entry.seed, "mode": mode, **report.record(),
			"double_tree": double_tree_walk(g).length, "valid": verify_walk(g, report.walk).ok,
			"within_bound": report.walk.length<=report.bound}
		if oracle and g.n<=config.oracle_vertex_limit:
			record.update(_ratio(report.walk.length, tsp_bruteforce(g, config=config)))
		record["seconds"]=seconds
		record["rss_kb"]=_rss_kb()
		return record

def _bench_star(job: tuple[CorpusEntry, GlobalConfiguration, bool])->dict:
	return bench_instance(*job)

def _strip_timings(record: dict)->dict:
	return {k: v for k, v in record.items() if k not in ("seconds", "rss_kb")}

def cmd_bench(args: argparse.Namespace, config: GlobalConfiguration)->int:
	entries=read_manifest(args.manifest)
	jobs=[(entry, config, args.oracle) for entry in entries]
	if args.jobs>1:
		with ProcessPoolExecutor(max_workers=args.jobs) as executor:
			records=list(executor.map(_bench_star, jobs))
	else:
		records=[_bench_star(job) for job in jobs]
	for index, record in enumerate(records):
		_emit({"index": index, **(record if args.timings else _strip_timings(record))})
	ratios=[Fraction(r["ratio"]) for r in records if "ratio" in r]
	summary: dict[str, Any]={
			"instances": len(records),
			"total_length": sum(r["length"] for r in records),
			"total_bound": str(sum((Fraction(r["bound"]) for r in records), Fraction(0))),
			"bound_violations": sum(1 for r in records if not r["within_bound"]),
			"invalid_walks": sum(1 for r in records if not r["valid"]),
			"max_ratio": str(max(ratios)) if ratios else None,
			}
	if args.timings:
		summary["total_seconds"]=sum(r["seconds"] for r in records)
		summary["peak_rss_kb"]=max((r["rss_kb"] for r in records), default=_rss_kb())
	_emit({"summary": summary})
	if args.trends:
		for n in TREND_SIZES:
			trend=[bench_instance(CorpusEntry("random", {"n": n, "n2": n//5}, seed), config, False) for seed in range(args.trends)]
			_emit({"trend": n, "instances": len(trend), "mean_seconds": sum(r["seconds"] for r in trend)/len(trend)})
	return EXIT_OK if not summary["bound_violations"] and not summary["invalid_walks"] else EXIT_INTERNAL


def get_parser()->argparse.ArgumentParser:
	parser=argparse.ArgumentParser(prog="cubictsp", formatter_class=argparse.ArgumentDefaultsHelpFormatter,
			description="9/7-approximation of graphic TSP on cubic and 2-connected subcubic graphs.")
	parser.add_argument("-d", "--debug", type=int, default=0, help="Debug level. In [0..9].")
	parser.add_argument("--limit", type=int, default=None,
			help="Largest number of vertices the brute force oracles accept. "
			f"Defaults to {GlobalConfiguration.oracle_vertex_limit}.")
	parser.add_argument("--decomposition", choices=["auto", "column-generation", "enumerate"], default="auto",
			help="How to decompose the uniform 1/3 vector into perfect matchings. "
			"Refer to :func:`cubictsp.matching.decompose_uniform`.")
	subparsers=parser.add_subparsers(dest="command", required=True)

	solve=subparsers.add_parser("solve", help="Compute a TSP walk and compare it with the guaranteed bound.")
	solve.add_argument("input", type=Path, help="Graph file: text format, ``.json`` or graph6 (``.g6``).")
	solve.add_argument("--mode", choices=["subcubic", "cubic"], default="subcubic",
			help="``subcubic`` needs a 2-connected subcubic graph, ``cubic`` a connected cubic graph, bridges allowed.")
	solve.add_argument("--trace", type=Path, default=None, help="Write the reduction trace as JSON lines to this path.")
	solve.add_argument("--verify", action="store_true", help="Check the walk independently before printing it.")
	solve.add_argument("--oracle", action="store_true", help="Also compute the optimum by brute force and print the ratio.")
	solve.set_defaults(func=cmd_solve)

	oracle=subparsers.add_parser("oracle", help="Brute force ground truth for small graphs.")
	oracle.add_argument("quantity", choices=["tsp", "minexc", "decompose"])
	oracle.add_argument("input", type=Path)
	oracle.set_defaults(func=cmd_oracle)

	gen=subparsers.add_parser("gen", help="Generate an instance or a corpus manifest.")
	gen.add_argument("family", choices=["drepl", "qrepl", "random", "bridges", "named", "corpus"])
	gen.add_argument("value", nargs="?", default=None,
			help="Number of iterations for ``drepl`` and ``qrepl``, graph name for ``named``.")
	gen.add_argument("--seed", type=int, default=None)
	gen.add_argument("--n", type=int, default=20, help="Vertices of a ``random`` graph.")
	gen.add_argument("--n2", type=int, default=0, help="Vertices of degree two of a ``random`` graph.")
	gen.add_argument("--blocks", type=int, default=3, help="2-connected pieces of a ``bridges`` graph.")
	gen.add_argument("--block-size", type=int, default=6, help="Vertices of each piece before subdivision.")
	gen.add_argument("--hub", action="store_true", help="Join the first three pieces through a single vertex.")
	gen.add_argument("--drepl-max", type=int, default=5)
	gen.add_argument("--qrepl-max", type=int, default=3)
	gen.add_argument("--random-count", type=int, default=200)
	gen.add_argument("-o", "--out", type=Path, default=None, help="Output file. Defaults to stdout in the text format.")
	gen.set_defaults(func=cmd_gen)

	reduce=subparsers.add_parser("reduce", help="Run the reductions and write one snapshot per step.")
	reduce.add_argument("input", type=Path)
	reduce.add_argument("--out-dir", type=Path, default=Path("."))
	reduce.set_defaults(func=cmd_reduce)

	bench=subparsers.add_parser("bench", help="Solve every instance of a manifest and report per instance.")
	bench.add_argument("manifest", type=Path, help="JSON lines as written by ``gen corpus``.")
	bench.add_argument("--oracle", action="store_true", help="Compare with the brute force optimum where the size allows.")
	bench.add_argument("--jobs", type=int, default=1, help="Worker processes. Output keeps manifest order.")
	bench.add_argument("--no-timings", dest="timings", action="store_false",
			help="Leave out times and memory, so that two runs give identical reports.")
	bench.add_argument("--trends", type=int, default=0, metavar="K",
			help=f"Also time K random instances for each n in {list(TREND_SIZES)}.")
	bench.set_defaults(func=cmd_bench)
	return parser


def main(argv: Optional[Sequence[str]]=None)->int:
	args=get_parser().parse_args(argv)
	config=GlobalConfiguration.from_args(args)
	setup_logging(config.debug)
	func: Callable[[argparse.Namespace, GlobalConfiguration], int]=args.func
	try:
		with use_config(config):
			return func(args, config)
	except PRECONDITION_ERRORS as e:
		print(f"cubictsp: {type(e).__name__}: {e}", file=sys.stderr)
		return EXIT_PRECONDITION
	except INPUT_ERRORS as e:
		print(f"cubictsp: {type(e).__name__}: {e}", file=sys.stderr)
		return EXIT_INVALID
	except (ValueError, LookupError, RuntimeError, AssertionError) as e:
		logger.debug("internal failure", exc_info=True)
		print(f"cubictsp: {type(e).__name__}: {e}", file=sys.stderr)
		return EXIT_INTERNAL
