import json
from pathlib import Path

import pytest

from cubictsp import cli
from cubictsp.cli import EXIT_INTERNAL, EXIT_INVALID, EXIT_OK, EXIT_PRECONDITION, get_parser, main
from cubictsp.eulerian import NotSpanning
from cubictsp.generators import random_cubic_with_bridges
from cubictsp.graph import Graph, named
from cubictsp.graphio import read_graph, write_graph
from cubictsp.reduction import HypothesisViolated, RuleId


def records(capsys: pytest.CaptureFixture)->list[dict]:
	return [json.loads(line) for line in capsys.readouterr().out.splitlines()]

@pytest.fixture
def graph_file(tmp_path: Path):
	def write(g: Graph, name: str="g.txt")->str:
		path=tmp_path/name
		write_graph(g, path)
		return str(path)
	return write


class TestSolve:
	def test_k23(self, graph_file, capsys: pytest.CaptureFixture)->None:
		assert main(["solve", graph_file(named("k23")), "--verify", "--oracle"])==EXIT_OK
		record,=records(capsys)
		assert record["length"]==6 and record["bound"]=="44/7"
		assert record["verified"] and record["tsp"]==6 and record["ratio"]=="1"
		assert len(record["walk"])==7 and record["walk"][0]==record["walk"][-1]

	def test_trace(self, graph_file, tmp_path: Path, capsys: pytest.CaptureFixture)->None:
		trace=tmp_path/"trace.jsonl"
		assert main(["solve", graph_file(named("petersen")), "--trace", str(trace)])==EXIT_OK
		record,=records(capsys)
		assert record["length"]==11
		lines=trace.read_text().splitlines()
		assert json.loads(lines[0])["rule"]=="R-C5"
		assert len(lines)==record["steps"]+1

	def test_cubic_mode_with_bridges(self, graph_file, capsys: pytest.CaptureFixture)->None:
		g=random_cubic_with_bridges(3, 6, seed=2)
		assert main(["solve", "--mode", "cubic", graph_file(g), "--verify"])==EXIT_OK
		record,=records(capsys)
		assert record["bridges"]==2 and record["verified"]

	def test_missing_file(self, tmp_path: Path, capsys: pytest.CaptureFixture)->None:
		assert main(["solve", str(tmp_path/"missing.txt")])==EXIT_INVALID
		assert "FormatError" in capsys.readouterr().err

	def test_malformed(self, tmp_path: Path, capsys: pytest.CaptureFixture)->None:
		path=tmp_path/"bad.txt"
		path.write_text("3 2\n0 1\n0 1\n")
		assert main(["solve", str(path)])==EXIT_INVALID
		assert "DuplicateEdge" in capsys.readouterr().err

	def test_not_two_connected(self, graph_file, capsys: pytest.CaptureFixture)->None:
		assert main(["solve", graph_file(Graph.build(3, [(0, 1), (1, 2)]))])==EXIT_PRECONDITION
		assert "NotTwoConnected" in capsys.readouterr().err

	def test_cubic_mode_needs_cubic(self, graph_file, capsys: pytest.CaptureFixture)->None:
		assert main(["solve", "--mode", "cubic", graph_file(named("k23"))])==EXIT_PRECONDITION
		assert "NotCubic" in capsys.readouterr().err


class TestOracle:
	@pytest.mark.parametrize("quantity, key, value", [("tsp", "tsp", 11), ("minexc", "minexc", 3)])
	def test_petersen(self, graph_file, capsys: pytest.CaptureFixture, quantity: str, key: str, value: int)->None:
		assert main(["oracle", quantity, graph_file(named("petersen"))])==EXIT_OK
		record,=records(capsys)
		assert record[key]==value

	def test_decompose(self, graph_file, capsys: pytest.CaptureFixture)->None:
		assert main(["--decomposition", "column-generation", "oracle", "decompose", graph_file(named("petersen"))])==EXIT_OK
		record,=records(capsys)
		assert record["verified"] and record["method"]=="column-generation"
		assert record["coefficients"]==["1/6"]*6

	def test_limit(self, graph_file, capsys: pytest.CaptureFixture)->None:
		assert main(["--limit", "8", "oracle", "tsp", graph_file(named("petersen"))])==EXIT_PRECONDITION
		assert "TooLarge" in capsys.readouterr().err


class TestGen:
	def test_qrepl_to_stdout(self, capsys: pytest.CaptureFixture)->None:
		assert main(["gen", "qrepl", "1"])==EXIT_OK
		lines=capsys.readouterr().out.splitlines()
		assert lines[0].startswith("# ")
		assert json.loads(lines[0][2:])=={"generator": "qrepl", "params": {"t": 1}, "seed": None}
		assert lines[1]=="16 24"

	def test_random_to_file(self, tmp_path: Path, capsys: pytest.CaptureFixture)->None:
		path=tmp_path/"r.json"
		assert main(["gen", "random", "--n", "14", "--n2", "4", "--seed", "7", "-o", str(path)])==EXIT_OK
		record,=records(capsys)
		assert (record["n"], record["n2"])==(14, 4)
		assert read_graph(path).n2==4

	def test_unknown_name(self, capsys: pytest.CaptureFixture)->None:
		assert main(["gen", "named", "nope"])==EXIT_INVALID
		assert "unknown named graph 'nope'" in capsys.readouterr().err


class TestReduce:
	def test_prism(self, graph_file, tmp_path: Path, capsys: pytest.CaptureFixture)->None:
		out=tmp_path/"steps"
		assert main(["reduce", graph_file(named("prism")), "--out-dir", str(out)])==EXIT_OK
		*steps, summary=records(capsys)
		assert steps and steps[0]["rule"]=="R-C3"
		assert summary["terminal"]=="basic" and summary["steps"]==len(steps)
		for index in range(len(steps)):
			assert (out/f"step_{index:03}.txt").exists()
			assert (out/f"step_{index:03}.dot").read_text().startswith(f"graph step_{index} {{")
		assert read_graph(out/"terminal.txt").n==summary["n"]
		assert len((out/"trace.jsonl").read_text().splitlines())==len(steps)+1


class TestBench:
	def test_deterministic(self, tmp_path: Path, capsys: pytest.CaptureFixture)->None:
		manifest=tmp_path/"corpus.jsonl"
		assert main(["gen", "corpus", "--drepl-max", "2", "--qrepl-max", "1", "--random-count", "3", "-o", str(manifest)])==EXIT_OK
		record,=records(capsys)
		assert record["entries"]==3+2+3
		outputs=[]
		for _ in range(2):
			assert main(["bench", str(manifest), "--no-timings", "--oracle"])==EXIT_OK
			outputs.append(capsys.readouterr().out)
		assert outputs[0]==outputs[1]
		*rows, last=[json.loads(line) for line in outputs[0].splitlines()]
		assert [row["index"] for row in rows]==list(range(8))
		assert all(row["valid"] and row["within_bound"] for row in rows)
		assert "seconds" not in rows[0]
		summary=last["summary"]
		assert summary["instances"]==8 and summary["bound_violations"]==0 and summary["invalid_walks"]==0
		assert "total_seconds" not in summary
		assert rows[0]["tsp"]==6

	def test_timings(self, tmp_path: Path, capsys: pytest.CaptureFixture)->None:
		manifest=tmp_path/"corpus.jsonl"
		manifest.write_text(json.dumps({"generator": "named", "params": {"name": "k33"}, "seed": None})+"\n")
		assert main(["bench", str(manifest)])==EXIT_OK
		row, last=records(capsys)
		assert row["seconds"]>=0 and row["rss_kb"]>0
		assert last["summary"]["peak_rss_kb"]>0


def test_parser_requires_command()->None:
	with pytest.raises(SystemExit):
		get_parser().parse_args([])


class TestExitStatus:
	def test_infeasible_parameters(self, capsys: pytest.CaptureFixture)->None:
		assert main(["gen", "random", "--n", "7", "--n2", "0"])==EXIT_INVALID
		assert "Infeasible" in capsys.readouterr().err

	def test_bad_manifest(self, tmp_path: Path, capsys: pytest.CaptureFixture)->None:
		manifest=tmp_path/"corpus.jsonl"
		manifest.write_text(json.dumps({"generator": "nope"})+"\n")
		assert main(["bench", str(manifest)])==EXIT_INVALID
		assert "ManifestError" in capsys.readouterr().err

	@pytest.mark.parametrize("error", [HypothesisViolated(RuleId.c4, "cycle has 3 vertices of degree three"), NotSpanning("subgraph does not span the reduced graph")])
	def test_internal_value_errors(self, graph_file, monkeypatch: pytest.MonkeyPatch, capsys: pytest.CaptureFixture, error: ValueError)->None:
		def fail(g: Graph)->None:
			raise error
		monkeypatch.setattr(cli, "reduce_to_terminal", fail)
		assert main(["reduce", graph_file(named("prism"))])==EXIT_INTERNAL
		assert type(error).__name__ in capsys.readouterr().err
