from pathlib import Path

import networkx as nx  # type: ignore
import pytest

from cubictsp.generators import family_qrepl, random_subcubic
from cubictsp.graph import DegreeExceeded, Graph, named, named_graphs
from cubictsp.graphio import FormatError, format_text, from_json, parse_graph6, parse_text, read_graph, to_dot, to_json, write_graph

class TestText:
	def test_comments_and_blank_lines(self)->None:
		g=parse_text("# K4\n\n4 6\n0 1\n0 2 # chord\n0 3\n1 2\n1 3\n2 3\n")
		assert g==named("k4")

	@pytest.mark.parametrize("text, message", [
		("", "empty input"),
		("3 2\n0 1\n", "header announces 2 edges, found 1"),
		("3 1\n0 x\n", "line 2: expected integers"),
		("3 1\n0 1 2\n", "line 2: expected two integers, got 3"),
		])
	def test_malformed(self, text: str, message: str)->None:
		with pytest.raises(FormatError, match=message):
			parse_text(text)

	def test_invalid_graph_is_not_a_format_error(self)->None:
		with pytest.raises(DegreeExceeded):
			parse_text("5 4\n0 1\n0 2\n0 3\n0 4\n")

	def test_comment_header(self)->None:
		assert format_text(Graph.cycle(3), "triangle").splitlines()==["# triangle", "3 3", "0 1", "0 2", "1 2"]


class TestFiles:
	@pytest.mark.parametrize("suffix", [".txt", ".json"])
	@pytest.mark.parametrize("g", [named("petersen"), family_qrepl(1), random_subcubic(14, 4, seed=5)])
	def test_write_then_read(self, tmp_path: Path, suffix: str, g: Graph)->None:
		path=tmp_path/f"graph{suffix}"
		write_graph(g, path, "generated")
		assert read_graph(path)==g

	@pytest.mark.parametrize("name", named_graphs())
	def test_graph6(self, tmp_path: Path, name: str)->None:
		g=named(name)
		path=tmp_path/"graph.g6"
		path.write_bytes(nx.to_graph6_bytes(g.to_networkx()))
		assert read_graph(path)==g

	def test_graph6_is_read_only(self, tmp_path: Path)->None:
		with pytest.raises(FormatError):
			write_graph(named("k4"), tmp_path/"k4.g6")

	def test_missing_file(self, tmp_path: Path)->None:
		with pytest.raises(FormatError, match="cannot read"):
			read_graph(tmp_path/"missing.txt")

	def test_bad_json(self, tmp_path: Path)->None:
		path=tmp_path/"bad.json"
		path.write_text('{"n": 3}')
		with pytest.raises(FormatError):
			read_graph(path)
		path.write_text("{")
		with pytest.raises(FormatError):
			read_graph(path)

	def test_bad_graph6(self)->None:
		with pytest.raises(FormatError):
			parse_graph6("C~~")


def test_json_object()->None:
	assert to_json(Graph.cycle(3))=={"n": 3, "edges": [[0, 1], [0, 2], [1, 2]]}
	assert from_json({"n": 3, "edges": [[1, 0], [2, 1], [0, 2]]})==Graph.cycle(3)

def test_dot_cluster()->None:
	dot=to_dot(named("k4"), "after_0", cluster=True, label="R-C3")
	assert dot.startswith("subgraph cluster_after_0 {")
	assert '  label="R-C3";' in dot
	assert "  after_0_2 -- after_0_3;" in dot
