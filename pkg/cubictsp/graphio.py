"""
Reading and writing graphs.

The text format is a first line ``n m`` followed by ``m`` lines ``u v`` of 0-based vertex ids.
Everything after ``#`` on a line is ignored.

>>> g=parse_text('''
... # a triangle
... 3 3
... 0 1
... 1 2
... 2 0
... ''')
>>> g
Graph.build(3, [(0, 1), (0, 2), (1, 2)])
>>> parse_text(format_text(g))==g
True
>>> parse_graph6("C~")==named("k4")
True
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Iterable, Optional

import networkx as nx  # type: ignore

from .graph import Graph, InvalidGraph

class FormatError(InvalidGraph): pass

GRAPH6_SUFFIXES=(".g6", ".graph6")


def parse_text(text: str)->Graph:
	numbers: list[list[int]]=[]
	for line_number, line in enumerate(text.splitlines(), start=1):
		line=line.split("#", 1)[0].strip()
		if not line: continue
		try:
			fields=[int(a) for a in line.split()]
		except ValueError:
			raise FormatError(f"line {line_number}: expected integers, got {line!r}") from None
		if len(fields)!=2: raise FormatError(f"line {line_number}: expected two integers, got {len(fields)}")
		numbers.append(fields)
	if not numbers: raise FormatError("empty input")
	(n, m), *edges=numbers
	if m!=len(edges): raise FormatError(f"header announces {m} edges, found {len(edges)}")
	return Graph.build(n, [(u, v) for u, v in edges])

def format_text(g: Graph, comment: Optional[str]=None)->str:
	lines=[] if comment is None else [f"# {line}" for line in comment.splitlines()]
	lines.append(f"{g.n} {g.m}")
	lines.extend(f"{u} {v}" for u, v in g.edges)
	return "\n".join(lines)+"\n"

def parse_graph6(text: str)->Graph:
	"""
	Read a graph in graph6 format, with or without the ``>>graph6<<`` header.
	"""
	data=text.strip().encode("ascii")
	try:
		nx_graph=nx.from_graph6_bytes(data)
	except (nx.NetworkXError, ValueError, IndexError) as e:
		raise FormatError(f"invalid graph6 data: {e}") from None
	return Graph.from_networkx(nx_graph)

def to_json(g: Graph)->dict:
	return {"n": g.n, "edges": [list(e) for e in g.edges]}

def from_json(data: dict)->Graph:
	try:
		return Graph.build(int(data["n"]), [(int(u), int(v)) for u, v in data["edges"]])
	except (KeyError, TypeError, ValueError) as e:
		if isinstance(e, InvalidGraph): raise
		raise FormatError(f"invalid graph object: {e}") from None

def read_graph(path: Path)->Graph:
	"""
	Read a graph, choosing the format by suffix: graph6, ``.json`` or the text format.
	"""
	path=Path(path)
	try:
		text=path.read_text()
	except (OSError, UnicodeDecodeError) as e:
		raise FormatError(f"cannot read {path}: {e}") from None
	if path.suffix in GRAPH6_SUFFIXES: return parse_graph6(text)
	if path.suffix==".json":
		try:
			return from_json(json.loads(text))
		except json.JSONDecodeError as e:
			raise FormatError(f"{path}: {e}") from None
	return parse_text(text)

def write_graph(g: Graph, path: Path, comment: Optional[str]=None)->None:
	path=Path(path)
	if path.suffix in GRAPH6_SUFFIXES: raise FormatError("graph6 is supported for reading only")
	if path.suffix==".json":
		path.write_text(json.dumps(to_json(g))+"\n")
	else:
		path.write_text(format_text(g, comment))

def to_dot(g: Graph, name: str="G", *, highlight: Iterable[int]=(), cluster: bool=False, label: Optional[str]=None)->str:
	"""
	Graphviz source. With ``cluster``, a ``subgraph cluster_...`` block to embed in a larger graph;
	node names are prefixed by ``name`` so that several clusters can share one file.

	>>> print(to_dot(Graph.cycle(3), highlight=[0]))
	graph G {
	  G_0 [label="0", style=filled, fillcolor=lightblue];
	  G_1 [label="1"];
	  G_2 [label="2"];
	  G_0 -- G_1;
	  G_0 -- G_2;
	  G_1 -- G_2;
	}
	"""
	marked=frozenset(highlight)
	lines=[f"subgraph cluster_{name} {{" if cluster else f"graph {name} {{"]
	if label is not None: lines.append(f"  label={json.dumps(label)};")
	for v in range(g.n):
		style=", style=filled, fillcolor=lightblue" if v in marked else ""
		lines.append(f'  {name}_{v} [label="{v}"{style}];')
	for u, v in g.edges:
		lines.append(f"  {name}_{u} -- {name}_{v};")
	lines.append("}")
	return "\n".join(lines)
