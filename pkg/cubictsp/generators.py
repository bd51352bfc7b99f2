r"""
Instance generators: the two lower bound families and seeded random graphs.

``drepl`` replaces a vertex of degree two by a 4-cycle, raising ``minexc`` by one;
``qrepl`` replaces a diamond by a 12-vertex gadget containing two diamonds, raising ``minexc`` by two.
Iterating them gives graphs whose minimum excess meets ``(n+n2)/4+1`` and ``n/4`` exactly.

>>> g=family_drepl(2)
>>> g.n, g.n2
(11, 5)
>>> family_qrepl(1).n, len(detect_diamonds(family_qrepl(1)))
(16, 3)
"""

from __future__ import annotations

import json
import logging
import random
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Iterable, Optional

from .graph import Graph, GraphEditor, detect_diamonds, is_two_connected, named

logger=logging.getLogger(__name__)

class NotDegreeTwo(ValueError): pass
class NotDiamond(ValueError): pass
class Infeasible(ValueError): pass
class ManifestError(ValueError): pass


def drepl(g: Graph, v: int)->Graph:
	"""
	Remove ``v`` and attach a new 4-cycle ``v1 v2 v3 v4`` by edges ``x v1`` and ``y v3``, where
	``x, y`` are the neighbors of ``v``. :func:`drepl_vertex` locates ``v2`` in the result.

	>>> drepl(named("k33"), 0)
	Traceback (most recent call last):
		...
	cubictsp.generators.NotDegreeTwo: vertex 0 has degree 3
	"""
	if not 0<=v<g.n or g.degree(v)!=2: raise NotDegreeTwo(f"vertex {v} has degree {g.degree(v) if 0<=v<g.n else None}")
	x, y=g.adjacency[v]
	editor=GraphEditor(g)
	editor.remove_vertices([v])
	v1, v2, v3, v4=(editor.new_vertex() for _ in range(4))
	for a, b in ((v1, v2), (v2, v3), (v3, v4), (v4, v1), (x, v1), (y, v3)):
		editor.add_edge(a, b)
	return editor.finish()[0]

def drepl_vertex(g: Graph)->int:
	"""
	Id of ``v2``, a vertex of degree two created by :func:`drepl`, in a graph returned by it.
	"""
	return g.n-3

def qrepl(g: Graph, diamond: tuple[int, int, int, int])->Graph:
	"""
	Replace the diamond ``(v1, v2, w1, w2)`` (as returned by :func:`~cubictsp.graph.detect_diamonds`)
	by the gadget: a path ``x1 z1 u1 a1 b1 b2 a2 u2 z2 x2``, the edge ``z1 z2``, chords ``a1 b2`` and ``a2 b1``,
	a 4-cycle ``c1 d1 c2 d2`` with chord ``d1 d2``, and edges ``u1 c1``, ``u2 c2``.

	>>> qrepl(named("k4"), (0, 1, 2, 3))
	Traceback (most recent call last):
		...
	cubictsp.generators.NotDiamond: (0, 1, 2, 3) is not an induced diamond
	"""
	v1, v2, w1, w2=diamond
	if diamond not in detect_diamonds(g): raise NotDiamond(f"{diamond} is not an induced diamond")
	x1,=[x for x in g.adjacency[v1] if x not in (w1, w2)]
	x2,=[x for x in g.adjacency[v2] if x not in (w1, w2)]
	if x1==x2: raise NotDiamond(f"both degree-two vertices of {diamond} attach to {x1}")
	editor=GraphEditor(g)
	editor.remove_vertices(diamond)
	z1, u1, a1, b1, b2, a2, u2, z2, c1, d1, c2, d2=(editor.new_vertex() for _ in range(12))
	path=[x1, z1, u1, a1, b1, b2, a2, u2, z2, x2]
	for a, b in zip(path, path[1:]):
		editor.add_edge(a, b)
	for a, b in ((z1, z2), (a1, b2), (a2, b1), (c1, d1), (d1, c2), (c2, d2), (d2, c1), (d1, d2), (u1, c1), (u2, c2)):
		editor.add_edge(a, b)
	result=editor.finish()[0]
	assert result.is_cubic() or not g.is_cubic()
	return result

def family_drepl(t: int)->Graph:
	assert t>=0
	g=named("k23")
	v=2
	for _ in range(t):
		g=drepl(g, v)
		v=drepl_vertex(g)
	return g

def family_qrepl(t: int)->Graph:
	assert t>=0
	g=named("two_diamonds")
	for _ in range(t):
		g=qrepl(g, detect_diamonds(g)[0])
	return g


def _random_cubic(n: int, rng: random.Random, max_tries: int)->Graph:
	for attempt in range(max_tries):
		points=[v for v in range(n) for _ in range(3)]
		rng.shuffle(points)
		pairs=[(points[i], points[i+1]) for i in range(0, len(points), 2)]
		keys={(min(a, b), max(a, b)) for a, b in pairs}
		if any(a==b for a, b in pairs) or len(keys)!=len(pairs): continue
		g=Graph.build(n, keys)
		if is_two_connected(g):
			logger.debug("random cubic graph on %d vertices after %d attempts", n, attempt+1)
			return g
	raise Infeasible(f"no 2-connected simple cubic graph on {n} vertices in {max_tries} attempts")

def _subdivide_randomly(g: Graph, count: int, rng: random.Random)->Graph:
	for _ in range(count):
		u, v=rng.choice(g.edges)
		editor=GraphEditor(g)
		editor.subdivide(u, v)
		g=editor.finish()[0]
	return g

def random_subcubic(n: int, n2: int, seed: Optional[int]=None, *, max_tries: int=10000)->Graph:
	"""
	A 2-connected subcubic graph with ``n`` vertices, ``n2`` of them of degree two: a random cubic
	graph on ``n-n2`` vertices from the pairing model, with random edges subdivided ``n2`` times.

	>>> random_subcubic(4, 0, seed=1)==named("k4")
	True
	>>> random_subcubic(7, 0)
	Traceback (most recent call last):
		...
	cubictsp.generators.Infeasible: 7 vertices of degree three violate the handshake lemma
	"""
	n3=n-n2
	if n2<0 or n3<0: raise Infeasible(f"cannot have {n2} vertices of degree two among {n}")
	if n3%2: raise Infeasible(f"{n3} vertices of degree three violate the handshake lemma")
	rng=random.Random(seed)
	if n3==0:
		if n<3: raise Infeasible("a cycle needs at least 3 vertices")
		return Graph.cycle(n)
	if n3==2:
		if n2<2: raise Infeasible("a theta graph needs at least two vertices of degree two")
		# theta graph: three paths between 0 and 1, at most one of them a direct edge
		cuts=sorted(rng.sample(range(1, n2), 1)) if n2>=3 else [1]
		lengths=[cuts[0], n2-cuts[0], 0]
		rng.shuffle(lengths)
		editor=GraphEditor(Graph.build(2, []))
		for length in lengths:
			editor.add_path(0, 1, length)
		return editor.finish()[0]
	if n3<4: raise Infeasible(f"no cubic graph on {n3} vertices")
	return _subdivide_randomly(_random_cubic(n3, rng, max_tries), n2, rng)

def random_cubic_with_bridges(blocks: int, block_size: int, seed: Optional[int]=None, *, hub: bool=False)->Graph:
	"""
	A connected cubic graph made of ``blocks`` 2-connected pieces joined by bridges in a random tree,
	optionally through a hub vertex all of whose three edges are bridges.

	Each bridge ends at a vertex subdividing an edge of a piece, so the result is cubic.

	>>> g=random_cubic_with_bridges(3, 4, seed=0, hub=True)
	>>> g.is_cubic(), g.n
	(True, 16)
	"""
	assert blocks>=1 and (not hub or blocks>=3)
	rng=random.Random(seed)
	editors=[GraphEditor(_random_cubic(block_size, rng, 10000)) for _ in range(blocks)]
	if hub:
		links=[(-1, 0), (-1, 1), (-1, 2)]+[(rng.randrange(b), b) for b in range(3, blocks)]
	else:
		links=[(rng.randrange(b), b) for b in range(1, blocks)]
	# bridge ends as (piece, vertex id inside that piece's editor)
	link_ends: list[list[tuple[int, int]]]=[]
	for a, b in links:
		link=[]
		for piece in (a, b):
			if piece<0: continue
			u, v=rng.choice(sorted(editors[piece].edge_set))
			link.append((piece, editors[piece].subdivide(u, v)[0]))
		link_ends.append(link)
	offsets: list[int]=[]
	relabels: list[dict[int, int]]=[]
	edges: list[tuple[int, int]]=[]
	total=0
	for editor in editors:
		relabels.append({v: i for i, v in enumerate(sorted(editor.alive))})
		offsets.append(total)
		graph, _=editor.finish()
		edges.extend((u+total, v+total) for u, v in graph.edges)
		total+=graph.n
	hub_vertex=total
	for link in link_ends:
		ends=[offsets[piece]+relabels[piece][vertex] for piece, vertex in link]
		if len(ends)==1: ends.append(hub_vertex)
		edges.append((ends[0], ends[1]))
	return Graph.build(total+int(hub), edges)


@dataclass(frozen=True)
class CorpusEntry:
	"""
	One reproducible instance: a generator name, its parameters and a seed.
	"""
	generator: str
	params: dict[str, Any]=field(default_factory=dict)
	seed: Optional[int]=None

	def build(self)->Graph:
		if self.generator=="drepl": return family_drepl(self.params["t"])
		if self.generator=="qrepl": return family_qrepl(self.params["t"])
		if self.generator=="random": return random_subcubic(self.params["n"], self.params["n2"], self.seed)
		if self.generator=="bridges":
			return random_cubic_with_bridges(self.params["blocks"], self.params["block_size"], self.seed, hub=self.params.get("hub", False))
		if self.generator=="named": return named(self.params["name"])
		raise ManifestError(f"unknown generator {self.generator!r}")

	def to_json(self)->str:
		return json.dumps({"generator": self.generator, "params": self.params, "seed": self.seed}, sort_keys=True)

	@staticmethod
	def from_json(line: str)->CorpusEntry:
		try:
			data=json.loads(line)
			return CorpusEntry(data["generator"], data.get("params", {}), data.get("seed"))
		except (json.JSONDecodeError, KeyError, TypeError, AttributeError) as e:
			raise ManifestError(f"bad manifest line {line!r}: {e}") from None

def build_corpus(*, drepl_max: int=5, qrepl_max: int=3, random_count: int=200, max_n: int=60, max_n2: int=20, seed: int=0)->list[CorpusEntry]:
	"""
	The families up to the given depth plus seeded random 2-connected subcubic instances.

	>>> [e.generator for e in build_corpus(drepl_max=1, qrepl_max=0, random_count=1)]
	['drepl', 'drepl', 'qrepl', 'random']
	"""
	rng=random.Random(seed)
	result=[CorpusEntry("drepl", {"t": t}) for t in range(drepl_max+1)]
	result+=[CorpusEntry("qrepl", {"t": t}) for t in range(qrepl_max+1)]
	for index in range(random_count):
		n2=rng.randint(0, max_n2)
		n3=2*rng.randint(2, (max_n-n2)//2)
		result.append(CorpusEntry("random", {"n": n3+n2, "n2": n2}, seed*100003+index))
	return result

def write_manifest(path: Path, entries: Iterable[CorpusEntry])->None:
	Path(path).write_text("".join(e.to_json()+"\n" for e in entries))

def read_manifest(path: Path)->list[CorpusEntry]:
	return [CorpusEntry.from_json(line) for line in Path(path).read_text().splitlines() if line.strip()]
