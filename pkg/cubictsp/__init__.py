r"""
Approximate graphic TSP on cubic graphs within a factor of 9/7.

The pipeline for a 2-connected subcubic graph: :mod:`~cubictsp.reduction` shrinks the graph
until it is basic or clean, :mod:`~cubictsp.eulerian` finds a spanning Eulerian subgraph of small
excess there (through :mod:`~cubictsp.matching` for clean graphs), the reductions lift it back,
and :mod:`~cubictsp.walk` turns it into a closed walk.

>>> from cubictsp import tsp_walk_subcubic, named
>>> tsp_walk_subcubic(named("petersen")).length
11
"""

from .config import GlobalConfiguration, use_config
from .eulerian import EulerianSubgraph, excess, solve_basic, solve_clean
from .graph import Graph, named
from .graphio import read_graph, write_graph
from .matching import decompose_uniform, eulerian_family
from .reduction import apply_rule, classify_graph, find_reduction, reduce_to_terminal
from .walk import TspWalk, approximate_cubic_tsp, assemble_walk, tsp_walk_subcubic

__all__=[
		"GlobalConfiguration", "use_config",
		"EulerianSubgraph", "excess", "solve_basic", "solve_clean",
		"Graph", "named",
		"read_graph", "write_graph",
		"decompose_uniform", "eulerian_family",
		"apply_rule", "classify_graph", "find_reduction", "reduce_to_terminal",
		"TspWalk", "approximate_cubic_tsp", "assemble_walk", "tsp_walk_subcubic",
		]
