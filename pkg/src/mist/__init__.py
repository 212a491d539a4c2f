"""Approximate maximum internal spanning trees via path-cycle covers."""

from .assemble import approx_mist
from .cover import PathCycleCover, max_path_cycle_cover
from .generators import gen_random, gen_tight
from .graph import Graph, SpanningTree, parse_graph, read_graph
from .oracle import exact_mist
from .reconstruct import reconstruct
from .reduce import reduce_graph, restore

__all__ = [
    "Graph",
    "PathCycleCover",
    "SpanningTree",
    "approx_mist",
    "exact_mist",
    "gen_random",
    "gen_tight",
    "max_path_cycle_cover",
    "parse_graph",
    "read_graph",
    "reconstruct",
    "reduce_graph",
    "restore",
]
