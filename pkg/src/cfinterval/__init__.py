"""Conflict-free colouring and exact hitting sets for interval hypergraphs."""
from .cfdp import canonicalize, max_cfc, min_cfc
from .cooccurrence import build_cooccurrence, clique_number, colour_graph, lift_colouring
from .ehs import colouring_to_partition, is_ehs, partition_to_colouring
from .graphs import SimpleGraph, build_canonical, find_forbidden, is_ehig
from .hypergraph import Interval, IntervalHypergraph, parse_hypergraph, verify_cf_colouring

__all__ = [
    "Interval",
    "IntervalHypergraph",
    "SimpleGraph",
    "build_canonical",
    "build_cooccurrence",
    "canonicalize",
    "clique_number",
    "colour_graph",
    "colouring_to_partition",
    "find_forbidden",
    "is_ehig",
    "is_ehs",
    "lift_colouring",
    "max_cfc",
    "min_cfc",
    "parse_hypergraph",
    "partition_to_colouring",
    "verify_cf_colouring",
]
