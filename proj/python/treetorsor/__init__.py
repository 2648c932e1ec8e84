"""Ribbon graphs, divisor classes, and the two spanning-tree torsors."""

from ._core import (
    GraphError,
    Permutation,
    RibbonGraph,
    action_permutation,
    break_representative,
    catalog,
    catalog_names,
    catalog_note,
    construct_disagreement,
    degree,
    difference,
    find_proper_witness_pair,
    has_nonseparating_cycle,
    is_break_divisor,
    linearly_equivalent,
    picard,
    scan_bases,
    spanning_trees,
    torsors_equal,
)

__all__ = [
    "GraphError",
    "Permutation",
    "RibbonGraph",
    "action_permutation",
    "break_representative",
    "catalog",
    "catalog_names",
    "catalog_note",
    "construct_disagreement",
    "degree",
    "difference",
    "find_proper_witness_pair",
    "has_nonseparating_cycle",
    "is_break_divisor",
    "linearly_equivalent",
    "picard",
    "scan_bases",
    "spanning_trees",
    "torsors_equal",
]
