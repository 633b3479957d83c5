"""Minimal obstructions to list 3-colorability in H-free graphs."""

from ._core import (
    P6_FREE_COUNTS,
    ContractViolation,
    Graph,
    InputError,
    ParseError,
    ResourceError,
    SizeError,
    classify,
    critical_vertices,
    dominates,
    enumerate_counts,
    extract_minimal,
    gen_gr,
    gen_hr,
    is_4_vertex_critical,
    is_minimal_obstruction,
    l_colorable,
    max_propagation_length,
    parse_graph6,
    verify_gr,
    verify_hr,
    write_graph6,
)

__all__ = [
    "P6_FREE_COUNTS",
    "ContractViolation",
    "Graph",
    "InputError",
    "ParseError",
    "ResourceError",
    "SizeError",
    "classify",
    "critical_vertices",
    "dominates",
    "enumerate_counts",
    "extract_minimal",
    "gen_gr",
    "gen_hr",
    "is_4_vertex_critical",
    "is_minimal_obstruction",
    "l_colorable",
    "max_propagation_length",
    "parse_graph6",
    "verify_gr",
    "verify_hr",
    "write_graph6",
]
