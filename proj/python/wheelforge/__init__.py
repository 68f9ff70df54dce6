"""Planar separations, wheels and K5 subdivisions on small graphs."""

from ._core import (
    SCHEMA,
    Error,
    Graph,
    Infeasible,
    ParseError,
    PreconditionError,
    UnsupportedSize,
    UsageError,
    all_graphs,
    disc_embedding,
    extend,
    find_k5_subdivision,
    four_color,
    good_wheels,
    is_planar,
    k_connected_graphs,
    obstructions,
    separations,
    two_linkage,
    verify,
    verify_k5_certificate,
)

__all__ = [
    "SCHEMA",
    "Error",
    "Graph",
    "Infeasible",
    "ParseError",
    "PreconditionError",
    "UnsupportedSize",
    "UsageError",
    "all_graphs",
    "disc_embedding",
    "extend",
    "find_k5_subdivision",
    "four_color",
    "good_wheels",
    "is_planar",
    "k_connected_graphs",
    "obstructions",
    "separations",
    "two_linkage",
    "verify",
    "verify_k5_certificate",
]
