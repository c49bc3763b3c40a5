"""Clique covers, hat graphs and their polynomials.

Graphs use 0-based vertices.  Polynomials come back as ascending lists of
Python ints; campaign and root reports come back as the same dicts the
command-line tool prints as JSON.
"""

from ._adjointlab import (
    CapExceeded,
    DegenerateInput,
    Graph,
    NotConnected,
    ParseError,
    chromatic_cross_check,
    clique_cover_spectrum,
    hat,
    independence_spectrum,
    line_graph,
    matching_spectrum,
    polynomial,
    roots,
    series,
    sweep,
    verify,
    verify_bijection,
)

__all__ = [
    "CapExceeded",
    "DegenerateInput",
    "Graph",
    "NotConnected",
    "ParseError",
    "chromatic_cross_check",
    "clique_cover_spectrum",
    "hat",
    "independence_spectrum",
    "line_graph",
    "matching_spectrum",
    "polynomial",
    "roots",
    "series",
    "sweep",
    "verify",
    "verify_bijection",
]
