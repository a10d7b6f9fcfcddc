"""Chromatic symmetric functions of small graphs and e-positivity checks."""

from .csf import chromatic_polynomial, csf
from .graph import Graph, GraphError, from_edges
from .symfun import SymPoly, is_positive

__version__ = "0.1.0"

__all__ = ["Graph", "GraphError", "SymPoly", "chromatic_polynomial", "csf", "from_edges", "is_positive"]
