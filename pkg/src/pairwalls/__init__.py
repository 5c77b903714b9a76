"""Exact wall-crossing calculator for rank-2 coherent pairs on P^3."""

from .numclass import NumClass, collapsing_wall, curve_poly, hilbert_poly, twist
from .ratpoly import RatPoly, lex_cmp
from .report import build_report, render
from .walls import enumerate_walls, zero_dim_family

__all__ = [
    "NumClass",
    "RatPoly",
    "build_report",
    "collapsing_wall",
    "curve_poly",
    "enumerate_walls",
    "hilbert_poly",
    "lex_cmp",
    "render",
    "twist",
    "zero_dim_family",
]

__version__ = "0.1.0"
