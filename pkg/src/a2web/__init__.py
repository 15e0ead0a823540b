"""Tableaux, A2-webs and the bijection between them."""

from .bijection import phi, phi_inverse, phi_trace
from .kernels import BACKEND
from .tableaux import Tableau, format_tableau, parse_tableau
from .web_core import Web, canonical_form, format_web, is_nonelliptic, parse_web

__all__ = [
    "BACKEND",
    "Tableau",
    "Web",
    "canonical_form",
    "format_tableau",
    "format_web",
    "is_nonelliptic",
    "parse_tableau",
    "parse_web",
    "phi",
    "phi_inverse",
    "phi_trace",
]
