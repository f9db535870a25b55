"""Exact-arithmetic toolkit for Heisenberg-invariant quadric geometry,
theta characteristics over F_2, symplectic congruence subgroups, pfaffian
rank loci with certified Hilbert data, and apolarity, together with the
`verify` CLI binding every certified claim to a runnable check."""

from .poly import GF, QQ, Polynomial, Ring, parse_poly, xring
from .polymat import PolyMatrix, determinant, kernel_pfaffians, pfaffian
from .groebner import Ideal, groebner_basis, hilbert_summary
from .heisenberg import PolarizationType, schrodinger_matrix
from .registry import Options, list_checks, run, run_all

__all__ = [
    "GF", "QQ", "Polynomial", "Ring", "parse_poly", "xring",
    "PolyMatrix", "determinant", "pfaffian", "kernel_pfaffians",
    "Ideal", "groebner_basis", "hilbert_summary",
    "PolarizationType", "schrodinger_matrix",
    "Options", "list_checks", "run", "run_all",
]

__version__ = "0.1.0"
