"""Exact computation and verification of inhomogeneous spin q-Whittaker polynomials."""

from .errors import *  # noqa: F401,F403
from .scalar import Q, TruncSeries, series_equal_mod, series_inv
from .partitions import ParamSeq, enumerate_partitions
from .poly import MPoly, SymPoly
from .whittaker import f_dual, f_skew, g_basis, h_value
from .degenerations import f_el, f_tilde, h_el, h_tilde
from .interpolation import Grid, classify_grid, hook_value, solve_f

__version__ = "0.1.0"
