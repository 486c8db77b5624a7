"""Exact representations and Clebsch-Gordan coefficients of the Jordanian algebra U_h(sl(2)).

h is kept formal: every matrix entry is a polynomial in h with coefficients in Q(sqrt).
"""
from .exact import H, HalfInt, HPoly, Mat, Q, SqrtRat, half, sqrt_rat
from .cgc import classical_cgc, deformed_cgc, deformed_cgc_table
from .jordanian import generator_matrix
from .tensor import coprod_matrix

__all__ = [
    "H", "HalfInt", "HPoly", "Mat", "Q", "SqrtRat", "half", "sqrt_rat",
    "classical_cgc", "deformed_cgc", "deformed_cgc_table", "generator_matrix", "coprod_matrix",
]
__version__ = "0.1.0"
