"""U_h(sl(2)) generators on V^(j) in the v-basis.

Every closed-form action has an independent matrix-function counterpart
(the ``*_oracle`` functions); the two are compared in the test-suite and by
``verify_*``. All matrices have h-polynomial entries with rational
coefficients; h itself is never evaluated except for the classical limit.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial

from .exact import (
    at_h,
    Q,
    HalfInt,
    HPoly,
    Mat,
    commutator,
    half,
    half_h_power,
    hpoly_matrix,
    identity_like,
    nilpotent_series,
    pochhammer,
    unitriangular_inverse,
)
from .report import Report
from . import su2

GENERATOR_TAGS = ("H", "X", "Y", "Z+", "Z-", "expHX", "expNegHX", "coshHalfInv", "sinhHX")


def catalan_t(k: int) -> int:
    """t_k = (2k-2)! / (k! (k-1)!)."""
    if k < 1:
        raise ValueError("t_k needs k >= 1")
    return factorial(2 * k - 2) // (factorial(k) * factorial(k - 1))


def _empty(tj: int) -> list[list[HPoly]]:
    n = tj + 1
    return [[HPoly() for _ in range(n)] for _ in range(n)]


def _freeze(rows: list[list[HPoly]]) -> Mat:
    return Mat.from_rows(rows)


# ------------------------------------------------------------ closed forms


@lru_cache(maxsize=None)
def exp_hx_matrix(j, sign: int = 1) -> Mat:
    """e^{sign*hX}: v_m -> v_m + 2 sum_{k=1}^{j-m} (sign*h/2)^k v_{m+k}."""
    tj = half(j).twice
    rows = _empty(tj)
    for c in range(tj + 1):
        rows[c][c] = HPoly.const(1)
        for k in range(1, tj - c + 1):
            rows[c + k][c] = 2 * half_h_power(k, sign)
    return _freeze(rows)


def exp_neg_hx_matrix(j) -> Mat:
    return exp_hx_matrix(j, -1)


@lru_cache(maxsize=None)
def x_matrix(j) -> Mat:
    """X v_m = sum_{k=0}^{floor((j-m-1)/2)} (h/2)^{2k}/(2k+1) v_{m+1+2k}."""
    tj = half(j).twice
    rows = _empty(tj)
    for c in range(tj + 1):
        jmm = tj - c
        if jmm < 1:
            continue
        for k in range((jmm - 1) // 2 + 1):
            rows[c + 1 + 2 * k][c] = half_h_power(2 * k) / (2 * k + 1)
    return _freeze(rows)


@lru_cache(maxsize=None)
def n2_matrix(j) -> Mat:
    """N2 with (cosh hX/2)^2 = 1 + N2: v_m -> sum_{k>=1} (h/2)^{2k} v_{m+2k}."""
    tj = half(j).twice
    rows = _empty(tj)
    for c in range(tj + 1):
        for k in range(1, (tj - c) // 2 + 1):
            rows[c + 2 * k][c] = half_h_power(2 * k)
    return _freeze(rows)


@lru_cache(maxsize=None)
def cosh_half_inv_matrix(j) -> Mat:
    """(cosh hX/2)^{-1}: v_m -> v_m - 2 sum_k t_k (h/4)^{2k} v_{m+2k}."""
    tj = half(j).twice
    rows = _empty(tj)
    for c in range(tj + 1):
        rows[c][c] = HPoly.const(1)
        for k in range(1, (tj - c) // 2 + 1):
            rows[c + 2 * k][c] = HPoly.monomial(-2 * catalan_t(k) * Q(1, 4) ** (2 * k), 2 * k)
    return _freeze(rows)


@lru_cache(maxsize=None)
def y_matrix(j) -> Mat:
    """Closed-form Y on the v-basis.

    Y v_m = (j+m)(j-m+1) v_{m-1} - (j-m)(j+m+1)(h/2)^2 v_{m+1}
            + sum_{s=1}^{floor((j-m+1)/2)} (h/2)^{2s} v_{m-1+2s}.
    The s=1 summand lands on v_{m+1} as well and is added to it.
    """
    tj = half(j).twice
    rows = _empty(tj)
    for c in range(tj + 1):
        jpm, jmm = c, tj - c
        if c >= 1:
            rows[c - 1][c] = rows[c - 1][c] + Q(jpm * (jmm + 1))
        if jmm >= 1:
            rows[c + 1][c] = rows[c + 1][c] - Q(jmm * (jpm + 1)) * half_h_power(2)
        for s in range(1, (jmm + 1) // 2 + 1):
            rows[c - 1 + 2 * s][c] = rows[c - 1 + 2 * s][c] + half_h_power(2 * s)
    return _freeze(rows)


def h_matrix(j) -> Mat:
    return hpoly_matrix(su2.h_matrix(j))


# ------------------------------------------------------------ series helpers


def _h_coeff_series(scale, odd: bool, shift: int):
    """Coefficients scale^(k-shift)/k! for k of the chosen parity, in h."""

    def coeff(k: int):
        if (k % 2 == 1) != odd:
            return 0
        return HPoly.monomial(scale ** (k - shift) / factorial(k), k - shift)

    return coeff


def cosh_series(x: Mat, scale=Q(1)) -> Mat:
    """cosh(scale*h*X) for nilpotent X."""
    return nilpotent_series(x, _h_coeff_series(scale, odd=False, shift=0))


def sinh_over_h_series(x: Mat, scale=Q(1)) -> Mat:
    """sinh(scale*h*X)/(scale*h), kept inside the polynomial ring."""
    return nilpotent_series(x, _h_coeff_series(scale, odd=True, shift=1))


def exp_series(x: Mat, sign: int = 1) -> Mat:
    """e^{sign*h*X} for nilpotent X."""
    return nilpotent_series(x, lambda k: HPoly.monomial(Q(sign) ** k / factorial(k), k))


def log_unipotent(u: Mat) -> Mat:
    """log(1 + N) for N = u - 1 nilpotent."""
    n = u - identity_like(u)
    return nilpotent_series(n, lambda k: Q((-1) ** (k + 1), k) if k else 0)


def tanh_map(x: Mat) -> Mat:
    """(2/h) tanh(hX/2) = (2/h) sinh(hX/2) cosh(hX/2)^{-1}."""
    return sinh_over_h_series(x, Q(1, 2)) @ unitriangular_inverse(cosh_series(x, Q(1, 2)))


# ------------------------------------------------------------ oracles


@lru_cache(maxsize=None)
def exp_hx_oracle(j) -> Mat:
    """(1 + z)(1 - z)^{-1} with z = (h/2) Z+."""
    z = hpoly_matrix(su2.zplus_matrix(j)).scale(half_h_power(1))
    return (identity_like(z) + z) @ nilpotent_series(z, lambda k: 1)


@lru_cache(maxsize=None)
def x_oracle(j) -> Mat:
    """X = log(e^{hX}) / h."""
    return log_unipotent(exp_hx_matrix(j)).map(HPoly.div_h)


@lru_cache(maxsize=None)
def n2_oracle(j) -> Mat:
    """(e^{hX} + e^{-hX})/4 - 1/2."""
    e = exp_hx_matrix(j) + exp_neg_hx_matrix(j)
    return e.scale(Q(1, 4)) - identity_like(e).scale(Q(1, 2))


@lru_cache(maxsize=None)
def cosh_half_inv_oracle(j) -> Mat:
    """(1 + N2)^{-1/2} = sum_n (-1)^n (1/2)_n N2^n / n!."""
    return nilpotent_series(n2_oracle(j), lambda n: (-1) ** n * pochhammer(Q(1, 2), n) / factorial(n))


@lru_cache(maxsize=None)
def y_oracle(j) -> Mat:
    """cosh(hX/2)^{-1} Z- cosh(hX/2)^{-1}."""
    c = cosh_half_inv_oracle(j)
    return c @ hpoly_matrix(su2.zminus_matrix(j)) @ c


# ------------------------------------------------------------ generator records


@dataclass(frozen=True)
class GenMatrix:
    tag: str
    j: HalfInt
    matrix: Mat


def generator_matrix(tag: str, j) -> Mat:
    """v-basis matrix of a generator (or derived operator) on V^(j)."""
    if tag == "H":
        return h_matrix(j)
    if tag == "X":
        return x_matrix(j)
    if tag == "Y":
        return y_matrix(j)
    if tag == "Z+":
        return hpoly_matrix(su2.zplus_matrix(j))
    if tag == "Z-":
        return hpoly_matrix(su2.zminus_matrix(j))
    if tag == "expHX":
        return exp_hx_matrix(j)
    if tag == "expNegHX":
        return exp_neg_hx_matrix(j)
    if tag == "coshHalfInv":
        return cosh_half_inv_matrix(j)
    if tag == "sinhHX":
        return sinh_over_h_series(x_matrix(j))
    raise ValueError(f"unknown generator {tag!r}; expected one of {GENERATOR_TAGS}")


def generator(tag: str, j) -> GenMatrix:
    return GenMatrix(tag, half(j), generator_matrix(tag, j))


# ------------------------------------------------------------ verifiers


def check_relations(report: Report, h: Mat, x: Mat, y: Mat, prefix: str = "") -> Report:
    """Append the three U_h(sl(2)) relations for concrete H, X, Y matrices."""
    report.add_matrix_eq(prefix + "[X,Y] = H", commutator(x, y), h)
    report.add_matrix_eq(prefix + "[H,X] = 2 sinh(hX)/h", commutator(h, x), sinh_over_h_series(x).scale(2))
    ch = cosh_series(x)
    report.add_matrix_eq(prefix + "[H,Y] = -Y cosh(hX) - cosh(hX) Y", commutator(h, y), -(y @ ch) - ch @ y)
    return report


def verify_defining_relations(j) -> Report:
    j = half(j)
    return check_relations(Report(f"defining relations on V^({j})"), h_matrix(j), x_matrix(j), y_matrix(j))


def verify_nonlinear_map(j) -> Report:
    """Rebuild Z+- from X, Y and compare with the classical matrices."""
    j = half(j)
    r = Report(f"nonlinear map on V^({j})")
    x = x_matrix(j)
    r.add_matrix_eq("Z+ = (2/h) tanh(hX/2)", tanh_map(x), hpoly_matrix(su2.zplus_matrix(j)))
    ch = cosh_series(x, Q(1, 2))
    r.add_matrix_eq("Z- = cosh(hX/2) Y cosh(hX/2)", ch @ y_matrix(j) @ ch, hpoly_matrix(su2.zminus_matrix(j)))
    r.add_matrix_eq("cosh(hX/2)^-1 closed form = inverse of cosh series",
                    cosh_half_inv_matrix(j), unitriangular_inverse(ch))
    return r


def verify_oracles(j) -> Report:
    """Closed forms against their independent matrix-function counterparts."""
    j = half(j)
    r = Report(f"closed forms vs oracles on V^({j})")
    r.add_matrix_eq("e^{hX} closed form = (1+z)(1-z)^-1", exp_hx_matrix(j), exp_hx_oracle(j))
    r.add_matrix_eq("e^{hX} e^{-hX} = 1", exp_hx_matrix(j) @ exp_neg_hx_matrix(j),
                    identity_like(exp_hx_matrix(j)))
    r.add_matrix_eq("X closed form = log(e^{hX})/h", x_matrix(j), x_oracle(j))
    r.add_matrix_eq("e^{hX} = exp series of X", exp_series(x_matrix(j)), exp_hx_matrix(j))
    r.add_matrix_eq("N2 closed form = (e^{hX}+e^{-hX})/4 - 1/2", n2_matrix(j), n2_oracle(j))
    r.add_matrix_eq("cosh(hX/2)^-1 closed form = (1+N2)^(-1/2) series", cosh_half_inv_matrix(j),
                    cosh_half_inv_oracle(j))
    c = cosh_half_inv_matrix(j)
    one = identity_like(c)
    r.add_matrix_eq("(cosh(hX/2)^-1)^2 (1+N2) = 1", c @ c @ (one + n2_matrix(j)), one)
    r.add_matrix_eq("Y closed form = cosh^-1 Z- cosh^-1", y_matrix(j), y_oracle(j))
    return r


def classical_limit_report(j) -> Report:
    """At h = 0: X -> Z+, Y -> Z-, e^{hX} and cosh(hX/2)^-1 -> 1."""
    j = half(j)
    r = Report(f"classical limit of generators on V^({j})")
    one = Mat.identity(j.twice + 1)
    r.add_matrix_eq("H|h=0 = H", at_h(h_matrix(j)), su2.h_matrix(j))
    r.add_matrix_eq("X|h=0 = Z+", at_h(x_matrix(j)), su2.zplus_matrix(j))
    r.add_matrix_eq("Y|h=0 = Z-", at_h(y_matrix(j)), su2.zminus_matrix(j))
    r.add_matrix_eq("e^{hX}|h=0 = 1", at_h(exp_hx_matrix(j)), one)
    r.add_matrix_eq("cosh(hX/2)^-1|h=0 = 1", at_h(cosh_half_inv_matrix(j)), one)
    return r
