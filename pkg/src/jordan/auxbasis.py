"""The auxiliary w-basis of V^(j1) (x) V^(j2).

On w, Delta(H) and Delta(Z+-) act by the undeformed tensor-product formulas.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial

from .exact import (
    Q,
    HalfInt,
    HPoly,
    Mat,
    half,
    half_h_power,
    hpoly_matrix,
    pochhammer,
    unitriangular_inverse,
)
from .report import Report
from .tensor import classical_coprod, coprod_matrix, tensor_space


def b_coeff(m1, m2, k: int, l: int):
    """(-2m1-k)_l (-2m2-l)_k / (k! l!) for k, l >= 0, else 0."""
    if k < 0 or l < 0:
        return Q(0)
    m1, m2 = half(m1), half(m2)
    return pochhammer(-m1.twice - k, l) * pochhammer(-m2.twice - l, k) / (factorial(k) * factorial(l))


def a_coeff(m1, m2, k: int, l: int) -> HPoly:
    """(-1)^k (h/2)^{k+l} (b_{k,l} - b_{k-1,l-1})."""
    if k < 0 or l < 0:
        return HPoly()
    c = b_coeff(m1, m2, k, l) - b_coeff(m1, m2, k - 1, l - 1)
    return half_h_power(k + l) * ((-1) ** k * c)


@dataclass(frozen=True)
class WVector:
    j1: HalfInt
    j2: HalfInt
    m1: HalfInt
    m2: HalfInt
    coords: tuple  # HPoly per v (x) v basis vector, tensor index order


def _check_label(j: HalfInt, m: HalfInt):
    if abs(m.twice) > j.twice or (j.twice - m.twice) % 2:
        raise ValueError(f"label m={m} out of range for j={j}")


def w_vector(j1, j2, m1, m2) -> WVector:
    """w = sum_{k<=j1-m1, l<=j2-m2} a_{k,l} v_{m1+k} (x) v_{m2+l}."""
    j1, j2, m1, m2 = half(j1), half(j2), half(m1), half(m2)
    _check_label(j1, m1)
    _check_label(j2, m2)
    sp = tensor_space(j1, j2)
    coords = [HPoly() for _ in range(sp.dim)]
    for k in range((j1.twice - m1.twice) // 2 + 1):
        for l in range((j2.twice - m2.twice) // 2 + 1):
            coords[sp.index(m1 + k, m2 + l)] = a_coeff(m1, m2, k, l)
    return WVector(j1, j2, m1, m2, tuple(coords))


@lru_cache(maxsize=None)
def w_matrix(j1, j2) -> Mat:
    """Columns are the w vectors, in the same (m1, m2) order as the v (x) v basis."""
    j1, j2 = half(j1), half(j2)
    sp = tensor_space(j1, j2)
    return Mat.from_columns([w_vector(j1, j2, m1, m2).coords for m1, m2 in sp.labels()])


@lru_cache(maxsize=None)
def w_matrix_inverse(j1, j2) -> Mat:
    return unitriangular_inverse(w_matrix(j1, j2))


def _labels(j1, j2) -> list[str]:
    return [f"w[{a},{b}]" for a, b in tensor_space(j1, j2).labels()]


def verify_unitriangular(j1, j2) -> Report:
    j1, j2 = half(j1), half(j2)
    r = Report(f"w-basis unitriangularity on V^({j1}) x V^({j2})")
    w = w_matrix(j1, j2)
    n = w.rows
    ok_diag = all(w[i, i] == 1 for i in range(n))
    ok_upper = all(not w[i, c] for c in range(n) for i in range(c))
    r.add("unit diagonal", ok_diag)
    r.add("only raises (m1, m2) off the diagonal", ok_upper)
    r.add_matrix_eq("W W^-1 = 1", w @ w_matrix_inverse(j1, j2), Mat.identity(n).map(HPoly.coerce))
    return r


def verify_prop_H(j1, j2) -> Report:
    j1, j2 = half(j1), half(j2)
    r = Report(f"Delta(H) on w-basis, V^({j1}) x V^({j2})")
    w = w_matrix(j1, j2)
    rhs = w @ hpoly_matrix(classical_coprod("H", j1, j2))
    r.add_matrix_eq("Delta(H) w = 2(m1+m2) w", coprod_matrix("H", j1, j2) @ w, rhs, _labels(j1, j2))
    return r


def verify_prop_Zplus(j1, j2) -> Report:
    j1, j2 = half(j1), half(j2)
    r = Report(f"Delta(Z+) on w-basis, V^({j1}) x V^({j2})")
    w = w_matrix(j1, j2)
    rhs = w @ hpoly_matrix(classical_coprod("Z+", j1, j2))
    r.add_matrix_eq("Delta(Z+) w = w[m1+1,m2] + w[m1,m2+1]", coprod_matrix("Z+", j1, j2) @ w, rhs,
                    _labels(j1, j2))
    return r


def verify_prop_Zminus(j1, j2) -> Report:
    j1, j2 = half(j1), half(j2)
    r = Report(f"Delta(Z-) on w-basis, V^({j1}) x V^({j2})")
    w = w_matrix(j1, j2)
    rhs = w @ hpoly_matrix(classical_coprod("Z-", j1, j2))
    r.add_matrix_eq("Delta(Z-) w = (j1+m1)(j1-m1+1) w[m1-1,m2] + (j2+m2)(j2-m2+1) w[m1,m2-1]",
                    coprod_matrix("Z-", j1, j2) @ w, rhs, _labels(j1, j2))
    return r


def verify_propositions(j1, j2) -> Report:
    j1, j2 = half(j1), half(j2)
    r = Report(f"w-basis propositions on V^({j1}) x V^({j2})")
    for part in (verify_unitriangular(j1, j2), verify_prop_H(j1, j2), verify_prop_Zplus(j1, j2),
                 verify_prop_Zminus(j1, j2)):
        r.extend(part)
    return r


# ------------------------------------------------------------ b-coefficient identities


def resb_lhs(m1, m2, k: int, l: int):
    return sum((b_coeff(m1, m2, k, l - n) - b_coeff(m1, m2, k - 1, l - n - 1) for n in range(1, l + 1)), Q(0))


def resb_rhs(m1, m2, k: int, l: int):
    """((2m1+k-l+1)/(2m1+k)) b_{k,l-1}; undefined when 2m1+k = 0."""
    m1 = half(m1)
    den = m1.twice + k
    if den == 0:
        raise ZeroDivisionError("2m1 + k = 0")
    return Q(m1.twice + k - l + 1, den) * b_coeff(m1, m2, k, l - 1)


def telescoping_lhs(m1, m2, k: int, l: int):
    """sum_{n>=0} (b_{k-n,l-n} - b_{k-n-1,l-n-1}), which should equal b_{k,l}."""
    return sum((b_coeff(m1, m2, k - n, l - n) - b_coeff(m1, m2, k - n - 1, l - n - 1)
                for n in range(min(k, l) + 1)), Q(0))
