"""Classical sl(2) irreps V^(j) in the v- and e-bases.

Basis vectors are ordered by ascending m: index i <-> m = -j + i.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial

from .exact import Q, HalfInt, Mat, SqrtRat, half, sqrt_rat


@dataclass(frozen=True)
class RepSpace:
    j: HalfInt

    def __post_init__(self):
        if self.j.twice < 0:
            raise ValueError("2j must be non-negative")

    @property
    def dim(self) -> int:
        return self.j.twice + 1

    def weights(self) -> list[HalfInt]:
        return [HalfInt(-self.j.twice + 2 * i) for i in range(self.dim)]

    def index(self, m) -> int:
        m = half(m)
        if abs(m.twice) > self.j.twice or (self.j.twice - m.twice) % 2:
            raise ValueError(f"m={m} is not a weight of V^({self.j})")
        return (m.twice + self.j.twice) // 2


def rep_space(j) -> RepSpace:
    return RepSpace(half(j))


def _jm(tj: int, i: int) -> tuple[int, int]:
    """(j+m, j-m) for basis index i of V^(j) with 2j = tj."""
    return i, tj - i


def alpha(j, m) -> SqrtRat:
    """v^j_m = alpha_{j,m} e^j_m with alpha = sqrt((j+m)!/(j-m)!)."""
    j, m = half(j), half(m)
    if abs(m.twice) > j.twice or (j.twice - m.twice) % 2:
        raise ValueError(f"alpha undefined for j={j}, m={m}")
    jpm, jmm = (j.twice + m.twice) // 2, (j.twice - m.twice) // 2
    return sqrt_rat(Q(factorial(jpm), factorial(jmm)))


@lru_cache(maxsize=None)
def h_matrix(j) -> Mat:
    tj = half(j).twice
    return Mat.diag([Q(-tj + 2 * i) for i in range(tj + 1)], zero=Q(0))


@lru_cache(maxsize=None)
def zplus_matrix(j) -> Mat:
    """Z+ v_m = v_{m+1}."""
    tj = half(j).twice
    n = tj + 1
    return Mat(n, n, [Q(1) if r == c + 1 else Q(0) for r in range(n) for c in range(n)])


@lru_cache(maxsize=None)
def zminus_matrix(j) -> Mat:
    """Z- v_m = (j+m)(j-m+1) v_{m-1}."""
    tj = half(j).twice
    n = tj + 1

    def entry(r, c):
        if r != c - 1:
            return Q(0)
        jpm, jmm = _jm(tj, c)
        return Q(jpm * (jmm + 1))

    return Mat(n, n, [entry(r, c) for r in range(n) for c in range(n)])


@lru_cache(maxsize=None)
def v_to_e_change(j) -> Mat:
    """diag(alpha_{j,m}) over SqrtRat."""
    rs = rep_space(j)
    return Mat.diag([alpha(rs.j, m) for m in rs.weights()], zero=SqrtRat())


def to_e_basis(m_v: Mat, j) -> Mat:
    """Matrix of the same operator in the e-basis: D M D^-1 with D = diag(alpha).

    Works for rational or h-polynomial entries; the result lives over SqrtRat.
    """
    d = [alpha(half(j), m) for m in rep_space(j).weights()]
    n = len(d)
    if m_v.shape != (n, n):
        raise ValueError("matrix does not act on V^(j)")
    inv = [x.inverse() for x in d]
    out = []
    for r in range(n):
        for c in range(n):
            x = m_v[r, c]
            if not x:
                out.append(x * SqrtRat())
            else:
                out.append(x * (d[r] * inv[c]))
    return Mat(n, n, out)


def e_basis_generators(j) -> dict[str, Mat]:
    return {
        "H": to_e_basis(h_matrix(j), j),
        "Z+": to_e_basis(zplus_matrix(j), j),
        "Z-": to_e_basis(zminus_matrix(j), j),
    }
