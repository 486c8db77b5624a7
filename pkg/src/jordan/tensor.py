"""Coproducts of U_h(sl(2)) on V^(j1) (x) V^(j2) via Kronecker products.

Basis of the tensor space: v^{j1}_{m1} (x) v^{j2}_{m2}, m1 the slow index.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

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
    kron,
    nilpotent_series,
)
from .jordanian import (
    check_relations,
    cosh_series,
    exp_hx_matrix,
    exp_neg_hx_matrix,
    exp_series,
    h_matrix,
    tanh_map,
    x_matrix,
    y_matrix,
)
from .report import Report
from . import su2

COPROD_TAGS = ("H", "X", "Y", "Z+", "Z-")
DEFAULT_TRIPLE_DIM_CAP = 64


@dataclass(frozen=True)
class TensorSpace:
    j1: HalfInt
    j2: HalfInt

    @property
    def dims(self) -> tuple[int, int]:
        return self.j1.twice + 1, self.j2.twice + 1

    @property
    def dim(self) -> int:
        a, b = self.dims
        return a * b

    def index(self, m1, m2) -> int:
        i1 = su2.RepSpace(self.j1).index(m1)
        i2 = su2.RepSpace(self.j2).index(m2)
        return i1 * self.dims[1] + i2

    def labels(self) -> list[tuple[HalfInt, HalfInt]]:
        w1 = su2.RepSpace(self.j1).weights()
        w2 = su2.RepSpace(self.j2).weights()
        return [(a, b) for a in w1 for b in w2]


def tensor_space(j1, j2) -> TensorSpace:
    return TensorSpace(half(j1), half(j2))


@dataclass(frozen=True)
class CoprodMatrix:
    tag: str
    space: TensorSpace
    matrix: Mat


# A "factor" carries the matrices the coproduct formulas need: H, X, Y,
# e^{hX} and e^{-hX}. Irreps and tensor products of factors are both factors,
# which is what makes coassociativity checkable.


def irrep_factor(j) -> dict[str, Mat]:
    return {
        "H": h_matrix(j),
        "X": x_matrix(j),
        "Y": y_matrix(j),
        "E": exp_hx_matrix(j),
        "Einv": exp_neg_hx_matrix(j),
    }


def _coprod_parts(a: dict[str, Mat], b: dict[str, Mat], tag: str) -> Mat:
    one_a, one_b = identity_like(a["X"]), identity_like(b["X"])
    if tag == "X":
        return kron(a["X"], one_b) + kron(one_a, b["X"])
    if tag in ("H", "Y"):
        return kron(a[tag], b["E"]) + kron(a["Einv"], b[tag])
    raise ValueError(f"no primitive coproduct formula for {tag!r}")


def tensor_factor(a: dict[str, Mat], b: dict[str, Mat], rebuild_exp: bool = False) -> dict[str, Mat]:
    """Factor for the tensor product.

    e^{+-hX} is group-like, so by default it is E (x) E. With ``rebuild_exp`` it is
    recomputed as the exponential series of Delta(X) instead (slow for large dims).
    """
    dx = _coprod_parts(a, b, "X")
    if rebuild_exp:
        e, einv = exp_series(dx, 1), exp_series(dx, -1)
    else:
        e, einv = kron(a["E"], b["E"]), kron(a["Einv"], b["Einv"])
    return {"H": _coprod_parts(a, b, "H"), "X": dx, "Y": _coprod_parts(a, b, "Y"), "E": e, "Einv": einv}


def _zplus(j) -> Mat:
    return hpoly_matrix(su2.zplus_matrix(j))


@lru_cache(maxsize=None)
def coprod_matrix(tag: str, j1, j2) -> Mat:
    j1, j2 = half(j1), half(j2)
    if tag in ("H", "X", "Y"):
        return _coprod_parts(irrep_factor(j1), irrep_factor(j2), tag)
    if tag == "Z+":
        return coprod_zplus_series(j1, j2)
    if tag == "Z-":
        ch = cosh_series(coprod_matrix("X", j1, j2), Q(1, 2))
        return ch @ coprod_matrix("Y", j1, j2) @ ch
    raise ValueError(f"unknown generator {tag!r}; expected one of {COPROD_TAGS}")


def coprod(tag: str, j1, j2) -> CoprodMatrix:
    return CoprodMatrix(tag, tensor_space(j1, j2), coprod_matrix(tag, j1, j2))


def coprod_zplus_series(j1, j2) -> Mat:
    """(1 (x) Z+ + Z+ (x) 1) sum_n (-h^2/4)^n Z+^n (x) Z+^n."""
    z1, z2 = _zplus(j1), _zplus(j2)
    one1, one2 = identity_like(z1), identity_like(z2)
    zz = kron(z1, z2)
    series = nilpotent_series(zz, lambda n: HPoly.monomial(Q(-1, 4) ** n, 2 * n))
    return (kron(one1, z2) + kron(z1, one2)) @ series


def coprod_zplus_tanh(j1, j2) -> Mat:
    """(2/h) tanh(h Delta(X) / 2)."""
    return tanh_map(coprod_matrix("X", j1, j2))


def coprod_h_series(j1, j2) -> Mat:
    """H(x)1 + 1(x)H + 2H (x) sum_{n>=1} (hZ+/2)^n + sum_{n>=1} (-hZ+/2)^n (x) 2H."""
    h1, h2 = h_matrix(j1), h_matrix(j2)
    z1, z2 = _zplus(j1), _zplus(j2)
    one1, one2 = identity_like(h1), identity_like(h2)
    geo_pos = nilpotent_series(z2, lambda n: half_h_power(n) if n else 0)
    geo_neg = nilpotent_series(z1, lambda n: half_h_power(n, -1) if n else 0)
    return (kron(h1, one2) + kron(one1, h2)
            + kron(h1.scale(2), geo_pos) + kron(geo_neg, h2.scale(2)))


def classical_coprod(tag: str, j1, j2) -> Mat:
    """delta(x) = x (x) 1 + 1 (x) x for the classical sl(2) generators."""
    mats = {"H": su2.h_matrix, "Z+": su2.zplus_matrix, "Z-": su2.zminus_matrix}
    if tag not in mats:
        raise ValueError(f"no classical counterpart for {tag!r}")
    a, b = mats[tag](j1), mats[tag](j2)
    return kron(a, Mat.identity(b.rows)) + kron(Mat.identity(a.rows), b)


# ------------------------------------------------------------ verifiers


def verify_coprod_constructions(j1, j2) -> Report:
    j1, j2 = half(j1), half(j2)
    r = Report(f"coproduct constructions on V^({j1}) x V^({j2})")
    r.add_matrix_eq("Delta(Z+) series = (2/h) tanh(h Delta(X)/2)", coprod_zplus_series(j1, j2),
                    coprod_zplus_tanh(j1, j2))
    r.add_matrix_eq("Delta(H) twisted = Delta(H) series in Z+", coprod_matrix("H", j1, j2),
                    coprod_h_series(j1, j2))
    f1, f2 = irrep_factor(j1), irrep_factor(j2)
    dx = coprod_matrix("X", j1, j2)
    r.add_matrix_eq("e^{hX} (x) e^{hX} = exp(h Delta(X))", kron(f1["E"], f2["E"]), exp_series(dx, 1))
    r.add_matrix_eq("e^{-hX} (x) e^{-hX} = exp(-h Delta(X))", kron(f1["Einv"], f2["Einv"]), exp_series(dx, -1))
    return r


def verify_coprod_homomorphism(j1, j2) -> Report:
    j1, j2 = half(j1), half(j2)
    r = Report(f"coproduct homomorphism on V^({j1}) x V^({j2})")
    dh, dx, dy = (coprod_matrix(t, j1, j2) for t in ("H", "X", "Y"))
    check_relations(r, dh, dx, dy, prefix="Delta: ")
    zp, zm = coprod_matrix("Z+", j1, j2), coprod_matrix("Z-", j1, j2)
    r.add_matrix_eq("[Delta(Z+), Delta(Z-)] = Delta(H)", commutator(zp, zm), dh)
    r.add_matrix_eq("[Delta(H), Delta(Z+)] = 2 Delta(Z+)", commutator(dh, zp), zp.scale(2))
    r.add_matrix_eq("[Delta(H), Delta(Z-)] = -2 Delta(Z-)", commutator(dh, zm), zm.scale(-2))
    return r


def verify_coassociativity(j1, j2, j3, max_dim: int = DEFAULT_TRIPLE_DIM_CAP) -> Report:
    j1, j2, j3 = half(j1), half(j2), half(j3)
    dim = (j1.twice + 1) * (j2.twice + 1) * (j3.twice + 1)
    if dim > max_dim:
        raise ValueError(f"triple product dimension {dim} exceeds cap {max_dim}")
    r = Report(f"coassociativity on V^({j1}) x V^({j2}) x V^({j3})")
    f1, f2, f3 = irrep_factor(j1), irrep_factor(j2), irrep_factor(j3)
    left = tensor_factor(tensor_factor(f1, f2), f3)
    right = tensor_factor(f1, tensor_factor(f2, f3))
    for tag in ("H", "X", "Y"):
        r.add_matrix_eq(f"(Delta x id) Delta({tag}) = (id x Delta) Delta({tag})", left[tag], right[tag])
    return r


def classical_limit_report(j1, j2) -> Report:
    j1, j2 = half(j1), half(j2)
    r = Report(f"classical limit of coproducts on V^({j1}) x V^({j2})")
    for tag in ("H", "Z+", "Z-"):
        r.add_matrix_eq(f"Delta({tag})|h=0 = delta({tag})", at_h(coprod_matrix(tag, j1, j2)),
                        classical_coprod(tag, j1, j2))
    # at h=0, X -> Z+ and Y -> Z-
    r.add_matrix_eq("Delta(X)|h=0 = delta(Z+)", at_h(coprod_matrix("X", j1, j2)), classical_coprod("Z+", j1, j2))
    r.add_matrix_eq("Delta(Y)|h=0 = delta(Z-)", at_h(coprod_matrix("Y", j1, j2)), classical_coprod("Z-", j1, j2))
    return r
