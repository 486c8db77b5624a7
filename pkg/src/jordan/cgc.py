"""Clebsch-Gordan coefficients, classical and h-deformed.

Deformed coefficients are h-polynomials with SqrtRat coefficients:

    CC^{j1,j2,j}_{n1,n2,m}(h) = sum_{m1+m2=m} C^{j1,j2,j}_{m1,m2,m} A^{m1,m2}_{n1-m1,n2-m2}

where A rescales the w-basis coefficients a^{m1,m2}_{k,l} to the e-basis.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import factorial

from .auxbasis import a_coeff, w_vector
from .exact import (
    Q,
    HalfInt,
    HPoly,
    Mat,
    SqrtRat,
    half,
    kron,
    sqrt_rat,
)
from .jordanian import generator_matrix
from .report import Report
from .su2 import alpha, rep_space, to_e_basis, v_to_e_change
from .tensor import coprod_matrix, tensor_space

COUPLED_OPERATORS = ("H", "Z+", "Z-", "X", "Y")


def _valid(j: HalfInt, m: HalfInt) -> bool:
    return abs(m.twice) <= j.twice and (j.twice - m.twice) % 2 == 0


def triangle(j1, j2, j) -> bool:
    j1, j2, j = half(j1), half(j2), half(j)
    return (abs(j1.twice - j2.twice) <= j.twice <= j1.twice + j2.twice
            and (j1.twice + j2.twice + j.twice) % 2 == 0)


def coupled_spins(j1, j2) -> list[HalfInt]:
    """j = j1+j2, j1+j2-1, ..., |j1-j2|."""
    j1, j2 = half(j1), half(j2)
    return [HalfInt(t) for t in range(j1.twice + j2.twice, abs(j1.twice - j2.twice) - 1, -2)]


@lru_cache(maxsize=None)
def classical_cgc(j1, j2, j, m1, m2, m) -> SqrtRat:
    """su(2) Clebsch-Gordan coefficient by the Racah/Edmonds single sum."""
    j1, j2, j, m1, m2, m = (half(x) for x in (j1, j2, j, m1, m2, m))
    if (m1.twice + m2.twice != m.twice or not triangle(j1, j2, j)
            or not (_valid(j1, m1) and _valid(j2, m2) and _valid(j, m))):
        return SqrtRat()
    # all quantities below are integers
    def d(*twice):
        s = sum(twice)
        assert s % 2 == 0
        return s // 2

    a, b, c = j1.twice, j2.twice, j.twice
    pref = Q(factorial(d(a, b, -c)) * factorial(d(a, -b, c)) * factorial(d(-a, b, c)),
             factorial(d(a, b, c) + 1))
    pref *= (factorial(d(a, m1.twice)) * factorial(d(a, -m1.twice)) * factorial(d(b, m2.twice))
             * factorial(d(b, -m2.twice)) * factorial(d(c, m.twice)) * factorial(d(c, -m.twice)) * (c + 1))
    args = lambda k: (k, d(a, b, -c) - k, d(a, -m1.twice) - k, d(b, m2.twice) - k,
                      d(c, -b, m1.twice) + k, d(c, -a, -m2.twice) + k)
    total = Q(0)
    for k in range(0, d(a, b, -c) + 1):
        xs = args(k)
        if min(xs) < 0:
            continue
        den = 1
        for x in xs:
            den *= factorial(x)
        total += Q((-1) ** k, den)
    return sqrt_rat(pref) * total


def v_basis_cgc(j1, j2, j, m1, m2, m) -> SqrtRat:
    """c = alpha_{j,m} / (alpha_{j1,m1} alpha_{j2,m2}) C."""
    c = classical_cgc(j1, j2, j, m1, m2, m)
    if not c:
        return c
    return c * alpha(j, m) / (alpha(j1, m1) * alpha(j2, m2))


def _alpha_ratio_sq(j: HalfInt, m: HalfInt, k: int):
    """(alpha_{j,m+k} / alpha_{j,m})^2 = (j+m+k)! (j-m)! / ((j-m-k)! (j+m)!)."""
    jpm, jmm = (j.twice + m.twice) // 2, (j.twice - m.twice) // 2
    return Q(factorial(jpm + k) * factorial(jmm), factorial(jmm - k) * factorial(jpm))


def a_cap(j1, j2, m1, m2, k: int, l: int) -> HPoly:
    """A^{m1,m2}_{k,l}: the w-basis coefficient carried over to the e (x) e basis."""
    j1, j2, m1, m2 = half(j1), half(j2), half(m1), half(m2)
    if k < 0 or l < 0:
        return HPoly()
    if not (_valid(j1, m1) and _valid(j1, m1 + k) and _valid(j2, m2) and _valid(j2, m2 + l)):
        return HPoly()
    a = a_coeff(m1, m2, k, l)
    if not a:
        return HPoly()
    return a * sqrt_rat(_alpha_ratio_sq(j1, m1, k) * _alpha_ratio_sq(j2, m2, l))


@lru_cache(maxsize=None)
def deformed_cgc(j1, j2, j, n1, n2, m) -> HPoly:
    j1, j2, j, n1, n2, m = (half(x) for x in (j1, j2, j, n1, n2, m))
    out = HPoly()
    for m1 in rep_space(j1).weights():
        m2 = m - m1
        if not _valid(j2, m2):
            continue
        c = classical_cgc(j1, j2, j, m1, m2, m)
        if not c:
            continue
        k, l = n1 - m1, n2 - m2
        if k.twice < 0 or l.twice < 0:
            continue
        out = out + a_cap(j1, j2, m1, m2, int(k), int(l)) * c
    return out


# ------------------------------------------------------------ tables


Key = tuple[HalfInt, HalfInt, HalfInt, HalfInt]  # (j, n1, n2, m)


@dataclass
class CgcTable:
    j1: HalfInt
    j2: HalfInt
    entries: dict = field(default_factory=dict)

    def __getitem__(self, key) -> HPoly:
        return self.entries[tuple(half(x) for x in key)]

    def row_labels(self) -> list[tuple[HalfInt, HalfInt]]:
        """(n1, n2), descending in n1 then n2."""
        w1 = sorted(rep_space(self.j1).weights(), reverse=True)
        w2 = sorted(rep_space(self.j2).weights(), reverse=True)
        return [(a, b) for a in w1 for b in w2]

    def column_labels(self) -> list[tuple[HalfInt, HalfInt]]:
        """(j, m), descending in j then m."""
        return [(j, m) for j in coupled_spins(self.j1, self.j2)
                for m in sorted(rep_space(j).weights(), reverse=True)]

    def keys(self) -> list[Key]:
        return [(j, n1, n2, m) for j, m in self.column_labels() for n1, n2 in self.row_labels()]

    def coupling_matrix(self) -> Mat:
        rows, cols = self.row_labels(), self.column_labels()
        return Mat(len(rows), len(cols),
                   [self.entries[(j, n1, n2, m)] for n1, n2 in rows for j, m in cols])

    def filtered(self, j=None, m=None) -> "CgcTable":
        j = None if j is None else half(j)
        m = None if m is None else half(m)
        keep = {k: v for k, v in self.entries.items()
                if (j is None or k[0] == j) and (m is None or k[3] == m)}
        return CgcTable(self.j1, self.j2, keep)


@lru_cache(maxsize=None)
def deformed_cgc_table(j1, j2) -> CgcTable:
    j1, j2 = half(j1), half(j2)
    t = CgcTable(j1, j2)
    for key in t.keys():
        j, n1, n2, m = key
        t.entries[key] = deformed_cgc(j1, j2, j, n1, n2, m)
    return t


def classical_table(j1, j2) -> CgcTable:
    j1, j2 = half(j1), half(j2)
    t = CgcTable(j1, j2)
    for key in t.keys():
        j, n1, n2, m = key
        t.entries[key] = HPoly.const(classical_cgc(j1, j2, j, n1, n2, m))
    return t


# ------------------------------------------------------------ coupled vectors


def _e_pair_vector(j1: HalfInt, j2: HalfInt, m1: HalfInt, m2: HalfInt) -> list[HPoly]:
    """e^{j1,j2}_{m1,m2} = w / (alpha_{j1,m1} alpha_{j2,m2}) in e (x) e coordinates."""
    sp = tensor_space(j1, j2)
    w = w_vector(j1, j2, m1, m2).coords
    norm = (alpha(j1, m1) * alpha(j2, m2)).inverse()
    out = []
    for (a, b), x in zip(sp.labels(), w):
        out.append(x * (alpha(j1, a) * alpha(j2, b) * norm) if x else HPoly())
    return out


def coupled_vector(j1, j2, j, m, via: str = "theorem") -> tuple:
    """e^{(j1 j2) j}_m in the e (x) e basis (tensor index order).

    ``via="theorem"`` reads the deformed CGC table; ``via="auxbasis"`` sums
    classical CGCs against the normalised w-basis instead.
    """
    j1, j2, j, m = half(j1), half(j2), half(j), half(m)
    if not triangle(j1, j2, j) or not _valid(j, m):
        raise ValueError(f"inadmissible coupled labels j={j}, m={m} for ({j1}, {j2})")
    sp = tensor_space(j1, j2)
    if via == "theorem":
        return tuple(deformed_cgc(j1, j2, j, n1, n2, m) for n1, n2 in sp.labels())
    if via == "auxbasis":
        acc = [HPoly() for _ in range(sp.dim)]
        for m1 in rep_space(j1).weights():
            m2 = m - m1
            if not _valid(j2, m2):
                continue
            c = classical_cgc(j1, j2, j, m1, m2, m)
            if not c:
                continue
            vec = _e_pair_vector(j1, j2, m1, m2)
            acc = [x + y * c for x, y in zip(acc, vec)]
        return tuple(acc)
    raise ValueError(f"unknown construction {via!r}")


def _tensor_order_columns(j1: HalfInt, j2: HalfInt) -> list[tuple[HalfInt, HalfInt]]:
    # blocks by descending j, ascending m inside a block (matches single-irrep matrices)
    return [(j, m) for j in coupled_spins(j1, j2) for m in rep_space(j).weights()]


@lru_cache(maxsize=None)
def coupled_basis_matrix(j1, j2) -> Mat:
    """Columns: coupled vectors in e (x) e coordinates, rows in tensor index order."""
    j1, j2 = half(j1), half(j2)
    return Mat.from_columns([coupled_vector(j1, j2, j, m) for j, m in _tensor_order_columns(j1, j2)])


def _block_diag(blocks: list[Mat]) -> Mat:
    n = sum(b.rows for b in blocks)
    rows = [[HPoly() for _ in range(n)] for _ in range(n)]
    off = 0
    for b in blocks:
        for i in range(b.rows):
            for c in range(b.cols):
                rows[off + i][off + c] = HPoly.coerce(b[i, c])
        off += b.rows
    return Mat.from_rows(rows)


def tensor_e_change(j1, j2) -> Mat:
    return kron(v_to_e_change(j1), v_to_e_change(j2))


def verify_coupled_action(j1, j2, operators=COUPLED_OPERATORS) -> Report:
    """Coupled vectors transform like the standard e-basis of each V^(j)."""
    j1, j2 = half(j1), half(j2)
    r = Report(f"coupled-state action on V^({j1}) x V^({j2})")
    cols = _tensor_order_columns(j1, j2)
    m_e = coupled_basis_matrix(j1, j2)
    d = [x for i, x in enumerate(tensor_e_change(j1, j2).entries) if i % (m_e.rows + 1) == 0]
    d_inv = [x.inverse() for x in d]
    # coupled vectors in v (x) v coordinates
    m_v = Mat(m_e.rows, m_e.cols, [m_e[i, c] * d_inv[i] for i in range(m_e.rows) for c in range(m_e.cols)])
    labels = [f"({j},{m})" for j, m in cols]
    for op in operators:
        lhs_v = coprod_matrix(op, j1, j2) @ m_v
        lhs = Mat(lhs_v.rows, lhs_v.cols,
                  [lhs_v[i, c] * d[i] for i in range(lhs_v.rows) for c in range(lhs_v.cols)])
        blocks = [to_e_basis(generator_matrix(op, j), j) for j in coupled_spins(j1, j2)]
        rhs = m_e @ _block_diag(blocks)
        bad = _first_bad_column(lhs, rhs)
        if bad is None:
            r.add(f"Delta({op}) acts on coupled states as {op} on V^(j)", True)
        else:
            r.add(f"Delta({op}) acts on coupled states as {op} on V^(j)", False,
                  f"coupled state {labels[bad]} mismatched")
    return r


def _first_bad_column(a: Mat, b: Mat):
    for c in range(a.cols):
        if a.column(c) != b.column(c):
            return c
    return None


def verify_coupled_paths(j1, j2) -> Report:
    j1, j2 = half(j1), half(j2)
    r = Report(f"coupled-vector construction paths on V^({j1}) x V^({j2})")
    for j, m in _tensor_order_columns(j1, j2):
        same = coupled_vector(j1, j2, j, m, "theorem") == coupled_vector(j1, j2, j, m, "auxbasis")
        r.add(f"e^({j})_{m}: theorem sum = normalised w-basis sum", same)
    return r


def verify_structure(j1, j2) -> Report:
    """Zero above, classical on, and monomial below the diagonal m = n1+n2."""
    j1, j2 = half(j1), half(j2)
    r = Report(f"deformed CGC structure for ({j1}, {j2})")
    t = deformed_cgc_table(j1, j2)
    bad_zero, bad_classical, bad_mono, bad_limit = [], [], [], []
    for (j, n1, n2, m), val in t.entries.items():
        p = n1.twice + n2.twice - m.twice
        label = f"(j={j}, n1={n1}, n2={n2}, m={m})"
        cl = classical_cgc(j1, j2, j, n1, n2, m)
        if p < 0 and val:
            bad_zero.append(label)
        if p == 0 and val != cl:
            bad_classical.append(label)
        if p > 0 and not val.is_monomial_in(p // 2):
            bad_mono.append(label)
        if val.at_zero() != cl:
            bad_limit.append(label)
    r.add("m > n1+n2 gives 0", not bad_zero, ", ".join(bad_zero[:3]))
    r.add("m = n1+n2 gives the classical coefficient", not bad_classical, ", ".join(bad_classical[:3]))
    r.add("m < n1+n2 gives a monomial in h^(n1+n2-m)", not bad_mono, ", ".join(bad_mono[:3]))
    r.add("h = 0 gives the classical coefficient", not bad_limit, ", ".join(bad_limit[:3]))
    dims = sum(j.twice + 1 for j in coupled_spins(j1, j2))
    r.add("sum of (2j+1) = (2j1+1)(2j2+1)", dims == (j1.twice + 1) * (j2.twice + 1))
    return r


@dataclass
class OrthogonalityReport:
    report: Report
    witness: tuple | None  # ((j, m), (j', m'), Gramian entry) off the identity

    @property
    def deviates(self) -> bool:
        return self.witness is not None


def _jm_label(jm) -> str:
    return f"(j={jm[0]}, m={jm[1]})"


def demonstrate_non_orthogonality(j1, j2) -> OrthogonalityReport:
    """Gramian of the coupling matrix: identity at h = 0, generally not for h != 0.

    The deviation is recorded as data (``witness``); when j1 or j2 is 0 the
    coupling matrix is the identity and there is nothing to find.
    """
    j1, j2 = half(j1), half(j2)
    t = deformed_cgc_table(j1, j2)
    r = Report(f"orthogonality of the deformed coupling matrix for ({j1}, {j2})")
    m_h = t.coupling_matrix()
    m_0 = m_h.map(lambda p: HPoly.const(p.at_zero()) if p else HPoly())
    n = m_h.rows
    one = Mat.identity(n).map(HPoly.coerce)
    r.add_matrix_eq("M(0)^T M(0) = 1", m_0.T @ m_0, one)
    gram = m_h.T @ m_h
    cols = t.column_labels()
    witness = next(((cols[a], cols[b], gram[a, b]) for a in range(n) for b in range(n)
                    if gram[a, b] != one[a, b]), None)
    # M(h) = U M(0) with U unitriangular in the v (x) v weight order, so det M(h) = det M(0) = +-1
    u = m_h @ m_0.T
    rows = t.row_labels()
    order = sorted(range(n), key=lambda i: (rows[i][0].twice, rows[i][1].twice))
    ok = all(u[order[i], order[i]] == 1 for i in range(n)) and all(
        not u[order[i], order[k]] for k in range(n) for i in range(k))
    r.add("M(h) M(0)^T is unitriangular, so M(h) is invertible", ok)
    return OrthogonalityReport(r, witness)


def describe_witness(res: OrthogonalityReport) -> str:
    if res.witness is None:
        return "Gramian M(h)^T M(h) equals the identity"
    a, b, val = res.witness
    return f"Gramian entry [{_jm_label(a)}, {_jm_label(b)}] = {val}"
