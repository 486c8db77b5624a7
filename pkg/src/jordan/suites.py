"""Verification suites grouped the way the CLI exposes them."""
from __future__ import annotations

import itertools
import os
import random

from . import auxbasis, cgc, identities, jordanian, tensor
from .exact import HalfInt
from .report import Report

SUITES = ("relations", "coproduct", "props", "cgc", "lemmas")
DEFAULT_MAX_2J = 8


def default_max_2j() -> int:
    raw = os.environ.get("JORDAN_MAX_2J")
    if raw is None or raw == "":
        return DEFAULT_MAX_2J
    value = int(raw)
    if value < 0:
        raise ValueError("JORDAN_MAX_2J must be non-negative")
    return value


def spins(max_2j: int) -> list[HalfInt]:
    return [HalfInt(t) for t in range(max_2j + 1)]


def spin_pairs(max_2j: int) -> list[tuple[HalfInt, HalfInt]]:
    """All (j1, j2) with 2j1 + 2j2 <= max_2j."""
    return [(HalfInt(a), HalfInt(s - a)) for s in range(max_2j + 1) for a in range(s + 1)]


def spin_triples(max_2j: int, max_dim: int = tensor.DEFAULT_TRIPLE_DIM_CAP):
    """(j1, j2, j3) with each 2j_i <= max_2j and (2j1+1)(2j2+1)(2j3+1) <= max_dim."""
    out = []
    for a, b, c in itertools.product(range(max_2j + 1), repeat=3):
        if (a + 1) * (b + 1) * (c + 1) <= max_dim:
            out.append((HalfInt(a), HalfInt(b), HalfInt(c)))
    return out


def relations_suite(max_2j: int) -> Report:
    r = Report(f"relations (2j <= {max_2j})")
    for j in spins(max_2j):
        for part in (jordanian.verify_oracles(j), jordanian.verify_defining_relations(j),
                     jordanian.verify_nonlinear_map(j), jordanian.classical_limit_report(j)):
            r.extend(part, prefix=f"j={j}: ")
    return r


def coproduct_suite(max_2j: int, max_dim: int = tensor.DEFAULT_TRIPLE_DIM_CAP,
                    triple_max_2j: int | None = None) -> Report:
    r = Report(f"coproduct (2j1+2j2 <= {max_2j})")
    for j1, j2 in spin_pairs(max_2j):
        for part in (tensor.verify_coprod_constructions(j1, j2), tensor.verify_coprod_homomorphism(j1, j2),
                     tensor.classical_limit_report(j1, j2)):
            r.extend(part, prefix=f"({j1},{j2}): ")
    t_bound = max_2j if triple_max_2j is None else triple_max_2j
    for j1, j2, j3 in spin_triples(t_bound, max_dim):
        r.extend(tensor.verify_coassociativity(j1, j2, j3, max_dim), prefix=f"({j1},{j2},{j3}): ")
    return r


def props_suite(max_2j: int, seed: int = 0, samples: int = 300) -> Report:
    r = Report(f"w-basis propositions (2j1+2j2 <= {max_2j})")
    for j1, j2 in spin_pairs(max_2j):
        r.extend(auxbasis.verify_propositions(j1, j2), prefix=f"({j1},{j2}): ")
    rng = random.Random(seed)
    bad_resb, bad_tel, bad_sym, skipped = [], [], [], 0
    for _ in range(samples):
        m1, m2 = HalfInt(rng.randint(-12, 12)), HalfInt(rng.randint(-12, 12))
        k, l = rng.randint(0, 8), rng.randint(0, 8)
        if auxbasis.b_coeff(m1, m2, k, l) != auxbasis.b_coeff(m2, m1, l, k):
            bad_sym.append((m1, m2, k, l))
        if auxbasis.telescoping_lhs(m1, m2, k, l) != auxbasis.b_coeff(m1, m2, k, l):
            bad_tel.append((m1, m2, k, l))
        if m1.twice + k == 0:
            skipped += 1
            continue
        if auxbasis.resb_lhs(m1, m2, k, l) != auxbasis.resb_rhs(m1, m2, k, l):
            bad_resb.append((m1, m2, k, l))
    r.add("b symmetry b^{m1,m2}_{k,l} = b^{m2,m1}_{l,k}", not bad_sym, str(bad_sym[:2]) if bad_sym else "")
    r.add("telescoping sum of b differences = b_{k,l}", not bad_tel, str(bad_tel[:2]) if bad_tel else "")
    r.add("partial sums of b differences (2m1+k != 0)", not bad_resb,
          f"{skipped} samples with 2m1+k = 0 skipped" + (f"; fails at {bad_resb[:2]}" if bad_resb else ""))
    return r


def cgc_suite(max_2j: int) -> Report:
    r = Report(f"Clebsch-Gordan coefficients (2j1+2j2 <= {max_2j})")
    r.add("CC^{2,2,3}_{2,0,2}(h) = 1/sqrt(2)", worked_value(2, 0, 2) == worked_expected()[0])
    r.add("CC^{2,2,3}_{2,0,3}(h) = 0", worked_value(2, 0, 3) == worked_expected()[1])
    r.add("CC^{2,2,3}_{2,0,-1}(h) = -18 h^3 / sqrt(5)", worked_value(2, 0, -1) == worked_expected()[2])
    witnesses = []
    for j1, j2 in spin_pairs(max_2j):
        for part in (cgc.verify_structure(j1, j2), cgc.verify_coupled_paths(j1, j2),
                     cgc.verify_coupled_action(j1, j2)):
            r.extend(part, prefix=f"({j1},{j2}): ")
        res = cgc.demonstrate_non_orthogonality(j1, j2)
        r.extend(res.report, prefix=f"({j1},{j2}): ")
        if res.deviates:
            witnesses.append(f"({j1},{j2}) {cgc.describe_witness(res)}")
    if max_2j >= 2:
        r.add("Gramian deviates from 1 for some (j1, j2)", bool(witnesses), witnesses[0] if witnesses else "")
    return r


def worked_value(n1, n2, m):
    return cgc.deformed_cgc(2, 2, 3, n1, n2, m)


def worked_expected():
    from .exact import Q, HPoly, sqrt_rat

    return (HPoly.const(sqrt_rat(Q(1, 2))), HPoly(), HPoly.monomial(-18 * sqrt_rat(Q(1, 5)), 3))


def lemmas_suite(seed: int = 0) -> Report:
    return identities.verify_lemmas(seed=seed)


def run_suite(name: str, max_2j: int, seed: int = 0) -> Report:
    if name == "relations":
        return relations_suite(max_2j)
    if name == "coproduct":
        return coproduct_suite(max_2j)
    if name == "props":
        return props_suite(max_2j, seed)
    if name == "cgc":
        return cgc_suite(max_2j)
    if name == "lemmas":
        return lemmas_suite(seed)
    if name == "all":
        r = Report(f"all suites (max 2j = {max_2j})")
        for s in SUITES:
            r.extend(run_suite(s, max_2j, seed), prefix=f"{s}: ")
        return r
    raise ValueError(f"unknown suite {name!r}")
