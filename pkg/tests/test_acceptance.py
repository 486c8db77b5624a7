"""Acceptance gate: ten exact criteria, one PASS/FAIL line each.

Run under pytest (lines appear in the terminal summary) or directly as a script.
"""
import time

import pytest

from jordan import auxbasis, cgc, identities, jordanian, suites, tensor
from jordan.exact import HPoly, Q, at_h, sqrt_rat

MAX_2J = 8
RESULTS: dict[int, str] = {}

TITLES = {
    1: "worked deformed CGC values",
    2: "defining relations, 2j <= 8",
    3: "closed forms equal oracles, 2j <= 8",
    4: "w-basis propositions, 2j1+2j2 <= 8",
    5: "coupled states carry the standard action, 2j1+2j2 <= 8",
    6: "zero / classical / monomial structure of the table",
    7: "summation lemmas and recurrences",
    8: "classical limit of generators, coproducts and tables",
    9: "Gramian deviates from 1 while M(0) is orthogonal",
    10: "coassociativity on triples of dimension <= 64",
}


def record(n: int, ok: bool, start: float, detail: str = "") -> bool:
    line = f"criterion {n:2d} [{'PASS' if ok else 'FAIL'}] {TITLES[n]} ({time.perf_counter() - start:.1f}s)"
    if detail:
        line += f" - {detail}"
    RESULTS[n] = line
    print(line)
    return ok


def first_failures(reports):
    for r in reports:
        if not r.passed:
            return f"{r.title}: {r.first_failure.line()}"
    return ""


def criterion_1():
    t = time.perf_counter()
    got = [cgc.deformed_cgc(2, 2, 3, 2, 0, m) for m in (2, 3, -1)]
    want = [HPoly.const(sqrt_rat(Q(1, 2))), HPoly(), HPoly.monomial(-18 * sqrt_rat(Q(1, 5)), 3)]
    return record(1, got == want, t, ", ".join(str(g) for g in got))


def criterion_2():
    t = time.perf_counter()
    reports = [jordanian.verify_defining_relations(j) for j in suites.spins(MAX_2J)]
    return record(2, all(r.passed for r in reports), t, first_failures(reports))


def criterion_3():
    t = time.perf_counter()
    reports = [jordanian.verify_oracles(j) for j in suites.spins(MAX_2J)]
    reports += [jordanian.verify_nonlinear_map(j) for j in suites.spins(MAX_2J)]
    return record(3, all(r.passed for r in reports), t, first_failures(reports))


def criterion_4():
    t = time.perf_counter()
    reports = [auxbasis.verify_propositions(*p) for p in suites.spin_pairs(MAX_2J)]
    return record(4, all(r.passed for r in reports), t, first_failures(reports))


def criterion_5():
    t = time.perf_counter()
    reports = [cgc.verify_coupled_action(*p) for p in suites.spin_pairs(MAX_2J)]
    reports += [cgc.verify_coupled_paths(*p) for p in suites.spin_pairs(MAX_2J)]
    return record(5, all(r.passed for r in reports), t, first_failures(reports))


def criterion_6():
    t = time.perf_counter()
    reports = [cgc.verify_structure(*p) for p in suites.spin_pairs(MAX_2J)]
    return record(6, all(r.passed for r in reports), t, first_failures(reports))


def criterion_7():
    t = time.perf_counter()
    r = identities.verify_lemmas(max_k=40, max_s=40, random_cases=500, seed=0)
    return record(7, r.passed, t, first_failures([r]))


def criterion_8():
    t = time.perf_counter()
    reports = [jordanian.classical_limit_report(j) for j in suites.spins(MAX_2J)]
    reports += [tensor.classical_limit_report(*p) for p in suites.spin_pairs(MAX_2J)]
    ok = all(r.passed for r in reports)
    for j1, j2 in suites.spin_pairs(MAX_2J):
        dt, ct = cgc.deformed_cgc_table(j1, j2), cgc.classical_table(j1, j2)
        ok &= all(v.at_zero() == ct.entries[k].at_zero() for k, v in dt.entries.items())
        ok &= at_h(dt.coupling_matrix()) == at_h(ct.coupling_matrix())
    return record(8, ok, t, first_failures(reports))


def criterion_9():
    t = time.perf_counter()
    results = {p: cgc.demonstrate_non_orthogonality(*p) for p in suites.spin_pairs(MAX_2J)}
    identity_at_0 = all(res.report.passed for res in results.values())
    witnesses = [(p, res) for p, res in results.items() if res.deviates]
    detail = ""
    if witnesses:
        (j1, j2), res = witnesses[0]
        detail = f"{len(witnesses)} pairs deviate; first ({j1},{j2}): {cgc.describe_witness(res)}"
    return record(9, identity_at_0 and bool(witnesses), t, detail)


def criterion_10():
    t = time.perf_counter()
    triples = suites.spin_triples(63, tensor.DEFAULT_TRIPLE_DIM_CAP)
    reports = [tensor.verify_coassociativity(*tr) for tr in triples]
    return record(10, all(r.passed for r in reports), t, f"{len(triples)} triples" + (": " + first_failures(reports) if first_failures(reports) else ""))


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9, criterion_10]


@pytest.mark.parametrize("check", CRITERIA, ids=lambda f: f.__name__)
def test_criterion(check):
    assert check(), RESULTS.get(int(check.__name__.split("_")[1]))


if __name__ == "__main__":
    import sys

    sys.exit(0 if all([c() for c in CRITERIA]) else 1)
