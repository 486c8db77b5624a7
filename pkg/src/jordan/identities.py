"""Summation identities behind the closed-form actions, checked by exact summation.

f(k)   = sum_{n=1}^{k} (-1)^n (1/2)_n / n! * binom(k-1, n-1)
f_n(s) = sum_{k=1}^{s-1} t_k t_{s-k} k^n,   n in {0, 1, 2}
g(l)   = (a)_l (b)_l / ((l+1)! (c)_l) * ((c-a-b) l + c - 1 - a b)
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from math import comb, factorial

from .exact import Q, Rational, as_rational, half, pochhammer
from .jordanian import catalan_t
from .report import Report


@dataclass(frozen=True)
class IdentityCase:
    lemma: str  # L1, L2n0, L2n1, L2n2, L3
    params: tuple
    lhs: Rational
    rhs: Rational

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs


# ------------------------------------------------------------ f(k)


def f_sum(k: int) -> Rational:
    return sum((Q((-1) ** n) * pochhammer(Q(1, 2), n) / factorial(n) * comb(k - 1, n - 1)
                for n in range(1, k + 1)), Q(0))


def lemma1(k: int) -> IdentityCase:
    if k < 1:
        raise ValueError("f(k) needs k >= 1")
    rhs = -Q(factorial(2 * k - 2), 2 ** (2 * k - 1) * factorial(k) * factorial(k - 1))
    return IdentityCase("L1", (k,), f_sum(k), rhs)


# ------------------------------------------------------------ f_n(s)


def fn_sum(s: int, n: int) -> Rational:
    return Q(sum(catalan_t(k) * catalan_t(s - k) * k ** n for k in range(1, s)))


def lemma2_closed_form(s: int, n: int) -> Rational:
    if n == 0:
        return Q(factorial(2 * s - 2), factorial(s) * factorial(s - 1))
    if n == 1:
        return Q(factorial(2 * s - 2), 2 * factorial(s - 1) ** 2)
    if n == 2:
        return Q(s * factorial(2 * s - 2), 2 * factorial(s - 1) ** 2) - 4 ** (s - 2)
    raise ValueError("closed forms exist for n = 0, 1, 2")


def lemma2(s: int, n: int) -> IdentityCase:
    if s < 2:
        raise ValueError("f_n(s) needs s >= 2")
    return IdentityCase(f"L2n{n}", (s, n), fn_sum(s, n), lemma2_closed_form(s, n))


# ------------------------------------------------------------ Gosper sum of g(l)


class PoleError(ValueError):
    """(gamma)_l vanishes inside the summation range."""


def gosper_term(alpha, beta, gamma, l: int) -> Rational:
    a, b, c = as_rational(alpha), as_rational(beta), as_rational(gamma)
    den = factorial(l + 1) * pochhammer(c, l)
    if not den:
        raise PoleError(f"(gamma)_{l} = 0 for gamma = {c}")
    return pochhammer(a, l) * pochhammer(b, l) / den * ((c - a - b) * l + c - 1 - a * b)


def lemma3(alpha, beta, gamma, n: int) -> IdentityCase:
    """Raises PoleError when some (gamma)_l, l <= n, vanishes."""
    a, b, c = as_rational(alpha), as_rational(beta), as_rational(gamma)
    if not pochhammer(c, n):
        raise PoleError(f"(gamma)_{n} = 0 for gamma = {c}")
    lhs = sum((gosper_term(a, b, c, l) for l in range(n + 1)), Q(0))
    rhs = c - 1 - pochhammer(a, n + 1) * pochhammer(b, n + 1) / (factorial(n + 1) * pochhammer(c, n))
    return IdentityCase("L3", (a, b, c, n), lhs, rhs)


def random_rational(rng: random.Random, bound: int = 12) -> Rational:
    return Q(rng.randint(-bound, bound), rng.randint(1, bound))


def lemma3_random_cases(count: int = 500, seed: int = 0, max_n: int = 20) -> tuple[list[IdentityCase], int]:
    """``count`` pole-free random cases; also returns how many draws hit a pole."""
    rng = random.Random(seed)
    cases, poles = [], 0
    while len(cases) < count:
        a, b, c = (random_rational(rng) for _ in range(3))
        n = rng.randint(0, max_n)
        try:
            cases.append(lemma3(a, b, c, n))
        except PoleError:
            poles += 1
    return cases, poles


def lemma3_label_cases(count: int = 200, seed: int = 0, max_n: int = 20) -> tuple[list[IdentityCase], int]:
    """alpha = 1-k-2m1, beta = 1+2m2, gamma = 2-k+2m2 for random half-integer labels."""
    rng = random.Random(seed)
    cases, poles = [], 0
    while len(cases) < count:
        m1, m2 = half(Q(rng.randint(-12, 12), 2)), half(Q(rng.randint(-12, 12), 2))
        k, n = rng.randint(0, 10), rng.randint(0, max_n)
        try:
            cases.append(lemma3(1 - k - m1.twice, 1 + m2.twice, 2 - k + m2.twice, n))
        except PoleError:
            poles += 1
    return cases, poles


# ------------------------------------------------------------ recurrences


def verify_recurrences(max_k: int = 40, max_s: int = 40) -> Report:
    r = Report("recurrences for f(k) and f_n(s)")
    r.add("f(1) = -1/2", f_sum(1) == Q(-1, 2))
    bad = [k for k in range(1, max_k) if 2 * (k + 1) * f_sum(k + 1) != (2 * k - 1) * f_sum(k)]
    r.add(f"2(k+1) f(k+1) = (2k-1) f(k), k < {max_k}", not bad, f"fails at k={bad[:3]}" if bad else "")
    r.add("f_n(2) = 1 for n = 0, 1, 2", all(fn_sum(2, n) == 1 for n in range(3)))
    recs = {
        0: lambda s: 4 * (s - 1) * fn_sum(s, 0) - (s + 1) * fn_sum(s + 1, 0)
        + Q(2 * factorial(2 * s - 2), factorial(s) * factorial(s - 1)),
        1: lambda s: 4 * (s - 1) * fn_sum(s, 1) - s * fn_sum(s + 1, 1)
        + Q(factorial(2 * s - 2), factorial(s - 1) ** 2),
        2: lambda s: 4 * fn_sum(s, 2) - fn_sum(s + 1, 2)
        + Q(factorial(2 * s - 2), factorial(s) * factorial(s - 2)),
    }
    names = {
        0: "4(s-1) f_0(s) - (s+1) f_0(s+1) + 2(2s-2)!/(s!(s-1)!) = 0",
        1: "4(s-1) f_1(s) - s f_1(s+1) + (2s-2)!/(s-1)!^2 = 0",
        2: "4 f_2(s) - f_2(s+1) + (2s-2)!/(s!(s-2)!) = 0",
    }
    for n, rec in recs.items():
        bad = [s for s in range(2, max_s) if rec(s) != 0]
        r.add(f"{names[n]}, s < {max_s}", not bad, f"fails at s={bad[:3]}" if bad else "")
    # unrolling the recurrences from their seeds must reproduce the direct sums
    f = Q(-1, 2)
    ok = True
    for k in range(1, max_k):
        f = Q(2 * k - 1, 2 * (k + 1)) * f
        ok &= f == f_sum(k + 1)
    r.add("f(k) unrolled from f(1) = direct sum", ok)
    for n in range(3):
        v, ok = Q(1), True
        for s in range(2, max_s):
            if n == 0:
                v = (4 * (s - 1) * v + Q(2 * factorial(2 * s - 2), factorial(s) * factorial(s - 1))) / (s + 1)
            elif n == 1:
                v = (4 * (s - 1) * v + Q(factorial(2 * s - 2), factorial(s - 1) ** 2)) / s
            else:
                v = 4 * v + Q(factorial(2 * s - 2), factorial(s) * factorial(s - 2))
            ok &= v == fn_sum(s + 1, n)
        r.add(f"f_{n}(s) unrolled from f_{n}(2) = 1 = direct sum", ok)
    return r


def verify_lemmas(max_k: int = 40, max_s: int = 40, random_cases: int = 500, seed: int = 0) -> Report:
    r = Report("summation identities")
    bad = [k for k in range(1, max_k + 1) if not lemma1(k).passed]
    r.add(f"f(k) = -(2k-2)!/(2^(2k-1) k! (k-1)!) for k = 1..{max_k}", not bad, f"fails at k={bad[:3]}" if bad else "")
    for n in range(3):
        bad = [s for s in range(2, max_s + 1) if not lemma2(s, n).passed]
        r.add(f"f_{n}(s) closed form for s = 2..{max_s}", not bad, f"fails at s={bad[:3]}" if bad else "")
    cases, poles = lemma3_random_cases(random_cases, seed)
    bad = [c.params for c in cases if not c.passed]
    r.add(f"sum_(l<=n) g(l) closed form on {len(cases)} random rational triples (n <= 20)", not bad,
          f"{poles} draws skipped at poles" + (f"; fails at {bad[:2]}" if bad else ""))
    cases, poles = lemma3_label_cases(seed=seed)
    bad = [c.params for c in cases if not c.passed]
    r.add(f"sum_(l<=n) g(l) with alpha=1-k-2m1, beta=1+2m2, gamma=2-k+2m2 ({len(cases)} cases)", not bad,
          f"{poles} draws skipped at poles" + (f"; fails at {bad[:2]}" if bad else ""))
    r.extend(verify_recurrences(max_k, max_s))
    return r
