"""Exact number towers and dense linear algebra.

Rationals are ``gmpy2.mpq``. On top of them sit ``SqrtRat`` (finite sums of
rational multiples of square roots of squarefree integers), ``HPoly``
(polynomials in the formal deformation parameter h over any of these rings)
and ``Mat`` (dense immutable matrices acting on column vectors).
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from numbers import Rational as _RationalABC
from typing import Callable, Iterable, Sequence, Union

import gmpy2

Q = gmpy2.mpq
Rational = type(Q(0))

Scalar = Union[int, "Rational", "SqrtRat"]


def as_rational(x) -> Rational:
    """Coerce int / Fraction / mpq / 'p/q' string to an mpq."""
    if isinstance(x, Rational):
        return x
    if isinstance(x, (int, Fraction, str)) or isinstance(x, _RationalABC):
        return Q(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def pochhammer(a, n: int) -> Rational:
    """Rising factorial (a)_n = a(a+1)...(a+n-1), with (a)_0 = 1."""
    if n < 0:
        raise ValueError("pochhammer needs n >= 0")
    a = as_rational(a)
    out = Q(1)
    for i in range(n):
        out *= a + i
        if not out:
            break
    return out


# ---------------------------------------------------------------- half-integers


class HalfInt:
    """A half-integer stored as twice its value."""

    __slots__ = ("twice",)

    def __init__(self, twice: int):
        if not isinstance(twice, int):
            raise TypeError("HalfInt takes the doubled integer value")
        object.__setattr__(self, "twice", twice)

    def __setattr__(self, name, value):
        raise AttributeError("HalfInt is immutable")

    @classmethod
    def of(cls, x) -> "HalfInt":
        """Build from a value (not doubled): 1, Fraction(3, 2), '3/2', 1.5."""
        if isinstance(x, HalfInt):
            return x
        if isinstance(x, float):
            if not (2 * x).is_integer():
                raise ValueError(f"{x} is not a half-integer")
            return cls(int(2 * x))
        q = as_rational(x)
        t = 2 * q
        if t.denominator != 1:
            raise ValueError(f"{x} is not a half-integer")
        return cls(int(t.numerator))

    @property
    def value(self) -> Rational:
        return Q(self.twice, 2)

    def is_integer(self) -> bool:
        return self.twice % 2 == 0

    def __int__(self) -> int:
        if self.twice % 2:
            raise ValueError(f"{self} is not an integer")
        return self.twice // 2

    def __index__(self) -> int:
        return int(self)

    def __add__(self, other):
        other = _half_or_none(other)
        if other is None:
            return NotImplemented
        return HalfInt(self.twice + other.twice)

    __radd__ = __add__

    def __sub__(self, other):
        other = _half_or_none(other)
        if other is None:
            return NotImplemented
        return HalfInt(self.twice - other.twice)

    def __rsub__(self, other):
        other = _half_or_none(other)
        if other is None:
            return NotImplemented
        return HalfInt(other.twice - self.twice)

    def __neg__(self):
        return HalfInt(-self.twice)

    def __abs__(self):
        return HalfInt(abs(self.twice))

    def __eq__(self, other):
        other = _half_or_none(other)
        return other is not None and self.twice == other.twice

    def __lt__(self, other):
        return self.twice < HalfInt.of(other).twice

    def __le__(self, other):
        return self.twice <= HalfInt.of(other).twice

    def __gt__(self, other):
        return self.twice > HalfInt.of(other).twice

    def __ge__(self, other):
        return self.twice >= HalfInt.of(other).twice

    def __hash__(self):
        return hash(("HalfInt", self.twice))

    def __repr__(self):
        return f"HalfInt({self})"

    def __str__(self):
        return str(self.twice // 2) if self.twice % 2 == 0 else f"{self.twice}/2"

    def latex(self) -> str:
        if self.twice % 2 == 0:
            return str(self.twice // 2)
        sign = "-" if self.twice < 0 else ""
        return f"{sign}\\tfrac{{{abs(self.twice)}}}{{2}}"


def _half_or_none(x):
    if isinstance(x, HalfInt):
        return x
    try:
        return HalfInt.of(x)
    except (TypeError, ValueError):
        return None


def half(x) -> HalfInt:
    return HalfInt.of(x)


# ---------------------------------------------------------------- square roots


@lru_cache(maxsize=4096)
def squarefree_split(n: int) -> tuple[int, int]:
    """Return (s, r) with n = s*s*r and r squarefree, for n >= 1."""
    if n < 1:
        raise ValueError("squarefree_split needs a positive integer")
    s, r = 1, 1
    p = 2
    while p * p <= n:
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e:
            s *= p ** (e // 2)
            if e % 2:
                r *= p
        p += 1 if p == 2 else 2
    r *= n
    return s, r


class SqrtRat:
    """Sum of q_r * sqrt(r) over squarefree r >= 1 with rational q_r.

    Terms are kept as a sorted tuple of (r, q) pairs with every q nonzero.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=()):
        if isinstance(terms, dict):
            items = terms.items()
        else:
            items = terms
        acc: dict[int, Rational] = {}
        for r, q in items:
            r = int(r)
            q = as_rational(q)
            if r < 1:
                raise ValueError("radicands must be positive")
            s, rr = squarefree_split(r)
            if s != 1:
                q = q * s
            acc[rr] = acc.get(rr, Q(0)) + q
        object.__setattr__(self, "terms", tuple(sorted((r, q) for r, q in acc.items() if q)))

    def __setattr__(self, name, value):
        raise AttributeError("SqrtRat is immutable")

    @classmethod
    def _raw(cls, terms: dict) -> "SqrtRat":
        # caller guarantees squarefree keys
        obj = object.__new__(cls)
        object.__setattr__(obj, "terms", tuple(sorted((r, q) for r, q in terms.items() if q)))
        return obj

    @classmethod
    def rational(cls, q) -> "SqrtRat":
        q = as_rational(q)
        return cls._raw({1: q})

    @classmethod
    def coerce(cls, x) -> "SqrtRat":
        if isinstance(x, SqrtRat):
            return x
        return cls.rational(x)

    def canonical(self) -> "SqrtRat":
        return SqrtRat(self.terms)

    def as_dict(self) -> dict[int, Rational]:
        return dict(self.terms)

    def is_rational(self) -> bool:
        return all(r == 1 for r, _ in self.terms)

    def to_rational(self) -> Rational:
        if not self.is_rational():
            raise ValueError(f"{self} is irrational")
        return self.terms[0][1] if self.terms else Q(0)

    def is_single_term(self) -> bool:
        return len(self.terms) == 1

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        if not isinstance(other, SqrtRat):
            try:
                other = SqrtRat.rational(other)
            except TypeError:
                return NotImplemented
        acc = dict(self.terms)
        for r, q in other.terms:
            acc[r] = acc.get(r, Q(0)) + q
        return SqrtRat._raw(acc)

    __radd__ = __add__

    def __neg__(self):
        return SqrtRat._raw({r: -q for r, q in self.terms})

    def __sub__(self, other):
        if not isinstance(other, SqrtRat):
            try:
                other = SqrtRat.rational(other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, SqrtRat):
            acc: dict[int, Rational] = {}
            for r, p in self.terms:
                for s, q in other.terms:
                    g = math.gcd(r, s)
                    key = (r // g) * (s // g)
                    acc[key] = acc.get(key, Q(0)) + p * q * g
            return SqrtRat._raw(acc)
        try:
            c = as_rational(other)
        except TypeError:
            return NotImplemented
        if not c:
            return SqrtRat()
        return SqrtRat._raw({r: q * c for r, q in self.terms})

    __rmul__ = __mul__

    def inverse(self) -> "SqrtRat":
        # (q sqrt r)^-1 = sqrt(r) / (q r)
        if not self.terms:
            raise ZeroDivisionError("SqrtRat division by zero")
        if len(self.terms) != 1:
            raise NotImplementedError("only single-term SqrtRat values can be inverted")
        (r, q), = self.terms
        return SqrtRat._raw({r: 1 / (q * r)})

    def __truediv__(self, other):
        if isinstance(other, SqrtRat):
            return self * other.inverse()
        try:
            c = as_rational(other)
        except TypeError:
            return NotImplemented
        if not c:
            raise ZeroDivisionError("SqrtRat division by zero")
        return SqrtRat._raw({r: q / c for r, q in self.terms})

    def __rtruediv__(self, other):
        return SqrtRat.coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        out = SqrtRat.rational(1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, SqrtRat):
            return self.terms == other.terms
        try:
            return self.terms == SqrtRat.rational(other).terms
        except TypeError:
            return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(self.to_rational())
        return hash(self.terms)

    def __float__(self):
        return float(sum(float(q) * math.sqrt(r) for r, q in self.terms))

    def __repr__(self):
        return f"SqrtRat({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for r, q in self.terms:
            if r == 1:
                parts.append(str(q))
            elif q == 1:
                parts.append(f"sqrt({r})")
            elif q == -1:
                parts.append(f"-sqrt({r})")
            else:
                parts.append(f"{q}*sqrt({r})")
        return " + ".join(parts).replace("+ -", "- ")

    def latex(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for r, q in self.terms:
            sign = "-" if q < 0 else "+"
            a = abs(q)
            num, den = int(a.numerator), int(a.denominator)
            rad = "" if r == 1 else f"\\sqrt{{{r}}}"
            if den == 1:
                body = (str(num) if num != 1 or not rad else "") + rad
            else:
                top = (str(num) if num != 1 or not rad else "") + rad
                body = f"\\frac{{{top}}}{{{den}}}"
            out.append((sign, body))
        s = "".join(f" {sg} {b}" for sg, b in out).strip()
        return s[2:] if s.startswith("+ ") else "-" + s[2:]


def sqrt_rat(q) -> SqrtRat:
    """Canonical square root of a nonnegative rational."""
    q = as_rational(q)
    if q < 0:
        raise ValueError("square root of a negative rational")
    if not q:
        return SqrtRat()
    num, den = int(q.numerator), int(q.denominator)
    s, r = squarefree_split(num * den)
    return SqrtRat._raw({r: Q(s, den)})


# ---------------------------------------------------------------- polynomials in h


class HPoly:
    """Polynomial in the formal parameter h; coeffs[d] is the h^d coefficient."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [Q(c) if isinstance(c, int) else c for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        if cs:
            z = cs[-1] * 0
            cs = [c if c else z for c in cs]
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("HPoly is immutable")

    @classmethod
    def _trusted(cls, cs: list) -> "HPoly":
        # coefficients already typed; only trailing zeros need trimming
        while cs and not cs[-1]:
            cs.pop()
        obj = object.__new__(cls)
        object.__setattr__(obj, "coeffs", tuple(cs))
        return obj

    @classmethod
    def const(cls, c) -> "HPoly":
        return cls((c,))

    @classmethod
    def monomial(cls, c, degree: int) -> "HPoly":
        if not c:
            return cls()
        return cls([0] * degree + [c])

    @classmethod
    def coerce(cls, x) -> "HPoly":
        return x if isinstance(x, HPoly) else cls.const(x)

    def canonical(self) -> "HPoly":
        return HPoly(self.coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def support(self) -> tuple[int, ...]:
        return tuple(d for d, c in enumerate(self.coeffs) if c)

    def coeff(self, d: int):
        return self.coeffs[d] if 0 <= d < len(self.coeffs) else 0

    def is_monomial_in(self, degree: int) -> bool:
        return all(d == degree for d in self.support())

    def at_zero(self):
        return self.coeffs[0] if self.coeffs else 0

    def __call__(self, x):
        out = 0
        for c in reversed(self.coeffs):
            out = out * x + c
        return out

    def map(self, f: Callable) -> "HPoly":
        return HPoly(f(c) for c in self.coeffs)

    def div_h(self) -> "HPoly":
        """Exact division by h; the constant term must vanish."""
        if self.coeffs and self.coeffs[0]:
            raise ValueError("polynomial is not divisible by h")
        return HPoly(self.coeffs[1:])

    def subs_neg(self) -> "HPoly":
        """p(h) -> p(-h)."""
        return HPoly(c if d % 2 == 0 else -c for d, c in enumerate(self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    def __add__(self, other):
        if not isinstance(other, HPoly):
            if not other:
                return self
            other = HPoly.const(other)
        a, b = self.coeffs, other.coeffs
        if not b:
            return self
        if not a:
            return other
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return HPoly._trusted(out)

    __radd__ = __add__

    def __neg__(self):
        return HPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        if not isinstance(other, HPoly):
            other = HPoly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, HPoly):
            a, b = self.coeffs, other.coeffs
            if not a or not b:
                return HPoly()
            if len(b) == 1:
                y = b[0]
                return self if y == 1 else HPoly._trusted([x * y for x in a])
            if len(a) == 1:
                x = a[0]
                return other if x == 1 else HPoly._trusted([x * y for y in b])
            out = [a[-1] * b[-1] * 0] * (len(a) + len(b) - 1)
            for i, x in enumerate(a):
                if not x:
                    continue
                for k, y in enumerate(b):
                    if y:
                        out[i + k] = out[i + k] + x * y
            return HPoly._trusted(out)
        if not other:
            return HPoly()
        return HPoly(c * other for c in self.coeffs)

    def __rmul__(self, other):
        if not other:
            return HPoly()
        return HPoly(other * c for c in self.coeffs)

    def __truediv__(self, other):
        if isinstance(other, HPoly):
            if other.degree != 0:
                return NotImplemented
            other = other.coeffs[0]
        return HPoly(c / other for c in self.coeffs)

    def __pow__(self, n: int):
        out = HPoly.const(1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, HPoly):
            try:
                other = HPoly.const(other)
            except TypeError:
                return NotImplemented
        if len(self.coeffs) != len(other.coeffs):
            return False
        return all(x == y for x, y in zip(self.coeffs, other.coeffs))

    def __hash__(self):
        if len(self.coeffs) <= 1:
            return hash(self.at_zero())
        return hash(tuple(self.coeffs))

    def __repr__(self):
        return f"HPoly({self})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for d, c in enumerate(self.coeffs):
            if not c:
                continue
            cs = str(c)
            neg = cs.startswith("-") and (isinstance(c, (int, Rational)) or len(getattr(c, "terms", ())) == 1)
            mag = cs[1:] if neg else cs
            if d == 0:
                body = mag
            else:
                hp = "h" if d == 1 else f"h^{d}"
                if mag == "1":
                    body = hp
                elif isinstance(c, (int, Rational)) and as_rational(c).denominator == 1:
                    body = f"{mag}{hp}"
                else:
                    body = f"({mag}){hp}"
            parts.append(("-" if neg else "+", body))
        first_sign, first = parts[0]
        s = ("-" if first_sign == "-" else "") + first
        for sg, body in parts[1:]:
            s += f" {sg} {body}"
        return s

    def latex(self) -> str:
        if not self.coeffs:
            return "0"
        out = []
        for d, c in enumerate(self.coeffs):
            if not c:
                continue
            cl = c.latex() if isinstance(c, SqrtRat) else _latex_rational(c)
            hp = "" if d == 0 else ("h" if d == 1 else f"h^{{{d}}}")
            multi = isinstance(c, SqrtRat) and len(c.terms) > 1
            if hp and multi:
                cl = f"\\left({cl}\\right)"
            elif hp and cl in ("1", "-1"):
                cl = cl[:-1]
            out.append(cl + hp)
        s = out[0]
        for t in out[1:]:
            s += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
        return s


def _latex_rational(q) -> str:
    q = as_rational(q)
    if q.denominator == 1:
        return str(q.numerator)
    sign = "-" if q < 0 else ""
    return f"{sign}\\frac{{{abs(q.numerator)}}}{{{q.denominator}}}"


H = HPoly((Q(0), Q(1)))  # the deformation parameter


def half_h_power(k: int, sign: int = 1) -> HPoly:
    """(sign * h/2)^k."""
    return HPoly.monomial(Q(sign, 2) ** k, k)


# ---------------------------------------------------------------- matrices


class Mat:
    """Dense immutable matrix; column j holds the image of basis vector j."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Sequence):
        entries = tuple(entries)
        if len(entries) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {len(entries)}")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("Mat is immutable")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "Mat":
        rows = [list(r) for r in rows]
        n = len(rows)
        m = len(rows[0]) if n else 0
        if any(len(r) != m for r in rows):
            raise ValueError("ragged rows")
        return cls(n, m, [x for r in rows for x in r])

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence]) -> "Mat":
        return cls.from_rows(columns).T if columns else cls(0, 0, ())

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None, zero=None) -> "Mat":
        cols = rows if cols is None else cols
        z = Q(0) if zero is None else zero
        return cls(rows, cols, [z] * (rows * cols))

    @classmethod
    def identity(cls, n: int, one=None, zero=None) -> "Mat":
        one = Q(1) if one is None else one
        zero = Q(0) if zero is None else zero
        return cls(n, n, [one if i == j else zero for i in range(n) for j in range(n)])

    @classmethod
    def diag(cls, values: Sequence, zero=None) -> "Mat":
        values = list(values)
        n = len(values)
        zero = (values[0] * 0 if n else Q(0)) if zero is None else zero
        return cls(n, n, [values[i] if i == j else zero for i in range(n) for j in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> tuple:
        return self.entries[j::self.cols]

    def tolist(self) -> list[list]:
        return [list(self.row(i)) for i in range(self.rows)]

    @property
    def T(self) -> "Mat":
        return Mat(self.cols, self.rows, [self[i, j] for j in range(self.cols) for i in range(self.rows)])

    def map(self, f: Callable) -> "Mat":
        return Mat(self.rows, self.cols, [f(x) for x in self.entries])

    def _zero(self):
        return self.entries[0] * 0 if self.entries else Q(0)

    def _check_same(self, other: "Mat"):
        if self.shape != other.shape:
            raise ValueError(f"dimension mismatch: {self.shape} vs {other.shape}")

    def __add__(self, other: "Mat") -> "Mat":
        self._check_same(other)
        return Mat(self.rows, self.cols, [(a + b if a else b) if b else a
                                          for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other: "Mat") -> "Mat":
        self._check_same(other)
        return Mat(self.rows, self.cols, [a - b for a, b in zip(self.entries, other.entries)])

    def __neg__(self) -> "Mat":
        return Mat(self.rows, self.cols, [-a for a in self.entries])

    def scale(self, c) -> "Mat":
        return Mat(self.rows, self.cols, [c * a for a in self.entries])

    def __mul__(self, c):
        if isinstance(c, Mat):
            return self @ c
        return self.scale(c)

    __rmul__ = scale

    def __matmul__(self, other: "Mat") -> "Mat":
        if self.cols != other.rows:
            raise ValueError(f"dimension mismatch: {self.shape} @ {other.shape}")
        n, k, m = self.rows, self.cols, other.cols
        a, b = self.entries, other.entries
        zero = self._zero() * other._zero() if (a and b) else Q(0)
        brows = [[(j, x) for j, x in enumerate(b[t * m:(t + 1) * m]) if x] for t in range(k)]
        out = [zero] * (n * m)
        for i in range(n):
            acc: dict[int, object] = {}
            for t, x in enumerate(a[i * k:(i + 1) * k]):
                if not x:
                    continue
                for j, y in brows[t]:
                    p = x * y
                    acc[j] = acc[j] + p if j in acc else p
            base = i * m
            for j, v in acc.items():
                out[base + j] = v
        return Mat(n, m, out)

    def apply(self, vec: Sequence) -> tuple:
        if len(vec) != self.cols:
            raise ValueError("dimension mismatch")
        zero = self._zero()
        out = []
        for i in range(self.rows):
            acc = zero
            for x, y in zip(self.row(i), vec):
                if x and y:
                    acc = acc + x * y
            out.append(acc)
        return tuple(out)

    def __pow__(self, n: int) -> "Mat":
        if self.rows != self.cols:
            raise ValueError("power of a non-square matrix")
        out = identity_like(self)
        for _ in range(n):
            out = out @ self
        return out

    def is_zero(self) -> bool:
        return not any(self.entries)

    def __eq__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        return self.shape == other.shape and all(x == y for x, y in zip(self.entries, other.entries))

    __hash__ = None

    def __repr__(self):
        return f"Mat({self.rows}x{self.cols}, {self.tolist()!r})"


def identity_like(a: Mat) -> Mat:
    z = a._zero()
    return Mat.identity(a.rows, one=z + 1, zero=z)


def mat_mul(a: Mat, b: Mat) -> Mat:
    return a @ b


def mat_add(a: Mat, b: Mat) -> Mat:
    return a + b


def kron(a: Mat, b: Mat) -> Mat:
    """Kronecker product; the first factor's index is the slow one."""
    rows, cols = a.rows * b.rows, a.cols * b.cols
    zero = a._zero() * b._zero() if (a.entries and b.entries) else Q(0)
    out = [zero] * (rows * cols)
    b_nonzero = [(p * cols + q, y) for p in range(b.rows) for q in range(b.cols) if (y := b[p, q])]
    for i in range(a.rows):
        for j in range(a.cols):
            x = a[i, j]
            if not x:
                continue
            base = i * b.rows * cols + j * b.cols
            for off, y in b_nonzero:
                out[base + off] = x * y
    return Mat(rows, cols, out)


def commutator(a: Mat, b: Mat) -> Mat:
    return a @ b - b @ a


def first_mismatch(a: Mat, b: Mat):
    """(i, j, a_ij, b_ij) for the first differing entry, or None."""
    a._check_same(b)
    for idx, (x, y) in enumerate(zip(a.entries, b.entries)):
        if x != y:
            return idx // a.cols, idx % a.cols, x, y
    return None


def nilpotency_index(n: Mat) -> int:
    """Smallest p with N^p = 0; raises if N^dim != 0."""
    if n.rows != n.cols:
        raise ValueError("nilpotency needs a square matrix")
    p, power = 0, identity_like(n)
    while not power.is_zero():
        if p >= n.rows:
            raise ValueError("matrix is not nilpotent")
        power = power @ n
        p += 1
    return p


def nilpotent_series(n: Mat, coeffs: Sequence | Callable[[int], object]) -> Mat:
    """Sum_k coeffs[k] N^k for nilpotent N; the sum stops at the first zero power.

    ``coeffs`` is a sequence or a callable k -> coefficient; coefficients may be
    rationals or h-polynomials.
    """
    if n.rows != n.cols:
        raise ValueError("series of a non-square matrix")
    coeff = coeffs if callable(coeffs) else (lambda k: coeffs[k] if k < len(coeffs) else 0)
    power = identity_like(n)
    out = Mat.zeros(n.rows, zero=n._zero())
    k = 0
    while not power.is_zero():
        if k > n.rows:
            raise ValueError("matrix is not nilpotent")
        c = coeff(k)
        if c:
            out = out + power.scale(c)
        power = power @ n
        k += 1
    if k > n.rows:
        raise ValueError("matrix is not nilpotent")
    return out


def unitriangular_inverse(u: Mat) -> Mat:
    """Inverse of I + N with N nilpotent, as the terminating Neumann series."""
    n = u - identity_like(u)
    return nilpotent_series(n, lambda k: (-1) ** k)


def hpoly_matrix(m: Mat) -> Mat:
    return m.map(HPoly.coerce)


def at_h(m: Mat, x=0) -> Mat:
    """Evaluate an h-polynomial matrix at a rational h."""
    if x == 0:
        return m.map(lambda p: HPoly.coerce(p).at_zero() if isinstance(p, HPoly) else p)
    return m.map(lambda p: p(x) if isinstance(p, HPoly) else p)
