"""Exact rational polynomials, Sturm chains and real-root isolation.

Scalars are :class:`fractions.Fraction`. A :class:`Polynomial` is an immutable
tuple of coefficients in ascending degree order with no trailing zeros, so the
zero polynomial is the empty tuple.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Iterable, Sequence, Union

Scalar = Union[int, Fraction, str]

NEG_INF = -math.inf


class InexactDivisionError(ArithmeticError):
    """The divisor does not divide the dividend exactly."""


def as_fraction(value: Scalar) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a polynomial coefficient")
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"cannot use {type(value).__name__} as an exact scalar")


def binom(n: int, k: int) -> int:
    """Binomial coefficient, zero outside 0 <= k <= n."""
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


def double_factorial(m: int) -> int:
    """m!! with the conventions (-1)!! = 0!! = 1."""
    if m < -1:
        raise ValueError("double factorial undefined below -1")
    out = 1
    while m > 1:
        out *= m
        m -= 2
    return out


class Polynomial:
    """Dense univariate polynomial over the rationals."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def constant(cls, c: Scalar) -> Polynomial:
        return cls([c])

    @classmethod
    def monomial(cls, n: int, c: Scalar = 1) -> Polynomial:
        return cls([0] * n + [c])

    @classmethod
    def x(cls) -> Polynomial:
        return cls([0, 1])

    @classmethod
    def from_roots(cls, roots: Iterable[Scalar]) -> Polynomial:
        out = cls([1])
        for r in roots:
            out = out * cls([-as_fraction(r), 1])
        return out

    # -- basic structure ---------------------------------------------------

    @property
    def degree(self) -> int | float:
        """Degree, or ``-inf`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def coeff(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Polynomial([other]).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __repr__(self) -> str:
        return f"Polynomial({[str(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
            elif c == 1:
                terms.append("x" if k == 1 else f"x^{k}")
            else:
                terms.append(f"({c})*x" if k == 1 else f"({c})*x^{k}")
        return " + ".join(terms)

    # -- ring operations ---------------------------------------------------

    @staticmethod
    def _coerce(other) -> Polynomial:
        if isinstance(other, Polynomial):
            return other
        return Polynomial([other])

    def __add__(self, other) -> Polynomial:
        if not isinstance(other, (Polynomial, int, Fraction)):
            return NotImplemented
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Polynomial([c + (b[i] if i < len(b) else 0) for i, c in enumerate(a)])

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial([-c for c in self.coeffs])

    def __sub__(self, other) -> Polynomial:
        if not isinstance(other, (Polynomial, int, Fraction)):
            return NotImplemented
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> Polynomial:
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        return self._coerce(other) - self

    def __mul__(self, other) -> Polynomial:
        if not isinstance(other, Polynomial):
            if not isinstance(other, (int, Fraction)):
                return NotImplemented
            return Polynomial([other * a for a in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
        return Polynomial(out)

    __rmul__ = __mul__

    def scale(self, c: Scalar) -> Polynomial:
        return self * as_fraction(c)

    def __truediv__(self, c) -> Polynomial:
        if isinstance(c, Polynomial):
            return exact_div(self, c)
        c = as_fraction(c)
        return Polynomial([a / c for a in self.coeffs])

    def __pow__(self, n: int) -> Polynomial:
        if n < 0:
            raise ValueError("negative polynomial power")
        out, base = Polynomial([1]), self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __divmod__(self, other: Polynomial) -> tuple[Polynomial, Polynomial]:
        return poly_divmod(self, other)

    def __call__(self, z):
        return evaluate(self, z)

    # -- calculus and substitution ------------------------------------------

    def derivative(self, times: int = 1) -> Polynomial:
        cs = list(self.coeffs)
        for _ in range(times):
            cs = [k * c for k, c in enumerate(cs)][1:]
        return Polynomial(cs)

    def compose_affine(self, a: Scalar, b: Scalar) -> Polynomial:
        """Return ``p(a*x + b)``."""
        lin = Polynomial([b, a])
        out = Polynomial()
        for c in reversed(self.coeffs):
            out = out * lin + c
        return out

    def content(self) -> Fraction:
        """Positive rational c with self/c an integer polynomial of gcd 1."""
        if not self.coeffs:
            return Fraction(0)
        num = reduce(math.gcd, (c.numerator for c in self.coeffs))
        den = reduce(math.lcm, (c.denominator for c in self.coeffs))
        return Fraction(abs(num), den)

    def primitive_part(self) -> Polynomial:
        if not self.coeffs:
            return self
        return self / self.content()

    def integer_coeffs(self) -> tuple[int, ...]:
        """Coefficients of the primitive part, as ints (sign kept)."""
        return tuple(int(c) for c in self.primitive_part().coeffs)

    def monic(self) -> Polynomial:
        if not self.coeffs:
            return self
        return self / self.leading

    # -- wire format -----------------------------------------------------------

    def to_wire(self) -> list[str]:
        return [f"{c.numerator}/{c.denominator}" for c in self.coeffs]

    @classmethod
    def from_wire(cls, data: Sequence[str]) -> Polynomial:
        if not isinstance(data, (list, tuple)):
            raise ValueError("polynomial wire value must be a JSON array")
        return cls(Fraction(s) for s in data)


def exact_div(a: Polynomial, b: Polynomial) -> Polynomial:
    q, r = poly_divmod(a, b)
    if r:
        raise InexactDivisionError(f"{b} does not divide {a}")
    return q


def content_divide(p: Polynomial) -> Polynomial:
    """Divide out the positive rational content: 2x^2 - 2 -> x^2 - 1."""
    return p.primitive_part()


def poly_divmod(a: Polynomial, b: Polynomial) -> tuple[Polynomial, Polynomial]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a.coeffs)
    db, lb = len(b.coeffs) - 1, b.leading
    if len(rem) - 1 < db:
        return Polynomial(), a
    quot = [Fraction(0)] * (len(rem) - db)
    for k in range(len(rem) - 1, db - 1, -1):
        c = rem[k] / lb
        if c == 0:
            continue
        quot[k - db] = c
        for j, bj in enumerate(b.coeffs):
            rem[k - db + j] -= c * bj
    return Polynomial(quot), Polynomial(rem[:db])


def derivative(p: Polynomial) -> Polynomial:
    return p.derivative()


def compose_affine(p: Polynomial, a: Scalar, b: Scalar) -> Polynomial:
    return p.compose_affine(a, b)


# -- complex rationals -------------------------------------------------------


@dataclass(frozen=True)
class ComplexRational:
    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", as_fraction(self.re))
        object.__setattr__(self, "im", as_fraction(self.im))

    @staticmethod
    def of(z) -> ComplexRational:
        if isinstance(z, ComplexRational):
            return z
        return ComplexRational(as_fraction(z), Fraction(0))

    def __add__(self, other) -> ComplexRational:
        o = ComplexRational.of(other)
        return ComplexRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self) -> ComplexRational:
        return ComplexRational(-self.re, -self.im)

    def __sub__(self, other) -> ComplexRational:
        return self + (-ComplexRational.of(other))

    def __rsub__(self, other) -> ComplexRational:
        return ComplexRational.of(other) - self

    def __mul__(self, other) -> ComplexRational:
        o = ComplexRational.of(other)
        return ComplexRational(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other) -> ComplexRational:
        o = ComplexRational.of(other)
        den = o.re * o.re + o.im * o.im
        if den == 0:
            raise ZeroDivisionError("complex division by zero")
        n = self * ComplexRational(o.re, -o.im)
        return ComplexRational(n.re / den, n.im / den)

    def __rtruediv__(self, other) -> ComplexRational:
        return ComplexRational.of(other) / self

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def to_wire(self) -> dict[str, str]:
        return {
            "re": f"{self.re.numerator}/{self.re.denominator}",
            "im": f"{self.im.numerator}/{self.im.denominator}",
        }


I = ComplexRational(0, 1)


def evaluate(p: Polynomial, z):
    """Horner evaluation; Fractions in give a Fraction, complex in gives complex."""
    if isinstance(z, ComplexRational):
        acc = ComplexRational()
        for c in reversed(p.coeffs):
            acc = acc * z + c
        return acc
    z = as_fraction(z)
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * z + c
    return acc


# -- gcd and square-free decomposition ------------------------------------------


def _int_prem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder lc(b)^(da-db+1) * a mod b over the integers."""
    r = list(a)
    db, lb = len(b) - 1, b[-1]
    for k in range(len(r) - 1, db - 1, -1):
        c = r[k]
        r = [lb * v for v in r]
        if c:
            for j, bj in enumerate(b):
                r[k - db + j] -= c * bj
        r.pop()
    while r and r[-1] == 0:
        r.pop()
    return r


def _int_primitive(a: list[int]) -> list[int]:
    g = reduce(math.gcd, a, 0)
    return [v // g for v in a] if g > 1 else list(a)


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd (zero if both are zero), via primitive remainder sequence."""
    if not a:
        return b.monic()
    if not b:
        return a.monic()
    u, v = list(a.integer_coeffs()), list(b.integer_coeffs())
    if len(u) < len(v):
        u, v = v, u
    while v:
        r = _int_prem(u, v)
        u, v = v, (_int_primitive(r) if r else r)
    return Polynomial(u).monic()


def squarefree_part(p: Polynomial) -> Polynomial:
    if p.is_constant():
        return p.monic() if p else p
    return exact_div(p, poly_gcd(p, p.derivative())).monic()


def squarefree_decomposition(p: Polynomial) -> list[tuple[Polynomial, int]]:
    """Yun's algorithm: monic coprime square-free factors with multiplicities."""
    if p.is_constant():
        return []
    out = []
    dp = p.derivative()
    g = poly_gcd(p, dp)
    w = exact_div(p, g)
    y = exact_div(dp, g)
    k = 1
    while not w.is_constant():
        z = y - w.derivative()
        h = poly_gcd(w, z)
        if not h.is_constant():
            out.append((h.monic(), k))
        w = exact_div(w, h)
        y = exact_div(z, h)
        k += 1
    return out


# -- Sturm machinery -----------------------------------------------------------


def _sign_at(coeffs: Sequence[int], x: Fraction) -> int:
    """Sign of an integer polynomial at x = p/q, by homogeneous Horner."""
    p, q = x.numerator, x.denominator
    acc = 0
    qpow = 1
    for c in reversed(coeffs):
        acc = acc * p + c * qpow
        qpow *= q
    # acc = q^deg * f(p/q) and q > 0
    return (acc > 0) - (acc < 0)


class SturmChain:
    """Signed remainder sequence of p and p' with positive content removed."""

    def __init__(self, p: Polynomial):
        if not p:
            raise ValueError("Sturm chain of the zero polynomial")
        self.poly = p
        f0 = list(p.integer_coeffs())
        chain = [f0]
        if len(f0) > 1:
            f1 = _int_primitive([k * c for k, c in enumerate(f0)][1:])
            chain.append(f1)
            while True:
                a, b = chain[-2], chain[-1]
                if len(b) <= 1:
                    break
                r = _int_prem(a, b)
                if not r:
                    break
                delta = len(a) - len(b) + 1
                flip = -1 if (b[-1] < 0 and delta % 2 == 1) else 1
                chain.append([-flip * v for v in _int_primitive(r)])
        self.chain = chain

    def variations(self, x: Fraction) -> int:
        count, last = 0, 0
        for f in self.chain:
            s = _sign_at(f, x)
            if s == 0:
                continue
            if last and s != last:
                count += 1
            last = s
        return count

    def count(self, lo: Fraction, hi: Fraction) -> int:
        """Distinct roots in (lo, hi); endpoints must not be roots."""
        return self.variations(lo) - self.variations(hi)

    def sign(self, x: Fraction) -> int:
        return _sign_at(self.chain[0], x)


def sturm_count(p: Polynomial, lo: Scalar, hi: Scalar) -> int:
    """Number of distinct real roots of p in the open interval (lo, hi)."""
    lo, hi = as_fraction(lo), as_fraction(hi)
    if not p:
        raise ValueError("sturm_count of the zero polynomial")
    if not lo < hi:
        raise ValueError("sturm_count needs lo < hi")
    if evaluate(p, lo) == 0 or evaluate(p, hi) == 0:
        raise ValueError("endpoint is a root; perturb the interval endpoints")
    return SturmChain(p).count(lo, hi)


def cauchy_bound(p: Polynomial) -> Fraction:
    """1 + max |a_i / a_n|: every complex root has modulus strictly below it."""
    if not p:
        raise ValueError("root bound of the zero polynomial")
    lead = abs(p.leading)
    return 1 + max((abs(c) / lead for c in p.coeffs[:-1]), default=Fraction(0))


def _deflate_at(p: Polynomial, r: Fraction) -> Polynomial:
    lin = Polynomial([-r, 1])
    while evaluate(p, r) == 0:
        p = exact_div(p, lin)
    return p


def count_roots_open(p: Polynomial, lo: Scalar, hi: Scalar, multiplicity: bool = True) -> int:
    """Real roots of p in (lo, hi); endpoint roots are deflated, not counted."""
    lo, hi = as_fraction(lo), as_fraction(hi)
    if not lo < hi:
        raise ValueError("count_roots_open needs lo < hi")
    p = _deflate_at(_deflate_at(p, lo), hi)
    if not multiplicity:
        return SturmChain(p).count(lo, hi)
    return sum(m * SturmChain(f).count(lo, hi) for f, m in squarefree_decomposition(p))


def real_root_count(p: Polynomial, multiplicity: bool = True) -> int:
    if not p:
        raise ValueError("real_root_count of the zero polynomial")
    if p.is_constant():
        return 0
    b = cauchy_bound(p)
    if not multiplicity:
        return SturmChain(p).count(-b, b)
    return sum(m * SturmChain(f).count(-b, b) for f, m in squarefree_decomposition(p))


VACUOUS = "vacuous"
REAL_ROOTED = "real-rooted"
NOT_REAL_ROOTED = "not-real-rooted"


def real_rootedness(p: Polynomial) -> str:
    """One of ``real-rooted``, ``not-real-rooted``, or ``vacuous`` (zero polynomial)."""
    if not p:
        return VACUOUS
    return REAL_ROOTED if real_root_count(p) == p.degree else NOT_REAL_ROOTED


def is_real_rooted(p: Polynomial) -> bool:
    """All roots real, counted with multiplicity. The zero polynomial counts as real-rooted."""
    return real_rootedness(p) != NOT_REAL_ROOTED


def is_squarefree(p: Polynomial) -> bool:
    return poly_gcd(p, p.derivative()).is_constant()


@dataclass(frozen=True)
class IsolatingInterval:
    """Open interval (lo, hi) holding one distinct root of multiplicity ``multiplicity_claim``."""

    lo: Fraction
    hi: Fraction
    multiplicity_claim: int = 1

    def __post_init__(self):
        if not self.lo < self.hi:
            raise ValueError("isolating interval needs lo < hi")
        if self.multiplicity_claim < 1:
            raise ValueError("multiplicity must be positive")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def contains(self, x: Scalar) -> bool:
        x = as_fraction(x)
        return self.lo < x < self.hi

    def to_wire(self) -> dict:
        return {
            "lo": f"{self.lo.numerator}/{self.lo.denominator}",
            "hi": f"{self.hi.numerator}/{self.hi.denominator}",
            "multiplicity": self.multiplicity_claim,
        }


def _split_point(lo: Fraction, hi: Fraction, avoid: Sequence[Polynomial]) -> Fraction:
    """A rational strictly inside (lo, hi), near the middle, that is a root of none of ``avoid``."""
    width = hi - lo
    k = 2
    while True:
        for j in range(1, k):
            m = lo + width * Fraction(j, k)
            if all(evaluate(f, m) != 0 for f in avoid):
                return m
        k = k * 2 + 1


def _isolate(chain: SturmChain, lo: Fraction, hi: Fraction, avoid: Sequence[Polynomial]) -> list[tuple[Fraction, Fraction]]:
    out = []
    stack = [(lo, hi, chain.count(lo, hi))]
    while stack:
        a, b, n = stack.pop()
        if n == 0:
            continue
        if n == 1:
            out.append((a, b))
            continue
        m = _split_point(a, b, avoid)
        vm = chain.variations(m)
        stack.append((m, b, vm - chain.variations(b)))
        stack.append((a, m, chain.variations(a) - vm))
    out.sort()
    return out


def isolate_real_roots(p: Polynomial, avoid: Sequence[Polynomial] = ()) -> list[IsolatingInterval]:
    """Disjoint sorted intervals, one per distinct real root of p.

    Endpoints are never roots of p (or of any polynomial in ``avoid``).
    """
    if not p:
        raise ValueError("isolate_real_roots of the zero polynomial")
    if p.is_constant():
        return []
    factors = squarefree_decomposition(p)
    sqf = squarefree_part(p)
    avoid = [sqf, *avoid]
    b = cauchy_bound(p)
    for f in avoid[1:]:
        if f and not f.is_constant():
            b = max(b, cauchy_bound(f))
    b = Fraction(math.ceil(b))
    lo = -b
    while any(evaluate(f, lo) == 0 for f in avoid):
        lo -= 1
    hi = -lo
    while any(evaluate(f, hi) == 0 for f in avoid):
        hi += 1
    chains = [(SturmChain(f), m) for f, m in factors]
    out = []
    for a, c in _isolate(SturmChain(sqf), lo, hi, avoid):
        mult = next(m for ch, m in chains if ch.count(a, c) == 1)
        out.append(IsolatingInterval(a, c, mult))
    return out


def refine(p: Polynomial, iv: IsolatingInterval, avoid: Sequence[Polynomial] = ()) -> IsolatingInterval:
    """Halve an isolating interval of p, keeping the half with the root."""
    sqf = squarefree_part(p)
    m = _split_point(iv.lo, iv.hi, [sqf, *avoid])
    chain = SturmChain(sqf)
    if chain.count(iv.lo, m) == 1:
        return IsolatingInterval(iv.lo, m, iv.multiplicity_claim)
    return IsolatingInterval(m, iv.hi, iv.multiplicity_claim)
