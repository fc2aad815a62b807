"""Polynomial families used as images T[x^n] = P_n(x).

Every family has a primary generator (:func:`basis_poly`) and at least one
independent secondary route for cross-checking: the heat-operator form for
probabilist Hermite, Rodrigues for Legendre, the differential-difference
equation for Laguerre, and the plain three-term recurrences.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .exactpoly import Polynomial, as_fraction, binom

MONOMIAL = "monomial"
HERMITE_PROB = "hermite-prob"
HERMITE_PHYS = "hermite-phys"
HERMITE_SCALED = "hermite-scaled"
LAGUERRE = "laguerre"
CHEBYSHEV = "chebyshev"
LEGENDRE = "legendre"
CUSTOM = "custom"

FAMILIES = (MONOMIAL, HERMITE_PROB, HERMITE_PHYS, HERMITE_SCALED, LAGUERRE, CHEBYSHEV, LEGENDRE, CUSTOM)


class InvalidSpecError(ValueError):
    pass


def _frac_wire(c: Fraction) -> str:
    return f"{c.numerator}/{c.denominator}"


@dataclass(frozen=True)
class ThreeTermRecurrence:
    """P_n = (x - c_n) P_{n-1} - lambda_n P_{n-2}, with P_{-1} = 0 and P_0 = p0.

    ``c[i]`` holds c_{i+1} (starting at n = 1). ``lam[i]`` holds lambda_{i+2}
    (starting at n = 2); lambda_1 multiplies P_{-1} = 0 and is not stored.
    """

    c: tuple[Fraction, ...]
    lam: tuple[Fraction, ...]
    p0: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "c", tuple(as_fraction(v) for v in self.c))
        object.__setattr__(self, "lam", tuple(as_fraction(v) for v in self.lam))
        object.__setattr__(self, "p0", as_fraction(self.p0))

    def validate(self) -> None:
        if self.p0 == 0:
            raise InvalidSpecError("recurrence needs P_0 != 0")
        for i, v in enumerate(self.lam):
            if v <= 0:
                raise InvalidSpecError(f"lambda_{i + 2} = {v} is not positive")

    @property
    def max_degree(self) -> int:
        return min(len(self.c), len(self.lam) + 1)

    def generate(self, n: int) -> list[Polynomial]:
        if n > self.max_degree:
            raise InvalidSpecError(f"recurrence only defines P_0..P_{self.max_degree}")
        x = Polynomial.x()
        seq = [Polynomial([self.p0])]
        for k in range(1, n + 1):
            nxt = (x - self.c[k - 1]) * seq[-1]
            if k >= 2:
                nxt = nxt - self.lam[k - 2] * seq[-2]
            seq.append(nxt)
        return seq

    def to_json(self) -> dict:
        return {
            "c": [_frac_wire(v) for v in self.c],
            "lambda": [_frac_wire(v) for v in self.lam],
            "p0": _frac_wire(self.p0),
        }

    @classmethod
    def from_json(cls, data: dict) -> ThreeTermRecurrence:
        return cls(
            tuple(Fraction(v) for v in data["c"]),
            tuple(Fraction(v) for v in data["lambda"]),
            Fraction(data.get("p0", "1/1")),
        )


@dataclass(frozen=True)
class BasisSpec:
    family: str
    alpha: Optional[Fraction] = None
    beta: Optional[Fraction] = None
    recurrence: Optional[ThreeTermRecurrence] = field(default=None)

    def __post_init__(self):
        if self.alpha is not None:
            object.__setattr__(self, "alpha", as_fraction(self.alpha))
        if self.beta is not None:
            object.__setattr__(self, "beta", as_fraction(self.beta))

    @classmethod
    def monomial(cls):
        return cls(MONOMIAL)

    @classmethod
    def hermite_prob(cls, alpha):
        return cls(HERMITE_PROB, alpha=alpha)

    @classmethod
    def hermite_phys(cls):
        return cls(HERMITE_PHYS)

    @classmethod
    def hermite_scaled(cls, beta):
        return cls(HERMITE_SCALED, beta=beta)

    @classmethod
    def laguerre(cls):
        return cls(LAGUERRE)

    @classmethod
    def chebyshev(cls):
        return cls(CHEBYSHEV)

    @classmethod
    def legendre(cls):
        return cls(LEGENDRE)

    @classmethod
    def custom(cls, recurrence: ThreeTermRecurrence):
        return cls(CUSTOM, recurrence=recurrence)

    def validate(self) -> None:
        if self.family not in FAMILIES:
            raise InvalidSpecError(f"unknown family {self.family!r}")
        if self.family == HERMITE_PROB:
            if self.alpha is None or self.alpha <= 0:
                raise InvalidSpecError("hermite-prob needs alpha > 0")
        if self.family == HERMITE_SCALED:
            if self.beta is None or self.beta == 0:
                raise InvalidSpecError("hermite-scaled needs beta != 0")
        if self.family == CUSTOM:
            if self.recurrence is None:
                raise InvalidSpecError("custom family needs a recurrence")
            self.recurrence.validate()

    def to_json(self) -> dict:
        out = {"family": self.family}
        if self.alpha is not None:
            out["alpha"] = _frac_wire(self.alpha)
        if self.beta is not None:
            out["beta"] = _frac_wire(self.beta)
        if self.recurrence is not None:
            out["recurrence"] = self.recurrence.to_json()
        return out

    @classmethod
    def from_json(cls, data: dict) -> BasisSpec:
        rec = data.get("recurrence")
        spec = cls(
            data["family"],
            alpha=Fraction(data["alpha"]) if "alpha" in data else None,
            beta=Fraction(data["beta"]) if "beta" in data else None,
            recurrence=ThreeTermRecurrence.from_json(rec) if rec is not None else None,
        )
        spec.validate()
        return spec


# -- closed forms ----------------------------------------------------------------


def hermite_phys_closed(n: int) -> Polynomial:
    """H_n(x) = n! sum_m (-1)^m / (m! (n-2m)!) (2x)^(n-2m)."""
    cs = [Fraction(0)] * (n + 1)
    for m in range(n // 2 + 1):
        k = n - 2 * m
        cs[k] = Fraction((-1) ** m * math.factorial(n) * 2**k, math.factorial(m) * math.factorial(k))
    return Polynomial(cs)


def laguerre_closed(n: int) -> Polynomial:
    return Polynomial(Fraction(binom(n, k) * (-1) ** k, math.factorial(k)) for k in range(n + 1))


def chebyshev_closed(n: int) -> Polynomial:
    # binom(n, 2k) vanishes for 2k > n, so stop at n // 2
    u = Polynomial([-1, 0, 1])
    out = Polynomial()
    for k in range(n // 2 + 1):
        out = out + binom(n, 2 * k) * (u**k) * Polynomial.monomial(n - 2 * k)
    return out


def legendre_closed(n: int) -> Polynomial:
    xm, xp = Polynomial([-1, 1]), Polynomial([1, 1])
    out = Polynomial()
    for k in range(n + 1):
        out = out + binom(n, k) ** 2 * (xm ** (n - k)) * (xp**k)
    return out / 2**n


def hermite_prob_recurrence(n: int, alpha) -> list[Polynomial]:
    alpha = as_fraction(alpha)
    x = Polynomial.x()
    seq = [Polynomial([1])]
    if n >= 1:
        seq.append(x)
    for k in range(2, n + 1):
        seq.append(x * seq[-1] - alpha * (k - 1) * seq[-2])
    return seq


# -- secondary routes ---------------------------------------------------------------


def hermite_via_heat_operator(n: int, alpha) -> Polynomial:
    """sum_k (-alpha/2)^k / k! D^(2k) x^n, a finite sum."""
    alpha = as_fraction(alpha)
    if alpha <= 0:
        raise InvalidSpecError("alpha must be positive")
    xn = Polynomial.monomial(n)
    out = Polynomial()
    for k in range(n // 2 + 1):
        out = out + xn.derivative(2 * k) * (Fraction(-alpha / 2) ** k / math.factorial(k))
    return out


def legendre_via_rodrigues(n: int) -> Polynomial:
    return (Polynomial([-1, 0, 1]) ** n).derivative(n) / (2**n * math.factorial(n))


def laguerre_via_ddq(n: int) -> Polynomial:
    """Iterate L_{k+1} = (x L_k' + (k+1-x) L_k) / (k+1) from L_0 = 1."""
    x = Polynomial.x()
    cur = Polynomial([1])
    for k in range(n):
        cur = (x * cur.derivative() + (Polynomial([k + 1, -1]) * cur)) / (k + 1)
    return cur


def chebyshev_via_recurrence(n: int) -> Polynomial:
    x = Polynomial.x()
    a, b = Polynomial([1]), x
    if n == 0:
        return a
    for _ in range(n - 1):
        a, b = b, 2 * x * b - a
    return b


# -- memoized entry point -------------------------------------------------------------

_cache: dict[BasisSpec, list[Polynomial]] = {}
_cache_lock = threading.Lock()


def _generate(spec: BasisSpec, n: int) -> list[Polynomial]:
    f = spec.family
    if f == MONOMIAL:
        return [Polynomial.monomial(k) for k in range(n + 1)]
    if f == HERMITE_PROB:
        return hermite_prob_recurrence(n, spec.alpha)
    if f == HERMITE_PHYS:
        return [hermite_phys_closed(k) for k in range(n + 1)]
    if f == HERMITE_SCALED:
        return [hermite_phys_closed(k).compose_affine(spec.beta / 2, 0) for k in range(n + 1)]
    if f == LAGUERRE:
        return [laguerre_closed(k) for k in range(n + 1)]
    if f == CHEBYSHEV:
        return [chebyshev_closed(k) for k in range(n + 1)]
    if f == LEGENDRE:
        return [legendre_closed(k) for k in range(n + 1)]
    if f == CUSTOM:
        return spec.recurrence.generate(n)
    raise InvalidSpecError(f"unknown family {f!r}")


def basis_sequence(spec: BasisSpec, n: int) -> list[Polynomial]:
    """P_0, ..., P_n for ``spec``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    spec.validate()
    with _cache_lock:
        seq = _cache.get(spec)
        if seq is not None and len(seq) > n:
            return seq[: n + 1]
    seq = _generate(spec, n)
    with _cache_lock:
        old = _cache.get(spec)
        if old is None or len(old) < len(seq):
            _cache[spec] = seq
    return list(seq)


def basis_poly(spec: BasisSpec, n: int) -> Polynomial:
    return basis_sequence(spec, n)[n]
