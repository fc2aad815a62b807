"""Coefficient polynomials Q_k of T = sum_k Q_k(x)/k! D^k.

:func:`coefficient_polys` extracts them from any basis through
Q_n(x) = sum_k C(n, k) T[x^k] (-x)^(n-k); :func:`closed_form_Q` gives the known
closed forms for the Hermite, Laguerre, Chebyshev and Legendre maps.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .bases import (
    CHEBYSHEV,
    HERMITE_PHYS,
    HERMITE_SCALED,
    LAGUERRE,
    LEGENDRE,
    BasisSpec,
    InvalidSpecError,
    basis_sequence,
    hermite_phys_closed,
)
from .exactpoly import Polynomial, binom, double_factorial


class TruncationError(ValueError):
    """Input degree exceeds the operator's truncation order."""


@dataclass(frozen=True)
class OperatorRep:
    q: tuple[Polynomial, ...]

    def __post_init__(self):
        object.__setattr__(self, "q", tuple(self.q))
        if not self.q:
            raise ValueError("operator needs at least Q_0")

    @property
    def truncation_order(self) -> int:
        return len(self.q) - 1

    def to_json(self) -> dict:
        return {"truncation_order": self.truncation_order, "q": [p.to_wire() for p in self.q]}

    @classmethod
    def from_json(cls, data: dict) -> OperatorRep:
        q = [Polynomial.from_wire(c) for c in data["q"]]
        if data.get("truncation_order", len(q) - 1) != len(q) - 1:
            raise ValueError("truncation_order does not match the number of Q polynomials")
        return cls(tuple(q))

    @classmethod
    def identity(cls, order: int) -> OperatorRep:
        return cls((Polynomial([1]),) + (Polynomial(),) * order)


def q_from_images(images: list[Polynomial]) -> list[Polynomial]:
    """Q_0..Q_N from T[x^0..x^N], accumulating powers of -x as we go."""
    out = []
    neg_x = Polynomial([0, -1])
    for n in range(len(images)):
        acc = Polynomial()
        power = Polynomial([1])
        # k = n down to 0, so (-x)^(n-k) grows by one factor each step
        for k in range(n, -1, -1):
            acc = acc + binom(n, k) * images[k] * power
            power = power * neg_x
        out.append(acc)
    return out


def coefficient_polys(spec: BasisSpec, order: int) -> OperatorRep:
    if order < 0:
        raise ValueError("order must be nonnegative")
    return OperatorRep(tuple(q_from_images(basis_sequence(spec, order))))


def apply_operator(rep: OperatorRep, p: Polynomial) -> Polynomial:
    """sum_k Q_k / k! * p^(k); refuses inputs the truncation cannot represent."""
    if p.degree > rep.truncation_order:
        raise TruncationError(
            f"degree {p.degree} input exceeds truncation order {rep.truncation_order}"
        )
    out = Polynomial()
    d = p
    k = 0
    while d:
        out = out + rep.q[k] * d / math.factorial(k)
        d = d.derivative()
        k += 1
    return out


# -- closed forms ------------------------------------------------------------------


def laguerre_q_closed(k: int) -> Polynomial:
    cs = []
    for r in range(k + 1):
        inner = sum((Fraction(binom(r, l), math.factorial(l)) for l in range(r + 1)), Fraction(0))
        cs.append(binom(k, r) * inner * (-1) ** r)
    return Polynomial(cs)


def legendre_q_constant(k: int) -> Fraction:
    """(2k-1)!! / (2k)!!, the multiplier of (x^2 - 1)^k in Q_{2k}."""
    return Fraction(double_factorial(2 * k - 1), double_factorial(2 * k))


def closed_form_Q(spec: BasisSpec, n: int) -> Polynomial:
    if n < 0:
        raise ValueError("n must be nonnegative")
    f = spec.family
    u = Polynomial([-1, 0, 1])
    if f in (HERMITE_PHYS, HERMITE_SCALED):
        beta = Fraction(2) if f == HERMITE_PHYS else spec.beta
        if beta is None or beta == 0:
            raise InvalidSpecError("hermite-scaled needs beta != 0")
        return hermite_phys_closed(n).compose_affine((beta - 1) / 2, 0)
    if f == LAGUERRE:
        return laguerre_q_closed(n)
    if f == CHEBYSHEV:
        return Polynomial() if n % 2 else u ** (n // 2)
    if f == LEGENDRE:
        return Polynomial() if n % 2 else legendre_q_constant(n // 2) * u ** (n // 2)
    raise InvalidSpecError(f"no closed form for family {f!r}")


# -- the C_{k,l} table behind D^k (x^2-1)^n -----------------------------------------


@lru_cache(maxsize=None)
def _c_recursive(k: int, l: int) -> int:
    if k < 0 or l < 0 or l > k // 2:
        return 0
    if k == 0 and l == 0:
        return 1
    return _c_recursive(k - 1, l) + (k - 2 * l + 1) * _c_recursive(k - 1, l - 1)


def _c_closed(n: int, l: int) -> Fraction:
    if n < 0 or l < 0 or l > n // 2:
        return Fraction(0)
    num = double_factorial(2 * l - 1) * math.factorial(n) * math.factorial(l) * 2**l
    den = double_factorial(2 * l) * math.factorial(n - 2 * l) * math.factorial(2 * l)
    return Fraction(num, den)


def legendre_C(n: int, l: int, mode: str = "recursion") -> Fraction:
    if mode == "recursion":
        # iterate k upward so deep tables do not hit the recursion limit
        for k in range(0, n, 64):
            _c_recursive(k, l)
        return Fraction(_c_recursive(n, l))
    if mode == "closed_form":
        return _c_closed(n, l)
    raise ValueError(f"unknown mode {mode!r}")


def legendre_derivative_expansion(n: int, k: int) -> Polynomial:
    """D^k[(x^2-1)^n] rebuilt from the C table."""
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    u = Polynomial([-1, 0, 1])
    out = Polynomial()
    for l in range(k // 2 + 1):
        scalar = Fraction(math.factorial(n), math.factorial(n - k + l)) * 2 ** (k - l) * legendre_C(k, l)
        out = out + scalar * u ** (n - k + l) * Polynomial.monomial(k - 2 * l)
    return out


def legendre_via_C(n: int) -> Polynomial:
    """P_n = sum_l C_{n,l} / (2^l l!) (x^2-1)^l x^(n-2l)."""
    u = Polynomial([-1, 0, 1])
    out = Polynomial()
    for l in range(n // 2 + 1):
        out = out + Fraction(legendre_C(n, l), 2**l * math.factorial(l)) * u**l * Polynomial.monomial(n - 2 * l)
    return out
