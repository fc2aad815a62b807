"""Power series in w with polynomial-in-x coefficients, truncated at w^N."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .exactpoly import Polynomial


class SeriesError(ValueError):
    pass


class TruncatedBivariateSeries:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence, order: int):
        if order < 0:
            raise SeriesError("order must be nonnegative")
        cs = [c if isinstance(c, Polynomial) else Polynomial([c]) for c in coeffs][: order + 1]
        cs += [Polynomial()] * (order + 1 - len(cs))
        self.coeffs: tuple[Polynomial, ...] = tuple(cs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def one(cls, order: int) -> TruncatedBivariateSeries:
        return cls([Polynomial([1])], order)

    @classmethod
    def w(cls, order: int) -> TruncatedBivariateSeries:
        return cls([Polynomial(), Polynomial([1])], order)

    def __eq__(self, other):
        if not isinstance(other, TruncatedBivariateSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __repr__(self):
        return f"TruncatedBivariateSeries({list(self.coeffs)!r}, order={self.order})"

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def _match(self, other) -> TruncatedBivariateSeries:
        if isinstance(other, TruncatedBivariateSeries):
            return other
        return TruncatedBivariateSeries([other], self.order)

    def __add__(self, other):
        other = self._match(other)
        n = min(self.order, other.order)
        return TruncatedBivariateSeries([a + b for a, b in zip(self.coeffs, other.coeffs)], n)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedBivariateSeries([-a for a in self.coeffs], self.order)

    def __sub__(self, other):
        return self + (-self._match(other))

    def __mul__(self, other):
        if not isinstance(other, TruncatedBivariateSeries):
            # polynomial or scalar multiplier acts coefficientwise
            return TruncatedBivariateSeries([a * other for a in self.coeffs], self.order)
        n = min(self.order, other.order)
        out = [Polynomial()] * (n + 1)
        for i in range(n + 1):
            a = self.coeffs[i]
            if not a:
                continue
            for j in range(n + 1 - i):
                if other.coeffs[j]:
                    out[i + j] = out[i + j] + a * other.coeffs[j]
        return TruncatedBivariateSeries(out, n)

    __rmul__ = __mul__

    def reciprocal(self) -> TruncatedBivariateSeries:
        c0 = self.coeffs[0]
        if c0.degree != 0:
            raise SeriesError("reciprocal needs a nonzero constant w^0 coefficient")
        inv0 = 1 / c0.coeff(0)
        out = [Polynomial([inv0])]
        for n in range(1, self.order + 1):
            acc = Polynomial()
            for k in range(1, n + 1):
                acc = acc + self.coeffs[k] * out[n - k]
            out.append(-acc * inv0)
        return TruncatedBivariateSeries(out, self.order)

    def exp(self) -> TruncatedBivariateSeries:
        """E with E' = a' E in w, from E_0 = 1."""
        if self.coeffs[0]:
            raise SeriesError("exp needs a zero w^0 coefficient")
        a = self.coeffs
        out = [Polynomial([1])]
        for n in range(1, self.order + 1):
            acc = Polynomial()
            for k in range(1, n + 1):
                if a[k]:
                    acc = acc + k * a[k] * out[n - k]
            out.append(acc / n)
        return TruncatedBivariateSeries(out, self.order)

    def d_dw(self) -> TruncatedBivariateSeries:
        """Derivative in w; the result is one order shorter."""
        if self.order == 0:
            raise SeriesError("d/dw of an order-0 series has no valid terms")
        return TruncatedBivariateSeries(
            [n * self.coeffs[n] for n in range(1, self.order + 1)], self.order - 1
        )

    def d_dx(self) -> TruncatedBivariateSeries:
        return TruncatedBivariateSeries([c.derivative() for c in self.coeffs], self.order)

    def truncate(self, order: int) -> TruncatedBivariateSeries:
        return TruncatedBivariateSeries(self.coeffs, min(order, self.order))

    def to_json(self) -> dict:
        return {"order": self.order, "coeffs": [c.to_wire() for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> TruncatedBivariateSeries:
        return cls([Polynomial.from_wire(c) for c in data["coeffs"]], data["order"])


def series_exp(a: TruncatedBivariateSeries) -> TruncatedBivariateSeries:
    return a.exp()


def geometric(ratio: Polynomial, order: int) -> TruncatedBivariateSeries:
    """1 / (1 - ratio*w) = sum ratio^k w^k."""
    out = [Polynomial([1])]
    for _ in range(order):
        out.append(out[-1] * ratio)
    return TruncatedBivariateSeries(out, order)


def laguerre_generating(order: int) -> TruncatedBivariateSeries:
    """exp(w x / (w - 1)) / (1 - w)."""
    inv = geometric(Polynomial([1]), order)
    w_over = -(TruncatedBivariateSeries.w(order) * inv)
    return (w_over * Polynomial.x()).exp() * inv


def laguerre_Q_generating(order: int) -> TruncatedBivariateSeries:
    """exp(-w x / (w (x-1) + 1)) / (w (x-1) + 1)."""
    inv = geometric(Polynomial([1, -1]), order)
    arg = TruncatedBivariateSeries.w(order) * inv * Polynomial([0, -1])
    return arg.exp() * inv


def pde_residual(g: TruncatedBivariateSeries) -> TruncatedBivariateSeries:
    """x(x-1)^2 G_x + (1-x^2) w G_w + (1-2x) G - G_w.

    G_w loses one order, so the residual is an order N-1 series.
    """
    if g.order < 1:
        raise SeriesError("pde_residual needs order >= 1")
    n = g.order - 1
    gw = g.d_dw()
    w_gw = TruncatedBivariateSeries.w(n) * gw
    lhs = g.d_dx().truncate(n) * Polynomial([0, 1, -2, 1]) + w_gw * Polynomial([1, 0, -1])
    lhs = lhs + g.truncate(n) * Polynomial([1, -2])
    return lhs - gw
