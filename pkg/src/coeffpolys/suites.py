"""Named verification suites producing JSON-ready reports.

Each runner returns a dict with ``suite``, ``passed``, ``first_failure`` and a
list of per-check records ordered by n. Randomized suites record the seed and
the explicit factor lists they drew, so any failure can be replayed.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction
from typing import Callable, Optional

from . import analysis
from .bases import (
    CHEBYSHEV,
    HERMITE_PHYS,
    HERMITE_SCALED,
    LAGUERRE,
    LEGENDRE,
    BasisSpec,
    basis_poly,
)
from .diffop import (
    apply_operator,
    closed_form_Q,
    coefficient_polys,
    legendre_C,
    legendre_derivative_expansion,
)
from .exactpoly import Polynomial
from .series import TruncatedBivariateSeries, laguerre_generating, laguerre_Q_generating, pde_residual

SUITES = (
    "reconstruction",
    "closed-forms",
    "interlacing",
    "ddq",
    "genfun",
    "classification",
    "stability",
    "disk-image",
)

NOTATION_SPECS = (
    BasisSpec.monomial(),
    BasisSpec.hermite_prob(1),
    BasisSpec.hermite_phys(),
    BasisSpec.laguerre(),
    BasisSpec.chebyshev(),
    BasisSpec.legendre(),
)

CLOSED_FORM_SPECS = (
    BasisSpec.hermite_scaled(2),
    BasisSpec.hermite_scaled(-2),
    BasisSpec.hermite_scaled(3),
    BasisSpec.laguerre(),
    BasisSpec.chebyshev(),
    BasisSpec.legendre(),
)


def _w(c: Fraction) -> str:
    return f"{c.numerator}/{c.denominator}"


def _report(suite: str, checks: list[dict], **extra) -> dict:
    failing = [c for c in checks if not c["ok"]]
    out = {
        "suite": suite,
        "passed": not failing,
        "n_checks": len(checks),
        "first_failure": failing[0] if failing else None,
        "checks": checks,
    }
    out.update(extra)
    return out


def reconstruction(n_max: int, specs=NOTATION_SPECS) -> dict:
    checks = []
    for spec in specs:
        rep = coefficient_polys(spec, n_max)
        for n in range(n_max + 1):
            ok = apply_operator(rep, Polynomial.monomial(n)) == basis_poly(spec, n)
            checks.append({"family": spec.to_json(), "n": n, "ok": ok})
    return _report("reconstruction", checks, n_max=n_max)


def closed_forms(n_max: int, specs=CLOSED_FORM_SPECS) -> dict:
    checks = []
    for spec in specs:
        rep = coefficient_polys(spec, n_max)
        for n in range(n_max + 1):
            ok = rep.q[n] == closed_form_Q(spec, n)
            checks.append({"check": "extracted == closed form", "family": spec.to_json(), "n": n, "ok": ok})
    plus, minus = BasisSpec.hermite_scaled(2), BasisSpec.hermite_scaled(-2)
    for k in range(n_max + 1):
        ok = closed_form_Q(minus, k) == closed_form_Q(plus, k).compose_affine(-3, 0)
        checks.append({"check": "-Q_k(x) == +Q_k(-3x)", "n": k, "ok": ok})
    return _report("closed-forms", checks, n_max=n_max)


def interlacing(spec: BasisSpec, n_max: int) -> dict:
    seq = [closed_form_Q(spec, n) for n in range(n_max + 2)]
    interval = (Fraction(0), Fraction(1)) if spec.family == LAGUERRE else None
    skip = spec.family in (CHEBYSHEV, LEGENDRE)
    rep = analysis.interlacing_report(seq, interval, skip_zero=skip)
    body = rep.to_json()
    if skip:
        # zero members skipped and repeated roots at +-1: only real-rootedness is claimed
        ok = rep.all_real
    else:
        ok = rep.strictly_interlacing and (rep.all_in_unit_interval is not False)
    checks = [{"n": n_max + 1, "ok": ok, "report": body}]
    return _report("interlacing", checks, family=spec.to_json(), n_max=n_max)


def ddq(n_max: int) -> dict:
    checks = [{"n": n, "ok": analysis.verify_laguerre_ddq(n)} for n in range(n_max + 1)]
    return _report("ddq", checks, n_max=n_max)


def genfun(order: int) -> dict:
    f = laguerre_generating(order)
    g = laguerre_Q_generating(order)
    lag = BasisSpec.laguerre()
    checks = []
    for n in range(order + 1):
        checks.append({"check": "F coefficient == L_n", "n": n, "ok": f.coeffs[n] == basis_poly(lag, n)})
    for n in range(order + 1):
        checks.append({"check": "G coefficient == Q_n^L", "n": n, "ok": g.coeffs[n] == closed_form_Q(lag, n)})
    if order >= 1:
        res = pde_residual(g)
        for n, c in enumerate(res.coeffs):
            checks.append({"check": "PDE residual", "n": n, "ok": not c})
    return _report("genfun", checks, order=order, pde_valid_through=order - 1)


def _random_fraction(rng: random.Random, lo: Fraction, hi: Fraction, den: int = 97) -> Fraction:
    return Fraction(rng.randint(math.ceil(lo * den), math.floor(hi * den)), den)


def hermite_exponential_gammas(alpha: Fraction, beta: Fraction, n: int) -> list[Fraction]:
    """gamma_k = k! [z^k] exp(-(alpha/2) z^2 - beta z) for k <= n."""
    arg = TruncatedBivariateSeries([Polynomial(), Polynomial([-beta]), Polynomial([-alpha / 2])], n)
    e = arg.exp()
    return [e.coeffs[k].coeff(0) * math.factorial(k) for k in range(n + 1)]


def classification(n_max: int, count: int, seed: int) -> dict:
    rng = random.Random(seed)
    checks = []
    for i in range(count):
        beta = _random_fraction(rng, Fraction(-5), Fraction(5))
        alpha = _random_fraction(rng, Fraction(1, 97), Fraction(5))
        gammas = hermite_exponential_gammas(alpha, beta, n_max)
        rep = analysis.classify_constant_coefficient_operator(gammas)
        ok = rep.real_ops and rep.beta == beta and rep.alpha == alpha
        checks.append({"n": n_max, "trial": i, "alpha": _w(alpha), "beta": _w(beta), "ok": ok, "report": rep.to_json()})
    neg = analysis.classify_constant_coefficient_operator([1, 0, 1])
    checks.append({"n": 2, "trial": "alpha<=0", "ok": not neg.real_ops, "report": neg.to_json()})
    return _report("classification", checks, seed=seed, n_max=n_max)


EXPECTED_ORIENTATION: dict[str, Callable[[BasisSpec], Optional[str]]] = {
    HERMITE_PHYS: lambda s: analysis.PRESERVING,
    HERMITE_SCALED: lambda s: analysis.PRESERVING if s.beta > 0 else analysis.REVERSING,
    LAGUERRE: lambda s: analysis.REVERSING,
}


def stability(spec: BasisSpec) -> dict:
    verdict = analysis.stability_orientation(spec)
    expected = EXPECTED_ORIENTATION.get(spec.family, lambda s: None)(spec)
    ok = expected is None or verdict.orientation == expected
    checks = [{"n": 1, "ok": ok, "expected": expected, **verdict.to_json()}]
    return _report("stability", checks, family=spec.to_json(), orientation=verdict.orientation)


def random_disk_factors(rng: random.Random, max_degree: int = 8, complex_pairs: bool = True, den: int = 97):
    """Random real-coefficient factors with all roots strictly inside the unit disk.

    Returns the factor records and their product.
    """
    degree = rng.randint(1, max_degree)
    factors, poly, d = [], Polynomial([1]), 0
    while d < degree:
        if complex_pairs and degree - d >= 2 and rng.random() < 0.5:
            while True:
                a = Fraction(rng.randint(-den + 1, den - 1), den)
                b = Fraction(rng.randint(1, den - 1), den)
                if a * a + b * b < 1:
                    break
            factors.append({"kind": "conjugate-pair", "re": _w(a), "im": _w(b)})
            poly = poly * Polynomial([a * a + b * b, -2 * a, 1])
            d += 2
        else:
            r = Fraction(rng.randint(-den + 1, den - 1), den)
            factors.append({"kind": "real", "root": _w(r)})
            poly = poly * Polynomial([-r, 1])
            d += 1
    return factors, poly


def disk_image(family: str, count: int, seed: int, complex_pairs: bool = True, max_degree: int = 8) -> dict:
    """Zeros of sum a_k P_k in (-1, 1) for random inputs with zeros in the unit disk.

    ``complex_pairs=False`` restricts the inputs to real zeros in (-1, 1).
    """
    rng = random.Random(seed)
    checks = []
    for i in range(count):
        factors, p = random_disk_factors(rng, max_degree, complex_pairs)
        ok = analysis.unit_disk_image_check(p.coeffs, family)
        checks.append({"n": p.degree, "trial": i, "ok": ok, "factors": factors, "coeffs": p.to_wire()})
    return _report(
        "disk-image", checks, family=family, seed=seed,
        inputs="unit-disk" if complex_pairs else "real-interval",
    )


def legendre_table(k_max: int) -> dict:
    checks = []
    for k in range(k_max + 1):
        for l in range(k // 2 + 1):
            ok = legendre_C(k, l, "recursion") == legendre_C(k, l, "closed_form")
            checks.append({"n": k, "l": l, "ok": ok})
    return _report("legendre-C", checks, k_max=k_max)


def legendre_derivatives(n_max: int) -> dict:
    checks = []
    u = Polynomial([-1, 0, 1])
    for n in range(n_max + 1):
        for k in range(n + 1):
            ok = legendre_derivative_expansion(n, k) == (u**n).derivative(k)
            checks.append({"n": n, "k": k, "ok": ok})
    return _report("legendre-Dk", checks, n_max=n_max)
