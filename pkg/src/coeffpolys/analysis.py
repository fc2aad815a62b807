"""Finite checks of the structural claims about coefficient polynomials.

Appell detection, three-term recurrence fitting, classification of
constant-coefficient operators, stability orientation, strict interlacing and
zero location of basis images.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .bases import (
    CHEBYSHEV,
    LEGENDRE,
    BasisSpec,
    ThreeTermRecurrence,
    basis_sequence,
    hermite_prob_recurrence,
)
from .diffop import closed_form_Q
from .exactpoly import (
    ComplexRational,
    I,
    IsolatingInterval,
    Polynomial,
    SturmChain,
    as_fraction,
    binom,
    count_roots_open,
    evaluate,
    is_squarefree,
    isolate_real_roots,
    poly_gcd,
    real_root_count,
    refine,
)


class NotThreeTermError(ValueError):
    def __init__(self, n: int, detail: str = ""):
        self.n = n
        super().__init__(f"not a three-term sequence (fails at n = {n}){': ' + detail if detail else ''}")


def _check_degrees(seq: Sequence[Polynomial]) -> None:
    for n, p in enumerate(seq):
        if p.degree != n:
            raise ValueError(f"member {n} has degree {p.degree}, expected {n}")


def is_appell(seq: Sequence[Polynomial]) -> bool:
    """P_n' == n P_{n-1} for each consecutive pair."""
    if len(seq) < 2:
        raise ValueError("need at least two polynomials")
    _check_degrees(seq)
    return all(seq[n].derivative() == n * seq[n - 1] for n in range(1, len(seq)))


def fit_three_term(seq: Sequence[Polynomial]) -> ThreeTermRecurrence:
    """Solve P_n = (x - c_n) P_{n-1} - lambda_n P_{n-2} exactly.

    If the leading coefficients differ, the monic normalization is fitted and
    the returned ``p0`` is 1.
    """
    if len(seq) < 3:
        raise ValueError("need at least three polynomials")
    _check_degrees(seq)
    if len({p.leading for p in seq}) > 1:
        seq = [p.monic() for p in seq]
    lead = seq[0].leading
    x = Polynomial.x()
    cs, lams = [], []
    # P_1 = (x - c_1) P_0
    c1 = -seq[1].coeff(0) / lead
    cs.append(c1)
    for n in range(2, len(seq)):
        r = seq[n] - x * seq[n - 1]
        c = -r.coeff(n - 1) / lead
        r = r + c * seq[n - 1]
        lam = -r.coeff(n - 2) / lead
        r = r + lam * seq[n - 2]
        if r:
            raise NotThreeTermError(n, f"residual {r}")
        cs.append(c)
        lams.append(lam)
    return ThreeTermRecurrence(tuple(cs), tuple(lams), lead)


# -- constant-coefficient classification ----------------------------------------

CONST_COEFFS = "const_coeffs"
APPELL = "appell"
RECURRENCE = "recurrence"
HERMITE_SHIFT = "hermite_shift"


@dataclass
class ClassificationReport:
    is_appell: bool
    gamma0: Fraction
    beta: Fraction
    alpha: Fraction
    conditions_verified: frozenset = frozenset()
    n_checked: int = 0
    real_ops: bool = False
    reason: str = ""

    def to_json(self) -> dict:
        w = lambda c: f"{c.numerator}/{c.denominator}"
        return {
            "is_appell": self.is_appell,
            "gamma0": w(self.gamma0),
            "beta": w(self.beta),
            "alpha": w(self.alpha),
            "conditions_verified": sorted(self.conditions_verified),
            "n_checked": self.n_checked,
            "real_ops": self.real_ops,
            "reason": self.reason,
        }


def images_of_constant_operator(gammas: Sequence[Fraction]) -> list[Polynomial]:
    """P_n = sum_k gamma_{n-k} C(n, k) x^k for n < len(gammas)."""
    return [
        Polynomial(gammas[n - k] * binom(n, k) for k in range(n + 1))
        for n in range(len(gammas))
    ]


def classify_constant_coefficient_operator(gammas: Sequence) -> ClassificationReport:
    """Walk the chain const coeffs -> Appell -> recurrence -> shifted Hermite.

    Only the prefix P_0..P_{len-1} determined by ``gammas`` is certified.
    """
    gammas = [as_fraction(g) for g in gammas]
    if len(gammas) < 3:
        raise ValueError("need at least three gammas")
    g0, g1, g2 = gammas[:3]
    if g0 == 0:
        raise ValueError("gamma_0 must be nonzero")
    seq = images_of_constant_operator(gammas)
    verified = {CONST_COEFFS}
    appell = is_appell(seq)
    if appell:
        verified.add(APPELL)
    beta = -g1 / g0
    alpha = (g1 * g1 - g0 * g2) / (g0 * g0)
    n_max = len(seq) - 1
    if alpha <= 0:
        return ClassificationReport(
            appell, g0, beta, alpha, frozenset(verified), n_max, False,
            f"not a real OPS: alpha = {alpha} gives lambda_n = (n-1) alpha <= 0",
        )
    try:
        rec = fit_three_term(seq)
    except NotThreeTermError:
        rec = None
    if rec is not None and all(c == beta for c in rec.c) and all(
        l == alpha * (n + 1) for n, l in enumerate(rec.lam)
    ):
        verified.add(RECURRENCE)
    herm = hermite_prob_recurrence(n_max, alpha)
    if all(p == g0 * h.compose_affine(1, -beta) for p, h in zip(seq, herm)):
        verified.add(HERMITE_SHIFT)
    ok = verified == {CONST_COEFFS, APPELL, RECURRENCE, HERMITE_SHIFT}
    reason = f"verified through n = {n_max}" if ok else "chain broken"
    return ClassificationReport(appell, g0, beta, alpha, frozenset(verified), n_max, ok, reason)


# -- stability orientation -------------------------------------------------------

PRESERVING = "preserving"
REVERSING = "reversing"
INDETERMINATE = "indeterminate"


@dataclass(frozen=True)
class StabilityVerdict:
    orientation: str
    witness_root: ComplexRational

    def to_json(self) -> dict:
        return {"orientation": self.orientation, "witness_root": self.witness_root.to_wire()}


def stability_orientation(spec: BasisSpec) -> StabilityVerdict:
    """Locate the root of T[x - i] = P_1 - i P_0 relative to the real axis."""
    p0, p1 = basis_sequence(spec, 1)
    if p1.degree != 1 or p0.degree != 0:
        raise ValueError("stability test needs deg P_0 = 0 and deg P_1 = 1")
    a, b, c0 = p1.coeff(1), p1.coeff(0), p0.coeff(0)
    root = ComplexRational(-b / a, c0 / a)
    assert (evaluate(p1, root) - I * evaluate(p0, root)).is_zero()
    if root.im > 0:
        return StabilityVerdict(PRESERVING, root)
    if root.im < 0:
        return StabilityVerdict(REVERSING, root)
    return StabilityVerdict(INDETERMINATE, root)


# -- Laguerre differential-difference identity --------------------------------------


def laguerre_ddq_sides(n: int) -> tuple[Polynomial, Polynomial]:
    q = closed_form_Q(BasisSpec.laguerre(), n)
    lhs = (n + 1) * closed_form_Q(BasisSpec.laguerre(), n + 1)
    rhs = Polynomial([0, 1, -2, 1]) * q.derivative() + Polynomial([n + 1, -2, -n]) * q
    return lhs, rhs


def verify_laguerre_ddq(n: int) -> bool:
    lhs, rhs = laguerre_ddq_sides(n)
    return lhs == rhs


# -- interlacing ---------------------------------------------------------------------

SKIP_RULE_LABEL = "almost-interlacing: zero members skipped"


@dataclass
class InterlacingReport:
    n_checked: int
    all_real: bool
    all_in_unit_interval: Optional[bool]
    strictly_interlacing: bool
    witness_intervals: list = field(default_factory=list)
    interval: Optional[tuple] = None
    skip_rule: Optional[str] = None
    first_failure: Optional[int] = None

    def to_json(self) -> dict:
        w = lambda c: f"{c.numerator}/{c.denominator}"
        return {
            "n_checked": self.n_checked,
            "all_real": self.all_real,
            "all_in_unit_interval": self.all_in_unit_interval,
            "interval": None if self.interval is None else [w(self.interval[0]), w(self.interval[1])],
            "strictly_interlacing": self.strictly_interlacing,
            "skip_rule": self.skip_rule,
            "first_failure": self.first_failure,
            "witness_intervals": [[iv.to_wire() for iv in level] for level in self.witness_intervals],
        }


def strictly_interlace(p: Polynomial, r: Polynomial) -> tuple[bool, list[IsolatingInterval]]:
    """Do the roots of p (degree m) strictly separate those of r (degree m + 1)?

    Returns the verdict and isolating intervals for r that contain no root of p.
    """
    if r.degree != p.degree + 1:
        return False, []
    if not (is_squarefree(p) and is_squarefree(r)):
        return False, []
    if real_root_count(p, multiplicity=False) != p.degree or real_root_count(r, multiplicity=False) != r.degree:
        return False, []
    if not poly_gcd(p, r).is_constant():
        return False, []
    ivs = isolate_real_roots(r, avoid=[p])
    if p.is_constant():
        return True, ivs
    pchain = SturmChain(p)
    refined = []
    for iv in ivs:
        while pchain.count(iv.lo, iv.hi) > 0:
            iv = refine(r, iv, avoid=[p])
        refined.append(iv)
    ok = all(
        pchain.count(refined[j].hi, refined[j + 1].lo) == 1 for j in range(len(refined) - 1)
    )
    return ok, refined


def interlacing_report(
    seq: Sequence[Polynomial],
    interval: Optional[tuple] = None,
    skip_zero: bool = False,
) -> InterlacingReport:
    """Certify real-rootedness, location and strict interlacing of consecutive members.

    With ``skip_zero`` the zero members are dropped and only consecutive nonzero
    members are compared; the report is labelled accordingly.
    """
    members = list(enumerate(seq))
    if skip_zero:
        members = [(n, p) for n, p in members if p]
    elif any(not p for _, p in members):
        raise ValueError("zero member in sequence; pass skip_zero=True to use the skip rule")
    if not skip_zero:
        for n, p in members:
            if p.degree != n:
                raise ValueError(f"member {n} has degree {p.degree}, expected {n}")
    if interval is not None:
        interval = (as_fraction(interval[0]), as_fraction(interval[1]))

    all_real = True
    in_interval = None if interval is None else True
    first_failure = None
    for n, p in members:
        if p.is_constant():
            continue
        if real_root_count(p) != p.degree:
            all_real = False
            first_failure = n if first_failure is None else first_failure
        if interval is not None and count_roots_open(p, *interval) != p.degree:
            in_interval = False
            first_failure = n if first_failure is None else first_failure

    strict = True
    witnesses = []
    for (n, p), (m, r) in zip(members, members[1:]):
        ok, ivs = strictly_interlace(p, r)
        witnesses.append(ivs)
        if not ok:
            strict = False
            first_failure = m if first_failure is None else min(first_failure, m)
    return InterlacingReport(
        n_checked=len(seq),
        all_real=all_real,
        all_in_unit_interval=in_interval,
        strictly_interlacing=strict and all_real,
        witness_intervals=witnesses,
        interval=interval,
        skip_rule=SKIP_RULE_LABEL if skip_zero else None,
        first_failure=first_failure,
    )


# -- zero location of basis images --------------------------------------------------


def basis_image(coeffs: Sequence, family: str) -> Polynomial:
    """sum_k a_k P_k for the Chebyshev or Legendre basis."""
    if family not in (CHEBYSHEV, LEGENDRE):
        raise ValueError("family must be chebyshev or legendre")
    coeffs = [as_fraction(a) for a in coeffs]
    seq = basis_sequence(BasisSpec(family), max(len(coeffs) - 1, 0))
    return sum((a * seq[k] for k, a in enumerate(coeffs)), Polynomial())


def unit_disk_image_check(coeffs: Sequence, family: str) -> bool:
    """All zeros of sum a_k P_k real and inside (-1, 1), with multiplicity.

    The caller vouches that sum a_k x^k has its zeros in the open unit disk.
    """
    img = basis_image(coeffs, family)
    if not img:
        raise ValueError("image is the zero polynomial")
    if img.is_constant():
        return True
    return count_roots_open(img, -1, 1) == img.degree
