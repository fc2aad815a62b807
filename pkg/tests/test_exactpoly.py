from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coeffpolys.exactpoly import (
    I,
    NEG_INF,
    ComplexRational,
    InexactDivisionError,
    IsolatingInterval,
    Polynomial,
    SturmChain,
    cauchy_bound,
    compose_affine,
    content_divide,
    count_roots_open,
    derivative,
    double_factorial,
    evaluate,
    exact_div,
    is_real_rooted,
    isolate_real_roots,
    poly_gcd,
    real_rootedness,
    squarefree_decomposition,
    sturm_count,
)

P = Polynomial
Q2L = P([1, -4, F(7, 2)])  # Q_2 of the Laguerre map


# -- ring operations ------------------------------------------------------------


def test_add_cancels():
    assert P([1, -2]) + P([0, 2]) == P([1])


def test_difference_of_squares():
    assert P([-1, 1]) * P([1, 1]) == P([-1, 0, 1])


def test_content_divide():
    assert content_divide(P([-2, 0, 2])) == P([-1, 0, 1])
    assert content_divide(P([F(1, 2), F(3, 4)])) == P([2, 3])


def test_zero_polynomial_normalization():
    z = P([0, 0, 0])
    assert z.coeffs == ()
    assert z.degree == NEG_INF
    assert P([1, 2, 0]).coeffs == (1, 2)


def test_exact_div_and_error():
    assert exact_div(P([-1, 0, 1]), P([1, 1])) == P([-1, 1])
    with pytest.raises(InexactDivisionError):
        exact_div(P([1, 0, 1]), P([1, 1]))
    with pytest.raises(ZeroDivisionError):
        exact_div(P([1]), P())


def test_scalar_ops():
    assert P([1, 2]).scale(F(1, 2)) == P([F(1, 2), 1])
    assert 3 * P([1, 1]) == P([3, 3])
    assert P([2, 4]) / 2 == P([1, 2])


def test_derivative_examples():
    assert derivative(P([-2, 0, 1])) == P([0, 2])
    assert derivative(P([7])) == P()
    assert derivative(Q2L) == P([-4, 7])


def test_compose_affine_examples():
    assert compose_affine(P([0, 0, 1]), 1, -1) == P([1, -2, 1])
    assert compose_affine(P([-2, 0, 4]), F(1, 2), 0) == P([-2, 0, 1])
    assert compose_affine(P([0, 1]), -3, 0) == P([0, -3])


def test_evaluate_examples():
    assert evaluate(P([-1, 2]), F(1, 2)) == 0
    assert evaluate(P([1, 0, 1]), I).is_zero()
    assert evaluate(P([1, -2]), F(1, 2)) == 0
    assert evaluate(P([1, 1]), ComplexRational(1, 1)) == ComplexRational(2, 1)


def test_complex_arithmetic():
    z = ComplexRational(F(1, 2), -3)
    assert z * (1 / z) == ComplexRational(1, 0)
    assert I * I == ComplexRational(-1, 0)


def test_wire_round_trip():
    p = P([1, -2])
    assert p.to_wire() == ["1/1", "-2/1"]
    assert P.from_wire(p.to_wire()) == p
    q = P([F(-3, 7), 0, F(22, 9)])
    assert P.from_wire(q.to_wire()) == q
    assert P.from_wire([]) == P()


def test_double_factorial():
    assert [double_factorial(m) for m in (-1, 0, 1, 2, 5, 6)] == [1, 1, 1, 2, 15, 48]


# -- Sturm counting ------------------------------------------------------------------


def test_sturm_examples():
    assert sturm_count(P([1, 0, 1]), -10, 10) == 0
    assert sturm_count(Q2L, 0, 1) == 2
    assert sturm_count(P([1, -2]), 0, 1) == 1


def test_sturm_rejects_endpoint_roots():
    with pytest.raises(ValueError):
        sturm_count(P([1, -2]), F(1, 2), 1)
    with pytest.raises(ValueError):
        sturm_count(P([1, -2]), 1, 0)
    with pytest.raises(ValueError):
        sturm_count(P(), 0, 1)


def test_sturm_counts_distinct_roots_of_non_squarefree():
    p = P([-1, 1]) ** 3 * P([2, 1])
    assert sturm_count(p, -5, 5) == 2
    assert count_roots_open(p, -5, 5) == 4


def test_count_roots_open_deflates_endpoints():
    p = P([-1, 0, 1]) * P([0, 1])  # roots -1, 0, 1
    assert count_roots_open(p, -1, 1) == 1
    assert count_roots_open(p, 0, 2) == 1


def test_cauchy_bound_strict():
    assert cauchy_bound(P([-2, 0, 1])) == 3
    b = cauchy_bound(P([-6, 11, -6, 1]))
    assert all(r < b for r in (1, 2, 3))


def test_real_rooted_examples():
    assert not is_real_rooted(P([1, 0, 1]))
    assert is_real_rooted(P([-2, 0, 1]))
    assert is_real_rooted(P([-1, 0, 1]) ** 2)


def test_zero_polynomial_is_vacuously_real_rooted():
    assert real_rootedness(P()) == "vacuous"
    assert is_real_rooted(P())
    assert real_rootedness(P([3])) == "real-rooted"


def test_isolation_examples():
    ivs = isolate_real_roots(P([1, -2]))
    assert len(ivs) == 1 and ivs[0].contains(F(1, 2))
    assert isolate_real_roots(P([1, 0, 1])) == []
    lo_iv, hi_iv = isolate_real_roots(Q2L)
    # roots (4 -+ sqrt 2)/7: refine until each interval sits on its side of 1/2 within (0, 1)
    from coeffpolys.exactpoly import refine

    while not (0 <= lo_iv.lo and lo_iv.hi <= F(1, 2)):
        lo_iv = refine(Q2L, lo_iv)
    while not (F(1, 2) <= hi_iv.lo and hi_iv.hi <= 1):
        hi_iv = refine(Q2L, hi_iv)
    assert sturm_count(Q2L, lo_iv.lo, lo_iv.hi) == 1
    assert sturm_count(Q2L, hi_iv.lo, hi_iv.hi) == 1


def test_isolation_reports_multiplicity():
    p = P([-1, 1]) ** 2 * P([3, 1])
    ivs = isolate_real_roots(p)
    assert [iv.multiplicity_claim for iv in ivs] == [1, 2]
    assert ivs[0].contains(-3) and ivs[1].contains(1)


def test_exact_rational_roots_are_strictly_inside():
    p = P.from_roots([0, F(1, 2), 1, 3])
    ivs = isolate_real_roots(p)
    for iv, r in zip(ivs, [0, F(1, 2), 1, 3]):
        assert iv.contains(r)


def test_isolating_interval_invariants():
    with pytest.raises(ValueError):
        IsolatingInterval(F(1), F(0))
    with pytest.raises(ValueError):
        IsolatingInterval(F(0), F(1), 0)


def test_gcd_and_squarefree():
    a = P.from_roots([1, 2, 2])
    b = P.from_roots([2, 5])
    assert poly_gcd(a, b) == P.from_roots([2])
    dec = squarefree_decomposition(P.from_roots([1, 2, 2, 3, 3, 3]))
    assert dec == [(P.from_roots([1]), 1), (P.from_roots([2]), 2), (P.from_roots([3]), 3)]


def test_sturm_chain_on_wilkinson_like():
    p = P.from_roots(range(1, 16))
    ch = SturmChain(p)
    assert ch.count(F(0), F(16)) == 15
    assert ch.count(F(1, 2), F(15, 2)) == 7


# -- properties -----------------------------------------------------------------

fractions = st.fractions(min_value=-20, max_value=20, max_denominator=50)
polys = st.lists(fractions, min_size=0, max_size=7).map(P)
nonzero_polys = polys.filter(lambda p: bool(p))


@given(nonzero_polys, nonzero_polys)
def test_degree_is_additive(a, b):
    assert (a * b).degree == a.degree + b.degree


@given(polys, polys)
def test_leibniz_rule(a, b):
    assert (a * b).derivative() == a.derivative() * b + a * b.derivative()


@given(polys, fractions.filter(lambda a: a != 0), fractions)
def test_compose_affine_inverse(p, a, b):
    assert compose_affine(compose_affine(p, a, b), 1 / a, -b / a) == p


@given(polys, nonzero_polys)
def test_divmod_identity(a, b):
    q, r = divmod(a, b)
    assert q * b + r == a
    assert r.degree < b.degree


@settings(max_examples=60, deadline=None)
@given(st.sets(fractions, min_size=1, max_size=8), fractions)
def test_sturm_matches_constructed_root_count(roots, lead):
    if lead == 0:
        lead = F(1)
    p = P.from_roots(sorted(roots)) * lead
    b = cauchy_bound(p)
    assert sturm_count(p, -b, b) == len(roots)
    lo = F(-1, 3) + F(1, 1000003)  # not one of the sampled roots (denominators <= 50)
    hi = F(7, 3) + F(1, 1000003)
    expected = sum(1 for r in roots if lo < r < hi)
    assert sturm_count(p, lo, hi) == expected


@settings(max_examples=60, deadline=None)
@given(st.lists(fractions, min_size=1, max_size=8))
def test_products_of_real_linear_factors_are_real_rooted(roots):
    assert is_real_rooted(P.from_roots(roots))


@settings(max_examples=60, deadline=None)
@given(st.lists(fractions, max_size=6), st.fractions(min_value=F(1, 50), max_value=20, max_denominator=50))
def test_irreducible_quadratic_breaks_real_rootedness(roots, c):
    assert not is_real_rooted(P.from_roots(roots) * P([c, 0, 1]))


@settings(max_examples=40, deadline=None)
@given(st.sets(fractions, min_size=1, max_size=8))
def test_isolation_covers_every_root_once(roots):
    p = P.from_roots(roots)
    ivs = isolate_real_roots(p)
    assert len(ivs) == len(roots)
    for a, b in zip(ivs, ivs[1:]):
        assert a.hi <= b.lo
    for r, iv in zip(sorted(roots), ivs):
        assert iv.contains(r)
