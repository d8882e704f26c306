from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ordbell.core import (
    LAMBDA,
    DivisibilityError,
    EgfSeries,
    LambdaPoly,
    SingularSeriesError,
    UsageError,
    XPoly,
    format_rational,
    get_max_degree,
    lambda_divide,
    series_compose,
    series_inv,
    series_mul,
    series_pow,
    series_revert,
    set_max_degree,
    specialize,
)

F = Fraction
big_rationals = st.builds(Fraction, st.integers(-(10**6), 10**6), st.integers(1, 10**6))
xpolys = st.lists(big_rationals, max_size=9).map(XPoly)
lpolys = st.lists(st.builds(Fraction, st.integers(-50, 50), st.integers(1, 50)), max_size=4).map(
    lambda c: LambdaPoly(c) * 1
)
sym_xpolys = st.lists(lpolys, max_size=5).map(XPoly)


# --- rationals and canonical forms ------------------------------------------


def test_format_rational():
    assert format_rational(F(3, 1)) == "3"
    assert format_rational(F(-6, 4)) == "-3/2"
    assert format_rational(F(0)) == "0"


def test_lambda_poly_canonical():
    assert LambdaPoly([1, 2, 0, 0]).coeffs == (1, 2)
    assert LambdaPoly([]).coeffs == ()
    assert LAMBDA - LAMBDA == 0
    assert isinstance(LAMBDA - LAMBDA + 3, Fraction)
    assert str(3 - LAMBDA) == "3 - λ"
    assert str(2 * LAMBDA**2) == "2*λ^2"


def test_xpoly_canonical_and_str():
    assert XPoly([1, 0, 0]).coeffs == (1,)
    assert XPoly().degree == -1
    assert str(XPoly([F(1, 6), -1, 1])) == "1/6 - x + x^2"
    assert str(XPoly([3 - LAMBDA, 2 - LAMBDA, 1])) == "(3 - λ) + (2 - λ)*x + x^2"


# --- ring axioms ---------------------------------------------------------------


@settings(max_examples=1000)
@given(xpolys, xpolys, xpolys)
def test_xpoly_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a
    assert a * b == b * a
    assert a - a == XPoly()


@settings(max_examples=300)
@given(sym_xpolys, sym_xpolys, sym_xpolys)
def test_symbolic_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a


@settings(max_examples=200)
@given(sym_xpolys, sym_xpolys, st.fractions(max_denominator=20))
def test_specialize_is_a_ring_map(a, b, v):
    assert specialize(a * b, v) == specialize(a, v) * specialize(b, v)
    assert specialize(a + b, v) == specialize(a, v) + specialize(b, v)


@settings(max_examples=200)
@given(xpolys, st.fractions(max_denominator=30), st.fractions(max_denominator=30))
def test_evaluation_and_shift(p, a, y):
    assert p.shift(a)(y) == p(a + y)


# --- series --------------------------------------------------------------------


def test_exp_times_exp():
    e = EgfSeries.exp(10)
    assert series_mul(e, e).coeffs == tuple(F(2) ** n for n in range(11))


def test_ordered_bell_denominator_cancels():
    N = 10
    denom = 2 - EgfSeries.exp(N)
    ob = series_inv(denom)
    assert series_mul(denom, ob) == EgfSeries.one(N)
    assert list(ob.coeffs[:8]) == [1, 1, 3, 13, 75, 541, 4683, 47293]


def test_bernoulli_generating_pair_is_unit():
    N = 12
    a = EgfSeries.from_function(N, lambda n: F(1, n + 1))  # (e^t - 1)/t
    assert series_mul(a, series_inv(a)) == EgfSeries.one(N)


def test_inverse_of_exp():
    assert series_inv(EgfSeries.exp(9)).coeffs == tuple(F((-1) ** n) for n in range(10))


def test_degenerate_inverse_symbolic():
    from ordbell.families import degenerate_exp_series

    inv = series_inv(2 - degenerate_exp_series(6, LAMBDA))
    assert inv.coeffs[2] == 3 - LAMBDA


def test_pow():
    N = 8
    denom = 2 - EgfSeries.exp(N)
    assert series_pow(denom, 0) == EgfSeries.one(N)
    assert series_pow(denom, -1).coeffs[4] == 75
    assert series_mul(series_pow(denom, -2), series_pow(denom, 2)) == EgfSeries.one(N)


def test_singular_inverse():
    with pytest.raises(SingularSeriesError):
        series_inv(EgfSeries.t(5))
    with pytest.raises(SingularSeriesError):
        series_pow(EgfSeries.t(5), -1)


def test_order_mismatch():
    with pytest.raises(UsageError):
        series_mul(EgfSeries.one(3), EgfSeries.one(4))


def test_coefficient_past_order_is_an_error():
    with pytest.raises(UsageError):
        EgfSeries.one(3).coeff(4)


def test_compose_identity_and_degenerate_exponential():
    N = 9
    a = EgfSeries.from_function(N, lambda n: F(n * n + 1, n + 2))
    assert series_compose(a, EgfSeries.t(N)) == a
    lam = F(1, 3)
    # log(1 + λt)/λ has t^n/n! coefficient (-λ)^{n-1}(n-1)!
    log_series = EgfSeries.from_function(N, lambda n: (-lam) ** (n - 1) * factorial(n - 1) if n else 0)
    got = series_compose(EgfSeries.exp(N), log_series)
    ff = [F(1)]
    for n in range(1, N + 1):
        ff.append(ff[-1] * (1 - (n - 1) * lam))
    assert list(got.coeffs) == ff


def test_compose_needs_delta():
    with pytest.raises(UsageError):
        series_compose(EgfSeries.exp(4), EgfSeries.exp(4))


def _stirling_rec(n, k):
    if n == k:
        return 1
    if k == 0 or k > n:
        return 0
    return k * _stirling_rec(n - 1, k) + _stirling_rec(n - 1, k - 1)


def test_stirling_column_by_composition():
    N = 8
    col = series_pow(EgfSeries.exp(N) - 1, 2) / 2
    col = series_compose(col, EgfSeries.t(N))
    assert [col.coeffs[n] for n in range(N + 1)] == [_stirling_rec(n, 2) for n in range(N + 1)]


def test_revert():
    N = 10
    assert series_revert(EgfSeries.t(N)) == EgfSeries.t(N)
    f = EgfSeries.exp(N) - 1
    g = series_revert(f)
    assert all(g.coeffs[n] / factorial(n) == F((-1) ** (n - 1), n) for n in range(1, N + 1))
    assert series_compose(g, f) == EgfSeries.t(N)


def test_revert_symbolic_delta():
    N = 8
    f = EgfSeries.from_function(N, lambda n: LAMBDA ** (n - 1) if n else 0)
    g = series_revert(f)
    for n in range(1, N + 1):
        assert g.coeffs[n] == (-LAMBDA) ** (n - 1) * factorial(n - 1)
    assert series_compose(specialize(g, F(2, 7)), specialize(f, F(2, 7))) == EgfSeries.t(N)


@settings(max_examples=60)
@given(st.lists(st.fractions(min_value=-20, max_value=20, max_denominator=9), min_size=16, max_size=16))
def test_random_inverse_and_reversion(cs):
    a = EgfSeries([F(1)] + cs)
    assert series_mul(a, series_inv(a)) == EgfSeries.one(16)
    f = EgfSeries([F(0), F(1)] + cs[:15])
    assert series_compose(series_revert(f), f) == EgfSeries.t(16)


def test_revert_needs_linear_term():
    with pytest.raises(SingularSeriesError):
        series_revert(EgfSeries.from_function(5, lambda n: 1 if n == 2 else 0))


# --- λ division -----------------------------------------------------------------


def test_lambda_divide_examples():
    x = XPoly.x()
    assert lambda_divide(2 * LAMBDA * x + LAMBDA**2, 1) == 2 * x + LAMBDA
    assert lambda_divide(XPoly(), 3) == XPoly()
    d2 = (x + 2 * LAMBDA) ** 3 - 2 * (x + LAMBDA) ** 3 + x**3
    assert lambda_divide(d2, 2) == 6 * x + 6 * LAMBDA


def test_lambda_divide_rejects_non_multiples():
    with pytest.raises(DivisibilityError):
        lambda_divide(XPoly([LAMBDA + 1]), 1)


def test_lambda_divide_specialized():
    assert lambda_divide(F(9), 2, F(3)) == 1
    with pytest.raises(UsageError):
        lambda_divide(F(1), 1, F(0))


def test_lambda_divide_roundtrip():
    p = XPoly([LAMBDA**3, 2 * LAMBDA**2 - LAMBDA**4, LAMBDA**2])
    q = lambda_divide(p, 2)
    assert q * LAMBDA**2 == p


# --- degree guard ---------------------------------------------------------------


def test_degree_guard():
    old = get_max_degree()
    try:
        set_max_degree(5)
        with pytest.raises(UsageError):
            EgfSeries.one(6)
        with pytest.raises(UsageError):
            set_max_degree(-1)
    finally:
        set_max_degree(old)
