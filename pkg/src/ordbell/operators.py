"""Umbral operators acting on polynomials: shifts, differences and series actions.

A series ``f(t) = sum a_k t^k / k!`` acts on polynomials as the differential
operator ``sum (a_k / k!) D^k``; pairing ``<f(t) | p(x)>`` is that action
followed by evaluation at ``x = 0``.  Where the same operator has two
textbook forms (iterated vs. binomial sum), both are implemented and
selected with ``method`` so the test-suite can cross-check them.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .core import (
    LAMBDA,
    EgfSeries,
    Scalar,
    UsageError,
    XPoly,
    as_scalar,
    is_symbolic,
    lambda_divide,
    series_mul,
    series_pow,
)

__all__ = [
    "shift",
    "forward_diff",
    "scaled_lambda_diff",
    "identity_minus_delta",
    "identity_minus_delta_pow",
    "apply_series",
    "functional",
    "derivative",
    "definite_integral",
    "delta_series",
    "g_series",
]

_METHODS = ("iterate", "binomial")


def _check_method(method: str) -> None:
    if method not in _METHODS:
        raise UsageError(f"method must be one of {_METHODS}, got {method!r}")


def shift(p: XPoly, a) -> XPoly:
    """``p(x + a)``."""
    return p.shift(a)


def forward_diff(p: XPoly, a, n: int = 1, method: str = "iterate") -> XPoly:
    """``Δ_a^n p``, either iterating ``q(x+a) - q(x)`` or as the binomial sum."""
    _check_method(method)
    if n < 0:
        raise UsageError("difference order must be nonnegative")
    a = as_scalar(a)
    if method == "iterate":
        q = p
        for _ in range(n):
            q = q.shift(a) - q
        return q
    acc = XPoly()
    for i in range(n + 1):
        term = p.shift(i * a) * comb(n, i)
        acc = acc + term if (n - i) % 2 == 0 else acc - term
    return acc


def scaled_lambda_diff(p: XPoly, k: int, lam=LAMBDA, method: str = "iterate") -> XPoly:
    """``Δ_λ^k p / λ^k``, i.e. the action of ``((e^{λt} - 1)/λ)^k``."""
    if k < 0:
        raise UsageError("k must be nonnegative")
    if not is_symbolic(lam) and not Fraction(lam):
        raise UsageError("λ must be nonzero here; at λ = 0 this operator is D^k")
    return lambda_divide(forward_diff(p, lam, k, method), k, lam)


def identity_minus_delta(p: XPoly) -> XPoly:
    """``(I - Δ) p = 2 p(x) - p(x + 1)``."""
    return 2 * p - p.shift(1)


def identity_minus_delta_pow(p: XPoly, r: int, method: str = "iterate") -> XPoly:
    """``(I - Δ)^r p``, the action of ``(2 - e^t)^r``.

    ``binomial`` uses ``2^r sum_j C(r,j) (-1/2)^j p(x + j)``.
    """
    _check_method(method)
    if r < 0:
        raise UsageError("r must be nonnegative")
    if method == "iterate":
        q = p
        for _ in range(r):
            q = identity_minus_delta(q)
        return q
    acc = XPoly()
    for j in range(r + 1):
        acc = acc + p.shift(j) * (Fraction(-1, 2) ** j * comb(r, j))
    return acc * 2**r


def derivative(p: XPoly, l: int = 1) -> XPoly:
    return p.derivative(l)


def definite_integral(p: XPoly, a, b) -> Scalar:
    return p.definite_integral(as_scalar(a), as_scalar(b))


def apply_series(f: EgfSeries, p: XPoly) -> XPoly:
    """Action of ``f(t)`` on ``p``: ``f(t) x^n = sum_k C(n,k) a_k x^{n-k}``."""
    if p.degree > f.order:
        raise UsageError(f"series of order {f.order} cannot act on a degree-{p.degree} polynomial")
    acc = XPoly()
    d = p
    for k in range(p.degree + 1):
        ak = f.coeffs[k]
        if ak:
            acc = acc + d * (ak / factorial(k) if not isinstance(ak, XPoly) else ak)
        d = d.derivative()
    return acc


def functional(f: EgfSeries, p: XPoly) -> Scalar:
    """``<f(t) | p(x)>``: apply ``f(t)`` then evaluate at ``x = 0``."""
    return apply_series(f, p)(Fraction(0))


@lru_cache(maxsize=None)
def delta_series(order: int, lam=LAMBDA) -> EgfSeries:
    """``f(t) = (e^{λt} - 1)/λ``; ``lam`` of ``None`` gives ``f(t) = t``."""
    if lam is None:
        return EgfSeries.t(order)
    if not is_symbolic(lam):
        lam = Fraction(lam)
        if not lam:
            return EgfSeries.t(order)
    return EgfSeries.from_function(order, lambda n: lam ** (n - 1) if n else 0)


@lru_cache(maxsize=None)
def g_series(order: int, r: int = 1) -> EgfSeries:
    """``(2 - e^t)^r``."""
    return series_pow(2 - EgfSeries.exp(order), r)


@lru_cache(maxsize=None)
def _dual_series(order: int, k: int, r: int, lam) -> EgfSeries:
    """``f(t)^k g(t)^r`` (cached: the functional variant reuses it a lot)."""
    return series_mul(series_pow(delta_series(order, lam), k), g_series(order, r))
