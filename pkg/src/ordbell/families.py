"""Special polynomial families built from their exponential generating functions.

Every family is produced the same way: build the scalar "denominator" EGF,
invert or power it, and multiply by the exponential factor ``e^{xt}`` (or the
degenerate exponential ``e_λ^x(t) = (1 + λt)^{x/λ}``).  Per-family recurrences
are deliberately absent; the tests use them as independent oracles.

Euler numbers follow the convention ``E_n = E_n(0)`` (rationals), not the
integer secant numbers.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache

from .core import (
    LAMBDA,
    EgfSeries,
    LambdaPoly,
    Scalar,
    UsageError,
    XPoly,
    check_degree,
    format_rational,
    get_max_degree,
    is_symbolic,
    series_inv,
    series_mul,
    series_pow,
)

__all__ = [
    "Kind",
    "FamilyId",
    "parse_lambda",
    "format_lambda",
    "bernoulli_poly",
    "euler_poly",
    "genocchi_poly",
    "ordered_bell_poly",
    "degenerate_ordered_bell_poly",
    "falling_factorial_lambda",
    "monomial",
    "stirling2",
    "stirling2_row",
    "harmonic",
    "number_table",
    "degenerate_exp_series",
    "degenerate_exp_x_series",
]


class Kind(str, Enum):
    BERNOULLI = "bernoulli"
    EULER = "euler"
    GENOCCHI = "genocchi"
    ORDERED_BELL = "ordered-bell"
    DEGENERATE_ORDERED_BELL = "degenerate-ordered-bell"
    FALLING_FACTORIAL = "falling-factorial"
    MONOMIAL = "monomial"


_LAMBDA_KINDS = (Kind.DEGENERATE_ORDERED_BELL, Kind.FALLING_FACTORIAL)


def parse_lambda(text):
    """``"sym"`` gives the formal ``λ``; ``None`` stays ``None``; otherwise a rational."""
    if text is None or isinstance(text, LambdaPoly):
        return text
    if isinstance(text, str) and text.strip().lower() in ("sym", "symbolic", "λ", "lambda"):
        return LAMBDA
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"cannot parse λ value {text!r}") from exc


def format_lambda(lam) -> str | None:
    if lam is None:
        return None
    if is_symbolic(lam):
        return "sym"
    return format_rational(Fraction(lam))


@dataclass(frozen=True)
class FamilyId:
    """Which family, its order ``r`` and its λ-mode.

    ``lam`` is ``None`` for λ-free families, :data:`~ordbell.core.LAMBDA` for
    a symbolic parameter, or a nonzero ``Fraction``.
    """

    kind: Kind
    order: int = 1
    lam: Scalar | None = None

    def __post_init__(self):
        object.__setattr__(self, "kind", Kind(self.kind))
        if self.order < 0:
            raise UsageError("family order must be nonnegative")
        lam = self.lam
        if lam is not None and not is_symbolic(lam):
            lam = Fraction(lam)
            object.__setattr__(self, "lam", lam)
        if self.kind in _LAMBDA_KINDS:
            if lam is None:
                raise UsageError(f"{self.kind.value} needs a λ mode (symbolic or a nonzero rational)")
            if not is_symbolic(lam) and lam == 0:
                raise UsageError(f"{self.kind.value} needs λ ≠ 0; use the λ-free family instead")
        elif lam is not None:
            raise UsageError(f"{self.kind.value} does not take a λ parameter")
        if self.kind not in (Kind.ORDERED_BELL, Kind.DEGENERATE_ORDERED_BELL) and self.order != 1:
            raise UsageError(f"{self.kind.value} has no order parameter")

    def poly(self, n: int) -> XPoly:
        k = self.kind
        if k == Kind.BERNOULLI:
            return bernoulli_poly(n)
        if k == Kind.EULER:
            return euler_poly(n)
        if k == Kind.GENOCCHI:
            return genocchi_poly(n)
        if k == Kind.ORDERED_BELL:
            return ordered_bell_poly(n, self.order)
        if k == Kind.DEGENERATE_ORDERED_BELL:
            return degenerate_ordered_bell_poly(n, self.order, self.lam)
        if k == Kind.FALLING_FACTORIAL:
            return falling_factorial_lambda(n, self.lam)
        return monomial(n)

    def number(self, n: int) -> Scalar:
        return self.poly(n)(Fraction(0))

    def to_json(self) -> dict:
        return {"kind": self.kind.value, "order": self.order}


# --------------------------------------------------------------------------
# generating-function engine
# --------------------------------------------------------------------------


def _bucket(n: int) -> int:
    # tables are memoised in blocks so that asking for n, n+1, ... reuses work
    return min(max(16, -(-n // 16) * 16), max(n, get_max_degree()))


def _ff_lambda_values(n_max: int, base, lam) -> list:
    """``(base)_{n,λ}`` for n = 0..n_max; ``base`` is a scalar or XPoly."""
    out = [XPoly.const(1) if isinstance(base, XPoly) else Fraction(1)]
    for n in range(1, n_max + 1):
        out.append(out[-1] * (base - (n - 1) * lam))
    return out


def degenerate_exp_series(order: int, lam) -> EgfSeries:
    """``e_λ(t) = (1 + λt)^{1/λ}``, coefficients ``(1)_{n,λ}``."""
    return EgfSeries(_ff_lambda_values(order, Fraction(1), lam))


def degenerate_exp_x_series(order: int, lam) -> EgfSeries:
    """``e_λ^x(t)``, coefficients ``(x)_{n,λ}``."""
    return EgfSeries(_ff_lambda_values(order, XPoly.x(), lam))


@lru_cache(maxsize=None)
def _scalar_egf(kind: Kind, order: int, lam, N: int) -> EgfSeries:
    if kind == Kind.BERNOULLI:
        # t/(e^t - 1) is the inverse of (e^t - 1)/t = sum t^n/(n+1)!
        return series_inv(EgfSeries.from_function(N, lambda n: Fraction(1, n + 1)))
    if kind in (Kind.EULER, Kind.GENOCCHI):
        euler = series_inv(EgfSeries.from_function(N, lambda n: 1 if n == 0 else Fraction(1, 2)))
        if kind == Kind.EULER:
            return euler
        return series_mul(EgfSeries.t(N), euler)
    if kind == Kind.ORDERED_BELL:
        denom = 2 - EgfSeries.exp(N)
        return series_pow(denom, -order)
    if kind == Kind.DEGENERATE_ORDERED_BELL:
        denom = 2 - degenerate_exp_series(N, lam)
        return series_pow(denom, -order)
    raise UsageError(f"no scalar EGF for {kind}")


@lru_cache(maxsize=None)
def _poly_table(kind: Kind, order: int, lam, N: int) -> tuple:
    numbers = _scalar_egf(kind, order, lam, N)
    if kind == Kind.DEGENERATE_ORDERED_BELL:
        expo = degenerate_exp_x_series(N, lam)
    else:
        expo = EgfSeries.exp(N, XPoly.x())
    numbers = EgfSeries(XPoly.const(c) for c in numbers.coeffs)
    return series_mul(numbers, expo).coeffs


def _table_poly(kind: Kind, n: int, order: int = 1, lam=None) -> XPoly:
    check_degree(n)
    return _poly_table(kind, order, lam, _bucket(n))[n]


def bernoulli_poly(n: int) -> XPoly:
    """``B_n(x)`` from ``t e^{xt} / (e^t - 1)``."""
    return _table_poly(Kind.BERNOULLI, n)


def euler_poly(n: int) -> XPoly:
    """``E_n(x)`` from ``2 e^{xt} / (e^t + 1)``."""
    return _table_poly(Kind.EULER, n)


def genocchi_poly(n: int) -> XPoly:
    """``G_n(x)`` from ``2t e^{xt} / (e^t + 1)``; ``G_0 = 0`` and ``deg G_n = n - 1``."""
    return _table_poly(Kind.GENOCCHI, n)


def ordered_bell_poly(n: int, r: int = 1) -> XPoly:
    """``b_n^{(r)}(x)`` from ``(2 - e^t)^{-r} e^{xt}``."""
    if r < 0:
        raise UsageError("order r must be nonnegative")
    return _table_poly(Kind.ORDERED_BELL, n, r)


def _norm_lambda(lam):
    if lam is None:
        raise UsageError("a degenerate family needs a λ mode")
    if is_symbolic(lam):
        return lam
    lam = Fraction(lam)
    if not lam:
        raise UsageError("λ must be nonzero; take the λ-free family for λ = 0")
    return lam


def degenerate_ordered_bell_poly(n: int, r: int = 1, lam=LAMBDA) -> XPoly:
    """``b_{n,λ}^{(r)}(x)`` from ``(2 - e_λ(t))^{-r} e_λ^x(t)``."""
    if r < 0:
        raise UsageError("order r must be nonnegative")
    return _table_poly(Kind.DEGENERATE_ORDERED_BELL, n, r, _norm_lambda(lam))


def falling_factorial_lambda(n: int, lam=LAMBDA) -> XPoly:
    """``(x)_{n,λ} = x (x - λ) ... (x - (n-1)λ)``.

    ``lam`` of ``None`` or ``0`` gives ``x**n``.
    """
    check_degree(n)
    if lam is None:
        lam = Fraction(0)
    elif not is_symbolic(lam):
        lam = Fraction(lam)
    return _ff_lambda_values(n, XPoly.x(), lam)[n]


def monomial(n: int) -> XPoly:
    check_degree(n)
    return XPoly.monomial(n)


# --------------------------------------------------------------------------
# numbers
# --------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _stirling2_table(N: int) -> tuple:
    # column k is (e^t - 1)^k / k!
    base = EgfSeries.exp(N) - 1
    power = EgfSeries.one(N)
    cols = []
    fact = 1
    for k in range(N + 1):
        if k:
            power = series_mul(power, base)
            fact *= k
        cols.append(tuple(c / fact for c in power.coeffs))
    return tuple(cols)


def stirling2(n: int, k: int) -> Fraction:
    """Stirling number of the second kind, read off ``(e^t - 1)^k / k!``."""
    if n < 0 or k < 0:
        raise UsageError("Stirling indices must be nonnegative")
    if k > n:
        return Fraction(0)
    check_degree(n)
    return _stirling2_table(_bucket(n))[k][n]


def stirling2_row(n: int) -> list[Fraction]:
    return [stirling2(n, k) for k in range(n + 1)]


def harmonic(n: int) -> Fraction:
    """``H_n = 1 + 1/2 + ... + 1/n``."""
    if n < 1:
        raise UsageError("harmonic numbers need n >= 1")
    return sum((Fraction(1, j) for j in range(1, n + 1)), Fraction(0))


def number_table(family: FamilyId, count: int) -> list[Scalar]:
    """Values ``p_n(0)`` for n = 0..count-1."""
    if count < 0:
        raise UsageError("count must be nonnegative")
    if count:
        check_degree(count - 1)
    return [family.number(n) for n in range(count)]
