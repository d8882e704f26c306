"""Expansion of polynomials in ordered Bell type bases.

Targets are the monomials, the λ-falling factorials, Bernoulli polynomials,
ordered Bell polynomials ``b_k^{(r)}(x)`` and degenerate ordered Bell
polynomials ``b_{k,λ}^{(r)}(x)``.  With ``g(t) = 2 - e^t`` and
``f(t) = (e^{λt} - 1)/λ`` the family ``b_{k,λ}^{(r)}`` is Sheffer for
``(g^r, f)``, so the coefficient of ``b_{k,λ}^{(r)}`` in ``p`` is
``<f(t)^k g(t)^r | p(x)> / k!``.  That pairing can be unwound in several
equivalent ways; :func:`degenerate_forms`, :func:`order_r_forms` and
:func:`lambda_free_forms` compute every one of them separately, and
:class:`Variant` picks one for everyday use.

The λ-free bases (``f(t) = t``) use their own closed forms rather than a
λ → 0 limit, since ``f`` is not defined verbatim at ``λ = 0``.

:func:`connection_constants` is an independent route: it computes basis
change matrices from series reversion alone.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import comb, factorial

from .core import (
    LAMBDA,
    EgfSeries,
    Scalar,
    UsageError,
    XPoly,
    is_symbolic,
    lambda_divide,
    series_compose,
    series_inv,
    series_mul,
    series_pow,
    series_revert,
)
from .families import FamilyId, Kind, stirling2
from .operators import (
    _dual_series,
    delta_series,
    forward_diff,
    functional,
    g_series,
    identity_minus_delta,
    identity_minus_delta_pow,
)

__all__ = [
    "Variant",
    "Representation",
    "represent",
    "represent_bernoulli",
    "represent_ordered_bell",
    "represent_degenerate_ordered_bell",
    "represent_higher_order",
    "degenerate_forms",
    "order_r_forms",
    "lambda_free_forms",
    "binomial_sum_readings",
    "connection_constants",
    "sheffer_pair",
    "reconstruct",
]

ZERO = Fraction(0)


class Variant(str, Enum):
    FUNCTIONAL = "functional"
    ITERATED_DIFFERENCE = "iterated-difference"
    BINOMIAL_SUM = "binomial-sum"
    STIRLING_DERIVATIVE = "stirling-derivative"


DEFAULT_VARIANT = Variant.STIRLING_DERIVATIVE


@dataclass(frozen=True)
class Representation:
    """Coefficients ``a_0..a_n`` of a polynomial in the basis ``basis``."""

    basis: FamilyId
    coeffs: tuple

    def __len__(self) -> int:
        return len(self.coeffs)

    def reconstruct(self) -> XPoly:
        return reconstruct(self)


def reconstruct(rep: Representation) -> XPoly:
    """``sum_k a_k * basis_k(x)``."""
    acc = XPoly()
    for k, a in enumerate(rep.coeffs):
        if a:
            acc = acc + rep.basis.poly(k) * a
    return acc


# --------------------------------------------------------------------------
# helpers
# --------------------------------------------------------------------------


def _deg(p: XPoly) -> int:
    return max(p.degree, 0)


def _require_lambda_free(p: XPoly) -> None:
    if p.symbolic:
        raise UsageError("this basis is λ-free but the polynomial has λ-dependent coefficients")


def _norm_lam(p: XPoly, lam):
    if lam is None:
        return None
    if is_symbolic(lam):
        return LAMBDA
    lam = Fraction(lam)
    if not lam:
        raise UsageError("λ = 0: use represent_ordered_bell / the λ-free (ordered Bell) mode instead")
    if p.symbolic:
        raise UsageError("λ is specialised but the polynomial has symbolic-λ coefficients")
    return lam


def _alt(c, sign_exp: int):
    return -c if sign_exp % 2 else c


def _derivatives(p: XPoly, n: int) -> list[XPoly]:
    out = [p]
    for _ in range(n):
        out.append(out[-1].derivative())
    return out


def _lambda_differences(q: XPoly, n: int, lam) -> list[XPoly]:
    """``Δ_λ^k q`` for k = 0..n, built incrementally."""
    out = [q]
    for _ in range(n):
        out.append(forward_diff(out[-1], lam, 1))
    return out


# --------------------------------------------------------------------------
# λ-free bases
# --------------------------------------------------------------------------


def represent_bernoulli(p: XPoly) -> Representation:
    """Bernoulli expansion: ``a_0 = int_0^1 p``, ``a_k = (p^{(k-1)}(1) - p^{(k-1)}(0)) / k!``."""
    _require_lambda_free(p)
    n = _deg(p)
    ders = _derivatives(p, n)
    coeffs = [p.definite_integral(ZERO, Fraction(1))]
    for k in range(1, n + 1):
        d = ders[k - 1]
        coeffs.append((d(Fraction(1)) - d(ZERO)) / factorial(k))
    return Representation(FamilyId(Kind.BERNOULLI), tuple(coeffs))


def represent_ordered_bell(p: XPoly) -> Representation:
    """Ordered Bell expansion: ``a_k = (2 p^{(k)}(0) - p^{(k)}(1)) / k!``."""
    _require_lambda_free(p)
    n = _deg(p)
    coeffs = []
    for k, d in enumerate(_derivatives(p, n)):
        coeffs.append((2 * d(ZERO) - d(Fraction(1))) / factorial(k))
    return Representation(FamilyId(Kind.ORDERED_BELL, 1), tuple(coeffs))


def lambda_free_forms(p: XPoly, r: int) -> dict[str, tuple]:
    """All closed forms for the coefficients of ``p`` in ``b_k^{(r)}(x)`` (λ-free).

    The two ``factored`` forms use ``(I - Δ)^{r-1}`` and exist only for r >= 1.
    """
    _require_lambda_free(p)
    if r < 0:
        raise UsageError("r must be nonnegative")
    n = _deg(p)
    ders = _derivatives(p, n)
    forms: dict[str, list] = {
        "functional": [],
        "binomial-sum": [],
        "iterated-difference": [],
        "delta-powers": [],
    }
    if r >= 1:
        forms["factored"] = []
        forms["factored-binomial"] = []
    for k in range(n + 1):
        fk = factorial(k)
        d = ders[k]
        forms["functional"].append(functional(_dual_series(n, k, r, None), p) / fk)
        forms["binomial-sum"].append(
            2**r * sum((comb(r, j) * Fraction(-1, 2) ** j * d(Fraction(j)) for j in range(r + 1)), ZERO) / fk
        )
        forms["iterated-difference"].append(identity_minus_delta_pow(d, r)(ZERO) / fk)
        deltas = [d]
        for _ in range(r):
            deltas.append(deltas[-1].shift(1) - deltas[-1])
        forms["delta-powers"].append(
            sum((_alt(comb(r, j) * deltas[j](ZERO), j) for j in range(r + 1)), ZERO) / fk
        )
        if r >= 1:
            forms["factored"].append(identity_minus_delta_pow(identity_minus_delta(d), r - 1)(ZERO) / fk)
            acc = ZERO
            for j in range(r):
                term = 2 * deltas[j](ZERO) - deltas[j](Fraction(1))
                acc += _alt(comb(r - 1, j) * term, j)
            forms["factored-binomial"].append(acc / fk)
    return {name: tuple(v) for name, v in forms.items()}


def _lambda_free_single(p: XPoly, r: int, variant: Variant) -> tuple:
    # λ-free meaning of each variant: binomial-sum expands (I - Δ)^r into
    # powers of Δ, stirling-derivative is the derivative sum at x = 0..r
    n = _deg(p)
    ders = _derivatives(p, n)
    out = []
    for k in range(n + 1):
        d = ders[k]
        fk = factorial(k)
        if variant == Variant.FUNCTIONAL:
            out.append(functional(_dual_series(n, k, r, None), p) / fk)
        elif variant == Variant.ITERATED_DIFFERENCE:
            out.append(identity_minus_delta_pow(d, r)(ZERO) / fk)
        elif variant == Variant.BINOMIAL_SUM:
            deltas = [d]
            for _ in range(r):
                deltas.append(deltas[-1].shift(1) - deltas[-1])
            out.append(sum((_alt(comb(r, j) * deltas[j](ZERO), j) for j in range(r + 1)), ZERO) / fk)
        else:
            s = sum((comb(r, j) * Fraction(-1, 2) ** j * d(Fraction(j)) for j in range(r + 1)), ZERO)
            out.append(2**r * s / fk)
    return tuple(out)


# --------------------------------------------------------------------------
# degenerate bases
# --------------------------------------------------------------------------


def degenerate_forms(p: XPoly, lam=LAMBDA) -> dict[str, tuple]:
    """Every closed form for the coefficients of ``p`` in ``b_{k,λ}(x)``.

    Keys: ``functional`` (``<f^k | h>/k!`` with ``h = 2p(x) - p(x+1)``),
    ``exp-pairing`` (``<(e^{λt}-1)^k | h> / (k! λ^k)``),
    ``iterated-difference``, ``binomial-sum`` and ``stirling-derivative``.
    """
    lam = _norm_lam(p, lam)
    if lam is None:
        raise UsageError("degenerate forms need a λ mode")
    n = _deg(p)
    h = identity_minus_delta(p)
    diffs = _lambda_differences(p, n, lam)
    ders = _derivatives(p, n)
    one = Fraction(1)
    expm1 = EgfSeries.exp(n, lam) - 1
    forms: dict[str, list] = {k: [] for k in ("functional", "exp-pairing", "iterated-difference", "binomial-sum", "stirling-derivative")}
    for k in range(n + 1):
        fk = factorial(k)
        forms["functional"].append(functional(series_pow(delta_series(n, lam), k), h) / fk)
        forms["exp-pairing"].append(lambda_divide(functional(series_pow(expm1, k), h), k, lam) / fk)
        dk = diffs[k]
        forms["iterated-difference"].append(lambda_divide(2 * dk(ZERO) - dk(one), k, lam) / fk)
        forms["binomial-sum"].append(_binomial_order_one(p, k, lam, "j"))
        acc: Scalar = ZERO
        for l in range(k, n + 1):
            d = ders[l]
            acc = acc + stirling2(l, k) * lam ** (l - k) * (2 * d(ZERO) - d(one)) / factorial(l)
        forms["stirling-derivative"].append(acc)
    return {name: tuple(v) for name, v in forms.items()}


def _binomial_order_one(p: XPoly, k: int, lam, reading: str) -> Scalar:
    acc: Scalar = ZERO
    for j in range(k + 1):
        shift_idx = j if reading == "j" else k
        term = 2 * p(j * lam) - p(1 + shift_idx * lam)
        acc = acc + _alt(comb(k, j) * term, k - j)
    return lambda_divide(acc, k, lam) / factorial(k)


def binomial_sum_readings(p: XPoly, lam=LAMBDA) -> dict[str, tuple]:
    """The binomial-sum coefficient formula under both index readings.

    ``"j"`` evaluates ``2p(jλ) - p(1 + jλ)`` inside the sum; ``"k"`` uses
    ``p(1 + kλ)`` for the second term.  Symbolic ``λ`` can make the ``k``
    reading fail exact division; such coefficients are returned as ``None``.
    """
    lam = _norm_lam(p, lam)
    n = _deg(p)
    out = {}
    for reading in ("j", "k"):
        vals = []
        for k in range(n + 1):
            try:
                vals.append(_binomial_order_one(p, k, lam, reading))
            except ArithmeticError:
                vals.append(None)
        out[reading] = tuple(vals)
    return out


def represent_degenerate_ordered_bell(p: XPoly, lam=LAMBDA, variant: Variant | str = DEFAULT_VARIANT) -> Representation:
    """Coefficients of ``p`` in ``b_{k,λ}(x)`` by the chosen formula."""
    variant = Variant(variant)
    if lam is not None and not is_symbolic(lam) and Fraction(lam) == 0:
        raise UsageError("λ = 0: use represent_ordered_bell for the λ-free ordered Bell basis")
    lam = _norm_lam(p, lam)
    if lam is None:
        raise UsageError("a degenerate basis needs a λ mode; use represent_ordered_bell without λ")
    n = _deg(p)
    one = Fraction(1)
    coeffs = []
    if variant == Variant.FUNCTIONAL:
        h = identity_minus_delta(p)
        coeffs = [functional(series_pow(delta_series(n, lam), k), h) / factorial(k) for k in range(n + 1)]
    elif variant == Variant.ITERATED_DIFFERENCE:
        for k, dk in enumerate(_lambda_differences(p, n, lam)):
            coeffs.append(lambda_divide(2 * dk(ZERO) - dk(one), k, lam) / factorial(k))
    elif variant == Variant.BINOMIAL_SUM:
        coeffs = [_binomial_order_one(p, k, lam, "j") for k in range(n + 1)]
    else:
        h_ders = [2 * d(ZERO) - d(one) for d in _derivatives(p, n)]
        for k in range(n + 1):
            acc: Scalar = ZERO
            for l in range(k, n + 1):
                if h_ders[l]:
                    acc = acc + stirling2(l, k) * lam ** (l - k) * h_ders[l] / factorial(l)
            coeffs.append(acc)
    return Representation(FamilyId(Kind.DEGENERATE_ORDERED_BELL, 1, lam), tuple(coeffs))


def order_r_forms(p: XPoly, r: int, lam=LAMBDA) -> dict[str, tuple]:
    """Every closed form for the coefficients of ``p`` in ``b_{k,λ}^{(r)}(x)``.

    Keys: ``functional``, ``iterated-difference`` (``(I-Δ)^r Δ_λ^k p``),
    ``factored`` (``(I-Δ)^{r-1} Δ_λ^k (2p(x) - p(x+1))``, r >= 1 only),
    ``binomial-sum`` and ``stirling-derivative``.
    """
    if r < 0:
        raise UsageError("r must be nonnegative")
    lam = _norm_lam(p, lam)
    if lam is None:
        raise UsageError("degenerate forms need a λ mode; see lambda_free_forms")
    n = _deg(p)
    diffs = _lambda_differences(p, n, lam)
    ders = _derivatives(p, n)
    names = ["functional", "iterated-difference", "binomial-sum", "stirling-derivative"]
    if r >= 1:
        names.insert(2, "factored")
    forms: dict[str, list] = {k: [] for k in names}
    at = _point_values(p, lam)
    for k in range(n + 1):
        fk = factorial(k)
        forms["functional"].append(functional(_dual_series(n, k, r, lam), p) / fk)
        dk = diffs[k]
        forms["iterated-difference"].append(lambda_divide(identity_minus_delta_pow(dk, r)(ZERO), k, lam) / fk)
        if r >= 1:
            val = identity_minus_delta_pow(identity_minus_delta(dk), r - 1)(ZERO)
            forms["factored"].append(lambda_divide(val, k, lam) / fk)
        forms["binomial-sum"].append(_binomial_order_r(at, k, r, lam))
        forms["stirling-derivative"].append(_stirling_order_r(ders, k, r, lam, n))
    return {name: tuple(v) for name, v in forms.items()}


def _point_values(p: XPoly, lam):
    """Memoised ``(j, l) -> p(j + lλ)``; the same points recur for every k."""
    values: dict[tuple[int, int], Scalar] = {}

    def at(j: int, l: int) -> Scalar:
        if (j, l) not in values:
            values[j, l] = p(j + l * lam)
        return values[j, l]

    return at


def _binomial_order_r(at, k: int, r: int, lam) -> Scalar:
    acc: Scalar = ZERO
    for l in range(k + 1):
        for j in range(r + 1):
            term = comb(k, l) * comb(r, j) * Fraction(1, 2**j) * at(j, l)
            acc = acc + _alt(term, k + j - l)
    return lambda_divide(acc, k, lam) * 2**r / factorial(k)


def _stirling_order_r(ders: list[XPoly], k: int, r: int, lam, n: int) -> Scalar:
    acc: Scalar = ZERO
    weights = [comb(r, j) * Fraction(-1, 2) ** j for j in range(r + 1)]
    for l in range(k, n + 1):
        d = ders[l]
        inner = sum((w * d(Fraction(j)) for j, w in enumerate(weights)), ZERO)
        if inner:
            acc = acc + stirling2(l, k) * lam ** (l - k) * inner / factorial(l)
    return acc * 2**r


def represent_higher_order(
    p: XPoly, r: int, lam=None, variant: Variant | str = DEFAULT_VARIANT
) -> Representation:
    """Coefficients of ``p`` in ``b_{k,λ}^{(r)}(x)``, or ``b_k^{(r)}(x)`` when ``lam`` is None.

    ``r = 0`` yields the λ-falling-factorial (or monomial) expansion.
    """
    variant = Variant(variant)
    if r < 0:
        raise UsageError("r must be nonnegative")
    if lam is None:
        _require_lambda_free(p)
        return Representation(FamilyId(Kind.ORDERED_BELL, r), _lambda_free_single(p, r, variant))
    lam = _norm_lam(p, lam)
    n = _deg(p)
    coeffs = []
    if variant == Variant.FUNCTIONAL:
        coeffs = [functional(_dual_series(n, k, r, lam), p) / factorial(k) for k in range(n + 1)]
    elif variant == Variant.ITERATED_DIFFERENCE:
        for k, dk in enumerate(_lambda_differences(p, n, lam)):
            coeffs.append(lambda_divide(identity_minus_delta_pow(dk, r)(ZERO), k, lam) / factorial(k))
    elif variant == Variant.BINOMIAL_SUM:
        at = _point_values(p, lam)
        coeffs = [_binomial_order_r(at, k, r, lam) for k in range(n + 1)]
    else:
        ders = _derivatives(p, n)
        coeffs = [_stirling_order_r(ders, k, r, lam, n) for k in range(n + 1)]
    return Representation(FamilyId(Kind.DEGENERATE_ORDERED_BELL, r, lam), tuple(coeffs))


def represent(p: XPoly, basis: FamilyId, variant: Variant | str = DEFAULT_VARIANT) -> Representation:
    """Dispatch on the target basis."""
    kind = basis.kind
    if kind == Kind.MONOMIAL:
        return Representation(basis, tuple(p.coeff(j) for j in range(_deg(p) + 1)))
    if kind == Kind.BERNOULLI:
        return represent_bernoulli(p)
    if kind == Kind.ORDERED_BELL:
        if basis.order == 1 and Variant(variant) == DEFAULT_VARIANT:
            return represent_ordered_bell(p)
        return represent_higher_order(p, basis.order, None, variant)
    if kind == Kind.DEGENERATE_ORDERED_BELL:
        if basis.order == 1:
            return represent_degenerate_ordered_bell(p, basis.lam, variant)
        return represent_higher_order(p, basis.order, basis.lam, variant)
    if kind == Kind.FALLING_FACTORIAL:
        rep = represent_higher_order(p, 0, basis.lam, variant)
        return Representation(basis, rep.coeffs)
    raise UsageError(f"{kind.value} is not offered as a target basis")


# --------------------------------------------------------------------------
# connection constants through series reversion
# --------------------------------------------------------------------------


def sheffer_pair(fam: FamilyId, order: int) -> tuple[EgfSeries, EgfSeries]:
    """``(g, f)`` with ``fam ~ (g(t), f(t))``, truncated at ``order``."""
    kind = fam.kind
    t = EgfSeries.t(order)
    if kind == Kind.MONOMIAL:
        return EgfSeries.one(order), t
    if kind == Kind.FALLING_FACTORIAL:
        return EgfSeries.one(order), delta_series(order, fam.lam)
    if kind == Kind.BERNOULLI:
        return EgfSeries.from_function(order, lambda n: Fraction(1, n + 1)), t
    if kind == Kind.EULER:
        return EgfSeries.from_function(order, lambda n: 1 if n == 0 else Fraction(1, 2)), t
    if kind == Kind.ORDERED_BELL:
        return g_series(order, fam.order), t
    if kind == Kind.DEGENERATE_ORDERED_BELL:
        return g_series(order, fam.order), delta_series(order, fam.lam)
    raise UsageError(f"{kind.value} is not a Sheffer sequence (G_0 = 0); no connection constants")


def connection_constants(source: FamilyId, target: FamilyId, n: int) -> list[list[Scalar]]:
    """Lower-triangular ``C`` with ``s_m(x) = sum_k C[m][k] r_k(x)`` for m <= n.

    For ``s ~ (g, f)`` and ``r ~ (h, l)``,
    ``C[m][k] = <h(fbar) / g(fbar) * l(fbar)^k | x^m> / k!`` where ``fbar`` is
    the compositional inverse of ``f``.
    """
    if source.lam is not None and target.lam is not None and source.lam != target.lam:
        raise UsageError("source and target use different λ modes")
    if n < 0:
        raise UsageError("n must be nonnegative")
    g, f = sheffer_pair(source, n)
    h, l = sheffer_pair(target, n)
    fbar = series_revert(f)
    ratio = series_mul(series_compose(h, fbar), series_inv(series_compose(g, fbar)))
    lbar = series_compose(l, fbar)
    rows = [[ZERO] * (n + 1) for _ in range(n + 1)]
    power = EgfSeries.one(n)
    for k in range(n + 1):
        if k:
            power = series_mul(power, lbar)
        col = series_mul(ratio, power)
        fk = factorial(k)
        for m in range(k, n + 1):
            # <F | x^m> is the m-th EGF coefficient of F
            rows[m][k] = col.coeffs[m] / fk
    return rows

