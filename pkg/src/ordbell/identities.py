"""Registry of named polynomial identities, checked exactly on finite ranges.

Each identity is verified on two tiers:

* **theorem path** - the left side is built as a polynomial, its expansion
  coefficients are recomputed from scratch by :mod:`ordbell.represent` (every
  variant, cross-checked), the expansion is reconstructed, and the underlying
  classical identity (where there is one) is compared as a polynomial.  The
  suite's pass/fail verdict rests on this tier alone.
* **printed form** - the closed coefficient formulas as commonly displayed
  are transcribed literally and compared with the theorem-path coefficients.
  Findings (pass, mismatch with witness, or "unevaluable" when a display
  cannot be read without guessing) are reported but never fail the suite.

A witness is always ``LHS - RHS`` as a polynomial in ``x``.
"""
from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Callable, Iterable, Iterator, Sequence

from .core import LAMBDA, Scalar, UsageError, XPoly, lambda_divide
from .families import (
    FamilyId,
    Kind,
    bernoulli_poly,
    euler_poly,
    format_lambda,
    genocchi_poly,
    harmonic,
    ordered_bell_poly,
    parse_lambda,
    stirling2,
)
from .operators import forward_diff, identity_minus_delta_pow
from .represent import (
    Representation,
    _lambda_differences,
    connection_constants,
    reconstruct,
    lambda_free_forms,
    represent_bernoulli,
    represent_higher_order,
    represent_ordered_bell,
    degenerate_forms,
    order_r_forms,
)

__all__ = [
    "IdentityId",
    "Finding",
    "IdentityReport",
    "compositions",
    "composition_sum",
    "weighted_pair_sum",
    "omega",
    "build_polynomial",
    "domain",
    "verify",
    "suite_tasks",
    "run_suite",
    "suite_passed",
]

ZERO = Fraction(0)
ONE = Fraction(1)
HALF = Fraction(1, 2)
DEFAULT_LAMBDA_MODES = ("sym", "1/3", "-2/5")


class IdentityId(str, Enum):
    EQ2A = "EQ2A"
    EQ1E = "EQ1E"
    EQ7E = "EQ7E"
    NIELSEN_EE = "NIELSEN_EE"
    NIELSEN_BB = "NIELSEN_BB"
    S5A = "S5A"
    S5B = "S5B"
    S5C = "S5C"
    S5D = "S5D"
    S5E = "S5E"
    S6A = "S6A"
    S6B = "S6B"
    S6C = "S6C"
    S6D = "S6D"
    S6E = "S6E"
    MIKI_VARIANT_X0 = "MIKI_VARIANT_X0"
    FPZ_VARIANT_XHALF = "FPZ_VARIANT_XHALF"

    @classmethod
    def parse(cls, text: str) -> "IdentityId":
        try:
            return cls(text.strip().upper())
        except ValueError:
            raise UsageError(f"unknown identity {text!r}; choose from {', '.join(i.value for i in cls)}") from None


# --------------------------------------------------------------------------
# reports
# --------------------------------------------------------------------------


@dataclass
class Finding:
    """One printed-form comparison."""

    form: str
    status: str  # pass | mismatch | unevaluable
    witness: XPoly | None = None
    note: str = ""

    def to_json(self) -> dict:
        from .jsonio import poly_to_json

        return {
            "form": self.form,
            "status": self.status,
            "witness": None if self.witness is None else poly_to_json(self.witness),
            "note": self.note,
        }


@dataclass
class IdentityReport:
    id: IdentityId
    params: dict
    theorem_path: str  # pass | mismatch
    printed_form: str  # pass | mismatch | n/a
    witness: XPoly | None = None
    elapsed_ms: int = 0
    checks: list[str] = field(default_factory=list)
    failed_checks: list[str] = field(default_factory=list)
    printed_findings: list[Finding] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.theorem_path == "pass"

    def to_json(self) -> dict:
        from .jsonio import poly_to_json

        return {
            "id": self.id.value,
            "params": dict(self.params),
            "theorem_path": self.theorem_path,
            "printed_form": self.printed_form,
            "witness": None if self.witness is None else poly_to_json(self.witness),
            "elapsed_ms": self.elapsed_ms,
            "checks": list(self.checks),
            "failed_checks": list(self.failed_checks),
            "printed_findings": [f.to_json() for f in self.printed_findings],
        }


# --------------------------------------------------------------------------
# building blocks
# --------------------------------------------------------------------------


def compositions(n: int, s: int, min_part: int = 0) -> Iterator[tuple[int, ...]]:
    """All ordered ``(i_1, ..., i_s)`` with sum ``n`` and every part ``>= min_part``."""
    if s < 0 or n < 0:
        return
    if s == 0:
        if n == 0:
            yield ()
        return
    for first in range(min_part, n - min_part * (s - 1) + 1):
        for rest in compositions(n - first, s - 1, min_part):
            yield (first,) + rest


def composition_sum(term: Callable[[int], object], n: int, s: int, min_part: int = 0, one=None):
    """``sum over compositions of n into s parts of prod_j term(i_j)``.

    Every composition is visited; partial products along a shared prefix are
    reused.  An empty domain gives zero (``0 * one``).
    """
    if one is None:
        one = ONE
    zero = one * 0

    def walk(remaining: int, parts: int, prefix):
        if parts == 0:
            return prefix if remaining == 0 else zero
        acc = zero
        for i in range(min_part, remaining - min_part * (parts - 1) + 1):
            t = term(i)
            if t:
                acc = acc + walk(remaining - i, parts - 1, prefix * t)
        return acc

    if s < 0 or n < 0:
        return zero
    return walk(n, s, one)


def weighted_pair_sum(poly: Callable[[int], XPoly], n: int) -> XPoly:
    """``sum_{k=1}^{n-1} poly(k) poly(n-k) / (k (n-k))``."""
    acc = XPoly()
    for k in range(1, n):
        acc = acc + poly(k) * poly(n - k) / (k * (n - k))
    return acc


def _ob_number(i: int) -> Fraction:
    return ordered_bell_poly(i)(ZERO)


@lru_cache(maxsize=None)
def omega(l: int, s: int) -> Fraction:
    """``Ω_l = sum_a C(s,a) 2^a (-1)^{s-a} S_a(l) - S_s(l)`` where ``S_a(l)`` is
    the a-fold composition sum of ordered Bell numbers."""
    if s < 1:
        raise UsageError("Ω needs s >= 1")
    acc = ZERO
    for a in range(1, s + 1):
        acc += comb(s, a) * 2**a * (-1) ** (s - a) * composition_sum(_ob_number, l, a)
    return acc - composition_sum(_ob_number, l, s)


_FAMILY_POLY = {
    "bernoulli": bernoulli_poly,
    "euler": euler_poly,
    "genocchi": genocchi_poly,
    "ordered-bell": ordered_bell_poly,
}


def build_polynomial(spec: dict):
    """Build an example polynomial from a small dictionary description.

    ``{"type": "weighted-pair", "family": f, "n": n}``,
    ``{"type": "composition-sum", "family": f, "n": n, "s": s, "positive": bool}``,
    ``{"type": "product", "family": f, "m": m, "n": n}`` or
    ``{"type": "omega", "l": l, "s": s}`` (a number, not a polynomial).
    """
    kind = spec.get("type")
    if kind == "omega":
        return omega(int(spec["l"]), int(spec["s"]))
    fam = spec.get("family")
    if fam not in _FAMILY_POLY:
        raise UsageError(f"unknown family {fam!r} for build_polynomial")
    poly = _FAMILY_POLY[fam]
    if kind == "weighted-pair":
        return weighted_pair_sum(poly, int(spec["n"]))
    if kind == "composition-sum":
        s = int(spec["s"])
        n = int(spec["n"])
        if n + s > 22:
            raise UsageError("composition sums are enumerated only up to n + s <= 22")
        return composition_sum(poly, n, s, 1 if spec.get("positive") else 0, XPoly.const(1))
    if kind == "product":
        return poly(int(spec["m"])) * poly(int(spec["n"]))
    raise UsageError(f"unknown polynomial spec type {kind!r}")


# --------------------------------------------------------------------------
# small helpers
# --------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _B(n: int) -> Fraction:
    return bernoulli_poly(n)(ZERO)


@lru_cache(maxsize=None)
def _E(n: int) -> Fraction:
    return euler_poly(n)(ZERO)


@lru_cache(maxsize=None)
def _G(n: int) -> Fraction:
    return genocchi_poly(n)(ZERO)


def _delta(a: int, b: int) -> int:
    return 1 if a == b else 0


def _ff(n: int, k: int) -> int:
    """Falling factorial ``(n)_k``."""
    out = 1
    for i in range(k):
        out *= n - i
    return out


def _is_zero(v) -> bool:
    return not v


def _basis(r: int, lam) -> FamilyId:
    if lam is None:
        return FamilyId(Kind.ORDERED_BELL, r)
    return FamilyId(Kind.DEGENERATE_ORDERED_BELL, r, lam)


def _vector_poly(vec: Sequence, basis: FamilyId) -> XPoly:
    return reconstruct(Representation(basis, tuple(vec)))


def _vector_diff(a: Sequence, b: Sequence) -> list:
    size = max(len(a), len(b))
    a = list(a) + [ZERO] * (size - len(a))
    b = list(b) + [ZERO] * (size - len(b))
    return [x - y for x, y in zip(a, b)]


def _printed(form: str, truth: Sequence, printed: Sequence, basis: FamilyId, note: str = "") -> Finding:
    diff = _vector_diff(truth, printed)
    if all(_is_zero(d) for d in diff):
        return Finding(form, "pass", None, note)
    return Finding(form, "mismatch", _vector_poly(diff, basis), note)


def _printed_poly(form: str, lhs: XPoly, rhs: XPoly, note: str = "") -> Finding:
    w = lhs - rhs
    return Finding(form, "pass" if w.is_zero() else "mismatch", None if w.is_zero() else w, note)


def _lam_k(value, k: int, lam):
    """``value / λ^k`` for a finished coefficient expression."""
    return lambda_divide(value, k, lam)


class _Checks:
    """Accumulates named theorem-path differences (each must be zero)."""

    def __init__(self):
        self.items: list[tuple[str, XPoly]] = []

    def poly(self, name: str, diff: XPoly) -> None:
        self.items.append((name, diff))

    def vector(self, name: str, truth: Sequence, other: Sequence, basis: FamilyId) -> None:
        diff = _vector_diff(truth, other)
        w = XPoly() if all(_is_zero(d) for d in diff) else _vector_poly(diff, basis)
        if not w and any(not _is_zero(d) for d in diff):  # pragma: no cover - basis is unisolvent
            w = XPoly.const(1)
        self.items.append((name, w))

    def expansion(self, p: XPoly, r: int, lam) -> tuple:
        """Recompute the expansion of ``p`` in ``b^{(r)}`` / ``b^{(r)}_λ`` by every
        available route; record their agreement and the round trip."""
        basis = _basis(r, lam)
        truth = represent_higher_order(p, r, lam).coeffs
        if lam is None:
            forms = dict(lambda_free_forms(p, r))
            if r == 1:
                forms["ordered-bell closed form"] = represent_ordered_bell(p).coeffs
        else:
            forms = dict(order_r_forms(p, r, lam))
            if r == 1:
                forms.update({f"order-one {k}": v for k, v in degenerate_forms(p, lam).items()})
        for name, vec in forms.items():
            self.vector(f"variant {name}", truth, vec, basis)
        self.poly("round trip", reconstruct(Representation(basis, truth)) - p)
        return truth


# --------------------------------------------------------------------------
# the classical identities (theorem-path right-hand sides)
# --------------------------------------------------------------------------


def _eq2a_parts(n: int):
    """Printed left side, omitted odd-index products, right side."""
    printed_lhs = XPoly()
    for k in range(1, n):
        printed_lhs = printed_lhs + bernoulli_poly(2 * k) * bernoulli_poly(2 * n - 2 * k) / (
            2 * k * (2 * n - 2 * k)
        )
    printed_lhs = printed_lhs + bernoulli_poly(1) * bernoulli_poly(2 * n - 1) * Fraction(2, 2 * n - 1)
    omitted = XPoly()
    for k in range(3, 2 * n - 2, 2):
        omitted = omitted + bernoulli_poly(k) * bernoulli_poly(2 * n - k) / (k * (2 * n - k))
    rhs = XPoly()
    for k in range(1, n + 1):
        rhs = rhs + bernoulli_poly(2 * n - 2 * k) * (Fraction(comb(2 * n, 2 * k), 2 * k * n) * _B(2 * k))
    rhs = rhs + bernoulli_poly(2 * n) * (harmonic(2 * n - 1) / n)
    rhs = rhs + bernoulli_poly(1) * (Fraction(2, 2 * n - 1) * _B(2 * n - 1))
    return printed_lhs, omitted, rhs


def _eq2a_bernoulli_vector(n: int) -> list:
    """Bernoulli coefficients of the right side of the degree-2n identity."""
    a = [ZERO] * (2 * n + 1)
    for k in range(1, n + 1):
        a[2 * n - 2 * k] += Fraction(comb(2 * n, 2 * k), 2 * k * n) * _B(2 * k)
    a[2 * n] += harmonic(2 * n - 1) / n
    a[1] += Fraction(2, 2 * n - 1) * _B(2 * n - 1)
    return a


def _eq1e_vector(n: int) -> list:
    a = [ZERO] * (n + 1)
    for l in range(n - 1):
        a[l] = Fraction(2, n) * comb(n, l) * _B(n - l) / (n - l)
    a[n] = Fraction(2, n) * harmonic(n - 1)
    return a


def _eq7e_vector(n: int) -> list:
    return [Fraction(-4, n) * comb(n, k) * _G(n - k) / (n - k) for k in range(n - 1)]


def _nielsen_ee_vector(m: int, n: int) -> list:
    a = [ZERO] * (m + n + 1)
    for i in range(1, m + 1):
        a[m + n - i + 1] += -2 * comb(m, i) * _E(i) / (m + n - i + 1)
    for j in range(1, n + 1):
        a[m + n - j + 1] += -2 * comb(n, j) * _E(j) / (m + n - j + 1)
    a[0] += 2 * (-1) ** (n + 1) * Fraction(factorial(m) * factorial(n), factorial(m + n + 1)) * _E(m + n + 1)
    return a


def _nielsen_bb_vector(m: int, n: int) -> list:
    a = [ZERO] * (m + n + 1)
    for q in range(0, (m + n) // 2 + 1):
        if m + n - 2 * q <= 0:
            continue
        a[m + n - 2 * q] += (comb(m, 2 * q) * n + comb(n, 2 * q) * m) * _B(2 * q) / (m + n - 2 * q)
    a[0] += (-1) ** (m + 1) * _B(m + n) / comb(m + n, m)
    return a


def _bernoulli_rhs(vec: Sequence) -> XPoly:
    return _vector_poly(vec, FamilyId(Kind.BERNOULLI))


def _omega_rhs(n: int, s: int) -> XPoly:
    acc = XPoly()
    for j in range(n + 1):
        acc = acc + bernoulli_poly(j) * (comb(n + s, j) * omega(n - j + 1, s))
    return acc / (n + s)


def _genocchi_convolution_rhs(n: int, s: int) -> XPoly:
    """Right side of the positive Genocchi composition identity, reading the
    numeric product as ``G_{i_1} ... G_{i_{s-l}}``."""
    acc = XPoly()
    for l in range(1, s + 1):
        weight = comb(s, l) * (-2) ** (l - 1)
        for i0 in range(1, n + 2 - l):
            nums = composition_sum(_G, n + 1 - l - i0, s - l, 1)
            if nums:
                acc = acc + genocchi_poly(i0) * (weight * comb(n + s, i0) * nums)
    return acc / (n + s)


# --------------------------------------------------------------------------
# identity definitions
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class _Def:
    summary: str
    keys: tuple[str, ...]
    validate: Callable[[dict], None]
    grid: Callable[[int, int, Sequence], Iterable[dict]]
    default_max: int
    run: Callable[[dict, _Checks], list[Finding]]


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise UsageError(msg)


def _check_r(p: dict, r_cap: int = 8) -> None:
    _need(0 <= p["r"] <= r_cap, f"r must be in 0..{r_cap}")


def _lam_of(p: dict):
    lam = parse_lambda(p["lambda"])
    _need(lam is LAMBDA or lam != 0, "λ must be symbolic or a nonzero rational")
    return lam


# -- EQ2A and its evaluations ---------------------------------------------


def _run_eq2a(p: dict, chk: _Checks) -> list[Finding]:
    n = p["n"]
    printed_lhs, omitted, rhs = _eq2a_parts(n)
    full = printed_lhs + omitted
    chk.poly("complete identity (all products B_k B_{2n-k})", full - rhs)
    chk.vector(
        "Bernoulli coefficients via integrals",
        represent_bernoulli(full).coeffs,
        _eq2a_bernoulli_vector(n),
        FamilyId(Kind.BERNOULLI),
    )
    note = "" if omitted.is_zero() else (
        "the display omits the odd-index products B_k B_{2n-k}/(k(2n-k)), 3 <= k <= 2n-3; "
        "they vanish at x = 0 and x = 1/2"
    )
    return [_printed_poly("display as a polynomial identity", printed_lhs, rhs, note)]


def _run_eval(point: Fraction):
    def run(p: dict, chk: _Checks) -> list[Finding]:
        n = p["n"]
        printed_lhs, omitted, rhs = _eq2a_parts(n)
        chk.poly("complete identity (all products B_k B_{2n-k})", printed_lhs + omitted - rhs)
        chk.poly(f"omitted odd-index products at x = {point}", XPoly.const(omitted(point)))
        chk.poly(f"displayed identity at x = {point}", XPoly.const(printed_lhs(point) - rhs(point)))
        return []

    return run


def _n_grid(lo: int):
    def grid(max_n, r_max, modes):
        return [{"n": n} for n in range(lo, max_n + 1)]

    return grid


# -- EQ1E, EQ7E, Nielsen ----------------------------------------------------


def _run_eq1e(p: dict, chk: _Checks) -> list[Finding]:
    n = p["n"]
    lhs = weighted_pair_sum(bernoulli_poly, n)
    vec = _eq1e_vector(n)
    chk.poly("polynomial identity", lhs - _bernoulli_rhs(vec))
    chk.vector("Bernoulli coefficients via integrals", represent_bernoulli(lhs).coeffs, vec, FamilyId(Kind.BERNOULLI))
    return []


def _run_eq7e(p: dict, chk: _Checks) -> list[Finding]:
    n = p["n"]
    lhs = weighted_pair_sum(genocchi_poly, n)
    vec = _eq7e_vector(n)
    chk.poly("polynomial identity", lhs - _bernoulli_rhs(vec))
    chk.vector("Bernoulli coefficients via integrals", represent_bernoulli(lhs).coeffs, vec, FamilyId(Kind.BERNOULLI))
    return []


def _run_nielsen(fam: str):
    def run(p: dict, chk: _Checks) -> list[Finding]:
        m, n = p["m"], p["n"]
        poly = euler_poly if fam == "E" else bernoulli_poly
        lhs = poly(m) * poly(n)
        vec = _nielsen_ee_vector(m, n) if fam == "E" else _nielsen_bb_vector(m, n)
        chk.poly("polynomial identity", lhs - _bernoulli_rhs(vec))
        chk.vector(
            "Bernoulli coefficients via integrals", represent_bernoulli(lhs).coeffs, vec, FamilyId(Kind.BERNOULLI)
        )
        return []

    return run


def _mn_grid(lo: int):
    def grid(max_n, r_max, modes):
        out = []
        for total in range(2 * lo, max_n + 1):
            for m in range(lo, total - lo + 1):
                out.append({"m": m, "n": total - m})
        return out

    return grid


def _mn_validate(lo: int, hi: int):
    def validate(p):
        _need(p["m"] >= lo and p["n"] >= lo, f"m and n must be >= {lo}")
        _need(p["m"] + p["n"] <= hi, f"m + n must be <= {hi}")

    return validate


# -- ordered Bell expansions --------------------------------------------------


def _r_grid(inner: Callable[[int], Iterable[dict]]):
    def grid(max_n, r_max, modes):
        return [dict(q, r=r) for q in inner(max_n) for r in range(r_max + 1)]

    return grid


def _order_r_binomial(values: Callable[[int, int], Fraction], r: int, k: int) -> Fraction:
    """``2^r sum_j C(r,j) (-1/2)^j values(k, j)``."""
    return 2**r * sum((comb(r, j) * (-HALF) ** j * values(k, j) for j in range(r + 1)), ZERO)


def _run_s5a(p: dict, chk: _Checks) -> list[Finding]:
    n, r = p["n"], p["r"]
    poly = bernoulli_poly(n)
    truth = chk.expansion(poly, r, None)
    basis = _basis(r, None)
    conn = connection_constants(FamilyId(Kind.BERNOULLI), basis, n)[n]
    chk.vector("connection constants by series reversion", truth, conn, basis)
    found = []
    if r == 1:
        printed = [comb(n, k) * (_B(n - k) - _delta(n - k, 1)) for k in range(n + 1)]
        found.append(_printed("C(n,k)(B_{n-k} - δ_{n-k,1})", truth, printed, basis))
    printed = [
        comb(n, k) * _order_r_binomial(lambda k, j: bernoulli_poly(n - k)(Fraction(j)), r, k) for k in range(n + 1)
    ]
    found.append(_printed("2^r C(n,k) Σ_j C(r,j)(-1/2)^j B_{n-k}(j)", truth, printed, basis))
    return found


def _run_s5b(p: dict, chk: _Checks) -> list[Finding]:
    n, r = p["n"], p["r"]
    poly = weighted_pair_sum(bernoulli_poly, n)
    truth = chk.expansion(poly, r, None)
    basis = _basis(r, None)
    chk.poly("expansion reproduces the Bernoulli-basis right side", reconstruct(Representation(basis, truth)) - _bernoulli_rhs(_eq1e_vector(n)))
    if r != 1:
        return []
    H = harmonic(n - 1)
    inter = []
    for k in range(n + 1):
        if k <= n - 2:
            s = sum(
                (
                    Fraction(1, n - l) * comb(n, l) * _B(n - l) * _ff(l, k) * (_B(l - k) - _delta(l - k, 1))
                    for l in range(k, n - 1)
                ),
                ZERO,
            )
            v = Fraction(2, n) * s + Fraction(2, n) * H * _ff(n, k) * _B(n - k)
        else:
            v = Fraction(2, n) * H * _ff(n, k) * (_B(n - k) - _delta(n - k, 1))
        inter.append(v / factorial(k))
    final = []
    for k in range(n - 1):
        s = sum(
            (
                Fraction(1, n - l) * comb(n, l) * comb(l, k) * _B(n - l) * (_B(l - k) - _delta(l - k, 1))
                for l in range(k, n - 1)
            ),
            ZERO,
        )
        final.append(Fraction(2, n) * s + Fraction(2, n) * comb(n, k) * H * _B(n - k))
    final += [-3 * H, Fraction(2, n) * H]
    return [
        _printed("k! a_k in terms of (l)_k and (n)_k", truth, inter, basis),
        _printed("final display with -3 H_{n-1} b_{n-1}(x)", truth, final, basis),
    ]


def _run_s5c(p: dict, chk: _Checks) -> list[Finding]:
    n, s, r = p["n"], p["s"], p["r"]
    poly = build_polynomial({"type": "composition-sum", "family": "ordered-bell", "n": n, "s": s})
    chk.poly("composition sum in Bernoulli polynomials via Ω", poly - _omega_rhs(n, s))
    truth = chk.expansion(poly, r, None)
    if r != 1:
        return []
    basis = _basis(r, None)
    printed = []
    for k in range(n + 1):
        v = sum(
            (
                comb(n + s, j) * comb(j, k) * omega(n - j + 1, s) * (_B(j - k) - _delta(j - k, 1))
                for j in range(k, n + 1)
            ),
            ZERO,
        )
        printed.append(v / (n + s))
    return [_printed("Σ_j C(n+s,j) C(j,k) Ω_{n-j+1}(B_{j-k} - δ_{j-k,1}) / (n+s)", truth, printed, basis)]


def _run_s5d(p: dict, chk: _Checks) -> list[Finding]:
    n, r = p["n"], p["r"]
    poly = weighted_pair_sum(genocchi_poly, n)
    truth = chk.expansion(poly, r, None)
    basis = _basis(r, None)
    chk.poly(
        "expansion reproduces the Bernoulli-basis right side",
        reconstruct(Representation(basis, truth)) - _bernoulli_rhs(_eq7e_vector(n)),
    )
    printed = []
    for k in range(n - 1):
        v = ZERO
        for j in range(r + 1):
            for l in range(k, n - 1):
                v += (
                    (-HALF) ** j
                    * comb(r, j)
                    * comb(n, l)
                    * comb(l, k)
                    * _G(n - l)
                    / (n - l)
                    * bernoulli_poly(l - k)(Fraction(j))
                )
        printed.append(Fraction(-(2 ** (r + 2)), n) * v)
    return [_printed("-(2^{r+2}/n) Σ_j Σ_l ... G_{n-l}/(n-l) B_{l-k}(j)", truth, printed, basis)]


def _leibniz_at(P: XPoly, Q: XPoly, k: int, x: Fraction) -> Fraction:
    """``sum_{a+b=k} k!/(a!b!) P^{(a)}(x) Q^{(b)}(x)``."""
    return sum(
        (Fraction(factorial(k), factorial(a) * factorial(k - a)) * P.derivative(a)(x) * Q.derivative(k - a)(x) for a in range(k + 1)),
        ZERO,
    )


def _run_s5e(p: dict, chk: _Checks) -> list[Finding]:
    m, n, r = p["m"], p["n"], p["r"]
    Em, En = euler_poly(m), euler_poly(n)
    truth = chk.expansion(Em * En, r, None)
    basis = _basis(r, None)
    chk.poly(
        "expansion reproduces the Bernoulli-basis right side",
        reconstruct(Representation(basis, truth)) - _bernoulli_rhs(_nielsen_ee_vector(m, n)),
    )
    printed = [
        _order_r_binomial(lambda k, j: _leibniz_at(Em, En, k, Fraction(j)), r, k) / factorial(k)
        for k in range(m + n + 1)
    ]
    return [_printed("Leibniz form (2^r/k!) Σ_j Σ_{a+b=k} ...", truth, printed, basis)]


# -- degenerate ordered Bell expansions ---------------------------------------


def _rl_grid(inner: Callable[[int], Iterable[dict]]):
    def grid(max_n, r_max, modes):
        return [dict(q, r=r, **{"lambda": m}) for q in inner(max_n) for r in range(r_max + 1) for m in modes]

    return grid


def _factored_from_diff(dk: XPoly, k: int, r: int, lam) -> Scalar:
    """``(I - Δ)^{r} Δ_λ^k q |_{x=0} / (k! λ^k)`` given ``dk = Δ_λ^k q``."""
    v = identity_minus_delta_pow(dk, r)(ZERO)
    return _lam_k(v, k, lam) / factorial(k)


def _factored_row(q: XPoly, size: int, r: int, lam) -> list:
    """:func:`_factored_from_diff` for k = 0..size-1, differencing incrementally."""
    out, dk = [], q
    for k in range(size):
        if k:
            dk = forward_diff(dk, lam, 1)
        out.append(_factored_from_diff(dk, k, r, lam))
    return out


def _double_binomial(values: Callable[[Scalar], Scalar], k: int, r: int, lam) -> Scalar:
    """``(2^r/(k! λ^k)) Σ_l Σ_j (-1)^{k+j-l} C(k,l) C(r,j) 2^{-j} values(j + lλ)``."""
    acc = ZERO
    for l in range(k + 1):
        for j in range(r + 1):
            acc = acc + values(j + l * lam) * (Fraction((-1) ** (k + j - l) * comb(k, l) * comb(r, j), 2**j))
    return _lam_k(acc * 2**r, k, lam) / factorial(k)


def _stirling_sum(inner: Callable[[int, int], Scalar], k: int, upper: int, r: int, lam) -> Scalar:
    """``(2^r/λ^k) Σ_{l=k}^{upper} Σ_j C(r,j)(-1/2)^j λ^l S2(l,k) inner(l, j)``."""
    acc = ZERO
    for l in range(k, upper + 1):
        s2 = stirling2(l, k)
        if not s2:
            continue
        for j in range(r + 1):
            acc = acc + (lam**l) * inner(l, j) * (comb(r, j) * (-HALF) ** j * s2)
    return _lam_k(acc * 2**r, k, lam)


def _order_one_forms(q: XPoly, n: int, lam) -> tuple[list, list]:
    """The two order-one displays: ``(2Δ_λ^k q - Δ_λ^k q(x+1))|_0/(k!λ^k)`` and
    its binomial expansion in ``2q(jλ) - q(1 + jλ)``."""
    iterated, binom = [], []
    for k in range(n + 1):
        d = forward_diff(q, lam, k)
        iterated.append(_lam_k(2 * d(ZERO) - d.shift(1)(ZERO), k, lam) / factorial(k))
        acc = ZERO
        for j in range(k + 1):
            acc = acc + (2 * q(j * lam) - q(1 + j * lam)) * (comb(k, j) * (-1) ** (k - j))
        binom.append(_lam_k(acc, k, lam) / factorial(k))
    return iterated, binom


def _run_s6a(p: dict, chk: _Checks) -> list[Finding]:
    n, r = p["n"], p["r"]
    lam = _lam_of(p)
    En = euler_poly(n)
    truth = chk.expansion(En, r, lam)
    basis = _basis(r, lam)
    conn = connection_constants(FamilyId(Kind.EULER), basis, n)[n]
    chk.vector("connection constants by series reversion", truth, conn, basis)
    found = []
    if r == 1:
        it, bi = _order_one_forms(En, n, lam)
        closed = [
            sum(
                ((lam ** (l - k)) * (comb(n, l) * stirling2(l, k) * (3 * _E(n - l) - 2 * _delta(n, l))) for l in range(k, n + 1)),
                ZERO,
            )
            for k in range(n + 1)
        ]
        found += [
            _printed("order one: (2Δ_λ^k E_n(x) - Δ_λ^k E_n(x+1))|_0 / (k!λ^k)", truth, it, basis),
            _printed("order one: Σ_j C(k,j)(-1)^{k-j}(2E_n(jλ) - E_n(1+jλ))", truth, bi, basis),
            _printed("order one: Σ_l C(n,l) λ^{l-k} S2(l,k)(3E_{n-l} - 2δ_{n,l})", truth, closed, basis),
        ]
    found.append(_printed("(I-Δ)^r Δ_λ^k E_n", truth, _factored_row(En, n + 1, r, lam), basis))
    if r >= 1:
        q = 3 * En - 2 * XPoly.monomial(n)
        found.append(
            _printed("(I-Δ)^{r-1} Δ_λ^k (3E_n(x) - 2x^n)", truth, _factored_row(q, n + 1, r - 1, lam), basis)
        )
    found.append(_printed("double binomial in E_n(j + lλ)", truth, [_double_binomial(En, k, r, lam) for k in range(n + 1)], basis))
    found.append(
        _printed(
            "Stirling form in E_{n-l}(j)",
            truth,
            [_stirling_sum(lambda l, j: comb(n, l) * euler_poly(n - l)(Fraction(j)), k, n, r, lam) for k in range(n + 1)],
            basis,
        )
    )
    return found


def _run_s6b(p: dict, chk: _Checks) -> list[Finding]:
    n, r = p["n"], p["r"]
    lam = _lam_of(p)
    bn = ordered_bell_poly(n)
    truth = chk.expansion(bn, r, lam)
    basis = _basis(r, lam)
    conn = connection_constants(FamilyId(Kind.ORDERED_BELL, 1), basis, n)[n]
    chk.vector("connection constants by series reversion", truth, conn, basis)
    found = []
    if r == 1:
        it, bi = _order_one_forms(bn, n, lam)
        closed = [stirling2(n, k) * lam ** (n - k) for k in range(n + 1)]
        found += [
            _printed("order one: (2Δ_λ^k b_n(x) - Δ_λ^k b_n(x+1))|_0 / (k!λ^k)", truth, it, basis),
            _printed("order one: Σ_j C(k,j)(-1)^{k-j}(2b_n(jλ) - b_n(1+jλ))", truth, bi, basis),
            _printed("order one: S2(n,k) λ^{n-k}", truth, closed, basis),
        ]
    found.append(_printed("(I-Δ)^r Δ_λ^k b_n", truth, _factored_row(bn, n + 1, r, lam), basis))
    if r >= 1:
        q = 2 * bn - bn.shift(1)
        found.append(
            _printed("(I-Δ)^{r-1} Δ_λ^k (2b_n(x) - b_n(x+1))", truth, _factored_row(q, n + 1, r - 1, lam), basis)
        )
    found.append(_printed("double binomial in b_n(j + lλ)", truth, [_double_binomial(bn, k, r, lam) for k in range(n + 1)], basis))
    found.append(
        _printed(
            "Stirling form in b_{n-l}(j)",
            truth,
            [_stirling_sum(lambda l, j: comb(n, l) * ordered_bell_poly(n - l)(Fraction(j)), k, n, r, lam) for k in range(n + 1)],
            basis,
        )
    )
    return found


_NAMED = {"B": bernoulli_poly, "G": genocchi_poly}


@lru_cache(maxsize=None)
def _ladder(key: tuple, lam) -> tuple:
    """``Δ_λ^k q`` for k = 0..deg q, where ``q`` is named by ``key``."""
    if key[0] == "G-reduced":
        i = key[1]
        q = 3 * genocchi_poly(i) - 2 * i * XPoly.monomial(i - 1)
    else:
        q = _NAMED[key[0]](key[1])
    return tuple(_lambda_differences(q, max(q.degree, 0), lam))


def _ladder_factored(key: tuple, k: int, r: int, lam) -> Scalar:
    ladder = _ladder(key, lam)
    return _factored_from_diff(ladder[k], k, r, lam) if k < len(ladder) else ZERO


@lru_cache(maxsize=None)
def _named_factored(fam: str, i: int, k: int, r: int, lam) -> Scalar:
    return _ladder_factored((fam, i), k, r, lam)


@lru_cache(maxsize=None)
def _named_double(fam: str, i: int, k: int, r: int, lam) -> Scalar:
    return _double_binomial(_NAMED[fam](i), k, r, lam)


@lru_cache(maxsize=None)
def _named_stirling(fam: str, i: int, k: int, r: int, lam) -> Scalar:
    """Stirling form with inner term ``C(i,l) P_{i-l}(j)``, ``l`` up to ``i``."""
    poly = _NAMED[fam]
    return _stirling_sum(lambda l, j: comb(i, l) * poly(i - l)(Fraction(j)), k, i, r, lam)


@lru_cache(maxsize=None)
def _genocchi_reduced(i: int, k: int, r: int, lam) -> Scalar:
    """``(I-Δ)^{r-1} Δ_λ^k (3G_i(x) - 2 i x^{i-1})|_0 / (k! λ^k)``."""
    return _ladder_factored(("G-reduced", i), k, r - 1, lam)


def _weighted(weights: dict, fn, k: int, *rest) -> Scalar:
    return sum((w * fn(i, k, *rest) for i, w in weights.items() if w), ZERO)


def _run_s6c(p: dict, chk: _Checks) -> list[Finding]:
    n, s, r = p["n"], p["s"], p["r"]
    lam = _lam_of(p)
    poly = build_polynomial({"type": "composition-sum", "family": "ordered-bell", "n": n, "s": s})
    chk.poly("composition sum in Bernoulli polynomials via Ω", poly - _omega_rhs(n, s))
    truth = chk.expansion(poly, r, lam)
    basis = _basis(r, lam)
    # every display is linear in B_i with weight C(n+s,i) Ω_{n-i+1} / (n+s);
    # in the Stirling form the i and l sums are swapped
    w = {i: Fraction(comb(n + s, i)) * omega(n - i + 1, s) / (n + s) for i in range(n + 1)}
    B = lambda fn: lambda i, k, r, lam: fn("B", i, k, r, lam)
    form1 = [_weighted(w, B(_named_factored), k, r, lam) for k in range(n + 1)]
    form3 = [_weighted(w, B(_named_double), k, r, lam) for k in range(n + 1)]
    form4 = [_weighted(w, B(_named_stirling), k, r, lam) for k in range(n + 1)]
    return [
        _printed("Σ_i C(n+s,i) Ω_{n-i+1} (I-Δ)^r Δ_λ^k B_i", truth, form1, basis),
        Finding(
            "(I-Δ)^{r-1} Δ_λ^k (B_i(x) - j x^{j-1})",
            "unevaluable",
            None,
            "the index j is not bound by any surrounding sum; no reading is assumed",
        ),
        _printed("double binomial in B_i(j + lλ)", truth, form3, basis),
        _printed("Stirling form in B_{i-l}(j)", truth, form4, basis),
    ]


def _run_s6d(p: dict, chk: _Checks) -> list[Finding]:
    m, n, r = p["m"], p["n"], p["r"]
    lam = _lam_of(p)
    Bm, Bn = bernoulli_poly(m), bernoulli_poly(n)
    prod = Bm * Bn
    truth = chk.expansion(prod, r, lam)
    basis = _basis(r, lam)
    chk.poly(
        "expansion reproduces the Bernoulli-basis right side",
        reconstruct(Representation(basis, truth)) - _bernoulli_rhs(_nielsen_bb_vector(m, n)),
    )
    size = m + n + 1
    found = [_printed("(I-Δ)^r Δ_λ^k (B_m B_n)", truth, _factored_row(prod, size, r, lam), basis)]
    if r >= 1:
        q = 2 * prod - Bm.shift(1) * Bn.shift(1)
        found.append(
            _printed(
                "(I-Δ)^{r-1} Δ_λ^k (2B_m B_n - B_m(x+1) B_n(x+1))",
                truth,
                _factored_row(q, size, r - 1, lam),
                basis,
            )
        )
    found.append(
        _printed(
            "double binomial in B_m(j + lλ) B_n(j + lλ)",
            truth,
            [_double_binomial(lambda v: Bm(v) * Bn(v), k, r, lam) for k in range(size)],
            basis,
        )
    )
    leib = lambda l, j: _leibniz_at(Bm, Bn, l, Fraction(j)) / factorial(l)
    found.append(
        _printed(
            "Stirling-Leibniz form, l summed up to n as displayed",
            truth,
            [_stirling_sum(leib, k, n, r, lam) for k in range(size)],
            basis,
            "terms with n < l <= m + n are absent from the display" if m > 0 else "",
        )
    )
    found.append(
        _printed(
            "Stirling-Leibniz form, l summed up to m + n",
            truth,
            [_stirling_sum(leib, k, m + n, r, lam) for k in range(size)],
            basis,
        )
    )
    return found


def _run_s6e(p: dict, chk: _Checks) -> list[Finding]:
    n, s, r = p["n"], p["s"], p["r"]
    lam = _lam_of(p)
    poly = build_polynomial({"type": "composition-sum", "family": "genocchi", "n": n, "s": s, "positive": True})
    truth = chk.expansion(poly, r, lam)
    basis = _basis(r, lam)
    rhs = _genocchi_convolution_rhs(n, s)
    note = "numeric product read as G_{i_1} ... G_{i_{s-l}}"
    found = [_printed_poly("composition identity in G_{i_0}(x)", poly, rhs, note)]
    # the coefficient displays expand the same right side term by term; the
    # weight of G_{i_0} is collected over l and the numeric compositions first
    w: dict[int, Fraction] = {}
    for l in range(1, s + 1):
        weight = comb(s, l) * (-2) ** (l - 1)
        for i0 in range(1, n + 2 - l):
            nums = composition_sum(_G, n + 1 - l - i0, s - l, 1)
            w[i0] = w.get(i0, ZERO) + Fraction(weight * comb(n + s, i0)) * nums / (n + s)
    G = lambda fn: lambda i, k, r, lam: fn("G", i, k, r, lam)
    size = n - s + 1
    form1 = [_weighted(w, G(_named_factored), k, r, lam) for k in range(size)]
    form3 = [_weighted(w, G(_named_double), k, r, lam) for k in range(size)]
    form4 = [_weighted(w, G(_named_stirling), k, r, lam) for k in range(size)]
    found.append(_printed("(I-Δ)^r Δ_λ^k G_{i_0}", truth, form1, basis, note))
    if r >= 1:
        form2 = [_weighted(w, _genocchi_reduced, k, r, lam) for k in range(size)]
        found.append(_printed("(I-Δ)^{r-1} Δ_λ^k (3G_{i_0}(x) - 2 i_0 x^{i_0-1})", truth, form2, basis, note))
    found.append(_printed("double binomial in G_{i_0}(j + aλ)", truth, form3, basis, note))
    found.append(
        _printed(
            "Stirling form in G_{i_0-a}(j)",
            truth,
            form4,
            basis,
            note + "; C(i_0,a) taken inside the i_0 sum where i_0 is bound",
        )
    )
    return found


def _single(lo: int):
    return lambda max_n: [{"n": n} for n in range(lo, max_n + 1)]


def _pairs(lo: int):
    def inner(max_n):
        return [{"m": m, "n": t - m} for t in range(2 * lo, max_n + 1) for m in range(lo, t - lo + 1)]

    return inner


def _ns(min_s: int, n_ge_s: bool = False, s_cap: int = 4):
    def inner(max_n):
        out = []
        for total in range(1, max_n + 1):
            for s in range(min_s, min(s_cap, total) + 1):
                n = total - s
                if n_ge_s and n < s:
                    continue
                out.append({"n": n, "s": s})
        return out

    return inner


def _validate_all(*checks):
    def validate(p):
        for c in checks:
            c(p)

    return validate


def _v_n(lo, hi):
    return lambda p: _need(lo <= p["n"] <= hi, f"n must be in {lo}..{hi}")


def _v_mn(lo, hi):
    return _mn_validate(lo, hi)


def _v_ns(min_s, n_ge_s=False, hi=22):
    def v(p):
        _need(p["s"] >= min_s, f"s must be >= {min_s}")
        _need(p["n"] >= 0, "n must be >= 0")
        _need(p["n"] + p["s"] <= hi, f"n + s must be <= {hi}")
        if n_ge_s:
            _need(p["n"] >= p["s"], "n must be >= s")

    return v


def _v_lam(p):
    _lam_of(p)


_REGISTRY: dict[IdentityId, _Def] = {
    IdentityId.EQ2A: _Def(
        "weighted quadratic Bernoulli identity in degree 2n, n >= 2",
        ("n",), _v_n(2, 30), _n_grid(2), 8, _run_eq2a,
    ),
    IdentityId.MIKI_VARIANT_X0: _Def(
        "the degree-2n quadratic identity at x = 0", ("n",), _v_n(2, 30), _n_grid(2), 8, _run_eval(ZERO)
    ),
    IdentityId.FPZ_VARIANT_XHALF: _Def(
        "the degree-2n quadratic identity at x = 1/2", ("n",), _v_n(2, 30), _n_grid(2), 8, _run_eval(HALF)
    ),
    IdentityId.EQ1E: _Def(
        "Σ B_k B_{n-k}/(k(n-k)) in Bernoulli polynomials, n >= 2", ("n",), _v_n(2, 40), _n_grid(2), 10, _run_eq1e
    ),
    IdentityId.EQ7E: _Def(
        "Σ G_k G_{n-k}/(k(n-k)) in Bernoulli polynomials, n >= 2", ("n",), _v_n(2, 40), _n_grid(2), 10, _run_eq7e
    ),
    IdentityId.NIELSEN_EE: _Def(
        "E_m E_n in Bernoulli polynomials, m, n >= 0", ("m", "n"), _v_mn(0, 40), _mn_grid(0), 10, _run_nielsen("E")
    ),
    IdentityId.NIELSEN_BB: _Def(
        "B_m B_n in Bernoulli polynomials, m, n >= 1", ("m", "n"), _v_mn(1, 40), _mn_grid(1), 10, _run_nielsen("B")
    ),
    IdentityId.S5A: _Def(
        "B_n in b_k^{(r)}", ("n", "r"), _validate_all(_v_n(0, 30), _check_r), _r_grid(_single(0)), 12, _run_s5a
    ),
    IdentityId.S5B: _Def(
        "Σ B_k B_{n-k}/(k(n-k)) in b_k^{(r)}", ("n", "r"), _validate_all(_v_n(2, 30), _check_r),
        _r_grid(_single(2)), 10, _run_s5b,
    ),
    IdentityId.S5C: _Def(
        "s-fold ordered Bell composition sum in b_k^{(r)}", ("n", "s", "r"),
        _validate_all(_v_ns(1), _check_r), _r_grid(_ns(1)), 14, _run_s5c,
    ),
    IdentityId.S5D: _Def(
        "Σ G_k G_{n-k}/(k(n-k)) in b_k^{(r)}", ("n", "r"), _validate_all(_v_n(2, 30), _check_r),
        _r_grid(_single(2)), 10, _run_s5d,
    ),
    IdentityId.S5E: _Def(
        "E_m E_n in b_k^{(r)}", ("m", "n", "r"), _validate_all(_v_mn(0, 30), _check_r),
        _r_grid(_pairs(0)), 8, _run_s5e,
    ),
    IdentityId.S6A: _Def(
        "E_n in b_{k,λ}^{(r)}", ("n", "r", "lambda"), _validate_all(_v_n(0, 20), _check_r, _v_lam),
        _rl_grid(_single(0)), 8, _run_s6a,
    ),
    IdentityId.S6B: _Def(
        "b_n in b_{k,λ}^{(r)}", ("n", "r", "lambda"), _validate_all(_v_n(0, 20), _check_r, _v_lam),
        _rl_grid(_single(0)), 10, _run_s6b,
    ),
    IdentityId.S6C: _Def(
        "s-fold ordered Bell composition sum in b_{k,λ}^{(r)}", ("n", "s", "r", "lambda"),
        _validate_all(_v_ns(1), _check_r, _v_lam), _rl_grid(_ns(1)), 14, _run_s6c,
    ),
    IdentityId.S6D: _Def(
        "B_m B_n in b_{k,λ}^{(r)}", ("m", "n", "r", "lambda"), _validate_all(_v_mn(1, 20), _check_r, _v_lam),
        _rl_grid(_pairs(1)), 8, _run_s6d,
    ),
    IdentityId.S6E: _Def(
        "s-fold positive Genocchi composition sum in b_{k,λ}^{(r)}, n >= s", ("n", "s", "r", "lambda"),
        _validate_all(_v_ns(1, n_ge_s=True), _check_r, _v_lam), _rl_grid(_ns(1, n_ge_s=True)), 14, _run_s6e,
    ),
}


def domain(ident: IdentityId | str) -> tuple[str, tuple[str, ...], int]:
    """``(summary, parameter names, default cap)`` for an identity.

    The cap bounds ``n`` for single-index identities, ``m + n`` for pairs
    and ``n + s`` for composition sums.
    """
    d = _REGISTRY[IdentityId.parse(ident) if isinstance(ident, str) else ident]
    return d.summary, d.keys, d.default_max


# --------------------------------------------------------------------------
# verification
# --------------------------------------------------------------------------


def _normalize_params(ident: IdentityId, params: dict) -> dict:
    d = _REGISTRY[ident]
    out = {}
    for key in d.keys:
        if key not in params:
            raise UsageError(f"{ident.value} needs parameter {key!r}")
        if key == "lambda":
            lam = parse_lambda(params[key])
            if lam is None:
                raise UsageError("a λ mode is required")
            out[key] = format_lambda(lam)
        else:
            try:
                out[key] = int(params[key])
            except (TypeError, ValueError):
                raise UsageError(f"parameter {key!r} must be an integer") from None
    extra = set(params) - set(d.keys)
    if extra:
        raise UsageError(f"{ident.value} does not take {sorted(extra)}")
    d.validate(out)
    return out


def verify(ident: IdentityId | str, params: dict) -> IdentityReport:
    """Check one identity instance on both tiers."""
    ident = IdentityId.parse(ident) if isinstance(ident, str) else ident
    params = _normalize_params(ident, params)
    start = time.perf_counter()
    chk = _Checks()
    findings = _REGISTRY[ident].run(params, chk)
    failed = [(name, w) for name, w in chk.items if not w.is_zero()]
    if any(f.status == "mismatch" for f in findings):
        printed = "mismatch"
    elif any(f.status == "pass" for f in findings):
        printed = "pass"
    else:
        printed = "n/a"
    return IdentityReport(
        id=ident,
        params=params,
        theorem_path="mismatch" if failed else "pass",
        printed_form=printed,
        witness=failed[0][1] if failed else None,
        elapsed_ms=int(round((time.perf_counter() - start) * 1000)),
        checks=[name for name, _ in chk.items],
        failed_checks=[name for name, _ in failed],
        printed_findings=findings,
    )


def _task(args):
    ident, params = args
    return verify(ident, params)


def _resolve_filter(filter) -> list[IdentityId]:
    if filter is None or filter == "all":
        return list(IdentityId)
    if isinstance(filter, (str, IdentityId)):
        filter = [filter]
    out = []
    for f in filter:
        if isinstance(f, str) and f.lower() == "all":
            return list(IdentityId)
        out.append(IdentityId.parse(f) if isinstance(f, str) else f)
    return out


def suite_tasks(filter=None, max_n: int | None = None, r_max: int = 3, lambda_modes=DEFAULT_LAMBDA_MODES):
    """The ``(id, params)`` instances :func:`run_suite` would check, in order."""
    if r_max < 0:
        raise UsageError("r_max must be nonnegative")
    modes = [format_lambda(parse_lambda(m)) for m in lambda_modes]
    if not modes:
        raise UsageError("at least one λ mode is needed")
    for m in modes:
        if m is None or m == "0":
            raise UsageError("λ modes must be 'sym' or nonzero rationals")
    tasks = []
    for ident in _resolve_filter(filter):
        d = _REGISTRY[ident]
        cap = d.default_max if max_n is None else max_n
        for params in d.grid(cap, r_max, modes):
            try:
                d.validate(params)
            except UsageError:
                continue
            tasks.append((ident, params))
    return tasks


def run_suite(
    filter=None,
    max_n: int | None = None,
    r_max: int = 3,
    lambda_modes: Sequence[str] = DEFAULT_LAMBDA_MODES,
    jobs: int = 1,
) -> list[IdentityReport]:
    """Verify every instance of the selected identities.

    ``max_n`` overrides each identity's default cap (see :func:`domain`);
    instances outside an identity's domain are skipped.  Reports come back in
    registry order, then grid order, whatever ``jobs`` is.
    """
    tasks = suite_tasks(filter, max_n, r_max, lambda_modes)
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_task, tasks, chunksize=4))
    return [verify(i, p) for i, p in tasks]


def suite_passed(reports: Iterable[IdentityReport]) -> bool:
    return all(r.passed for r in reports)
