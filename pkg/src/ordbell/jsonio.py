"""JSON encoding of scalars, polynomials and representations.

Polynomial: ``{"var": "x", "lambda": "sym" | "p/q" | null, "coeffs": [...]}``
with coefficients lowest degree first.  A scalar is ``"p/q"`` (or ``"p"``)
or, when it depends on λ, ``{"lambda_coeffs": ["p/q", ...]}``.  A
representation adds ``"basis": {"kind": ..., "order": r}``.
"""
from __future__ import annotations

from fractions import Fraction

from .core import LambdaPoly, Scalar, UsageError, XPoly, format_rational
from .families import FamilyId, Kind, format_lambda, parse_lambda
from .represent import Representation

__all__ = [
    "scalar_to_json",
    "scalar_from_json",
    "poly_to_json",
    "poly_from_json",
    "representation_to_json",
    "representation_from_json",
]


def scalar_to_json(c: Scalar):
    if isinstance(c, LambdaPoly):
        return {"lambda_coeffs": [format_rational(q) for q in c.coeffs]}
    return format_rational(Fraction(c))


def _rational(text) -> Fraction:
    if isinstance(text, bool) or not isinstance(text, (str, int)):
        raise UsageError(f"expected a rational string, got {text!r}")
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad rational {text!r}") from exc


def scalar_from_json(obj) -> Scalar:
    if isinstance(obj, dict):
        if set(obj) != {"lambda_coeffs"} or not isinstance(obj["lambda_coeffs"], list):
            raise UsageError(f"bad scalar object {obj!r}")
        return LambdaPoly([_rational(q) for q in obj["lambda_coeffs"]]) * 1
    return _rational(obj)


def poly_to_json(p: XPoly, lam=None) -> dict:
    if lam is None and p.symbolic:
        lam = "sym"
    coeffs = p.coeffs or (Fraction(0),)
    return {
        "var": "x",
        "lambda": lam if isinstance(lam, str) or lam is None else format_lambda(lam),
        "coeffs": [scalar_to_json(c) for c in coeffs],
    }


def _check_obj(obj) -> None:
    if not isinstance(obj, dict):
        raise UsageError("expected a JSON object")
    if obj.get("var", "x") != "x":
        raise UsageError("only the variable 'x' is supported")
    if not isinstance(obj.get("coeffs"), list):
        raise UsageError("'coeffs' must be a list")


def poly_from_json(obj) -> tuple[XPoly, object]:
    """Return ``(polynomial, λ mode)``; the mode is ``None``, LAMBDA or a Fraction."""
    _check_obj(obj)
    lam = obj.get("lambda")
    lam = None if lam is None else parse_lambda(lam)
    return XPoly(scalar_from_json(c) for c in obj["coeffs"]), lam


def representation_to_json(rep: Representation) -> dict:
    return {
        "var": "x",
        "lambda": format_lambda(rep.basis.lam),
        "basis": rep.basis.to_json(),
        "coeffs": [scalar_to_json(c) for c in rep.coeffs],
    }


def representation_from_json(obj) -> Representation:
    _check_obj(obj)
    basis = obj.get("basis")
    if not isinstance(basis, dict) or "kind" not in basis:
        raise UsageError("representation needs a 'basis' object")
    lam = obj.get("lambda")
    lam = None if lam is None else parse_lambda(lam)
    try:
        kind = Kind(basis["kind"])
    except ValueError:
        raise UsageError(f"unknown basis kind {basis['kind']!r}") from None
    fam = FamilyId(kind, int(basis.get("order", 1)), lam)
    return Representation(fam, tuple(scalar_from_json(c) for c in obj["coeffs"]))
