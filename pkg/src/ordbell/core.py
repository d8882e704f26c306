"""Exact scalars, polynomials in ``x`` and truncated exponential generating functions.

Three value types live here:

* scalars, which are either :class:`fractions.Fraction` (the rationals) or
  :class:`LambdaPoly` (polynomials in a formal parameter ``λ``);
* :class:`XPoly`, dense polynomials in ``x`` whose coefficients are scalars;
* :class:`EgfSeries`, truncated series ``sum c_n t**n / n!`` stored by their
  ``n!``-scaled coefficients ``c_n``.

Everything is immutable and exact.  A :class:`LambdaPoly` with no ``λ``
dependence is always collapsed to a ``Fraction``, so structural equality of
canonical forms is the only notion of equality needed.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb, factorial
from typing import Callable, Iterable, Sequence, Union

__all__ = [
    "UsageError",
    "SingularSeriesError",
    "DivisibilityError",
    "LambdaPoly",
    "LAMBDA",
    "XPoly",
    "EgfSeries",
    "Scalar",
    "as_scalar",
    "is_symbolic",
    "specialize",
    "lambda_divide",
    "series_mul",
    "series_inv",
    "series_pow",
    "series_compose",
    "series_revert",
    "get_max_degree",
    "set_max_degree",
    "check_degree",
    "format_rational",
]


class UsageError(ValueError):
    """Bad arguments: wrong domain, degree guard exceeded, mismatched orders."""


class SingularSeriesError(ArithmeticError):
    """A series (or scalar) that has no inverse in its coefficient domain."""


class DivisibilityError(ArithmeticError):
    """Exact division by a power of ``λ`` failed."""


_MAX_DEGREE = 64


def get_max_degree() -> int:
    return _MAX_DEGREE


def set_max_degree(n: int) -> None:
    """Set the global guard on polynomial degree and series order."""
    global _MAX_DEGREE
    if n < 0:
        raise UsageError("max degree must be >= 0")
    _MAX_DEGREE = int(n)


def check_degree(n: int, what: str = "degree") -> None:
    if n < 0:
        raise UsageError(f"{what} must be nonnegative, got {n}")
    if n > _MAX_DEGREE:
        raise UsageError(f"{what} {n} exceeds the configured maximum {_MAX_DEGREE}")


def format_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


# --------------------------------------------------------------------------
# λ-polynomials
# --------------------------------------------------------------------------


def _strip(coeffs: Iterable) -> tuple:
    c = list(coeffs)
    while c and not c[-1]:
        c.pop()
    return tuple(c)


class LambdaPoly:
    """A polynomial in ``λ`` with rational coefficients, lowest degree first.

    Arithmetic results are canonicalised through :func:`as_scalar`, so a
    result that does not depend on ``λ`` comes back as a ``Fraction``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        self.coeffs: tuple[Fraction, ...] = _strip(Fraction(c) for c in coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __repr__(self) -> str:
        return f"LambdaPoly({[format_rational(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            mag = abs(c)
            if i == 0:
                body = format_rational(mag)
            else:
                mono = "λ" if i == 1 else f"λ^{i}"
                body = mono if mag == 1 else f"{format_rational(mag)}*{mono}"
            terms.append((c < 0, body))
        if not terms:
            return "0"
        neg, body = terms[0]
        out = ("-" if neg else "") + body
        for neg, body in terms[1:]:
            out += (" - " if neg else " + ") + body
        return out

    def __hash__(self) -> int:
        if len(self.coeffs) <= 1:
            return hash(self.coeffs[0] if self.coeffs else Fraction(0))
        return hash(("LambdaPoly", self.coeffs))

    def __eq__(self, other) -> bool:
        if isinstance(other, LambdaPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            if not other:
                return not self.coeffs
            return self.coeffs == (Fraction(other),)
        return NotImplemented

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def _coerce(self, other):
        if isinstance(other, LambdaPoly):
            return other.coeffs
        if isinstance(other, (int, Fraction)):
            return (Fraction(other),) if other else ()
        return None

    def __add__(self, other):
        oc = self._coerce(other)
        if oc is None:
            return NotImplemented
        a, b = self.coeffs, oc
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return _lp(out)

    __radd__ = __add__

    def __neg__(self):
        return _lp([-c for c in self.coeffs])

    def __pos__(self):
        return self

    def __sub__(self, other):
        oc = self._coerce(other)
        if oc is None:
            return NotImplemented
        return self + _lp([-c for c in oc])

    def __rsub__(self, other):
        oc = self._coerce(other)
        if oc is None:
            return NotImplemented
        return (-self) + _lp(oc)

    def __mul__(self, other):
        oc = self._coerce(other)
        if oc is None:
            return NotImplemented
        if not self.coeffs or not oc:
            return Fraction(0)
        out = [Fraction(0)] * (len(self.coeffs) + len(oc) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(oc):
                    out[i + j] += a * b
        return _lp(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        # only division by a nonzero rational is a ring operation here
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("division of a λ-polynomial by zero")
            q = Fraction(other)
            return _lp([c / q for c in self.coeffs])
        if isinstance(other, LambdaPoly):
            raise SingularSeriesError("a non-constant λ-polynomial is not invertible")
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            raise SingularSeriesError("a non-constant λ-polynomial is not invertible")
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise SingularSeriesError("λ-polynomials only have nonnegative integer powers")
        result: Scalar = Fraction(1)
        base: Scalar = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __call__(self, value) -> Fraction:
        """Evaluate at a rational ``λ``."""
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def div_lambda_power(self, k: int):
        """Exact quotient by ``λ**k``; raises :class:`DivisibilityError` otherwise."""
        if any(self.coeffs[:k]):
            raise DivisibilityError(f"{self} is not divisible by λ^{k}")
        return _lp(self.coeffs[k:])


Scalar = Union[Fraction, LambdaPoly]

LAMBDA = LambdaPoly((0, 1))


def _lp(coeffs) -> Scalar:
    c = _strip(coeffs)
    if len(c) <= 1:
        return c[0] if c else Fraction(0)
    p = LambdaPoly.__new__(LambdaPoly)
    p.coeffs = c
    return p


def as_scalar(v) -> Scalar:
    """Canonical scalar for an int, Fraction or LambdaPoly."""
    if isinstance(v, Fraction):
        return v
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, LambdaPoly):
        return _lp(v.coeffs)
    if isinstance(v, str):
        return Fraction(v)
    raise TypeError(f"not an exact scalar: {v!r}")


def is_symbolic(lam) -> bool:
    """True when ``lam`` is the formal parameter (or any λ-polynomial)."""
    return isinstance(lam, LambdaPoly)


def _spec_scalar(c: Scalar, value: Fraction) -> Fraction:
    return c(value) if isinstance(c, LambdaPoly) else c


def specialize(obj, value):
    """Evaluate every ``λ`` occurring in a scalar, XPoly or EgfSeries at ``value``.

    ``value = 0`` is allowed here; this is how λ → 0 limits of symbolic
    results are taken.
    """
    value = Fraction(value)
    if isinstance(obj, XPoly):
        return XPoly(_spec_scalar(c, value) for c in obj.coeffs)
    if isinstance(obj, EgfSeries):
        return EgfSeries(specialize(c, value) for c in obj.coeffs)
    if isinstance(obj, (tuple, list)):
        return type(obj)(specialize(c, value) for c in obj)
    return _spec_scalar(as_scalar(obj), value)


def _scalar_inverse(c: Scalar) -> Fraction:
    if isinstance(c, LambdaPoly) or not c:
        raise SingularSeriesError(f"{c} is not invertible in its coefficient domain")
    return 1 / c


# --------------------------------------------------------------------------
# polynomials in x
# --------------------------------------------------------------------------


class XPoly:
    """Dense polynomial in ``x``; ``coeffs[j]`` is the coefficient of ``x**j``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        self.coeffs: tuple = _strip(as_scalar(c) for c in coeffs)

    @classmethod
    def _raw(cls, coeffs) -> "XPoly":
        p = cls.__new__(cls)
        p.coeffs = _strip(coeffs)
        return p

    @classmethod
    def const(cls, c) -> "XPoly":
        return cls((c,))

    @classmethod
    def x(cls) -> "XPoly":
        return cls((0, 1))

    @classmethod
    def monomial(cls, n: int, c=1) -> "XPoly":
        return cls([0] * n + [c])

    @property
    def degree(self) -> int:
        """Degree; the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    def coeff(self, j: int) -> Scalar:
        return self.coeffs[j] if 0 <= j < len(self.coeffs) else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def symbolic(self) -> bool:
        return any(isinstance(c, LambdaPoly) for c in self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, XPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction, LambdaPoly)):
            return self.coeffs == XPoly.const(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("XPoly", self.coeffs))

    def __repr__(self) -> str:
        return f"XPoly({self})"

    def __str__(self) -> str:
        terms = []
        for j, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if j == 0 else ("x" if j == 1 else f"x^{j}")
            if isinstance(c, LambdaPoly):
                cs = f"({c})"
                terms.append((False, cs if not mono else f"{cs}*{mono}"))
                continue
            mag = abs(c)
            if not mono:
                body = format_rational(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{format_rational(mag)}*{mono}"
            terms.append((c < 0, body))
        if not terms:
            return "0"
        neg, body = terms[0]
        out = ("-" if neg else "") + body
        for neg, body in terms[1:]:
            out += (" - " if neg else " + ") + body
        return out

    # arithmetic ----------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, XPoly):
            if isinstance(other, (int, Fraction, LambdaPoly)):
                other = XPoly.const(other)
            else:
                return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return XPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return XPoly._raw([-c for c in self.coeffs])

    def __pos__(self):
        return self

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, LambdaPoly)):
            other = XPoly.const(other)
        if not isinstance(other, XPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, XPoly):
            a, b = self.coeffs, other.coeffs
            if not a or not b:
                return XPoly._raw(())
            out = [Fraction(0)] * (len(a) + len(b) - 1)
            for i, ca in enumerate(a):
                if not ca:
                    continue
                for j, cb in enumerate(b):
                    if cb:
                        out[i + j] = out[i + j] + ca * cb
            return XPoly._raw(out)
        if isinstance(other, (int, Fraction, LambdaPoly)):
            if not other:
                return XPoly._raw(())
            return XPoly._raw([c * other for c in self.coeffs])
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return XPoly._raw([c / q for c in self.coeffs])
        return NotImplemented

    def __pow__(self, n: int) -> "XPoly":
        if n < 0:
            raise UsageError("negative power of a polynomial")
        result = XPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # calculus and evaluation ---------------------------------------------

    def __call__(self, a) -> Scalar:
        """Horner evaluation at a scalar point."""
        acc: Scalar = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * a + c
        return acc

    def shift(self, a) -> "XPoly":
        """The polynomial ``p(x + a)``."""
        if not a:
            return self
        a = as_scalar(a)
        cs = self.coeffs
        powers = [Fraction(1)]
        for _ in range(len(cs)):
            powers.append(powers[-1] * a)
        # (x + a)^j = sum_i C(j, i) a^(j-i) x^i
        out = [Fraction(0)] * len(cs)
        for j, c in enumerate(cs):
            if c:
                for i in range(j + 1):
                    out[i] = out[i] + c * (comb(j, i) * powers[j - i])
        return XPoly._raw(out)

    def derivative(self, l: int = 1) -> "XPoly":
        if l < 0:
            raise UsageError("derivative order must be nonnegative")
        if l == 0:
            return self
        # x^j -> (j)_l x^(j-l)
        out = []
        for j in range(l, len(self.coeffs)):
            c = self.coeffs[j]
            ff = 1
            for i in range(l):
                ff *= j - i
            out.append(c * ff)
        return XPoly._raw(out)

    def antiderivative(self) -> "XPoly":
        return XPoly._raw([Fraction(0)] + [c / (j + 1) for j, c in enumerate(self.coeffs)])

    def definite_integral(self, a, b) -> Scalar:
        anti = self.antiderivative()
        return anti(b) - anti(a)

    def map_coeffs(self, fn: Callable[[Scalar], Scalar]) -> "XPoly":
        return XPoly(fn(c) for c in self.coeffs)


# --------------------------------------------------------------------------
# truncated exponential generating functions
# --------------------------------------------------------------------------


class EgfSeries:
    """Truncated EGF ``sum_{n<=N} c_n t**n / n!``.

    ``coeffs[n]`` is ``c_n``; each is a scalar or an :class:`XPoly`.  All
    products are binomial convolutions, and every operation keeps the order
    ``N`` of its inputs.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable):
        cs = []
        for c in coeffs:
            cs.append(c if isinstance(c, XPoly) else as_scalar(c))
        if not cs:
            raise UsageError("an EGF needs at least the constant coefficient")
        check_degree(len(cs) - 1, "series order")
        self.coeffs: tuple = tuple(cs)

    @classmethod
    def _raw(cls, coeffs) -> "EgfSeries":
        s = cls.__new__(cls)
        s.coeffs = tuple(coeffs)
        return s

    @classmethod
    def from_function(cls, order: int, fn: Callable[[int], object]) -> "EgfSeries":
        check_degree(order, "series order")
        return cls(fn(n) for n in range(order + 1))

    @classmethod
    def from_ordinary(cls, ordinary: Sequence) -> "EgfSeries":
        return cls(c * factorial(n) for n, c in enumerate(ordinary))

    @classmethod
    def one(cls, order: int) -> "EgfSeries":
        return cls.from_function(order, lambda n: 1 if n == 0 else 0)

    @classmethod
    def t(cls, order: int) -> "EgfSeries":
        return cls.from_function(order, lambda n: 1 if n == 1 else 0)

    @classmethod
    def exp(cls, order: int, a=1) -> "EgfSeries":
        """``e^{a t}``; ``a`` may be a scalar or an XPoly such as ``x``."""
        a_ = a if isinstance(a, XPoly) else as_scalar(a)
        return cls.from_function(order, lambda n: a_**n if n else _one_like(a_))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, n: int):
        if n < 0 or n > self.order:
            raise UsageError(f"coefficient {n} requested from a series truncated at order {self.order}")
        return self.coeffs[n]

    def ordinary(self) -> list:
        """Plain Taylor coefficients ``c_n / n!``."""
        return [c / factorial(n) for n, c in enumerate(self.coeffs)]

    def valuation(self) -> int:
        """Index of the first nonzero coefficient (``order + 1`` for the zero series)."""
        for n, c in enumerate(self.coeffs):
            if c:
                return n
        return self.order + 1

    def truncate(self, order: int) -> "EgfSeries":
        if order > self.order:
            raise UsageError("cannot extend a truncated series")
        return EgfSeries._raw(self.coeffs[: order + 1])

    def map_coeffs(self, fn) -> "EgfSeries":
        return EgfSeries(fn(c) for c in self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, EgfSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(("EgfSeries", self.coeffs))

    def __repr__(self) -> str:
        return f"EgfSeries([{', '.join(str(c) for c in self.coeffs)}])"

    def _check(self, other: "EgfSeries") -> None:
        if self.order != other.order:
            raise UsageError(f"series orders differ: {self.order} vs {other.order}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction, LambdaPoly, XPoly)):
            return EgfSeries._raw((self.coeffs[0] + other,) + self.coeffs[1:])
        if not isinstance(other, EgfSeries):
            return NotImplemented
        self._check(other)
        return EgfSeries._raw(a + b for a, b in zip(self.coeffs, other.coeffs))

    __radd__ = __add__

    def __neg__(self):
        return EgfSeries._raw(-c for c in self.coeffs)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, LambdaPoly, XPoly, EgfSeries)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, EgfSeries):
            return series_mul(self, other)
        if isinstance(other, (int, Fraction, LambdaPoly, XPoly)):
            return EgfSeries._raw(c * other for c in self.coeffs)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, LambdaPoly, XPoly)):
            return EgfSeries._raw(c * other for c in self.coeffs)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return EgfSeries._raw(c / Fraction(other) for c in self.coeffs)
        return NotImplemented

    def __pow__(self, r: int):
        return series_pow(self, r)

    def inverse(self) -> "EgfSeries":
        return series_inv(self)

    def compose(self, f: "EgfSeries") -> "EgfSeries":
        return series_compose(self, f)

    def revert(self) -> "EgfSeries":
        return series_revert(self)


def _one_like(a):
    return XPoly.const(1) if isinstance(a, XPoly) else Fraction(1)


def series_mul(a: EgfSeries, b: EgfSeries) -> EgfSeries:
    """Binomial convolution ``c_n = sum_k C(n,k) a_k b_{n-k}``."""
    a._check(b)
    N = a.order
    zero = XPoly._raw(()) if any(isinstance(c, XPoly) for c in a.coeffs + b.coeffs) else Fraction(0)
    out = []
    for n in range(N + 1):
        acc = None
        for k in range(n + 1):
            ak, bk = a.coeffs[k], b.coeffs[n - k]
            if not ak or not bk:
                continue
            term = ak * bk
            c = comb(n, k)
            if c != 1:
                term = term * c
            acc = term if acc is None else acc + term
        out.append(zero if acc is None else acc)
    return EgfSeries._raw(out)


def series_inv(a: EgfSeries) -> EgfSeries:
    """Multiplicative inverse; the constant coefficient must be a unit."""
    if any(isinstance(c, XPoly) for c in a.coeffs):
        raise UsageError("only scalar series can be inverted")
    inv0 = _scalar_inverse(a.coeffs[0])
    out = [inv0]
    for n in range(1, a.order + 1):
        acc: Scalar = Fraction(0)
        for k in range(1, n + 1):
            ak = a.coeffs[k]
            if ak:
                acc = acc + comb(n, k) * ak * out[n - k]
        out.append(-acc * inv0)
    return EgfSeries._raw(out)


def series_pow(a: EgfSeries, r: int) -> EgfSeries:
    """Integer power; ``r < 0`` goes through :func:`series_inv`."""
    if not isinstance(r, int):
        raise UsageError("series exponent must be an integer")
    if r < 0:
        a = series_inv(a)
        r = -r
    result = EgfSeries.one(a.order)
    base = a
    while r:
        if r & 1:
            result = series_mul(result, base)
        r >>= 1
        if r:
            base = series_mul(base, base)
    return result


def _ord_mul(a: list, b: list, N: int) -> list:
    out = [None] * (N + 1)
    for i, ai in enumerate(a[: N + 1]):
        if not ai:
            continue
        for j in range(0, N + 1 - i):
            bj = b[j]
            if not bj:
                continue
            term = ai * bj
            out[i + j] = term if out[i + j] is None else out[i + j] + term
    return [Fraction(0) if c is None else c for c in out]


def series_compose(a: EgfSeries, f: EgfSeries) -> EgfSeries:
    """Truncated composition ``a(f(t))`` for a delta (zero constant) series ``f``."""
    a._check(f)
    if f.coeffs[0]:
        raise UsageError("composition needs an inner series with zero constant term")
    if any(isinstance(c, XPoly) for c in f.coeffs):
        raise UsageError("the inner series of a composition must have scalar coefficients")
    N = a.order
    alpha = a.ordinary()
    phi = f.ordinary()
    # Horner in the ordinary basis: (((α_N) φ + α_{N-1}) φ + ...) + α_0
    acc: list = [alpha[N]] + [Fraction(0)] * N
    for k in range(N - 1, -1, -1):
        acc = _ord_mul(acc, phi, N)
        acc[0] = acc[0] + alpha[k]
    return EgfSeries._raw(c * factorial(n) for n, c in enumerate(acc))


def series_revert(f: EgfSeries) -> EgfSeries:
    """Compositional inverse of a delta series, by Lagrange inversion.

    With ``h(t) = t / f(t)`` the inverse ``g`` has ordinary coefficients
    ``[t^n] g = [t^{n-1}] h(t)^n / n``.
    """
    if any(isinstance(c, XPoly) for c in f.coeffs):
        raise UsageError("only scalar series can be reverted")
    if f.coeffs[0]:
        raise UsageError("reversion needs a delta series (zero constant term)")
    N = f.order
    if N == 0:
        return EgfSeries._raw((Fraction(0),))
    if not f.coeffs[1]:
        raise SingularSeriesError("delta series has a zero linear coefficient")
    phi = f.ordinary()
    # f(t)/t, ordinary, then its inverse h, all to order N-1
    q = phi[1:] + [Fraction(0)]
    inv0 = _scalar_inverse(q[0])
    h = [inv0]
    for n in range(1, N):
        acc: Scalar = Fraction(0)
        for k in range(1, n + 1):
            if q[k]:
                acc = acc + q[k] * h[n - k]
        h.append(-acc * inv0)
    g = [Fraction(0)] * (N + 1)
    hp = [Fraction(1)] + [Fraction(0)] * (N - 1)
    for n in range(1, N + 1):
        hp = _ord_mul(hp, h, N - 1)
        g[n] = hp[n - 1] / n
    return EgfSeries._raw(c * factorial(n) for n, c in enumerate(g))


# --------------------------------------------------------------------------
# exact division by powers of λ
# --------------------------------------------------------------------------


def _div_scalar(c: Scalar, k: int, lam) -> Scalar:
    if is_symbolic(lam):
        if isinstance(c, LambdaPoly):
            return c.div_lambda_power(k)
        if c and k:
            raise DivisibilityError(f"{c} is not divisible by λ^{k}")
        return c
    lam = Fraction(lam)
    if not lam:
        raise UsageError("cannot divide by λ^k with λ specialised to 0")
    return c / lam**k


def lambda_divide(p, k: int, lam=LAMBDA):
    """Exact quotient of a scalar, XPoly or EgfSeries by ``lam**k``.

    With symbolic ``λ`` every coefficient must vanish to order ``k`` in
    ``λ``; anything else means an upstream bug and raises
    :class:`DivisibilityError`.
    """
    if k < 0:
        raise UsageError("k must be nonnegative")
    if isinstance(p, XPoly):
        return XPoly(_div_scalar(c, k, lam) for c in p.coeffs)
    if isinstance(p, EgfSeries):
        return EgfSeries(lambda_divide(c, k, lam) for c in p.coeffs)
    return _div_scalar(as_scalar(p), k, lam)
