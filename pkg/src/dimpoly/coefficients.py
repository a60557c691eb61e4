"""Exact coefficient arithmetic: rationals and univariate rational functions.

A coefficient is either a ``fractions.Fraction`` or a :class:`RationalFunction`
(a reduced quotient of univariate polynomials over Q in one named symbolic
parameter).  Arithmetic between the two promotes the Fraction to a constant
and re-normalizes; results that turn out constant collapse back to Fraction,
so Fraction is the canonical form of every constant value.

All values are immutable and safe to share between threads.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

__all__ = [
    "Coeff",
    "CoefficientError",
    "PoleError",
    "RationalFunction",
    "as_coeff",
    "coeff_str",
    "evaluate",
    "inverse",
    "parameter_symbol",
]


class CoefficientError(ValueError):
    """Ill-formed coefficient arithmetic (e.g. mismatched parameter names)."""


class PoleError(ZeroDivisionError):
    """Evaluation point annihilates a denominator."""


# Dense univariate polynomial over Q: tuple of Fractions, ascending powers,
# no trailing zeros.  The zero polynomial is the empty tuple.
_Poly = tuple


def _trim(coeffs) -> _Poly:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def _const(x) -> _Poly:
    x = Fraction(x)
    return (x,) if x else ()


def _add(a: _Poly, b: _Poly) -> _Poly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return _trim(out)


def _neg(a: _Poly) -> _Poly:
    return tuple(-c for c in a)


def _mul(a: _Poly, b: _Poly) -> _Poly:
    if not a or not b:
        return ()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    return _trim(out)


def _divmod(a: _Poly, b: _Poly) -> tuple[_Poly, _Poly]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    quot = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    rem = list(a)
    dlead = b[-1]
    while len(rem) >= len(b) and _trim(rem):
        rem = list(_trim(rem))
        if len(rem) < len(b):
            break
        shift = len(rem) - len(b)
        factor = rem[-1] / dlead
        quot[shift] = factor
        for i, c in enumerate(b):
            rem[shift + i] -= factor * c
        rem.pop()
    return _trim(quot), _trim(rem)


def _monic(a: _Poly) -> _Poly:
    if not a or a[-1] == 1:
        return a
    lead = a[-1]
    return tuple(c / lead for c in a)


def _gcd(a: _Poly, b: _Poly) -> _Poly:
    while b:
        a, b = b, _divmod(a, b)[1]
    return _monic(a)


def _eval(a: _Poly, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * x + c
    return acc


def _poly_str(a: _Poly, name: str) -> str:
    """Render a univariate polynomial, descending powers, explicit '*'."""
    if not a:
        return "0"
    parts = []
    for k in range(len(a) - 1, -1, -1):
        c = a[k]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            var = name if k == 1 else f"{name}^{k}"
            body = var if mag == 1 else f"{mag}*{var}"
        parts.append((sign, body))
    text = parts[0][1] if parts[0][0] == "+" else "-" + parts[0][1]
    for sign, body in parts[1:]:
        text += sign + body
    return text


def _n_terms(a: _Poly) -> int:
    return sum(1 for c in a if c != 0)


class RationalFunction:
    """Reduced quotient of univariate polynomials over Q in one parameter.

    Invariants: denominator is nonzero and monic, gcd(num, den) = 1.
    Constant values normally never appear as RationalFunction: arithmetic
    collapses them to Fraction.
    """

    __slots__ = ("parameter", "num", "den")

    def __init__(self, parameter: str, num, den=(Fraction(1),)):
        num = _trim(Fraction(c) for c in num)
        den = _trim(Fraction(c) for c in den)
        if not den:
            raise ZeroDivisionError("zero denominator in rational function")
        g = _gcd(num, den)
        if len(g) > 1:
            num = _divmod(num, g)[0]
            den = _divmod(den, g)[0]
        lead = den[-1]
        if lead != 1:
            num = tuple(c / lead for c in num)
            den = tuple(c / lead for c in den)
        object.__setattr__(self, "parameter", parameter)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RationalFunction is immutable")

    # -- structure ---------------------------------------------------------

    def is_constant(self) -> bool:
        return len(self.num) <= 1 and self.den == (Fraction(1),)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise CoefficientError(f"{self!r} is not constant")
        return self.num[0] if self.num else Fraction(0)

    def _coerce(self, other) -> "RationalFunction | None":
        if isinstance(other, RationalFunction):
            if other.parameter != self.parameter:
                raise CoefficientError(
                    f"parameter mismatch: {self.parameter!r} vs {other.parameter!r}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return RationalFunction(self.parameter, _const(other))
        return None

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        num = _add(_mul(self.num, o.den), _mul(o.num, self.den))
        return _build(self.parameter, num, _mul(self.den, o.den))

    __radd__ = __add__

    def __neg__(self):
        return _build(self.parameter, _neg(self.num), self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return _build(self.parameter, _mul(self.num, o.num), _mul(self.den, o.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o.num:
            raise ZeroDivisionError("division by zero coefficient")
        return _build(self.parameter, _mul(self.num, o.den), _mul(self.den, o.num))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise CoefficientError("coefficient powers must be nonnegative integers")
        out: Coeff = Fraction(1)
        for _ in range(k):
            out = out * self
        return out

    # -- comparisons -------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, RationalFunction):
            return (
                self.parameter == other.parameter
                and self.num == other.num
                and self.den == other.den
            )
        if isinstance(other, (int, Fraction)):
            return self.is_constant() and self.constant_value() == other
        return NotImplemented

    def __hash__(self):
        if self.is_constant():
            return hash(self.constant_value())
        return hash((self.parameter, self.num, self.den))

    def __bool__(self):
        return bool(self.num)

    def __repr__(self):
        return f"RationalFunction({coeff_str(self)!r})"

    def __str__(self):
        return coeff_str(self)


def _build(parameter: str, num, den):
    """Normalize, collapsing constants to Fraction."""
    rf = RationalFunction(parameter, num, den)
    if rf.is_constant():
        return rf.constant_value()
    return rf


Coeff = Union[Fraction, RationalFunction]


def parameter_symbol(name: str) -> RationalFunction:
    """The rational function consisting of the bare parameter."""
    return RationalFunction(name, (Fraction(0), Fraction(1)))


def as_coeff(x) -> Coeff:
    if isinstance(x, RationalFunction):
        return x
    return Fraction(x)


def inverse(c: Coeff) -> Coeff:
    if isinstance(c, RationalFunction):
        return 1 / c
    if c == 0:
        raise ZeroDivisionError("division by zero coefficient")
    return Fraction(1) / Fraction(c)


def evaluate(c: Coeff, value) -> Fraction:
    """Substitute ``value`` for the parameter, returning an exact rational."""
    if isinstance(c, RationalFunction):
        value = Fraction(value)
        den = _eval(c.den, value)
        if den == 0:
            raise PoleError(f"pole of {c} at {c.parameter}={value}")
        return _eval(c.num, value) / den
    return Fraction(c)


def coeff_str(c: Coeff) -> str:
    """Decimal-free exact rendering, e.g. ``(2*a+2)/a`` or ``-7/2``."""
    if isinstance(c, RationalFunction):
        num = _poly_str(c.num, c.parameter)
        if c.den == (Fraction(1),):
            return num
        if _n_terms(c.num) > 1 or any(x.denominator != 1 for x in c.num):
            num = f"({num})"
        den = _poly_str(c.den, c.parameter)
        if _n_terms(c.den) > 1:
            den = f"({den})"
        return f"{num}/{den}"
    return str(Fraction(c))
