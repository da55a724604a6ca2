"""Univariate polynomials in the degree symbol ``d`` over exact rationals.

Rationals are :class:`fractions.Fraction`; every polynomial is stored as a
dense ascending coefficient tuple with no trailing zeros.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

Scalar = Union[int, Fraction]


class NonIntegralDivision(ArithmeticError):
    """Raised when an exact integer division of a polynomial is impossible."""


def _trim(coeffs: Sequence[Fraction]) -> tuple[Fraction, ...]:
    end = len(coeffs)
    while end and coeffs[end - 1] == 0:
        end -= 1
    return tuple(coeffs[:end])


class DPoly:
    """Immutable polynomial in ``d`` with :class:`Fraction` coefficients.

    ``DPoly([3, -6, 3])`` is ``3*d^2 - 6*d + 3`` (ascending powers).
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        object.__setattr__(self, "_c", _trim([Fraction(c) for c in coeffs]))

    def __setattr__(self, name, value):
        raise AttributeError("DPoly is immutable")

    @classmethod
    def const(cls, c: Scalar) -> "DPoly":
        return cls([c])

    @classmethod
    def linear(cls, c0: Scalar, c1: Scalar) -> "DPoly":
        """``c1*d + c0``."""
        return cls([c0, c1])

    @classmethod
    def d(cls) -> "DPoly":
        return cls([0, 1])

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._c

    @property
    def degree(self) -> int:
        """Degree, with ``-1`` for the zero polynomial."""
        return len(self._c) - 1

    def is_zero(self) -> bool:
        return not self._c

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self._c)

    def __getitem__(self, k: int) -> Fraction:
        return self._c[k] if 0 <= k < len(self._c) else Fraction(0)

    # arithmetic -------------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "DPoly":
        if isinstance(other, DPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return DPoly([other])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = max(len(self._c), len(other._c))
        return DPoly([self[k] + other[k] for k in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return DPoly([-c for c in self._c])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self._c or not other._c:
            return DPoly()
        out = [Fraction(0)] * (len(self._c) + len(other._c) - 1)
        for i, a in enumerate(self._c):
            if a == 0:
                continue
            for j, b in enumerate(other._c):
                out[i + j] += a * b
        return DPoly(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return self._c == other._c

    def __hash__(self):
        return hash(self._c)

    def __call__(self, d_value: Scalar) -> Fraction:
        return self.eval(d_value)

    def eval(self, d_value: Scalar) -> Fraction:
        """Horner evaluation at ``d = d_value``."""
        acc = Fraction(0)
        for c in reversed(self._c):
            acc = acc * d_value + c
        return acc

    def div_exact(self, c: int) -> "DPoly":
        """Divide by the integer ``c``; every coefficient must be an integer multiple of ``c``."""
        if c == 0:
            raise ZeroDivisionError("division of a DPoly by zero")
        for coef in self._c:
            if coef.denominator != 1 or coef.numerator % c:
                raise NonIntegralDivision(f"{self} is not divisible by {c} over the integers")
        return DPoly([coef / c for coef in self._c])

    # rendering --------------------------------------------------------------

    def __str__(self) -> str:
        if not self._c:
            return "0"
        parts: list[str] = []
        for k in range(len(self._c) - 1, -1, -1):
            c = self._c[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            if k == 0:
                body = _fmt_rational(mag)
            else:
                mono = "d" if k == 1 else f"d^{k}"
                body = mono if mag == 1 else f"{_fmt_rational(mag)}*{mono}"
            if not parts:
                parts.append(body if sign == "+" else f"-{body}")
            else:
                parts.append(f"{sign} {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"DPoly({str(self)!r})"


def _fmt_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def parse_dpoly(text: str) -> DPoly:
    """Inverse of ``str(DPoly)`` for the canonical rendering."""
    s = text.replace(" ", "")
    if s == "0":
        return DPoly()
    if s[0] not in "+-":
        s = "+" + s
    terms: list[str] = []
    start = 0
    for i in range(1, len(s)):
        if s[i] in "+-":
            terms.append(s[start:i])
            start = i
    terms.append(s[start:])
    coeffs: dict[int, Fraction] = {}
    for term in terms:
        sign = -1 if term[0] == "-" else 1
        body = term[1:]
        if "d" in body:
            head, _, mono = body.rpartition("*") if "*" in body else ("", "", body)
            power = int(mono[2:]) if mono.startswith("d^") else 1
            mag = Fraction(head) if head else Fraction(1)
        else:
            power, mag = 0, Fraction(body)
        coeffs[power] = coeffs.get(power, Fraction(0)) + sign * mag
    top = max(coeffs) if coeffs else -1
    return DPoly([coeffs.get(k, 0) for k in range(top + 1)])


D = DPoly.d()
ONE = DPoly.const(1)
ZERO = DPoly()
