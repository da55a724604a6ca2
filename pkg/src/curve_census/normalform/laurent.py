"""Laurent polynomials in the jet symbols f_ij, exact over the rationals.

The elimination procedures only ever divide by a single pivot (``f02`` for the
A-series, ``f12`` for the D-series), so every symbolic invariant is a
polynomial in the jet divided by a monomial.  That closed class is all this
module supports; dividing by anything but a monomial raises.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Iterable, Mapping, Union

Var = tuple[int, int]  # (i, j) names f_ij
Mono = tuple[tuple[Var, int], ...]  # sorted (var, exponent), exponents may be negative


class NonMonomialDivision(ArithmeticError):
    pass


def _mono_mul(a: Mono, b: Mono) -> Mono:
    acc = dict(a)
    for v, e in b:
        acc[v] = acc.get(v, 0) + e
    return tuple(sorted((v, e) for v, e in acc.items() if e))


class Laurent:
    __slots__ = ("_t",)

    def __init__(self, terms: Mapping[Mono, Fraction] | None = None):
        self._t = {m: Fraction(c) for m, c in (terms or {}).items() if c}

    @classmethod
    def var(cls, i: int, j: int) -> "Laurent":
        return cls({(((i, j), 1),): Fraction(1)})

    @classmethod
    def const(cls, c) -> "Laurent":
        return cls({(): Fraction(c)})

    @property
    def terms(self) -> dict[Mono, Fraction]:
        return dict(self._t)

    def __bool__(self) -> bool:
        return bool(self._t)

    @staticmethod
    def _lift(other) -> "Laurent":
        if isinstance(other, Laurent):
            return other
        if isinstance(other, (int, Fraction)):
            return Laurent.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out = dict(self._t)
        for m, c in other._t.items():
            out[m] = out.get(m, 0) + c
        return Laurent(out)

    __radd__ = __add__

    def __neg__(self):
        return Laurent({m: -c for m, c in self._t.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Laurent({m: c * other for m, c in self._t.items()})
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out: dict[Mono, Fraction] = {}
        for m1, c1 in self._t.items():
            for m2, c2 in other._t.items():
                m = _mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return Laurent(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Laurent":
        if e < 0:
            return Laurent.const(1) / self ** (-e)
        out = Laurent.const(1)
        for _ in range(e):
            out = out * self
        return out

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return Laurent({m: c / other for m, c in self._t.items()})
        other = self._lift(other)
        if len(other._t) != 1:
            raise NonMonomialDivision("only division by a monomial is supported")
        (m, c), = other._t.items()
        inv = tuple((v, -e) for v, e in m)
        return Laurent({_mono_mul(k, inv): v / c for k, v in self._t.items()})

    def __rtruediv__(self, other):
        return Laurent.const(other) / self

    def __eq__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return False
        return self._t == other._t

    def __hash__(self):
        return hash(frozenset(self._t.items()))

    def subs(self, values: Mapping[Var, Union[int, Fraction]]) -> Union[Fraction, "Laurent"]:
        """Substitute numbers for some symbols; returns a Fraction when none remain."""
        out: dict[Mono, Fraction] = {}
        for m, c in self._t.items():
            rest = []
            for v, e in m:
                if v in values:
                    c = c * Fraction(values[v]) ** e
                else:
                    rest.append((v, e))
            key = tuple(rest)
            out[key] = out.get(key, 0) + c
        res = Laurent(out)
        if all(not m for m in res._t):
            return res._t.get((), Fraction(0))
        return res

    def variables(self) -> set[Var]:
        return {v for m in self._t for v, _ in m}

    def __str__(self) -> str:
        return render(self)

    def __repr__(self) -> str:
        return f"Laurent({render(self)!r})"


def _factor(v: Var, e: int, prefix: str) -> str:
    name = f"{prefix}{v[0]}{v[1]}"
    return name if e == 1 else f"{name}^{e}"


def render(expr: Union[Laurent, Fraction, int], prefix: str = "f") -> str:
    """Terms like ``- 5*f31^2/(3*f12)``, ordered by denominator degree, then numerator."""
    if not isinstance(expr, Laurent):
        expr = Laurent.const(expr)
    if not expr:
        return "0"

    def sort_key(item):
        m, _ = item
        den = sum(-e for _, e in m if e < 0)
        return (den, tuple((v, e) for v, e in m if e > 0))

    pieces: list[str] = []
    for m, c in sorted(expr.terms.items(), key=sort_key):
        num = [_factor(v, e, prefix) for v, e in m if e > 0]
        den = [_factor(v, -e, prefix) for v, e in m if e < 0]
        mag = abs(c)
        if mag.numerator != 1 or not num:
            num.insert(0, str(mag.numerator))
        if mag.denominator != 1:
            den.insert(0, str(mag.denominator))
        body = "*".join(num)
        if den:
            body += "/" + (den[0] if len(den) == 1 else "(" + "*".join(den) + ")")
        if not pieces:
            pieces.append(body if c > 0 else f"-{body}")
        else:
            pieces.append(("+ " if c > 0 else "- ") + body)
    return " ".join(pieces)


def generic_jet(order: int, vanish: Iterable[Var] = ()):
    """Series whose Taylor coefficient at x^i y^j is ``f_ij/(i! j!)``; listed jets are forced to zero."""
    from curve_census.normalform.series import PowerSeries2

    zero = set(vanish)
    coeffs = {}
    for i in range(order + 1):
        for j in range(order + 1 - i):
            if (i, j) not in zero:
                coeffs[(i, j)] = Laurent.var(i, j) / (factorial(i) * factorial(j))
    return PowerSeries2(order, coeffs)


TWO_JET = ((0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2))
