"""The ring H*(D x PT P^2) on generators y, a, lam.

Relations: ``a^3 = 0`` and ``lam^2 = -3*a*lam - 3*a^2`` (the projectivised
tangent bundle of P^2 with c(TP^2) = (1 + a)^3).  Coefficients are
:class:`~curve_census.algebra.DPoly`, so ``d`` may appear symbolically.

``y`` is a free generator with small explicit exponents.  The huge power
``y^(delta_d - c)`` needed to reach the top degree never appears inside a
class: :func:`pair` reads the coefficient of ``y^c`` instead.
"""

from __future__ import annotations

import enum
from typing import Iterable, Mapping, Union

from curve_census.algebra import DPoly

Key = tuple[int, int, int]  # (y power, a power, lam power)
Coef = Union[int, DPoly]


class NegativeDeficit(ValueError):
    pass


class Base(enum.Enum):
    """Space the pairing is taken over (besides the factor D)."""

    P2 = "P2"
    PTP2 = "PTP2"

    @property
    def fibre_dim(self) -> int:
        return 2 if self is Base.P2 else 3


def _reduce(raw: Mapping[Key, DPoly]) -> dict[Key, DPoly]:
    """Rewrite with a^3 -> 0 and lam^2 -> -3 a lam - 3 a^2 until canonical."""
    work = dict(raw)
    out: dict[Key, DPoly] = {}
    while work:
        (p, j, l), c = work.popitem()
        if c.is_zero() or j >= 3:
            continue
        if l >= 2:
            for key, factor in (((p, j + 1, l - 1), -3), ((p, j + 2, l - 2), -3)):
                if key[1] < 3:
                    work[key] = work.get(key, DPoly()) + c * factor
            continue
        acc = out.get((p, j, l), DPoly()) + c
        if acc.is_zero():
            out.pop((p, j, l), None)
        else:
            out[(p, j, l)] = acc
    return out


class CohClass:
    """Immutable reduced class ``sum c_k * y^p a^j lam^l`` with ``j <= 2`` and ``l <= 1``."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Key, Coef] | None = None):
        raw: dict[Key, DPoly] = {}
        for key, c in (terms or {}).items():
            p, j, l = key
            if min(p, j, l) < 0:
                raise ValueError(f"negative exponent in {key}")
            c = c if isinstance(c, DPoly) else DPoly.const(c)
            raw[key] = raw.get(key, DPoly()) + c
        self._terms = _reduce(raw)

    # generators -------------------------------------------------------------

    @classmethod
    def const(cls, c: Coef) -> "CohClass":
        return cls({(0, 0, 0): c})

    @classmethod
    def y(cls) -> "CohClass":
        return cls({(1, 0, 0): 1})

    @classmethod
    def a(cls) -> "CohClass":
        return cls({(0, 1, 0): 1})

    @classmethod
    def lam(cls) -> "CohClass":
        return cls({(0, 0, 1): 1})

    @classmethod
    def monomial(cls, p: int, j: int, l: int, c: Coef = 1) -> "CohClass":
        return cls({(p, j, l): c})

    # accessors --------------------------------------------------------------

    @property
    def terms(self) -> dict[Key, DPoly]:
        return dict(self._terms)

    def coefficient(self, key: Key) -> DPoly:
        return self._terms.get(key, DPoly())

    def is_zero(self) -> bool:
        return not self._terms

    def degrees(self) -> set[int]:
        return {sum(k) for k in self._terms}

    def degree(self) -> int:
        """Cohomological (complex) degree of a homogeneous class; 0 for the zero class."""
        degs = self.degrees()
        if len(degs) > 1:
            raise ValueError(f"class {self} is not homogeneous")
        return degs.pop() if degs else 0

    def has_lambda(self) -> bool:
        return any(l for (_, _, l) in self._terms)

    # arithmetic -------------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "CohClass":
        if isinstance(other, CohClass):
            return other
        if isinstance(other, (int, DPoly)):
            return CohClass.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        merged = dict(self._terms)
        for k, c in other._terms.items():
            merged[k] = merged.get(k, DPoly()) + c
        return CohClass(merged)

    __radd__ = __add__

    def __neg__(self):
        return CohClass({k: -c for k, c in self._terms.items()})

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
        raw: dict[Key, DPoly] = {}
        for (p1, j1, l1), c1 in self._terms.items():
            for (p2, j2, l2), c2 in other._terms.items():
                key = (p1 + p2, j1 + j2, l1 + l2)
                raw[key] = raw.get(key, DPoly()) + c1 * c2
        return CohClass(raw)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "CohClass":
        if e < 0:
            raise ValueError("negative power")
        out = CohClass.const(1)
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    # rendering --------------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for key in sorted(self._terms):
            parts.append(f"({self._terms[key]})·{_monomial_str(key)}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"CohClass({str(self)!r})"


def _monomial_str(key: Key) -> str:
    names = []
    for sym, e in zip(("y", "a", "λ"), key):
        if e == 1:
            names.append(sym)
        elif e > 1:
            names.append(f"{sym}^{e}")
    return " ".join(names) if names else "1"


def product(factors: Iterable[CohClass]) -> CohClass:
    out = CohClass.const(1)
    for f in factors:
        out = out * f
    return out


def pair(cls: CohClass, base: Base, y_deficit_codim: int) -> DPoly:
    """Evaluate ``y^(delta_d - c) * cls`` on the fundamental class of ``D x base``.

    Only the monomial ``y^c a^2`` (over P^2) or ``y^c a^2 lam`` (over PT P^2)
    survives; ``c`` is ``y_deficit_codim``.
    """
    if y_deficit_codim < 0:
        raise NegativeDeficit(f"y deficit {y_deficit_codim} < 0")
    if base is Base.P2:
        if cls.has_lambda():
            raise ValueError("a class over D x P^2 cannot involve lam")
        return cls.coefficient((y_deficit_codim, 2, 0))
    return cls.coefficient((y_deficit_codim, 2, 1))


Y = CohClass.y()
A = CohClass.a()
LAM = CohClass.lam()
