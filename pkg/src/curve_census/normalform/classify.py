"""Decision tree assigning an ADE type to an explicit polynomial germ."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Mapping, Optional, Sequence, Union

from curve_census.normalform.invariants import a_invariants, beta_cubic, d_invariants
from curve_census.normalform.series import PowerSeries2

Rat = Union[int, Fraction, str]
DEFAULT_MAX_ORDER = 12


class NotOnCurve(ValueError):
    """The germ does not vanish at the requested point."""


class Kind(enum.Enum):
    A = "A"
    D = "D"
    E6 = "E6"
    E7 = "E7"
    PARTIAL_E8 = "E8?"
    PARTIAL_X8 = "X8?"
    UNRESOLVED = "Unresolved"


@dataclass(frozen=True)
class SingularityType:
    kind: Kind
    k: Optional[int] = None
    witness: Optional[str] = None  # name of the first non-vanishing invariant
    value: Optional[Fraction] = None
    order: Optional[int] = None  # truncation at which an Unresolved decision stalled

    @property
    def tag(self) -> str:
        if self.kind in (Kind.A, Kind.D):
            return f"{self.kind.value}{self.k}"
        if self.kind is Kind.UNRESOLVED:
            return f"Unresolved({self.order})"
        return self.kind.value

    def __str__(self) -> str:
        return self.tag

    def describe(self) -> str:
        if self.witness is None:
            return self.tag
        return f"{self.tag}  ({self.witness} = {self.value})"


def translate(terms: Mapping[tuple[int, int], Rat], point: Sequence[Rat]) -> dict[tuple[int, int], Fraction]:
    """Coefficients of ``p(x + x0, y + y0)``."""
    x0, y0 = (Fraction(v) for v in point)
    if not x0 and not y0:
        return {k: Fraction(c) for k, c in terms.items() if Fraction(c)}
    out: dict[tuple[int, int], Fraction] = {}
    for (i, j), c in terms.items():
        c = Fraction(c)
        if not c:
            continue
        for r in range(i + 1):
            cx = comb(i, r) * x0 ** (i - r)
            if not cx:
                continue
            for s in range(j + 1):
                cy = comb(j, s) * y0 ** (j - s)
                if cy:
                    out[(r, s)] = out.get((r, s), Fraction(0)) + c * cx * cy
    return {k: v for k, v in out.items() if v}


def _poly_gcd(p: list[Fraction], q: list[Fraction]) -> list[Fraction]:
    """Monic gcd of ascending coefficient lists over Q."""

    def trim(a):
        a = list(a)
        while a and a[-1] == 0:
            a.pop()
        return a

    p, q = trim(p), trim(q)
    while q:
        r = list(p)
        while len(r) >= len(q) and r:
            f = r[-1] / q[-1]
            shift = len(r) - len(q)
            for k, v in enumerate(q):
                r[k + shift] -= f * v
            r = trim(r)
        p, q = q, r
    return [c / p[-1] for c in p] if p else p


def repeated_direction(rho: PowerSeries2) -> tuple[Fraction, Fraction]:
    """A rational vector along a repeated linear factor of the cubic part."""
    c30, c21, c12, c03 = rho.c(3, 0), rho.c(2, 1), rho.c(1, 2), rho.c(0, 3)
    if c03 == 0 and c12 == 0:
        return Fraction(0), Fraction(1)
    p = [c30, c21, c12, c03]  # C(1, t)
    dp = [c21, 2 * c12, 3 * c03]
    g = _poly_gcd(p, dp)
    if len(g) == 2:
        return Fraction(1), -g[0]
    if len(g) == 3:  # (t - r)^2
        return Fraction(1), -g[1] / 2
    raise ArithmeticError("cubic has no repeated factor")


def _basis(v: tuple[Fraction, Fraction]) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    """``(a, b, c, d)`` with old x = a X + b Y, old y = c X + d Y and ``X`` along ``v``."""
    # rescaling v keeps the type; with v = (1, t) the change is a shear, with (0, 1) a swap
    if v[0] != 0:
        return Fraction(1), Fraction(0), Fraction(v[1]) / v[0], Fraction(1)
    return Fraction(0), Fraction(1), Fraction(1), Fraction(0)


def _ladder(max_order: int) -> list[int]:
    """Truncation orders to try; invariants found at a low order are final."""
    return [o for o in (6, 8, 10) if o < max_order] + [max_order]


def classify(
    germ: Union[PowerSeries2, Mapping[tuple[int, int], Rat]],
    point: Sequence[Rat] = (0, 0),
    max_order: int = DEFAULT_MAX_ORDER,
) -> SingularityType:
    if isinstance(germ, PowerSeries2):
        terms = germ.coeffs
    else:
        terms = dict(germ)
    local = translate(terms, point)
    if local.get((0, 0)):
        raise NotOnCurve(f"germ takes the value {local[(0, 0)]} at {tuple(point)}")
    rho = PowerSeries2(max_order, local)

    fx, fy = rho.rho(1, 0), rho.rho(0, 1)
    if fx or fy:
        return SingularityType(Kind.A, 0, "rho10" if fx else "rho01", fx or fy)
    r20, r11, r02 = rho.rho(2, 0), rho.rho(1, 1), rho.rho(0, 2)
    det = r20 * r02 - r11 * r11
    if det:
        return SingularityType(Kind.A, 1, "det Hessian", det)
    if r20 or r11 or r02:
        v = (r11, -r20) if (r11 or r20) else (Fraction(1), Fraction(0))
        basis = _basis(v)
        for order in _ladder(max_order):
            inv = a_invariants(rho.restrict(order).linear_change(*basis), order - 2)
            first = inv.first_nonzero()
            if first is not None:
                return SingularityType(Kind.A, first - 1, f"A{first}", inv[first])
        return SingularityType(Kind.UNRESOLVED, order=max_order)

    beta = beta_cubic(rho)
    if beta:
        return SingularityType(Kind.D, 4, "beta", beta)
    if not any(rho.c(i, 3 - i) for i in range(4)):
        return SingularityType(Kind.PARTIAL_X8)
    basis = _basis(repeated_direction(rho))
    turned = rho.restrict(min(max_order, 4)).linear_change(*basis)
    if turned.c(3, 0) or turned.c(2, 1):
        raise ArithmeticError("rotation failed to align the repeated factor")
    if turned.rho(1, 2):
        for order in _ladder(max_order):
            inv = d_invariants(rho.restrict(order).linear_change(*basis), order - 2)
            first = inv.first_nonzero()
            if first is not None:
                return SingularityType(Kind.D, first - 1, f"D{first}", inv[first])
        return SingularityType(Kind.UNRESOLVED, order=max_order)
    if turned.rho(4, 0):
        return SingularityType(Kind.E6, witness="rho40", value=turned.rho(4, 0))
    if turned.rho(3, 1):
        return SingularityType(Kind.E7, witness="rho31", value=turned.rho(3, 1))
    return SingularityType(Kind.PARTIAL_E8)
