"""Bivariate power series truncated at a total degree.

Coefficients are stored as Taylor coefficients ``c_ij`` (so the series is
``sum c_ij x^i y^j``); :meth:`PowerSeries2.rho` exposes the derivative
``rho_ij = i! j! c_ij``.  The coefficient type only needs ``+ - *`` and
division by the pivots used in the eliminations, so both
:class:`fractions.Fraction` and the symbolic :class:`Laurent` work.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial
from typing import Callable, Mapping, Optional, Sequence

Index = tuple[int, int]


class OrderMismatch(ValueError):
    pass


class PowerSeries2:
    __slots__ = ("order", "_c")

    def __init__(self, order: int, coeffs: Optional[Mapping[Index, object]] = None):
        if order < 0:
            raise ValueError("truncation order must be non-negative")
        self.order = order
        self._c = {}
        for (i, j), c in (coeffs or {}).items():
            if i < 0 or j < 0:
                raise ValueError(f"negative exponent {(i, j)}")
            if i + j <= order and c:
                self._c[(i, j)] = c if not isinstance(c, int) else Fraction(c)

    # construction -----------------------------------------------------------

    @classmethod
    def from_poly(cls, terms: Mapping[Index, object], order: int) -> "PowerSeries2":
        return cls(order, {k: Fraction(v) if isinstance(v, (int, str)) else v for k, v in terms.items()})

    @classmethod
    def x(cls, order: int) -> "PowerSeries2":
        return cls(order, {(1, 0): Fraction(1)})

    @classmethod
    def y(cls, order: int) -> "PowerSeries2":
        return cls(order, {(0, 1): Fraction(1)})

    @classmethod
    def const(cls, order: int, c) -> "PowerSeries2":
        return cls(order, {(0, 0): c})

    # access -----------------------------------------------------------------

    @property
    def coeffs(self) -> dict[Index, object]:
        return dict(self._c)

    def c(self, i: int, j: int):
        return self._c.get((i, j), 0)

    def rho(self, i: int, j: int):
        """``d^(i+j) rho / dx^i dy^j`` at the origin."""
        if i + j > self.order:
            raise IndexError(f"rho_{i}{j} lies beyond truncation order {self.order}")
        return self.c(i, j) * (factorial(i) * factorial(j))

    def is_zero(self) -> bool:
        return not self._c

    def min_degree(self) -> Optional[int]:
        return min((i + j for i, j in self._c), default=None)

    def restrict(self, order: int) -> "PowerSeries2":
        if order > self.order:
            raise OrderMismatch("cannot raise the truncation order")
        return PowerSeries2(order, self._c)

    def y_slice(self, j: int) -> list:
        """Coefficients of ``Z_j(x)``: the part of the series multiplying ``y^j``."""
        return [self.c(i, j) for i in range(self.order - j + 1)] if j <= self.order else []

    # arithmetic -------------------------------------------------------------

    def _same(self, other: "PowerSeries2") -> None:
        if not isinstance(other, PowerSeries2):
            raise TypeError("expected PowerSeries2")
        if other.order != self.order:
            raise OrderMismatch(f"orders {self.order} and {other.order} differ")

    def __add__(self, other: "PowerSeries2") -> "PowerSeries2":
        self._same(other)
        out = dict(self._c)
        for k, v in other._c.items():
            out[k] = out.get(k, 0) + v
        return PowerSeries2(self.order, out)

    def __neg__(self) -> "PowerSeries2":
        return PowerSeries2(self.order, {k: -v for k, v in self._c.items()})

    def __sub__(self, other: "PowerSeries2") -> "PowerSeries2":
        return self + (-other)

    def __mul__(self, other) -> "PowerSeries2":
        if not isinstance(other, PowerSeries2):
            return self.scale(other)
        self._same(other)
        n = self.order
        out: dict[Index, object] = {}
        for (i1, j1), a in self._c.items():
            room = n - i1 - j1
            for (i2, j2), b in other._c.items():
                if i2 + j2 <= room:
                    k = (i1 + i2, j1 + j2)
                    out[k] = out.get(k, 0) + a * b
        return PowerSeries2(n, out)

    def scale(self, s) -> "PowerSeries2":
        return PowerSeries2(self.order, {k: v * s for k, v in self._c.items()})

    __rmul__ = scale

    def __eq__(self, other) -> bool:
        if not isinstance(other, PowerSeries2):
            return NotImplemented
        return self.order == other.order and self._c == other._c

    def __repr__(self) -> str:
        body = " + ".join(f"({v})*x^{i}*y^{j}" for (i, j), v in sorted(self._c.items())) or "0"
        return f"PowerSeries2[{self.order}]({body})"

    # substitution -----------------------------------------------------------

    def compose(self, X: "PowerSeries2", Y: "PowerSeries2") -> "PowerSeries2":
        """``rho(X, Y)`` for series ``X, Y`` without constant term."""
        self._same(X)
        self._same(Y)
        if X.c(0, 0) or Y.c(0, 0):
            raise ValueError("substituted series must vanish at the origin")
        n = self.order
        xp = _powers(X, n)
        yp = _powers(Y, n)
        out = PowerSeries2(n)
        for (i, j), c in self._c.items():
            out = out + (xp[i] * yp[j]).scale(c)
        return out

    def linear_change(self, a, b, c, d) -> "PowerSeries2":
        """Substitute ``x -> a X + b Y`` and ``y -> c X + d Y``.

        Degree-preserving, so each homogeneous piece is expanded separately.
        """
        a, b, c, d = (Fraction(v) for v in (a, b, c, d))
        n = self.order
        if b == 0:
            return self._lower_triangular(a, c, d)
        if a == 0 and d == 0:
            out = {(j, i): coef * b**i * c**j for (i, j), coef in self._c.items()}
            return PowerSeries2(n, out)
        xp = _binary_powers(a, b, {i for i, _ in self._c})
        yp = _binary_powers(c, d, {j for _, j in self._c})
        out: dict[Index, object] = {}
        for (i, j), coef in self._c.items():
            # (aX+bY)^i (cX+dY)^j, lists indexed by the power of Y
            for s1, u in enumerate(xp[i]):
                if not u:
                    continue
                for s2, v in enumerate(yp[j]):
                    if v:
                        s = s1 + s2
                        key = (i + j - s, s)
                        out[key] = out.get(key, 0) + coef * (u * v)
        return PowerSeries2(n, out)

    def _lower_triangular(self, a: Fraction, c: Fraction, d: Fraction) -> "PowerSeries2":
        # x^i y^j -> a^i X^i (c X + d Y)^j: one binomial row per term
        yp = _binary_powers(c, d, {j for _, j in self._c})
        out: dict[Index, object] = {}
        for (i, j), coef in self._c.items():
            lead = coef * a**i
            for s, v in enumerate(yp[j]):
                if v:
                    key = (i + j - s, s)
                    out[key] = out.get(key, 0) + lead * v
        return PowerSeries2(self.order, out)

    def along(self, B: Sequence) -> list:
        """Univariate ``rho(x, B(x))`` with ``B[0] == 0``, truncated at x^order."""
        n = self.order
        if B and B[0]:
            raise ValueError("B must vanish at the origin")
        out = [0] * (n + 1)
        power = [1] + [0] * n  # B^j
        for j in range(n + 1):
            z = self.y_slice(j)
            low = _lowest(power)
            if low is None:
                break
            for i, zc in enumerate(z):
                if not zc:
                    continue
                for k in range(low, n + 1 - i):
                    if power[k]:
                        out[i + k] = out[i + k] + zc * power[k]
            power = umul(power, B, n)
        return out


def _lowest(seq: Sequence) -> Optional[int]:
    for k, v in enumerate(seq):
        if v:
            return k
    return None


def _binary_powers(p: Fraction, q: Fraction, exponents: set[int]) -> dict[int, list]:
    """Coefficients of ``(p X + q Y)^e`` by power of ``Y``, for each requested ``e``."""
    top = max(exponents, default=0)
    pp = [Fraction(1)]
    qp = [Fraction(1)]
    for _ in range(top):
        pp.append(pp[-1] * p)
        qp.append(qp[-1] * q)
    return {e: [comb(e, s) * pp[e - s] * qp[s] if pp[e - s] and qp[s] else 0 for s in range(e + 1)] for e in exponents}


def _powers(P: PowerSeries2, n: int) -> list[PowerSeries2]:
    out = [PowerSeries2.const(n, Fraction(1))]
    for _ in range(n):
        out.append(out[-1] * P)
    return out


def umul(a: Sequence, b: Sequence, n: int) -> list:
    """Product of univariate series truncated at degree ``n``."""
    out = [0] * (n + 1)
    for i, x in enumerate(a[: n + 1]):
        if not x:
            continue
        for j, y in enumerate(b[: n + 1 - i]):
            if y:
                out[i + j] = out[i + j] + x * y
    return out


def ps_compose_x(rho: PowerSeries2, g: Sequence, which: str = "x", cap: Optional[int] = None) -> PowerSeries2:
    """Shift one variable by a series in the other.

    ``which="x"``: ``x -> x1 + g(y)``; ``which="y"``: ``y -> y1 + g(x)``.
    ``g`` is a coefficient list with ``g[0] == 0``.  Expands
    ``(x1 + g)^i`` binomially against univariate powers of ``g``.  With
    ``cap`` only terms whose degree in the shifting variable is ``<= cap``
    are produced (callers that need a thin slice avoid huge powers of g).
    """
    if which not in ("x", "y"):
        raise ValueError("which must be 'x' or 'y'")
    n = rho.order
    if g and g[0]:
        raise ValueError("g must have zero constant term")
    top = n if cap is None else min(cap, n)
    g = list(g[: top + 1])
    gp = [[1] + [0] * top]
    for _ in range(n):
        gp.append(umul(gp[-1], g, top))
    out: dict[Index, object] = {}
    for (i, j), c in rho.coeffs.items():
        e, other = (i, j) if which == "x" else (j, i)
        for r in range(e + 1):
            power = gp[e - r]
            scale = c * comb(e, r)
            if other > top:
                continue
            for s, v in enumerate(power[: min(n - r, top) + 1 - other]):
                if v:
                    key = (r, other + s) if which == "x" else (other + s, r)
                    out[key] = out.get(key, 0) + scale * v
    return PowerSeries2(n, out)


def divide_by_x(rho: PowerSeries2) -> PowerSeries2:
    """Exact quotient by ``x``; the ``x^0`` column must vanish identically."""
    rest = [(j, c) for (i, j), c in rho.coeffs.items() if i == 0]
    if rest:
        raise ArithmeticError(f"series is not divisible by x (y^{rest[0][0]} term present)")
    return PowerSeries2(rho.order - 1, {(i - 1, j): c for (i, j), c in rho.coeffs.items()})


def map_coeffs(rho: PowerSeries2, fn: Callable) -> PowerSeries2:
    return PowerSeries2(rho.order, {k: fn(v) for k, v in rho.coeffs.items()})
