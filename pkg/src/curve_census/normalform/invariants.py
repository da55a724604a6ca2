"""The A- and D-series obstruction invariants and the auxiliary discriminants.

``a_invariants`` eliminates the ``y``-linear part with ``y -> y1 + B(x)`` and
reads ``A_k = k! [x^k] rho(x, B(x))``.  ``d_invariants`` first removes every
pure power of ``y`` with ``x -> x1 + y H(y)``, divides by ``x1``, and then
runs the same elimination on the quotient: ``D_j = (j-2)! [x1^(j-3)]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial
from typing import Optional

from curve_census.normalform.series import PowerSeries2, divide_by_x, ps_compose_x, umul


class DegenerateQuadratic(ValueError):
    """rho_02 = 0: the quadratic part does not single out a direction."""


class DegenerateCubic(ValueError):
    """rho_12 = 0: the D-series elimination does not apply."""


class TruncationTooLow(ValueError):
    pass


@dataclass(frozen=True)
class Invariants:
    """``values[k]`` is the k-th invariant of a series (A_3.. or D_6..)."""

    series: str
    values: dict

    def __getitem__(self, k: int):
        return self.values[k]

    def first_nonzero(self) -> Optional[int]:
        for k in sorted(self.values):
            if self.values[k]:
                return k
        return None


def solve_b(rho: PowerSeries2) -> list:
    """``B(x)`` with ``B(0) = 0`` and ``d rho/dy (x, B(x)) = 0`` to the truncation order."""
    n = rho.order
    pivot = 2 * rho.c(0, 2)
    if not pivot:
        raise DegenerateQuadratic("rho_02 = 0")
    # F(B) = sum_j j Z_j(x) B^(j-1); its x^k coefficient is pivot*b_k + (terms in b_<k)
    slices = [rho.y_slice(j) for j in range(n + 1)]
    B = [0] * (n + 1)
    for k in range(1, n + 1):
        residual = _derivative_along(slices, B, k, n)
        B[k] = -residual / pivot
    return B


def _derivative_along(slices: list, B: list, k: int, n: int):
    """``[x^k] sum_j j Z_j(x) B(x)^(j-1)`` using only ``B`` up to degree ``k``."""
    total = 0
    power = [1] + [0] * k
    for j in range(1, n + 1):
        z = slices[j]
        for i in range(min(k, len(z) - 1) + 1):
            if z[i] and power[k - i]:
                total = total + j * z[i] * power[k - i]
        power = umul(power, B[: k + 1], k)
        if not any(power):
            break
    return total


def a_invariants(rho: PowerSeries2, K: int) -> Invariants:
    if K + 2 > rho.order:
        raise TruncationTooLow(f"A_{K} needs truncation order >= {K + 2}, have {rho.order}")
    B = solve_b(rho)
    z0 = rho.along(B)
    return Invariants("A", {k: factorial(k) * z0[k] for k in range(3, K + 1)})


def solve_h(rho: PowerSeries2, terms: Optional[int] = None) -> list:
    """``H(y)`` with ``rho(y H(y), y) = 0`` to the truncation order.

    ``terms`` limits the output to ``h_0 .. h_(terms-1)``.
    """
    n = rho.order
    pivot = rho.c(1, 2)
    if not pivot:
        raise DegenerateCubic("rho_12 = 0")
    H = [0] * max(n - 2, 1)
    if terms is not None:
        H = H[: max(terms, 1)]
    for k in range(len(H)):
        # y^(k+3) coefficient is pivot*h_k + (terms in h_<k)
        H[k] = 0
        residual = _along_x(rho, H, k + 3)
        H[k] = -residual / pivot
    return H


def _along_x(rho: PowerSeries2, H: list, deg: int):
    """``[y^deg] rho(y H(y), y)``."""
    G = [0] + list(H)  # G = y H
    total = 0
    power = [1] + [0] * deg  # G^i
    for i in range(deg + 1):
        for j in range(deg + 1 - i):
            c = rho.c(i, j)
            if c and power[deg - j]:
                total = total + c * power[deg - j]
        power = umul(power, G, deg)
        if not any(power):
            break
    return total


def residual_h(rho: PowerSeries2, H: list) -> list:
    return [_along_x(rho, H, k) for k in range(rho.order + 1)]


def d_invariants(rho: PowerSeries2, K: int) -> Invariants:
    if K + 2 > rho.order:
        raise TruncationTooLow(f"D_{K} needs truncation order >= {K + 2}, have {rho.order}")
    # B = O(x1^2), so g_ij reaches D_K only when i + 2j <= K - 3: y-degree is capped
    cap = max(2, (K - 3) // 2)  # the y^2 term of g is the pivot of the B solve
    H = solve_h(rho, terms=cap)
    G = [0] + H
    shifted = ps_compose_x(rho, G, "x", cap=cap)
    g = divide_by_x(shifted)
    B = solve_b(g)
    z0 = g.along(B)
    return Invariants("D", {j: factorial(j - 2) * z0[j - 3] for j in range(6, K + 1)})


@dataclass(frozen=True)
class DualQuantities:
    psi_d5_dual: object
    psi_d6_dual: object
    psi_j: object
    beta_cubic: object


def beta_cubic(rho: PowerSeries2):
    """Discriminant-type invariant of the cubic part; zero iff the cubic has a repeated factor."""
    f30, f21, f12, f03 = rho.rho(3, 0), rho.rho(2, 1), rho.rho(1, 2), rho.rho(0, 3)
    return (
        f30 * f30 * f03 * f03
        - 6 * f03 * f12 * f21 * f30
        + 4 * f12 ** 3 * f30
        + 4 * f03 * f21 ** 3
        - 3 * f12 * f12 * f21 * f21
    )


def dual_quantities(rho: PowerSeries2) -> DualQuantities:
    f = rho.rho
    psi_d5 = 3 * f(1, 2) ** 2 - 4 * f(2, 1) * f(0, 3)
    psi_d6 = (
        f(1, 2) ** 4 * f(4, 0)
        - 8 * f(1, 2) ** 3 * f(2, 1) * f(3, 1)
        + 24 * f(1, 2) ** 2 * f(2, 1) ** 2 * f(2, 2)
        - 32 * f(1, 2) * f(2, 1) ** 3 * f(1, 3)
        + 16 * f(2, 1) ** 4 * f(0, 4)
    )
    psi_j = -(f(3, 1) ** 3) / 8 + 3 * f(2, 2) * f(3, 1) * f(4, 0) / 16 - f(1, 3) * f(4, 0) ** 2 / 16
    return DualQuantities(psi_d5, psi_d6, psi_j, beta_cubic(rho))
