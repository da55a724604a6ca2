"""Independent reference implementations used only by the tests.

Everything here is built on sympy and transcribed directly from the source
formulas, without going through the package's own ring, bundle or series code.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

import sympy as sp

d, y, a, lam = sp.symbols("d y a lam")
X, Y_ = sp.symbols("x y")

# H*(PT P^2): a^3 = 0, lam^2 + 3 a lam + 3 a^2 = 0.  With lex lam > a the two
# relations already form a Groebner basis (coprime leading monomials).
RELATIONS = [lam**2 + 3 * a * lam + 3 * a**2, a**3]
RING_GENS = (lam, a, y, d)


def ring_reduce(expr):
    _, rem = sp.reduced(sp.expand(expr), RELATIONS, *RING_GENS, order="lex")
    return sp.expand(rem)


def to_sympy_dpoly(poly) -> sp.Expr:
    return sum((sp.Rational(c.numerator, c.denominator) * d**k for k, c in enumerate(poly.coeffs)), sp.Integer(0))


def coh_to_sympy(cls) -> sp.Expr:
    return sum(
        (to_sympy_dpoly(c) * y**p * a**j * lam**l for (p, j, l), c in cls.terms.items()),
        sp.Integer(0),
    )


# first Chern classes of the generators
C1_GAMMA_D = y
C1_GAMMA_P2_D = d * a
C1_TAUT = lam
C1_QUOT = -(3 * a + lam)  # c1(TP^2) = 3a, c1(taut^*) = lam


def c1(gd=0, gp=0, taut=0, quot=0):
    return gd * C1_GAMMA_D + gp * C1_GAMMA_P2_D + taut * C1_TAUT + quot * C1_QUOT


def euler_twisted_cotangent(t):
    """e(L (x) T^*P^2) for c1(L) = t; c(T^*P^2) = 1 - 3a + 3a^2."""
    return t**2 - 3 * a * t + 3 * a**2


# bundle Euler classes, transcribed from the bundle list
E = {
    "L_A0": c1(1, 1),
    "V_A1": euler_twisted_cotangent(c1(1, 1)),
    "V_PA2": euler_twisted_cotangent(c1(1, 1, 1)),
    "L_PA3": c1(1, 1, 3, 0),
    "L_PA4": c1(2, 2, 4, 2),
    "L_PD4": c1(1, 1, 0, 2),
    "L_PD5": c1(1, 1, 2, 1),
    "L_PD5_dual": c1(2, 2, 2, 4),
    "L_PD6": c1(1, 1, 4, 0),
    "L_PD7": c1(2, 2, 6, 2),
    "L_PE6": c1(1, 1, 1, 2),
}

# chains of sections cutting out each closure over D x PT P^2
CHAINS = {
    "A1#": ["L_A0", "V_A1"],
    "PA2": ["L_A0", "V_A1", "V_PA2"],
    "PA3": ["L_A0", "V_A1", "V_PA2", "L_PA3"],
    "PD4": ["L_A0", "V_A1", "V_PA2", "L_PA3", "L_PD4"],
    "PD5": ["L_A0", "V_A1", "V_PA2", "L_PA3", "L_PD4", "L_PD5"],
    "PD6": ["L_A0", "V_A1", "V_PA2", "L_PA3", "L_PD4", "L_PD5", "L_PD6"],
}
RANK = {name: (2 if name.startswith("V_") else 1) for name in E}


def tower_pairing(chain: str, extra: str | None, n: int, m: int) -> sp.Expr:
    """Coefficient of y^c a^2 lam in the product, c = codim - 3 + n + m."""
    names = CHAINS[chain] + ([extra] if extra else [])
    cls = sp.Integer(1)
    for nm in names:
        cls = ring_reduce(cls * E[nm])
    cls = ring_reduce(cls * a**n * lam**m)
    c = sum(RANK[nm] for nm in names) - 3 + n + m
    poly = sp.Poly(cls, lam, a, y)
    return sp.expand(poly.coeff_monomial(lam * a**2 * y**c))


# ----------------------------------------------------------------- closed forms


def f(i, j):
    return sp.Symbol(f"f{i}{j}")


def printed_A(k):
    f02, f03, f12, f13, f21, f22, f31, f32, f41, f51 = (
        f(0, 2), f(0, 3), f(1, 2), f(1, 3), f(2, 1), f(2, 2), f(3, 1), f(3, 2), f(4, 1), f(5, 1))
    forms = {
        3: f(3, 0),
        4: f(4, 0) - 3 * f21**2 / f02,
        5: f(5, 0) - 10 * f21 * f31 / f02 + 15 * f12 * f21**2 / f02**2,
        6: (f(6, 0) - 15 * f21 * f41 / f02 - 10 * f31**2 / f02 + 60 * f12 * f21 * f31 / f02**2
            + 45 * f21**2 * f22 / f02**2 - 15 * f03 * f21**3 / f02**3 - 90 * f12**2 * f21**2 / f02**3),
        7: (f(7, 0) - 21 * f21 * f51 / f02 - 35 * f31 * f41 / f02 + 105 * f12 * f21 * f41 / f02**2
            + 105 * f21**2 * f32 / f02**2 + 70 * f12 * f31**2 / f02**2 + 210 * f21 * f22 * f31 / f02**2
            - 105 * f03 * f21**2 * f31 / f02**3 - 420 * f12**2 * f21 * f31 / f02**3
            - 630 * f12 * f21**2 * f22 / f02**3 - 105 * f13 * f21**3 / f02**3
            + 315 * f03 * f12 * f21**3 / f02**4 + 630 * f12**3 * f21**2 / f02**4),
    }
    return forms[k]


def printed_D(k):
    f03, f12, f22, f31, f41, f50 = f(0, 3), f(1, 2), f(2, 2), f(3, 1), f(4, 1), f(5, 0)
    forms = {
        6: f(4, 0),
        7: f50 - 5 * f31**2 / (3 * f12),
        8: (f(6, 0) + 5 * f03 * f31 * f50 / (3 * f12**2) - 5 * f31 * f41 / f12
            - 10 * f03 * f31**3 / (3 * f12**3) + 5 * f22 * f31**2 / f12**2),
    }
    return forms[k]


def laurent_to_sympy(expr) -> sp.Expr:
    from curve_census.normalform.laurent import Laurent

    if not isinstance(expr, Laurent):
        q = Fraction(expr)
        return sp.Rational(q.numerator, q.denominator)
    total = sp.Integer(0)
    for mono, c in expr.terms.items():
        term = sp.Rational(c.numerator, c.denominator)
        for (i, j), e in mono:
            term *= f(i, j) ** e
        total += term
    return total


def same_rational_function(lhs, rhs) -> bool:
    num, _ = sp.fraction(sp.together(sp.expand(lhs - rhs)))
    return sp.expand(num) == 0


# ----------------------------------------------------------------- series


def series_to_sympy(ps) -> sp.Expr:
    return sum(
        (sp.Rational(c.numerator, c.denominator) * X**i * Y_**j for (i, j), c in ps.coeffs.items()),
        sp.Integer(0),
    )


def truncate(expr, order: int) -> dict:
    poly = sp.Poly(sp.expand(expr), X, Y_)
    out = {}
    for (i, j), c in poly.terms():
        if i + j <= order and c != 0:
            out[(i, j)] = Fraction(int(sp.numer(c)), int(sp.denom(c)))
    return out


def jet_rho(expr, i, j):
    """i! j! times the Taylor coefficient of x^i y^j of a sympy polynomial."""
    poly = sp.Poly(sp.expand(expr), X, Y_)
    return poly.coeff_monomial(X**i * Y_**j) * factorial(i) * factorial(j)
