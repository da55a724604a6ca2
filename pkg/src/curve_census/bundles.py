"""Line bundles over D x PT P^2 as tensor words, their Chern data, and strata towers.

Every line bundle in the census is a tensor word in four generators::

    GammaD_dual     gamma_D^*              c1 = y
    GammaP2_dual_d  (gamma_P2^*)^(x d)     c1 = d*a     (exponent counted in units of d)
    Taut_dual       gamma~^*               c1 = lam
    Quot_dual       (TP^2 / gamma~)^*      c1 = -(3a + lam)

Rank-two bundles only ever appear as ``L (x) pi^* T^*P^2``; their Euler class is
``t^2 - 3a t + 3a^2`` with ``t = c1(L)``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Mapping, Optional, Union

from curve_census.algebra import DPoly
from curve_census.cohomology import A, LAM, Y, Base, CohClass, product


class UnknownBundle(KeyError):
    pass


class NoCleanTower(LookupError):
    """The closure is not a global transverse zero set of catalog sections."""


class Gen(str, enum.Enum):
    GAMMA_D = "GammaD_dual"
    GAMMA_P2_D = "GammaP2_dual_d"
    TAUT = "Taut_dual"
    QUOT = "Quot_dual"


@dataclass(frozen=True)
class LineBundleDesc:
    name: str
    powers: Mapping[Gen, int]

    def __post_init__(self):
        clean = {Gen(g): int(e) for g, e in self.powers.items() if e}
        object.__setattr__(self, "powers", MappingProxyType(clean))

    def exponent(self, g: Gen) -> int:
        return self.powers.get(g, 0)

    def tensor(self, other: "LineBundleDesc", name: Optional[str] = None) -> "LineBundleDesc":
        merged = {g: self.exponent(g) + other.exponent(g) for g in Gen}
        return LineBundleDesc(name or f"{self.name}*{other.name}", merged)

    def word(self) -> str:
        """Human-readable tensor word, e.g. ``Taut_dual^4 (x) Quot_dual^2 (x) ...``."""
        parts = []
        for g in Gen:
            e = self.exponent(g)
            if e:
                parts.append(g.value if e == 1 else f"{g.value}^{e}")
        return " ⊗ ".join(parts) if parts else "trivial"

    def __hash__(self):
        return hash((self.name, tuple(sorted((g.value, e) for g, e in self.powers.items()))))

    def __eq__(self, other):
        if not isinstance(other, LineBundleDesc):
            return NotImplemented
        return self.name == other.name and dict(self.powers) == dict(other.powers)


@dataclass(frozen=True)
class RankTwoTwist:
    """``L (x) pi^* T^*P^2`` recorded only through ``c1(L)``."""

    name: str
    twist_c1: CohClass

    def euler(self) -> CohClass:
        return euler_rank2_twist(self.twist_c1)


Bundle = Union[LineBundleDesc, RankTwoTwist]

# fmt: off
_FIXED: dict[str, dict[Gen, int]] = {
    # over D x P^2 (pulled back where needed)
    "L_A0":       {Gen.GAMMA_D: 1, Gen.GAMMA_P2_D: 1},
    # (gamma_D^* (x) gamma_P2^*d (x) Lambda^2 T^*P^2)^2 with Lambda^2 pi^*T^*P^2 = Taut_dual (x) Quot_dual
    "L_A2":       {Gen.GAMMA_D: 2, Gen.GAMMA_P2_D: 2, Gen.TAUT: 2, Gen.QUOT: 2},
    "L_PD4":      {Gen.QUOT: 2, Gen.GAMMA_D: 1, Gen.GAMMA_P2_D: 1},
    "L_PD5":      {Gen.TAUT: 2, Gen.QUOT: 1, Gen.GAMMA_D: 1, Gen.GAMMA_P2_D: 1},
    "L_PD5_dual": {Gen.TAUT: 2, Gen.QUOT: 4, Gen.GAMMA_D: 2, Gen.GAMMA_P2_D: 2},
    "L_PD6_dual": {Gen.TAUT: 8, Gen.QUOT: 4, Gen.GAMMA_D: 5, Gen.GAMMA_P2_D: 5},
    "L_PE6":      {Gen.TAUT: 1, Gen.QUOT: 2, Gen.GAMMA_D: 1, Gen.GAMMA_P2_D: 1},
    "L_PE7":      {Gen.TAUT: 4, Gen.GAMMA_D: 1, Gen.GAMMA_P2_D: 1},
    "L_PE8":      {Gen.TAUT: 3, Gen.QUOT: 1, Gen.GAMMA_D: 1, Gen.GAMMA_P2_D: 1},
    "L_PX8":      {Gen.QUOT: 3, Gen.GAMMA_D: 1, Gen.GAMMA_P2_D: 1},
    "L_J":        {Gen.TAUT: 9, Gen.QUOT: 3, Gen.GAMMA_D: 3, Gen.GAMMA_P2_D: 3},
}
# fmt: on

# pole order of the D_k invariant at f12 = 0
EPSILON = MappingProxyType({6: 0, 7: 1, 8: 3})

# twists L of the rank-two bundles L (x) pi^* T^*P^2
_TWISTS: dict[str, dict[Gen, int]] = {
    "V_A1": {Gen.GAMMA_D: 1, Gen.GAMMA_P2_D: 1},
    "V_PA2": {Gen.TAUT: 1, Gen.GAMMA_D: 1, Gen.GAMMA_P2_D: 1},
    "V_PD5": {Gen.TAUT: 2, Gen.GAMMA_D: 1, Gen.GAMMA_P2_D: 1},
}

LINE_BUNDLE_NAMES = tuple(sorted(_FIXED)) + ("L_PAk", "L_PDk")
TWIST_NAMES = tuple(sorted(_TWISTS))


def _pa_k(k: int) -> dict[Gen, int]:
    # gamma_P2 exponent d(k+1) - 3d = d(k-2)
    return {Gen.TAUT: k, Gen.QUOT: 2 * k - 6, Gen.GAMMA_D: k - 2, Gen.GAMMA_P2_D: k - 2}


def _pd_k(k: int) -> dict[Gen, int]:
    eps = EPSILON[k]
    return {Gen.TAUT: k - 2 + eps, Gen.QUOT: 2 * eps, Gen.GAMMA_D: 1 + eps, Gen.GAMMA_P2_D: 1 + eps}


def catalog(name: str, k: Optional[int] = None, overrides: Optional[Mapping[str, Mapping[Gen, int]]] = None) -> LineBundleDesc:
    """Look up a line bundle by tag.

    ``L_PAk`` needs ``k >= 3`` and ``L_PDk`` needs ``6 <= k <= 8``; the
    shorthands ``L_PA5`` / ``L_PD7`` are accepted too.  ``overrides`` replaces
    the tensor word of a tag, which is how fault-injection tests corrupt data.
    """
    if k is None and name not in _FIXED and name[:4] in ("L_PA", "L_PD") and name[4:].isdigit():
        name, k = name[:4] + "k", int(name[4:])
    if k is not None and name not in ("L_PAk", "L_PDk"):
        raise UnknownBundle(f"{name} takes no index")
    label = name if k is None else f"{name[:-1]}{k}"
    if overrides and label in overrides:
        return LineBundleDesc(label, overrides[label])
    if name in _FIXED:
        return LineBundleDesc(label, _FIXED[name])
    if name == "L_PAk":
        if k is None or k < 3:
            raise UnknownBundle("L_PAk needs k >= 3")
        return LineBundleDesc(label, _pa_k(k))
    if name == "L_PDk":
        if k is None or k < 6:
            raise UnknownBundle("L_PDk needs k >= 6")
        if k not in EPSILON:
            raise UnknownBundle(f"pole order of D_{k} is not tabulated (k <= 8 only)")
        return LineBundleDesc(label, _pd_k(k))
    raise UnknownBundle(name)


def twist(name: str) -> RankTwoTwist:
    if name not in _TWISTS:
        raise UnknownBundle(name)
    return RankTwoTwist(name, c1_of(LineBundleDesc(name, _TWISTS[name])))


def c1_of(desc: LineBundleDesc) -> CohClass:
    d = DPoly.d()
    return (
        desc.exponent(Gen.GAMMA_D) * Y
        + desc.exponent(Gen.GAMMA_P2_D) * d * A
        + desc.exponent(Gen.TAUT) * LAM
        - desc.exponent(Gen.QUOT) * (3 * A + LAM)
    )


def euler_rank2_twist(t: CohClass) -> CohClass:
    """Euler class of ``L (x) T^*P^2`` given ``t = c1(L)``: c(T^*P^2) = 1 - 3a + 3a^2."""
    return t * t - 3 * A * t + 3 * A * A


def euler(bundle: Bundle) -> CohClass:
    if isinstance(bundle, RankTwoTwist):
        return bundle.euler()
    return c1_of(bundle)


def rank(bundle: Bundle) -> int:
    return 2 if isinstance(bundle, RankTwoTwist) else 1


# --------------------------------------------------------------------------- towers


class Stratum(str, enum.Enum):
    A0 = "A0"            # closure of A_0 in D x P^2
    A1 = "A1"            # closure of A_1 in D x P^2
    A1_SHARP = "A1#"     # closure of the lifted A_1 locus in D x PT P^2
    PA2 = "PA2"
    PA3 = "PA3"
    PD4 = "PD4"
    PD5 = "PD5"
    PD6 = "PD6"
    PE6 = "PE6"


@dataclass(frozen=True)
class StratumTower:
    """Euler-class factors whose product is Poincare dual to a closure."""

    name: str
    base: Base
    bundles: tuple[Bundle, ...]
    factors: tuple[CohClass, ...] = field(repr=False)

    @property
    def codim(self) -> int:
        return sum(rank(b) for b in self.bundles)

    @property
    def dim_deficit(self) -> int:
        """``k`` such that the closure has dimension ``delta_d - k``."""
        return self.codim - self.base.fibre_dim

    def pd(self) -> CohClass:
        return product(self.factors)


# (parent stratum, bundle whose section cuts this one out)
_CHAIN: dict[Stratum, tuple[Optional[Stratum], str]] = {
    Stratum.A0: (None, "L_A0"),
    Stratum.A1: (Stratum.A0, "V_A1"),
    Stratum.A1_SHARP: (Stratum.A1, ""),
    Stratum.PA2: (Stratum.A1_SHARP, "V_PA2"),
    Stratum.PA3: (Stratum.PA2, "L_PA3"),
    Stratum.PD4: (Stratum.PA3, "L_PD4"),
    Stratum.PD5: (Stratum.PD4, "L_PD5"),
    Stratum.PD6: (Stratum.PD5, "L_PD6"),
    Stratum.PE6: (Stratum.PD5, "L_PE6"),
}


def _resolve(tag: str, overrides) -> Bundle:
    return twist(tag) if tag.startswith("V_") else catalog(tag, overrides=overrides)


def tower(stratum: Union[Stratum, str], overrides: Optional[Mapping[str, Mapping[Gen, int]]] = None) -> StratumTower:
    """Ordered Euler-class factors for the closure of ``stratum``.

    Closures further down the A-chain (PA4 and beyond) contain degenerate
    strata on which the next section vanishes with multiplicity, so they
    raise :class:`NoCleanTower`.
    """
    try:
        s = Stratum(stratum)
    except ValueError:
        raise NoCleanTower(f"closure of {stratum} has no clean tower") from None
    chain: list[str] = []
    cur: Optional[Stratum] = s
    while cur is not None:
        parent, tag = _CHAIN[cur]
        if tag:
            chain.append(tag)
        cur = parent
    chain.reverse()
    bundles = tuple(_resolve(t, overrides) for t in chain)
    base = Base.P2 if s in (Stratum.A0, Stratum.A1) else Base.PTP2
    return StratumTower(s.value, base, bundles, tuple(euler(b) for b in bundles))
