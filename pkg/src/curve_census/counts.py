"""Census engine: recursive counts N(P X_k, n, m) and final counts N(X_k, n).

The recursion coefficients below are transcribed data; they are *not* read
off the bundle catalog.  :func:`verify_all` compares the two, and pairs every
count that has a transverse tower with the Euler-class route of
:func:`n_via_tower`.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Iterator, Mapping, Optional, Union

from curve_census.algebra import D, DPoly, NonIntegralDivision
from curve_census.bundles import Bundle, Gen, Stratum, catalog, euler, rank, tower, twist
from curve_census.cohomology import A, LAM, pair


class UnsupportedKey(ValueError):
    pass


class InvariantViolation(AssertionError):
    """A structural property of the counts failed; indicates corrupted data."""


@dataclass(frozen=True, order=True)
class SingSpec:
    family: str
    k: int

    def __post_init__(self):
        if (self.family, self.k) not in _SUPPORTED_PAIRS:
            raise UnsupportedKey(f"{self.family}{self.k} is outside the supported range")

    @classmethod
    def parse(cls, tag: str) -> "SingSpec":
        tag = tag.strip().upper()
        if len(tag) < 2 or tag[0] not in "ADE" or not tag[1:].isdigit():
            raise UnsupportedKey(f"cannot parse singularity tag {tag!r}")
        return cls(tag[0], int(tag[1:]))

    @property
    def validity(self) -> int:
        """Smallest degree for which the count is guaranteed enumerative."""
        if self.family == "A":
            return self.k + 1
        if self.family == "D":
            return self.k - 1
        return 4

    def __str__(self) -> str:
        return f"{self.family}{self.k}"


_SUPPORTED_PAIRS = frozenset(
    [("A", k) for k in range(1, 8)] + [("D", k) for k in range(4, 8)] + [("E", 6), ("E", 7)]
)


def _s(tag: str) -> SingSpec:
    return SingSpec(tag[0], int(tag[1:]))


SUPPORTED: tuple[SingSpec, ...] = tuple(
    _s(t) for t in ("A1", "A2", "A3", "A4", "A5", "A6", "A7", "D4", "D5", "D6", "D7", "E6", "E7")
)


@dataclass(frozen=True)
class Recursion:
    """``N(target) = alpha N(parent,n,m) + beta N(parent,n,m+1) + gamma N(parent,n+1,m) - corrections``."""

    label: str
    target: SingSpec
    parent: SingSpec
    alpha: int
    beta: int
    gamma: DPoly
    bundle: str
    corrections: tuple[SingSpec, ...] = ()
    m_zero_only: bool = False

    def c1_pattern(self):
        from curve_census.cohomology import Y

        return self.alpha * Y + self.beta * LAM + self.gamma * A


# fmt: off
RECURSIONS: Mapping[SingSpec, Recursion] = MappingProxyType({r.target: r for r in (
    Recursion("algopa3", _s("A3"), _s("A2"), 1,  3, D,          "L_PA3"),
    Recursion("algopa4", _s("A4"), _s("A3"), 2,  2, 2 * D - 6,  "L_PA4"),
    Recursion("algopa5", _s("A5"), _s("A4"), 3,  1, 3 * D - 12, "L_PA5", (_s("D5"),)),
    Recursion("algopa6", _s("A6"), _s("A5"), 4,  0, 4 * D - 18, "L_PA6", (_s("D6"), _s("E6"))),
    Recursion("algopa7", _s("A7"), _s("A6"), 5, -1, 5 * D - 24, "L_PA7", (_s("D7"), _s("E7")), True),
    Recursion("algopd4", _s("D4"), _s("A3"), 1, -2, D - 6,      "L_PD4"),
    Recursion("algopd5", _s("D5"), _s("D4"), 1,  1, D - 3,      "L_PD5"),
    Recursion("algopd6", _s("D6"), _s("D5"), 1,  4, D,          "L_PD6"),
    Recursion("algopd7", _s("D7"), _s("D6"), 2,  4, 2 * D - 6,  "L_PD7"),
    Recursion("algope6", _s("E6"), _s("D5"), 1, -1, D - 6,      "L_PE6"),
    Recursion("algope7", _s("E7"), _s("D6"), 1, -1, D - 6,      "L_PE6"),
)})

# multiplicity with which the counting section vanishes on a degenerate stratum
CORRECTIONS: Mapping[tuple[SingSpec, SingSpec], int] = MappingProxyType({
    (_s("A5"), _s("D5")): 2,
    (_s("A6"), _s("D6")): 4,
    (_s("A6"), _s("E6")): 3,
    (_s("A7"), _s("D7")): 6,
    (_s("A7"), _s("E7")): 7,
})
# fmt: on


def n_a1(n: int) -> DPoly:
    """Nodal curves through the right number of points with the node on ``n`` lines."""
    if n < 0:
        raise UnsupportedKey("n must be non-negative")
    if n == 0:
        return 3 * (D - 1) * (D - 1)
    if n == 1:
        return 3 * (D - 1)
    if n == 2:
        return DPoly.const(1)
    return DPoly()


PKey = tuple[SingSpec, int, int]


class CountEngine:
    """Memoised evaluator of the recursion.

    The memo is the only shared mutable state.  Lookups are lock-free dict
    reads; computation and insertion happen under a re-entrant lock, and a
    per-thread in-progress set catches any cycle in the dependency graph.
    """

    def __init__(self, corrections: Optional[Mapping[tuple[SingSpec, SingSpec], int]] = None):
        self.corrections = MappingProxyType(dict(CORRECTIONS if corrections is None else corrections))
        self._memo: dict[PKey, DPoly] = {}
        self._lock = threading.RLock()
        self._local = threading.local()

    # keys -------------------------------------------------------------------

    @staticmethod
    def _check(spec: SingSpec, n: int, m: int) -> None:
        if n < 0 or m < 0:
            raise UnsupportedKey(f"negative index in N(P{spec}, {n}, {m})")
        if spec == _s("A1"):
            raise UnsupportedKey("N(P A1, n, m) is not part of the recursion; use n_a1")
        if spec == _s("A7") and m >= 1:
            raise UnsupportedKey("N(P A7, n, m) is only defined for m = 0")

    def n_p(self, spec: Union[SingSpec, str], n: int, m: int) -> DPoly:
        if isinstance(spec, str):
            spec = SingSpec.parse(spec)
        self._check(spec, n, m)
        if n >= 3:
            return DPoly()
        if m >= 2:
            # lam^2 = -3 a lam - 3 a^2
            return -3 * self.n_p(spec, n + 1, m - 1) - 3 * self.n_p(spec, n + 2, m - 2)
        key = (spec, n, m)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        with self._lock:
            hit = self._memo.get(key)
            if hit is not None:
                return hit
            active = self._active()
            if key in active:
                raise InvariantViolation(f"recursion cycle at N(P{spec}, {n}, {m})")
            active.add(key)
            try:
                value = self._compute(spec, n, m)
            finally:
                active.discard(key)
            self._memo[key] = value
            return value

    def _active(self) -> set:
        active = getattr(self._local, "active", None)
        if active is None:
            active = self._local.active = set()
        return active

    def _compute(self, spec: SingSpec, n: int, m: int) -> DPoly:
        if spec == _s("A2"):
            if m == 0:
                return 2 * n_a1(n) + 2 * (D - 3) * n_a1(n + 1)
            return n_a1(n) + (2 * D - 9) * n_a1(n + 1) + (D * D - 9 * D + 18) * n_a1(n + 2)
        rec = RECURSIONS[spec]
        p = rec.parent
        value = rec.alpha * self.n_p(p, n, m) + rec.beta * self.n_p(p, n, m + 1) + rec.gamma * self.n_p(p, n + 1, m)
        for other in rec.corrections:
            value = value - self.corrections.get((spec, other), 0) * self.n_p(other, n, m)
        return value

    # final counts -----------------------------------------------------------

    def n_final(self, spec: Union[SingSpec, str], n: int) -> DPoly:
        if isinstance(spec, str):
            spec = SingSpec.parse(spec)
        if n < 0:
            raise UnsupportedKey("n must be non-negative")
        if spec == _s("A1"):
            value = n_a1(n)
        elif spec == _s("D4"):
            # three marked directions over every triple point
            value = self.n_p(spec, n, 0).div_exact(3)
        else:
            value = self.n_p(spec, n, 0)
        if not value.is_integral() or value.degree > 2:
            raise InvariantViolation(f"N({spec}, {n}) = {value} is not an integral quadratic in d")
        return value

    def memo_keys(self) -> list[PKey]:
        return sorted(self._memo)


_DEFAULT = CountEngine()


def n_p(spec: Union[SingSpec, str], n: int, m: int) -> DPoly:
    return _DEFAULT.n_p(spec, n, m)


def n_final(spec: Union[SingSpec, str], n: int) -> DPoly:
    return _DEFAULT.n_final(spec, n)


def default_engine() -> CountEngine:
    return _DEFAULT


# --------------------------------------------------------------------------- Euler-class route


def n_via_tower(
    stratum: Union[Stratum, str],
    extra: Optional[Bundle],
    n: int,
    m: int,
    overrides: Optional[Mapping[str, Mapping[Gen, int]]] = None,
) -> DPoly:
    """Pair ``PD[closure] * e(extra) * a^n lam^m`` against the ambient fundamental class."""
    if n < 0 or m < 0:
        raise UnsupportedKey("negative index")
    tw = tower(stratum, overrides=overrides)
    cls = tw.pd() * (A ** n) * (LAM ** m)
    codim = tw.codim
    if extra is not None:
        cls = cls * euler(extra)
        codim += rank(extra)
    if m and tw.base.fibre_dim == 2:
        raise UnsupportedKey("lam does not exist over D x P^2")
    return pair(cls, tw.base, codim - tw.base.fibre_dim + n + m)


@dataclass(frozen=True)
class TowerRoute:
    """How the Euler-class route reaches ``N(P target, n, m)``."""

    target: SingSpec
    parent: Stratum
    extra: str

    def bundle(self, overrides=None) -> Bundle:
        return twist(self.extra) if self.extra.startswith("V_") else catalog(self.extra, overrides=overrides)

    def evaluate(self, n: int, m: int, overrides=None) -> DPoly:
        return n_via_tower(self.parent, self.bundle(overrides), n, m, overrides=overrides)


TOWER_ROUTES: tuple[TowerRoute, ...] = (
    TowerRoute(_s("A2"), Stratum.A1_SHARP, "V_PA2"),
    TowerRoute(_s("A3"), Stratum.PA2, "L_PA3"),
    TowerRoute(_s("A4"), Stratum.PA3, "L_PA4"),
    TowerRoute(_s("D4"), Stratum.PA3, "L_PD4"),
    TowerRoute(_s("D5"), Stratum.PD4, "L_PD5"),
    TowerRoute(_s("D6"), Stratum.PD5, "L_PD6"),
    TowerRoute(_s("D7"), Stratum.PD6, "L_PD7"),
    TowerRoute(_s("E6"), Stratum.PD5, "L_PE6"),
    TowerRoute(_s("E7"), Stratum.PD6, "L_PE6"),
)

# ---------------------------------------------------------------------------- reference data


def _q(*coeffs) -> DPoly:
    return DPoly(coeffs)


# low-degree checks of the closed forms: (spec, n, d, value)
LOW_DEGREE_VALUES: tuple[tuple[str, int, int, int], ...] = (
    ("A1", 0, 1, 0), ("A1", 0, 2, 3), ("A1", 0, 3, 12),
    ("A1", 1, 1, 0), ("A1", 1, 2, 3),
    ("A2", 0, 1, 0), ("A2", 0, 2, 0), ("A2", 0, 3, 24), ("A2", 0, 4, 72),
    ("A4", 0, 3, 0),
    ("D4", 0, 2, 0), ("D4", 0, 3, 15),
    ("D4", 1, 2, 0), ("D4", 1, 3, 6),
    ("E6", 0, 3, 0), ("E6", 0, 4, 147),
)  # fmt: skip

# published closed forms
CLOSED_FORMS: tuple[tuple[str, int, DPoly], ...] = (
    ("A1", 0, 3 * (D - 1) * (D - 1)),
    ("A1", 1, 3 * (D - 1)),
    ("A2", 0, 12 * (D - 1) * (D - 2)),
    ("A4", 0, 60 * (D - 3) * (3 * D - 5)),
    ("D4", 0, 15 * (D - 2) * (D - 2)),
    ("D4", 1, 6 * (D - 2)),
    ("E6", 0, 21 * (D - 3) * (4 * D - 9)),
)


# --------------------------------------------------------------------------- verification


@dataclass
class Check:
    category: str
    name: str
    passed: bool
    detail: str = ""


@dataclass
class VerifyReport:
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def __iter__(self) -> Iterator[Check]:
        return iter(self.checks)

    def add(self, category: str, name: str, passed: bool, detail: str = "") -> None:
        self.checks.append(Check(category, name, bool(passed), detail))

    def render(self, color: bool = False) -> str:
        lines = []
        for c in self.checks:
            tag = "PASS" if c.passed else "FAIL"
            if color:
                tag = f"\x1b[32m{tag}\x1b[0m" if c.passed else f"\x1b[31m{tag}\x1b[0m"
            line = f"{tag}  {c.category:<12} {c.name}"
            if c.detail and not c.passed:
                line += f"  -- {c.detail}"
            lines.append(line)
        total = len(self.checks)
        lines.append(f"{total - len(self.failures())}/{total} checks passed")
        return "\n".join(lines)


def verify_all(
    engine: Optional[CountEngine] = None,
    overrides: Optional[Mapping[str, Mapping[Gen, int]]] = None,
    snapshot: Optional[Mapping[tuple[str, int], DPoly]] = None,
) -> VerifyReport:
    """Run every cross-check and collect the outcomes; failures never raise."""
    from curve_census.reference import SNAPSHOT

    engine = engine or CountEngine()
    snapshot = SNAPSHOT if snapshot is None else snapshot
    report = VerifyReport()

    def guarded(category: str, name: str, fn) -> None:
        try:
            ok, detail = fn()
        except Exception as exc:  # a failing check is a report entry
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        report.add(category, name, ok, detail)

    from curve_census.bundles import c1_of

    for rec in RECURSIONS.values():
        def coeff_check(rec=rec):
            got = c1_of(catalog(rec.bundle, overrides=overrides))
            want = rec.c1_pattern()
            return got == want, f"c1({rec.bundle}) = {got}, recursion expects {want}"

        guarded("coefficient", f"{rec.label} vs c1({rec.bundle})", coeff_check)

    for route in TOWER_ROUTES:
        ms = (0,) if route.target == _s("A7") else (0, 1, 2)
        for n in range(3):
            for m in ms:
                def tower_check(route=route, n=n, m=m):
                    got = route.evaluate(n, m, overrides)
                    want = engine.n_p(route.target, n, m)
                    return got == want, f"tower {got} != recursion {want}"

                category = "ringp" if m == 2 else "tower"
                guarded(category, f"N(P{route.target},{n},{m}) via {route.parent.value}+{route.extra}", tower_check)

    for n in range(3):
        def dual_check(n=n):
            dual = n_via_tower(Stratum.PD4, catalog("L_PD5_dual", overrides=overrides), n, 0, overrides=overrides)
            direct = n_via_tower(Stratum.PD4, catalog("L_PD5", overrides=overrides), n, 0, overrides=overrides)
            want = engine.n_p("D5", n, 0)
            ok = dual == direct == want
            return ok, f"L_PD5_dual route {dual}, L_PD5 route {direct}, recursion {want}"

        guarded("dual-route", f"N(D5,{n}) via L_PD5 and L_PD5_dual", dual_check)

    for spec in SUPPORTED:
        if spec.family == "A" and spec.k == 1:
            continue
        for n in range(3):
            if spec == _s("A7"):
                continue

            def ringp_check(spec=spec, n=n):
                lhs = engine.n_p(spec, n, 2)
                rhs = -3 * engine.n_p(spec, n + 1, 1) - 3 * engine.n_p(spec, n + 2, 0)
                return lhs == rhs, f"{lhs} != {rhs}"

            guarded("ringp", f"N(P{spec},{n},2) relation", ringp_check)

    for n in range(3):
        def div_check(n=n):
            p = engine.n_p("D4", n, 0)
            p.div_exact(3)
            return True, ""

        guarded("invariant", f"3 | N(PD4,{n},0)", div_check)

    for spec in SUPPORTED:
        for n in range(3):
            def shape_check(spec=spec, n=n):
                p = engine.n_final(spec, n)
                return p.is_integral() and p.degree <= 2, str(p)

            guarded("invariant", f"N({spec},{n}) integral, degree <= 2", shape_check)

    for tag, n, form in CLOSED_FORMS:
        def form_check(tag=tag, n=n, form=form):
            got = engine.n_final(tag, n)
            return got == form, f"{got} != {form}"

        guarded("reference", f"N({tag},{n}) = {form}", form_check)

    for tag, n, d_value, value in LOW_DEGREE_VALUES:
        def value_check(tag=tag, n=n, d_value=d_value, value=value):
            got = engine.n_final(tag, n).eval(d_value)
            return got == value, f"got {got}"

        guarded("reference", f"N({tag},{n}) at d={d_value} is {value}", value_check)

    for (tag, n), poly in sorted(snapshot.items()):
        def snap_check(tag=tag, n=n, poly=poly):
            got = engine.n_final(tag, n)
            return got == poly, f"{got} != frozen {poly}"

        guarded("snapshot", f"N({tag},{n}) = {poly}", snap_check)

    return report


__all__ = [
    "CORRECTIONS",
    "CountEngine",
    "InvariantViolation",
    "NonIntegralDivision",
    "RECURSIONS",
    "SUPPORTED",
    "SingSpec",
    "TOWER_ROUTES",
    "UnsupportedKey",
    "VerifyReport",
    "n_a1",
    "n_final",
    "n_p",
    "n_via_tower",
    "verify_all",
]
