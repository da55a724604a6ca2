"""``curve-census`` command line.

Exit status: 0 ok, 1 a verification check failed, 2 usage or unsupported
query, 3 internal invariant violation, 4 germ does not lie on the curve.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Optional, Sequence

from curve_census.algebra import DPoly, NonIntegralDivision
from curve_census.bundles import Gen, UnknownBundle, c1_of, catalog, twist
from curve_census.counts import SUPPORTED, CountEngine, InvariantViolation, SingSpec, UnsupportedKey, verify_all

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_INTERNAL, EXIT_DOMAIN = 0, 1, 2, 3, 4

PRINTED_RANGE = {"A": (3, 7), "D": (6, 8)}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # exit 2 is argparse's default too; keep the message on stderr
        self.print_usage(sys.stderr)
        raise UsageError(message)


@dataclass
class OutputRecord:
    sing: str
    n: int
    polynomial: str
    m: Optional[int] = None
    d: Optional[int] = None
    value: Optional[str] = None
    warning: Optional[str] = None

    def to_json(self) -> dict:
        return {k: v for k, v in asdict(self).items() if v is not None}


def _fmt(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _record(spec: SingSpec, n: int, poly: DPoly, d: Optional[int], m: Optional[int] = None) -> OutputRecord:
    rec = OutputRecord(str(spec), n, str(poly), m=m)
    if d is not None:
        rec.d = d
        rec.value = _fmt(poly.eval(d))
        if d < spec.validity:
            rec.warning = f"d = {d} is below the validity bound d >= {spec.validity} for {spec}; the value may not be enumerative"
    return rec


def _emit(rec: OutputRecord, symbolic: bool, as_json: bool) -> None:
    if rec.warning:
        print(f"warning: {rec.warning}", file=sys.stderr)
    if as_json:
        print(json.dumps(rec.to_json()))
        return
    if rec.d is None or symbolic:
        print(rec.polynomial)
    if rec.d is not None:
        print(rec.value)


# --------------------------------------------------------------------------- commands


def cmd_count(args, engine: CountEngine) -> int:
    spec = SingSpec.parse(args.sing)
    poly = engine.n_final(spec, args.n)
    _emit(_record(spec, args.n, poly, args.d), args.symbolic, args.json)
    return EXIT_OK


def cmd_count_p(args, engine: CountEngine) -> int:
    spec = SingSpec.parse(args.sing)
    poly = engine.n_p(spec, args.n, args.m)
    _emit(_record(spec, args.n, poly, args.d, m=args.m), args.symbolic, args.json)
    return EXIT_OK


def table_rows(engine: CountEngine, d_min: int, d_max: int) -> list[dict]:
    rows = []
    for spec in SUPPORTED:
        for n in range(3):
            poly = engine.n_final(spec, n)
            rows.append(
                {
                    "sing": str(spec),
                    "n": n,
                    "polynomial": str(poly),
                    "values": {str(d): _fmt(poly.eval(d)) for d in range(d_min, d_max + 1)},
                }
            )
    return rows


def cmd_table(args, engine: CountEngine) -> int:
    if not (1 <= args.d_min <= args.d_max <= args.cap):
        raise UsageError(f"need 1 <= d-min <= d-max <= {args.cap}")
    rows = table_rows(engine, args.d_min, args.d_max)
    if args.format == "json":
        print(json.dumps(rows, indent=2))
        return EXIT_OK
    buf = io.StringIO()
    ds = [str(d) for d in range(args.d_min, args.d_max + 1)]
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["sing", "n", "polynomial"] + [f"d={d}" for d in ds])
    for row in rows:
        writer.writerow([row["sing"], row["n"], row["polynomial"]] + [row["values"][d] for d in ds])
    sys.stdout.write(buf.getvalue())
    return EXIT_OK


def derive_formula(series: str, k: int) -> str:
    """Symbolic A_k or D_k over a generic jet, in the f_ij notation."""
    from curve_census.normalform.invariants import a_invariants, d_invariants
    from curve_census.normalform.laurent import TWO_JET, generic_jet, render

    if series == "A":
        rho = generic_jet(k + 2, [v for v in TWO_JET if v != (0, 2)])
        return render(a_invariants(rho, k)[k])
    # D_6 = f40 is taken to vanish for k >= 7, which fixes the pole order in f12
    vanish = list(TWO_JET) + [(3, 0), (2, 1)] + ([(4, 0)] if k >= 7 else [])
    rho = generic_jet(k + 2, vanish)
    return render(d_invariants(rho, k)[k])


def cmd_derive(args, engine: CountEngine) -> int:
    if args.bundle:
        return _derive_bundle(args)
    if args.series is None or args.k is None:
        raise UsageError("derive needs SERIES K or --bundle NAME")
    series = args.series.upper()
    if series not in PRINTED_RANGE:
        raise UsageError("series must be A or D")
    lo, hi = PRINTED_RANGE[series]
    if args.k < lo:
        raise UsageError(f"{series}_k is defined for k >= {lo}")
    if args.k > hi:
        print(f"note: {series}{args.k} is beyond the printed closed forms (k <= {hi})", file=sys.stderr)
    print(derive_formula(series, args.k))
    return EXIT_OK


def _derive_bundle(args) -> int:
    try:
        if args.bundle.startswith("V_"):
            tw = twist(args.bundle)
            print(f"{tw.name}: L ⊗ π*T*P² with c1(L) = {tw.twist_c1}")
            print(f"euler = {tw.euler()}")
            return EXIT_OK
        desc = catalog(args.bundle, k=args.bundle_k)
    except UnknownBundle as exc:
        raise UsageError(f"unknown bundle: {exc}") from None
    print(f"{desc.name}: {desc.word()}")
    print(f"c1 = {c1_of(desc)}")
    return EXIT_OK


def parse_germ(text: str):
    """Return ``(terms, point)`` from the JSON germ format."""
    data = json.loads(text)
    point = (0, 0)
    if isinstance(data, dict):
        records = data.get("terms")
        if "point" in data:
            point = data["point"]
    else:
        records = data
    if not isinstance(records, list):
        raise ValueError("germ must be a list of {i, j, c} records")
    terms: dict[tuple[int, int], Fraction] = {}
    for rec in records:
        if not isinstance(rec, dict) or not {"i", "j", "c"} <= rec.keys():
            raise ValueError(f"bad germ record {rec!r}")
        i, j = int(rec["i"]), int(rec["j"])
        if i < 0 or j < 0:
            raise ValueError("exponents must be non-negative")
        terms[(i, j)] = terms.get((i, j), Fraction(0)) + Fraction(str(rec["c"]))
    if not isinstance(point, (list, tuple)) or len(point) != 2:
        raise ValueError("point must be a pair of rationals")
    return terms, tuple(Fraction(str(v)) for v in point)


def cmd_classify(args, engine: CountEngine) -> int:
    from curve_census.normalform.classify import NotOnCurve, classify

    try:
        with open(args.germ_file, encoding="utf-8") as fh:
            terms, point = parse_germ(fh.read())
    except (OSError, ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"cannot read germ: {exc}") from None
    if args.max_order < 3:
        raise UsageError("--max-order must be at least 3")
    try:
        result = classify(terms, point, max_order=args.max_order)
    except NotOnCurve as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    print(result.describe())
    return EXIT_OK


def _parse_injection(spec: str):
    label, _, word = spec.partition(":")
    powers = {}
    for part in filter(None, word.split(",")):
        gen, _, exp = part.partition("=")
        powers[Gen(gen)] = int(exp)
    return label, powers


def cmd_verify(args, engine: CountEngine) -> int:
    overrides = dict(_parse_injection(s) for s in args.inject_bundle or [])
    corrections = None
    if args.inject_correction:
        corrections = dict(engine.corrections)
        for item in args.inject_correction:
            pair, _, mult = item.partition("=")
            target, _, other = pair.partition("/")
            corrections[(SingSpec.parse(target), SingSpec.parse(other))] = int(mult)
    report = verify_all(CountEngine(corrections) if corrections else engine, overrides=overrides or None)
    color = sys.stdout.isatty() and os.environ.get("CURVE_CENSUS_COLOR", "1") != "0"
    print(report.render(color=color))
    return EXIT_OK if report.passed else EXIT_VERIFY


# --------------------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="curve-census", description="Counts of plane curves with one prescribed singularity.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser, metavar="COMMAND")

    c = sub.add_parser("count", help="N(X_k, n) as a polynomial in d, optionally evaluated")
    c.add_argument("--sing", required=True, help="A1..A7, D4..D7, E6, E7")
    c.add_argument("--n", type=int, default=0, help="number of generic lines the singular point lies on")
    c.add_argument("--d", type=int, help="evaluate at this degree")
    c.add_argument("--symbolic", action="store_true", help="print the polynomial even when --d is given")
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_count)

    cp = sub.add_parser("count-p", help=argparse.SUPPRESS)
    cp.add_argument("--sing", required=True)
    cp.add_argument("--n", type=int, default=0)
    cp.add_argument("--m", type=int, default=0)
    cp.add_argument("--d", type=int)
    cp.add_argument("--symbolic", action="store_true")
    cp.add_argument("--json", action="store_true")
    cp.set_defaults(func=cmd_count_p)

    t = sub.add_parser("table", help="every supported count over a range of degrees")
    t.add_argument("--d-min", type=int, required=True)
    t.add_argument("--d-max", type=int, required=True)
    t.add_argument("--format", choices=("csv", "json"), default="csv")
    t.add_argument("--cap", type=int, default=50, help="largest admissible d-max")
    t.set_defaults(func=cmd_table)

    dv = sub.add_parser("derive", help="symbolic A_k / D_k invariant, or a bundle's Chern data")
    dv.add_argument("series", nargs="?", help="A or D")
    dv.add_argument("k", nargs="?", type=int)
    dv.add_argument("--bundle", help="catalog tag, e.g. L_PD4, L_PAk, V_PA2")
    dv.add_argument("--k", dest="bundle_k", type=int, help="index for L_PAk / L_PDk")
    dv.set_defaults(func=cmd_derive)

    cl = sub.add_parser("classify", help="singularity type of a polynomial germ (JSON file)")
    cl.add_argument("germ_file")
    cl.add_argument("--max-order", type=int, default=12)
    cl.set_defaults(func=cmd_classify)

    v = sub.add_parser("verify", help="run every cross-check")
    v.add_argument("--inject-bundle", action="append", help=argparse.SUPPRESS)
    v.add_argument("--inject-correction", action="append", help=argparse.SUPPRESS)
    v.set_defaults(func=cmd_verify)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args, CountEngine())
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except UnsupportedKey as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (InvariantViolation, NonIntegralDivision) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except Exception as exc:  # anything else is a bug, reported as internal
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
