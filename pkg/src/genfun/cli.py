"""Command-line entry point: expand, binet, verify, catalog, transform."""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional, Sequence

from . import binet as bn
from . import transforms as tr
from .catalog import catalog_eval, catalog_lookup, catalog_names
from .errors import (
    DegenerateDenominator,
    GenfunError,
    InvalidParameter,
    NonRealSurd,
    RepeatedRoot,
)
from .exact import as_rational, format_rational, surd_to_float
from .expr import parse_polynomial, parse_spec_document
from .polynomial import Polynomial
from .series import FamilySpec, expand, expand_S, expand_Y
from .verify import FAIL, SUITES, run_suite


class UsageError(Exception):
    pass


def _text(value) -> str:
    if isinstance(value, Polynomial):
        return str(value)
    return format_rational(value)


def _emit(values: Sequence, fmt: str, out, start: int = 0) -> None:
    rows = [(start + i, _text(v)) for i, v in enumerate(values)]
    if fmt == "json":
        json.dump([{"n": n, "value": v} for n, v in rows], out, indent=2)
        out.write("\n")
    else:
        out.write("n,value\n")
        for n, v in rows:
            out.write(f"{n},{v}\n")


def _load_spec(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    return parse_spec_document(text)


def _evaluated(series, point):
    if point:
        return [c.substitute(point) for c in series]
    return list(series)


def _simplify(values):
    # constants print as rationals, everything else as polynomials
    return [v.constant_value() if v.is_constant() else v for v in values]


def cmd_expand(args, out) -> int:
    spec, point = _load_spec(args.spec)
    _emit(_simplify(_evaluated(expand(spec), point)), args.format, out)
    return 0


def cmd_binet(args, out) -> int:
    if args.n < 0:
        raise UsageError("--n must be nonnegative")
    p1, p2 = as_rational(args.p1), as_rational(args.p2)
    with_numerator = args.q0 is not None or args.q1 is not None
    q0 = as_rational(args.q0) if args.q0 is not None else as_rational(1)
    q1 = as_rational(args.q1) if args.q1 is not None else as_rational(0)
    try:
        value = bn.binet_S2(p1, p2, q0, q1, args.n) if with_numerator else bn.binet_Y2(p1, p2, args.n)
    except (RepeatedRoot, DegenerateDenominator, NonRealSurd) as exc:
        spec = FamilySpec([p1, p2], [q0, q1] if with_numerator else (), N=args.n)
        series = expand_S(spec) if with_numerator else expand_Y(spec)
        out.write(f"closed form unavailable ({exc}); value from the series expansion\n")
        out.write(f"value: {format_rational(series.values()[args.n])}\n")
        return 0
    out.write(f"value: {value}\n")
    out.write(f"rational part: {format_rational(value.rational)}\n")
    out.write(f"surd part: {format_rational(value.surd)} * sqrt({format_rational(value.radicand)})\n")
    out.write(f"decimal: {surd_to_float(value, 80):.15g}\n")
    return 0


def cmd_verify(args, out) -> int:
    results = run_suite(args.suite, args.n_max)
    for r in results:
        out.write(r.line() + "\n")
    counts = {s: sum(1 for r in results if r.status == s) for s in ("PASS", "FLAGGED", "FAIL")}
    out.write(f"{counts['PASS']} passed, {counts['FLAGGED']} flagged, {counts['FAIL']} failed\n")
    return 1 if counts[FAIL] else 0


def _parse_range(text: str) -> range:
    try:
        a, b = text.split("..")
        lo, hi = int(a), int(b)
    except ValueError:
        raise UsageError(f"--n-range expects A..B, got {text!r}") from None
    if lo < 0 or hi < lo:
        raise UsageError(f"--n-range {text!r} is empty or negative")
    return range(lo, hi + 1)


def _parse_params(items: Optional[List[str]]) -> dict:
    params = {}
    for item in items or ():
        key, sep, value = item.partition("=")
        if not sep or not key.strip():
            raise UsageError(f"--params expects K=V, got {item!r}")
        params[key.strip()] = value.strip()
    return params


def cmd_catalog(args, out) -> int:
    if args.catalog_cmd == "list":
        for name in catalog_names():
            entry = catalog_lookup(name)
            params = ",".join(f"{p.name}={_text(p.default)}" for p in entry.params) or "-"
            mark = " [suspect]" if entry.suspect else ""
            out.write(f"{name}\t{entry.kind}\t{params}\t{entry.description}{mark}\n")
        return 0
    n_range = _parse_range(args.n_range)
    values = catalog_eval(args.name, _parse_params(args.params), n_range)
    _emit(values, args.format, out, start=n_range.start)
    return 0


def cmd_transform(args, out) -> int:
    if args.transform_cmd == "euler":
        spec, point = _load_spec(args.spec)
        theta = parse_polynomial(args.theta)
        image = tr.euler_inverse(expand(spec), theta) if args.inverse else tr.euler_transform(expand(spec), theta)
        _emit(_simplify(_evaluated(image, point)), args.format, out)
        return 0
    result = tr.lambert_partial(as_rational(args.x), args.tol)
    out.write(f"value: {result.value:.15g}\n")
    out.write(f"terms: {result.terms_used}\n")
    out.write(f"last term: {result.last_term_magnitude:.3e}\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="genfun", description="Polynomial families from rational generating functions.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        g = p.add_mutually_exclusive_group()
        g.add_argument("--csv", dest="format", action="store_const", const="csv", help="CSV with header n,value (default)")
        g.add_argument("--json", dest="format", action="store_const", const="json", help="JSON array of {n, value}")
        p.set_defaults(format="csv")

    p = sub.add_parser("expand", help="print the coefficients of a spec document")
    p.add_argument("--spec", required=True, metavar="FILE")
    add_format(p)
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("binet", help="exact closed-form value for a two-term denominator")
    p.add_argument("--p1", required=True)
    p.add_argument("--p2", required=True)
    p.add_argument("--q0")
    p.add_argument("--q1")
    p.add_argument("--n", required=True, type=int)
    p.set_defaults(func=cmd_binet)

    p = sub.add_parser("verify", help="run the cross-check suites")
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    p.add_argument("--n-max", type=int, default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("catalog", help="named families")
    csub = p.add_subparsers(dest="catalog_cmd", required=True)
    csub.add_parser("list", help="list the entries")
    e = csub.add_parser("eval", help="coefficients of one entry")
    e.add_argument("--name", required=True)
    e.add_argument("--params", nargs="*", metavar="K=V")
    e.add_argument("--n-range", default="0..10", metavar="A..B")
    add_format(e)
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("transform", help="Euler transform or Lambert series")
    tsub = p.add_subparsers(dest="transform_cmd", required=True)
    e = tsub.add_parser("euler", help="binomial transform of a spec's coefficients")
    e.add_argument("--theta", required=True, metavar="EXPR")
    e.add_argument("--spec", required=True, metavar="FILE")
    e.add_argument("--inverse", action="store_true", help="apply the inverse transform")
    add_format(e)
    lam = tsub.add_parser("lambert", help="partial sum of sum x^j/(1 - x^j)")
    lam.add_argument("--x", required=True)
    lam.add_argument("--tol", type=float, default=1e-12)
    p.set_defaults(func=cmd_transform)
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "n_max", None) is not None and args.n_max < 0:
        sys.stderr.write("genfun: --n-max must be nonnegative\n")
        return 2
    try:
        return args.func(args, out)
    except (UsageError, InvalidParameter) as exc:
        sys.stderr.write(f"genfun: {exc}\n")
        return 2
    except GenfunError as exc:
        # malformed input documents and values count as usage errors
        sys.stderr.write(f"genfun: {type(exc).__name__}: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
