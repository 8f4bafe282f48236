"""Command-line interface: ``ordcircles {generate,count,invert,polar,verify,bench}``.

Exit codes: 0 success, 1 verification failure, 2 invalid input.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time
from fractions import Fraction
from pathlib import Path

from .configs import (
    DEFAULT_RADIUS_RATIO,
    ORIGIN,
    ConfigError,
    SymmetricConfig,
    SymPoint,
    make_boroczky,
    make_even_construction,
    make_odd_construction,
    member,
)
from .counting import (
    Algorithm,
    CountReport,
    count_symmetric,
    line_census,
    non_q_ordinary_lines,
    ordinary_circles_brute,
    ordinary_circles_by_inversion,
)
from .curves import HomPolyCurve, polar_curve
from .embedding import EmbeddedConfig, embed, embedded_lines, linecircle_descriptor, make_linecircle_construction
from .inversion import InversionMap, invert_point_set
from .io import (
    FormatError,
    exact_point_set,
    interval_export,
    point_set_to_csv,
    point_set_to_json,
    point_set_to_svg,
    read_input,
    write_point_set,
)
from .kernel import GeometryError, PointSet, ProjPoint, as_fraction, point
from .sampling import random_rational_set
from .verify import run_suite

EXIT_OK, EXIT_VERIFY, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _rationals(text: str, count: tuple[int, ...]) -> list[Fraction]:
    parts = [s.strip() for s in text.split(",")]
    if len(parts) not in count:
        raise InputError(f"expected {' or '.join(map(str, count))} comma-separated rationals, got {text!r}")
    try:
        return [as_fraction(s) for s in parts]
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"not a rational: {text!r}") from exc


def _sym_point(text: str) -> SymPoint:
    """'origin', or 'orbit:half' with orbit 1, 2 or inf (half-step angle index)."""
    if text == "origin":
        return ORIGIN
    try:
        orbit, half = text.split(":")
        return SymPoint(0 if orbit == "inf" else int(orbit), int(half))
    except ValueError as exc:
        raise InputError(f"symbolic points are 'origin' or 'orbit:half', got {text!r}") from exc


def _emit(obj, out: Path | None) -> None:
    text = json.dumps(obj, indent=1, sort_keys=True) + "\n"
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text)


# generate -----------------------------------------------------------------


def cmd_generate(args) -> int:
    ratio = args.radius_ratio
    fam = args.family
    if fam == "boroczky":
        if args.m is None:
            raise InputError("--m is required for boroczky")
        C: SymmetricConfig | EmbeddedConfig = make_boroczky(args.m)
    else:
        if args.n is None:
            raise InputError(f"--n is required for {fam}")
        removed = member(*_removed(args.removed))
        if fam == "even":
            C = make_even_construction(args.n, ratio)
        elif fam == "odd":
            C = make_odd_construction(args.n, ratio, removed)
        else:
            C = make_linecircle_construction(args.n, ratio, args.inversion_center_index, removed, args.precision)
    if isinstance(C, EmbeddedConfig):
        descriptor, payload, kind = linecircle_descriptor(C), interval_export(C), "intervals"
    else:
        descriptor = C.descriptor()
        P = exact_point_set(C)
        if P is not None:
            payload, kind = P, "points"
        else:
            payload, kind = interval_export(embed(C, args.precision)), "intervals"
    if args.out is None:
        body = point_set_to_json(payload) if kind == "points" else payload
        _emit({"descriptor": descriptor, kind: body}, None)
        return EXIT_OK
    prefix = Path(args.out)
    prefix.parent.mkdir(parents=True, exist_ok=True)
    Path(f"{prefix}.descriptor.json").write_text(json.dumps(descriptor, indent=1, sort_keys=True) + "\n")
    if kind == "points":
        fmt = args.format
        if fmt == "csv" and payload.infinity:
            fmt = "json"
        write_point_set(payload, f"{prefix}.{fmt}", fmt)
    else:
        Path(f"{prefix}.intervals.json").write_text(json.dumps(payload, indent=1) + "\n")
    return EXIT_OK


def _removed(text: str) -> tuple[int, int]:
    try:
        orbit, index = text.split(",")
        return int(orbit), int(index)
    except ValueError as exc:
        raise InputError(f"--removed takes orbit,index, got {text!r}") from exc


# count ----------------------------------------------------------------------


def _lines_report(obj, q) -> CountReport:
    t0 = time.perf_counter()
    if isinstance(obj, SymmetricConfig):
        return count_symmetric(obj, q=q)
    if isinstance(obj, EmbeddedConfig):
        sizes = [len(line) for line in embedded_lines(obj)]
        return CountReport(obj.n, Algorithm.BRUTE, sizes.count(2), three_point_lines=sizes.count(3))
    census = line_census(obj)
    ol_q = None if q is None else non_q_ordinary_lines(obj, q)
    return CountReport(
        obj.n,
        Algorithm.BRUTE,
        census.lines_with(2),
        three_point_lines=census.lines_with(3),
        ol_q=ol_q,
        q=q,
        elapsed=time.perf_counter() - t0,
    )


def _parse_q(obj, text: str | None):
    if text is None:
        return None
    if isinstance(obj, SymmetricConfig):
        return _sym_point(text)
    if isinstance(obj, EmbeddedConfig):
        raise InputError("--q is not supported for embedded inputs")
    vals = _rationals(text, (2, 3))
    return ProjPoint.of(*vals) if len(vals) == 3 else point(*vals)


def cmd_count(args) -> int:
    obj = read_input(args.input, args.precision)
    algorithm = Algorithm(args.algorithm)
    q = _parse_q(obj, args.q)
    if args.what == "olq" and q is None:
        raise InputError("--what olq needs --q")
    if args.what in ("lines", "olq"):
        report = _lines_report(obj, q)
    else:
        if algorithm is Algorithm.SYMMETRIC:
            if not isinstance(obj, SymmetricConfig):
                raise InputError("--algorithm symmetric needs a configuration descriptor")
            report = count_symmetric(obj)
            if report.ordinary_circles is None:
                raise InputError("circle counts need every point on a circle orbit")
        else:
            if isinstance(obj, SymmetricConfig):
                obj = exact_point_set(obj) or embed(obj, args.precision)
            if isinstance(obj, PointSet):
                obj.require_affine()
            run = ordinary_circles_brute if algorithm is Algorithm.BRUTE else ordinary_circles_by_inversion
            report = run(obj)
    _emit(report.body() if args.no_timing else report.to_json(), args.out)
    return EXIT_OK


# invert / polar -------------------------------------------------------------


def cmd_invert(args) -> int:
    obj = read_input(args.input)
    if not isinstance(obj, PointSet):
        raise InputError("invert takes an exact point-set file")
    I = InversionMap(point(*_rationals(args.center, (2,))))
    image = invert_point_set(I, obj)
    if args.out is None:
        if args.format == "csv":
            sys.stdout.write(point_set_to_csv(image))
        elif args.format == "svg":
            sys.stdout.write(point_set_to_svg(image))
        else:
            _emit(point_set_to_json(image), None)
    else:
        write_point_set(image, args.out, args.format)
    return EXIT_OK


def cmd_polar(args) -> int:
    text = args.curve
    if Path(text).is_file():
        text = Path(text).read_text().strip()
    try:
        H = HomPolyCurve.parse(text)
    except Exception as exc:  # sympy raises a zoo of parse errors
        if isinstance(exc, GeometryError):
            raise
        raise InputError(f"cannot parse curve {text!r}: {exc}") from exc
    D = polar_curve(H, _rationals(args.point, (3,)))
    _emit({"curve": str(D), "degree": D.degree, "point": args.point}, args.out)
    return EXIT_OK


# verify / bench -------------------------------------------------------------


def cmd_verify(args) -> int:
    failed = 0
    for check in run_suite(args.suite):
        sys.stdout.write(json.dumps(check.to_json()) + "\n")
        sys.stdout.flush()
        failed += not check.passed
    return EXIT_VERIFY if failed else EXIT_OK


def cmd_bench(args) -> int:
    sizes = [int(s) for s in args.n.split(",")]
    algos = ["brute", "inversion"] if args.algorithm == "both" else [args.algorithm]
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(["n", "seed", "algorithm", "seconds", "ordinary_circles"])
    for n in sizes:
        P = random_rational_set(n, args.seed)
        for a in algos:
            run = ordinary_circles_brute if a == "brute" else ordinary_circles_by_inversion
            t0 = time.perf_counter()
            r = run(P)
            w.writerow([n, args.seed, a, f"{time.perf_counter() - t0:.4f}", r.ordinary_circles])
            sys.stdout.flush()
    return EXIT_OK


# parser ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="ordcircles", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="write a construction (descriptor plus points or intervals)")
    g.add_argument("--family", required=True, choices=["even", "odd", "boroczky", "linecircle"])
    g.add_argument("--n", type=int)
    g.add_argument("--m", type=int)
    g.add_argument("--radius-ratio", default=str(DEFAULT_RADIUS_RATIO))
    g.add_argument("--removed", default="1,0", help="orbit,index of the removed member (odd families)")
    g.add_argument("--inversion-center-index", type=int, default=1, help="half-step angle index on orbit 1")
    g.add_argument("--precision", type=int, default=256)
    g.add_argument("--format", choices=["json", "csv", "svg"], default="json")
    g.add_argument("--out", help="output prefix; prints to stdout when omitted")
    g.set_defaults(func=cmd_generate)

    c = sub.add_parser("count", help="count ordinary lines, ol_q or ordinary circles")
    c.add_argument("input", type=Path)
    c.add_argument("--what", choices=["lines", "circles", "olq"], default="circles")
    c.add_argument("--algorithm", choices=[a.value for a in Algorithm], default="inversion")
    c.add_argument("--q", help="x,y or x,y,z (point sets); origin or orbit:half (descriptors)")
    c.add_argument("--precision", type=int, default=256)
    c.add_argument("--no-timing", action="store_true", help="omit the elapsed field")
    c.add_argument("--out", type=Path)
    c.set_defaults(func=cmd_count)

    i = sub.add_parser("invert", help="invert a point set in the unit circle around a center")
    i.add_argument("input", type=Path)
    i.add_argument("--center", required=True)
    i.add_argument("--format", choices=["json", "csv", "svg"], default="json")
    i.add_argument("--out", type=Path)
    i.set_defaults(func=cmd_invert)

    p = sub.add_parser("polar", help="polar curve of a homogeneous curve at a point")
    p.add_argument("curve", help="homogeneous polynomial in x, y, z, or a file holding one")
    p.add_argument("--point", required=True, help="x,y,z")
    p.add_argument("--out", type=Path)
    p.set_defaults(func=cmd_polar)

    v = sub.add_parser("verify", help="run a verification suite, one JSON line per check")
    v.add_argument("--suite", choices=["constructions", "inversion", "curves", "theorem34", "all"], default="all")
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("bench", help="time both counters on seeded random sets (CSV)")
    b.add_argument("--n", default="50,100,200")
    b.add_argument("--algorithm", choices=["brute", "inversion", "both"], default="both")
    b.add_argument("--seed", type=int, default=0)
    b.set_defaults(func=cmd_bench)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, GeometryError, ConfigError, FormatError, FileNotFoundError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
