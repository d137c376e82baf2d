"""Command-line front end.

Every subcommand writes a machine-readable JSON report next to its other
artifacts and prints a short human summary.  Exit status: 0 when all
requested checks pass, 1 when a check fails (the report path is printed),
2 when inputs fail to parse.

The output directory defaults to the ``HARMONIC_RATIOS_OUT`` environment
variable, then to the current directory.  Runs are deterministic: a fixed
seed plus the same inputs give byte-identical reports.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from . import catalog as _catalog
from . import io_formats as io
from .certificates import (
    bound_certificate,
    coefficient_bound_check,
    measure_growth,
    verify_certificate,
)
from .division import DivisionError, divide_by_harmonic, series_ratio
from .nodal import (
    critical_set_sample,
    nodal_domain_count,
    write_points_csv,
    write_svg,
    zero_set_sample,
)
from .polynomial import Polynomial
from .regions import Region
from .series import TruncatedSeries
from .verify import (
    RatioEvaluator,
    harnack_constant,
    leading_zero_inclusion,
    max_principle_check,
    residual_convergence,
    sphere_orthogonality,
)


class CliError(Exception):
    """Bad input: wrong flags, unparsable files, unknown names."""


# -- input plumbing ------------------------------------------------------------


def _read(path: str) -> str:
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}") from exc


def load_polynomial(arg: str) -> Polynomial:
    """A polynomial file path, or a catalog entry name."""
    if os.path.exists(arg):
        try:
            return io.parse_polynomial(_read(arg))
        except io.FormatError as exc:
            raise CliError(f"{arg}: {exc}") from exc
    try:
        entry = _catalog.catalog_get(arg)
    except _catalog.UnknownEntry as exc:
        raise CliError(f"{arg} is neither a readable file nor a catalog name") from exc
    if entry.kind != "polynomial":
        raise CliError(f"catalog entry {arg} is not polynomial")
    return entry.polynomial


def load_series(arg: str, degree: int) -> TruncatedSeries:
    """A series file path, or a catalog entry expanded at the origin."""
    if os.path.exists(arg):
        try:
            return io.parse_series(_read(arg))
        except io.FormatError as exc:
            raise CliError(f"{arg}: {exc}") from exc
    try:
        entry = _catalog.catalog_get(arg)
    except _catalog.UnknownEntry as exc:
        raise CliError(f"{arg} is neither a readable file nor a catalog name") from exc
    return entry.taylor((0,) * entry.dimension, degree)


def parse_region(args: argparse.Namespace) -> Region:
    """--ball 'cx,cy[,cz]:r' or --box 'x0,x1,y0,y1[,z0,z1]'."""
    if getattr(args, "ball", None) and getattr(args, "box", None):
        raise CliError("give either --ball or --box, not both")
    if getattr(args, "ball", None):
        spec = args.ball
        try:
            center_txt, radius_txt = spec.split(":")
            center = [float(c) for c in center_txt.split(",")]
            return Region.ball(center, float(radius_txt))
        except ValueError as exc:
            raise CliError(f"bad --ball spec {spec!r} (want cx,cy[,cz]:r)") from exc
    if getattr(args, "box", None):
        spec = args.box
        try:
            vals = [float(c) for c in spec.split(",")]
        except ValueError as exc:
            raise CliError(f"bad --box spec {spec!r}") from exc
        if len(vals) % 2 or len(vals) < 4:
            raise CliError("--box wants per-axis pairs: x0,x1,y0,y1[,z0,z1]")
        lo, hi = vals[0::2], vals[1::2]
        try:
            return Region.box(lo, hi)
        except ValueError as exc:
            raise CliError(str(exc)) from exc
    raise CliError("a region is required: --ball or --box")


def parse_count(text: str) -> int:
    """Integer flag that also accepts scientific notation like 1e6."""
    try:
        value = float(text)
    except ValueError as exc:
        raise CliError(f"bad count {text!r}") from exc
    if value <= 0 or value != int(value):
        raise CliError(f"count must be a positive integer, got {text!r}")
    return int(value)


def _pair(args: argparse.Namespace) -> _catalog.SharedZeroPair:
    try:
        u_name, v_name = args.pair.split(",")
    except ValueError as exc:
        raise CliError("--pair wants two comma-separated catalog names") from exc
    try:
        return _catalog.shared_pair(u_name.strip(), v_name.strip())
    except (_catalog.UnknownEntry, ValueError) as exc:
        raise CliError(str(exc)) from exc


def write_report(out_dir: str, name: str, payload: Dict) -> str:
    os.makedirs(out_dir, exist_ok=True)
    path = os.path.join(out_dir, f"{name}_report.json")
    with open(path, "w") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
        fh.write("\n")
    return path


def _emit(out_dir: str, name: str, payload: Dict, lines: Sequence[str]) -> Tuple[str, int]:
    path = write_report(out_dir, name, payload)
    for line in lines:
        print(line)
    ok = bool(payload.get("passed", True))
    if not ok:
        print(f"FAILED; see {path}")
    else:
        print(f"report: {path}")
    return path, 0 if ok else 1


# -- subcommands ---------------------------------------------------------------


def cmd_divide(args: argparse.Namespace) -> int:
    p = load_polynomial(args.dividend)
    q = load_polynomial(args.divisor)
    try:
        outcome = divide_by_harmonic(p, q)
    except DivisionError as exc:
        payload = {
            "command": "divide",
            "passed": False,
            "error": type(exc).__name__,
            "detail": str(exc),
        }
        path = write_report(args.out, "divide", payload)
        print(f"division failed: {exc}")
        print(f"FAILED; see {path}")
        return 1
    quotient = outcome.quotient
    q_path = args.quotient_out or os.path.join(args.out, "quotient.poly")
    os.makedirs(os.path.dirname(os.path.abspath(q_path)), exist_ok=True)
    with open(q_path, "w") as fh:
        fh.write(io.format_polynomial(quotient, comment="quotient"))
    payload = {
        "command": "divide",
        "passed": True,
        "residual_verified": outcome.residual_verified,
        "quotient_file": q_path,
        "quotient_degree": quotient.total_degree(),
        "quotient_terms": len(quotient.terms),
    }
    return _emit(
        args.out,
        "divide",
        payload,
        [f"quotient ({len(quotient.terms)} terms) -> {q_path}"],
    )[1]


def cmd_series(args: argparse.Namespace) -> int:
    degree = args.degree
    if args.pair:
        pair = _pair(args)
        in_degree = degree + args.extra_degree
        try:
            v = pair.v.taylor((0,) * pair.v.dimension, in_degree)
            k = v.leading_degree()
            u = pair.u.taylor((0,) * pair.u.dimension, degree + k)
            v = pair.v.taylor((0,) * pair.v.dimension, degree + k)
        except (ValueError, ArithmeticError) as exc:
            raise CliError(str(exc)) from exc
    else:
        if not (args.numerator and args.denominator):
            raise CliError("give --pair or both --numerator and --denominator")
        u = load_series(args.numerator, degree + args.extra_degree)
        v = load_series(args.denominator, degree + args.extra_degree)
    try:
        outcome = series_ratio(u, v, degree, strict=args.strict)
    except DivisionError as exc:
        payload = {
            "command": "series",
            "passed": False,
            "error": type(exc).__name__,
            "detail": str(exc),
        }
        path = write_report(args.out, "series", payload)
        print(f"series division failed: {exc}")
        print(f"FAILED; see {path}")
        return 1
    f = outcome.quotient
    s_path = args.series_out or os.path.join(args.out, "ratio.series")
    os.makedirs(os.path.dirname(os.path.abspath(s_path)), exist_ok=True)
    with open(s_path, "w") as fh:
        fh.write(io.format_series(f, comment="ratio"))
    payload = {
        "command": "series",
        "passed": True,
        "residual_verified": outcome.residual_verified,
        "series_file": s_path,
        "max_degree": f.max_degree,
        "nonzero_coefficients": len(f.coefficients),
    }
    return _emit(
        args.out,
        "series",
        payload,
        [f"ratio series to degree {f.max_degree} -> {s_path}"],
    )[1]


def cmd_certify(args: argparse.Namespace) -> int:
    try:
        cert = bound_certificate(
            Fraction(args.a), Fraction(args.c), Fraction(args.r), args.k, args.n
        )
    except (ValueError, ZeroDivisionError) as exc:
        raise CliError(str(exc)) from exc
    report = verify_certificate(cert, args.n_check)
    c_path = os.path.join(args.out, "bound.cert")
    os.makedirs(args.out, exist_ok=True)
    with open(c_path, "w") as fh:
        fh.write(io.format_certificate(cert))
    payload = {
        "command": "certify",
        "passed": report.passed,
        "certificate_file": c_path,
        "verify": report.to_dict(),
    }
    return _emit(
        args.out,
        "certify",
        payload,
        [
            f"A = {cert.A}, R = ({', '.join(str(x) for x in cert.R)})",
            report.summary(),
            f"certificate -> {c_path}",
        ],
    )[1]


def cmd_verify(args: argparse.Namespace) -> int:
    if args.check in ("max", "harnack", "elliptic", "leading"):
        pair = _pair(args)
        region = parse_region(args) if (args.ball or args.box) else pair.region
    if args.check == "max":
        evaluator = RatioEvaluator.for_pair(pair)
        report = max_principle_check(
            evaluator,
            None,
            region,
            boundary_samples=args.boundary_samples,
            interior_samples=args.interior_samples,
            tol=args.tol,
            seed=args.seed,
        )
    elif args.check == "harnack":
        evaluator = RatioEvaluator.for_pair(pair)
        report = harnack_constant(
            evaluator, None, region, samples=args.samples, floor=args.floor
        )
    elif args.check == "ortho":
        q = load_polynomial(args.q)
        if args.q2 == "1":
            q2 = Polynomial.constant(q.dim, 1)
        else:
            q2 = load_polynomial(args.q2)
        report = sphere_orthogonality(
            q, q2, r=args.radius, quad_points=args.samples, tol=args.tol
        )
    elif args.check == "elliptic":
        report = residual_convergence(
            pair.u,
            pair.v,
            region,
            h0=args.h0,
            halvings=args.halvings,
            samples=args.samples,
            seed=args.seed,
            min_order=args.min_order,
        )
    elif args.check == "leading":
        degree = args.degree
        try:
            u = pair.u.taylor((0,) * pair.u.dimension, degree)
            v = pair.v.taylor((0,) * pair.v.dimension, degree)
        except (ValueError, ArithmeticError) as exc:
            raise CliError(str(exc)) from exc
        report = leading_zero_inclusion(
            u, v, samples=args.samples, tol=args.tol, seed=args.seed
        )
    else:  # pragma: no cover - argparse restricts choices
        raise CliError(f"unknown check {args.check}")
    payload = {"command": f"verify {args.check}", "passed": report.passed}
    payload.update(report.to_dict())
    return _emit(args.out, f"verify_{args.check}", payload, [report.summary()])[1]


def cmd_nodal(args: argparse.Namespace) -> int:
    w = load_polynomial(args.fn)
    region = parse_region(args)
    if args.action == "count":
        count = nodal_domain_count(w, region, args.res, band_rel=args.band)
        passed = args.expect is None or count == args.expect
        payload = {
            "command": "nodal count",
            "passed": passed,
            "count": count,
            "resolution": args.res,
            "expected": args.expect,
        }
        return _emit(args.out, "nodal_count", payload, [str(count)])[1]
    if args.action == "plot":
        points, segments = zero_set_sample(w, region, args.res)
        os.makedirs(args.out, exist_ok=True)
        if w.dim == 2:
            art = os.path.join(args.out, "nodal_set.svg")
            write_svg(points, segments, art)
        else:
            art = os.path.join(args.out, "nodal_set.csv")
            write_points_csv(points, art)
        payload = {
            "command": "nodal plot",
            "passed": True,
            "points": len(points),
            "segments": len(segments),
            "artifact": art,
        }
        return _emit(
            args.out,
            "nodal_plot",
            payload,
            [f"{len(points)} zero points -> {art}"],
        )[1]
    if args.action == "critical":
        report = critical_set_sample(
            w,
            region,
            grid=args.grid,
            tol_value=args.tol,
            tol_gradient=args.tol,
        )
        payload = {"command": "nodal critical", "passed": True}
        payload.update(report.to_dict())
        return _emit(
            args.out,
            "nodal_critical",
            payload,
            [f"{len(report.critical_points)} critical point(s): "
             f"{report.critical_points}"],
        )[1]
    raise CliError(f"unknown nodal action {args.action}")


def cmd_catalog(args: argparse.Namespace) -> int:
    if args.action == "list":
        names = _catalog.catalog_names()
        payload = {"command": "catalog list", "passed": True, "names": names}
        return _emit(args.out, "catalog_list", payload, names)[1]
    if args.action == "dump":
        manifest = _catalog.manifest(args.degree)
        payload = {"command": "catalog dump", "passed": True, "entries": manifest}
        return _emit(
            args.out,
            "catalog_dump",
            payload,
            [json.dumps(manifest, indent=2, sort_keys=True)],
        )[1]
    raise CliError(f"unknown catalog action {args.action}")


# -- parser ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="harmonic-ratios",
        description=__doc__,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument(
        "--out",
        default=os.environ.get("HARMONIC_RATIOS_OUT", "."),
        help="output directory for reports and artifacts "
        "(default: $HARMONIC_RATIOS_OUT or .)",
    )
    parser.add_argument("--seed", type=int, default=0, help="sampling seed")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("divide", help="divide one harmonic polynomial by another")
    p.add_argument("--dividend", required=True, help="polynomial file or catalog name")
    p.add_argument("--divisor", required=True, help="polynomial file or catalog name")
    p.add_argument("--quotient-out", default=None, help="quotient file path")
    p.set_defaults(func=cmd_divide)

    p = sub.add_parser("series", help="ratio of two Taylor series to a degree")
    p.add_argument("--pair", default=None, help="u,v catalog pair")
    p.add_argument("--numerator", default=None, help="series file or catalog name")
    p.add_argument("--denominator", default=None, help="series file or catalog name")
    p.add_argument("--degree", type=int, required=True, help="output degree")
    p.add_argument(
        "--extra-degree",
        type=int,
        default=4,
        help="input truncation margin when expanding catalog entries",
    )
    p.add_argument("--series-out", default=None, help="output series file path")
    p.add_argument(
        "--no-strict",
        dest="strict",
        action="store_false",
        help="skip the full residual check",
    )
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("certify", help="build and verify a coefficient bound")
    p.add_argument("--a", required=True, help="coefficient growth bound (rational)")
    p.add_argument("--c", required=True, help="divisor leading coefficient (rational)")
    p.add_argument("--r", required=True, help="measurement radius (rational)")
    p.add_argument("--k", type=int, required=True, help="divisor vanishing order")
    p.add_argument("--n", type=int, required=True, help="dimension")
    p.add_argument("--n-check", type=int, default=12, help="verification degree")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("verify", help="numeric property checks on ratio pairs")
    p.add_argument("check", choices=["max", "harnack", "ortho", "elliptic", "leading"])
    p.add_argument("--pair", default=None, help="u,v catalog pair")
    p.add_argument("--ball", default=None, help="cx,cy[,cz]:r")
    p.add_argument("--box", default=None, help="x0,x1,y0,y1[,z0,z1]")
    p.add_argument("--samples", type=parse_count, default=10000)
    p.add_argument("--boundary-samples", type=parse_count, default=4096)
    p.add_argument("--interior-samples", type=parse_count, default=4096)
    p.add_argument("--tol", type=float, default=1e-9, help="check tolerance")
    p.add_argument("--floor", type=float, default=1e-9, help="harnack zero floor")
    p.add_argument("--q", default=None, help="homogeneous harmonic polynomial")
    p.add_argument("--q2", default="1", help="lower-degree polynomial, or 1")
    p.add_argument("--radius", type=float, default=1.0, help="sphere radius")
    p.add_argument("--h0", type=float, default=0.05, help="initial grid step")
    p.add_argument("--halvings", type=int, default=3)
    p.add_argument("--min-order", type=float, default=1.9)
    p.add_argument("--degree", type=int, default=8, help="series degree (leading)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("nodal", help="nodal-set plots and analyses")
    p.add_argument("action", choices=["plot", "count", "critical"])
    p.add_argument("--fn", required=True, help="polynomial file or catalog name")
    p.add_argument("--ball", default=None, help="cx,cy[,cz]:r")
    p.add_argument("--box", default=None, help="x0,x1,y0,y1[,z0,z1]")
    p.add_argument("--res", type=int, default=256, help="grid resolution")
    p.add_argument("--band", type=float, default=1e-10, help="zero-detection band")
    p.add_argument("--grid", type=int, default=24, help="critical-point seed grid")
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument(
        "--expect", type=int, default=None, help="fail unless the count matches"
    )
    p.set_defaults(func=cmd_nodal)

    p = sub.add_parser("catalog", help="inspect the built-in catalog")
    p.add_argument("action", choices=["list", "dump"])
    p.add_argument("--degree", type=int, default=6, help="taylor degree in dumps")
    p.set_defaults(func=cmd_catalog)

    return parser


def _join_region_flags(argv: List[str]) -> List[str]:
    """Turn '--box -1,1,-1,1' into '--box=-1,1,-1,1'.

    Region values often start with a minus sign, which argparse would
    otherwise read as a new option.
    """
    out: List[str] = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in ("--box", "--ball") and i + 1 < len(argv):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    try:
        args = parser.parse_args(_join_region_flags(list(argv)))
    except SystemExit as exc:
        # argparse uses exit code 2 for usage errors already
        return int(exc.code or 0)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except io.FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
