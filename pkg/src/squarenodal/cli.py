"""Command-line front end.

Subcommands: spectrum, special-theta, critical, nodal, sweep, verify.
Angles are given either as plain radians ("0.7853981") or as multiples of
pi ("0.25pi").  All angle output is in multiples of pi with 12 significant
digits; file outputs are written to a temporary name and renamed into
place.  Exit codes: 0 success, 1 check failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
import tempfile

from . import chebyshev, critical_zeroes, nodal_topology, render, spectrum, verify

GRID_ENV = "SQUARENODAL_GRID"
SCHEMA = 1


def parse_theta(text: str) -> float:
    """Parse '<decimal>' (radians) or '<decimal>pi' into [0, pi)."""
    raw = text.strip().lower()
    try:
        if raw.endswith("pi"):
            head = raw[:-2]
            value = (float(head) if head not in ("", "+", "-") else float(head + "1")) * math.pi
        else:
            value = float(raw)
    except ValueError as err:
        raise argparse.ArgumentTypeError(f"cannot parse angle {text!r}") from err
    return value % math.pi


def _in_pi(x: float) -> float:
    return float(f"{x / math.pi:.12g}")


def _atomic_write(path: str, data: str) -> None:
    directory = os.path.dirname(os.path.abspath(path)) or "."
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", text=True)
    try:
        with os.fdopen(fd, "w") as handle:
            handle.write(data)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _default_grid(args_grid: int | None) -> int | None:
    if args_grid is not None:
        return args_grid
    env = os.environ.get(GRID_ENV)
    return int(env) if env else None


def _emit_json(payload: dict, out) -> None:
    print(json.dumps(payload, sort_keys=True, separators=(", ", ": ")), file=out)


def _cmd_spectrum(args, out) -> int:
    entries = spectrum.enumerate_spectrum(args.max)
    if args.json:
        payload = {
            "schema": SCHEMA,
            "entries": [
                {
                    "k": e.k,
                    "eigenvalue": e.eigenvalue,
                    "multiplicity": e.multiplicity,
                    "modes": [[mo.m, mo.n] for mo in e.modes],
                }
                for e in entries
            ],
        }
        _emit_json(payload, out)
        return 0
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["k", "lambda", "mult", "modes"])
    for e in entries:
        writer.writerow(
            [e.k, e.eigenvalue, e.multiplicity, ";".join(f"{mo.m}x{mo.n}" for mo in e.modes)]
        )
    return 0


def _cmd_special_theta(args, out) -> int:
    cat = chebyshev.build_catalog(args.R)
    tcat = chebyshev.build_theta_catalog(args.R)
    fields = {
        "q_over_pi": [_in_pi(v) for v in cat.q],
        "extrema": [float(f"{v:.12g}") for v in cat.extrema],
        "T_o_over_pi": [_in_pi(v) for v in tcat.T_o],
        "T_x_over_pi": [_in_pi(v) for v in tcat.T_x],
        "T_y_over_pi": [_in_pi(v) for v in tcat.T_y],
        "theta_minus_over_pi": _in_pi(cat.theta_minus),
    }
    if args.json:
        _emit_json({"schema": SCHEMA, "R": args.R, **fields}, out)
        return 0
    print(f"R = {args.R}", file=out)
    for key, val in fields.items():
        if isinstance(val, list):
            print(f"{key}: " + " ".join(f"{v:.12g}" for v in val), file=out)
        else:
            print(f"{key}: {val:.12g}", file=out)
    return 0


def _zero_row(z) -> dict:
    return {
        "locus": z.locus,
        "edge": z.edge,
        "x_over_pi": _in_pi(z.x),
        "y_over_pi": _in_pi(z.y),
        "order": z.order,
        "degenerate": z.degenerate,
    }


def _cmd_critical(args, out) -> int:
    zeros = critical_zeroes.critical_zero_inventory(args.m, args.n, args.theta)
    source = "analytic"
    if zeros is None:
        zeros = critical_zeroes.find_critical_zeroes_numeric(args.m, args.n, args.theta)
        source = "numeric best-effort"
    if args.json:
        payload = {
            "schema": SCHEMA,
            "m": args.m,
            "n": args.n,
            "theta_over_pi": _in_pi(args.theta),
            "source": source,
            "critical_zeroes": [_zero_row(z) for z in zeros],
        }
        _emit_json(payload, out)
        return 0
    print(f"critical zeroes ({source}), theta = {_in_pi(args.theta):.12g} pi", file=out)
    for z in zeros:
        edge = f" {z.edge}" if z.edge else ""
        flag = " degenerate" if z.degenerate else ""
        print(
            f"  {z.locus}{edge}: ({_in_pi(z.x):.12g} pi, {_in_pi(z.y):.12g} pi) "
            f"order {z.order}{flag}",
            file=out,
        )
    return 0


def _cmd_nodal(args, out) -> int:
    grid_n = _default_grid(args.grid)
    summary = nodal_topology.nodal_summary(args.m, args.n, args.theta, resolution=grid_n)
    if args.svg:
        grid = nodal_topology.build_grid(args.m, args.n, args.theta, summary.resolution)
        spec = render.RenderSpec(math_axes=args.math_axes)
        _atomic_write(args.svg, render.render_nodal_svg(summary, grid, spec))
    if args.json:
        payload = {
            "schema": SCHEMA,
            "m": args.m,
            "n": args.n,
            "theta_over_pi": _in_pi(summary.theta),
            "domain_count": summary.domain_count,
            "resolution": summary.resolution,
            "boundary_hits": summary.boundary_hits,
            "closed_curve_count": summary.closed_curve_count,
            "critical_zeroes": [_zero_row(z) for z in summary.critical_zeroes],
        }
        if summary.q_patterns is not None:
            payload["q_patterns"] = {
                f"{i},{j}": pat.kind.value for (i, j), pat in sorted(summary.q_patterns.items())
            }
        _emit_json(payload, out)
        return 0
    print(
        f"(m, n) = ({args.m}, {args.n}), theta = {_in_pi(summary.theta):.12g} pi",
        file=out,
    )
    print(f"nodal domains: {summary.domain_count} (grid {summary.resolution})", file=out)
    print(
        f"critical zeroes: {len(summary.interior_critical)} interior, "
        f"{len(summary.edge_critical)} edge",
        file=out,
    )
    if summary.boundary_hits is not None:
        print(f"boundary hits: {summary.boundary_hits}", file=out)
    if summary.closed_curve_count is not None:
        print(f"closed curves: {summary.closed_curve_count}", file=out)
    if args.svg:
        print(f"wrote {args.svg}", file=out)
    return 0


def _cmd_sweep(args, out) -> int:
    lo, hi = 0.0, math.pi
    if args.range:
        parts = args.range.split(",")
        if len(parts) != 2:
            raise argparse.ArgumentTypeError("--range wants 'low,high'")
        lo = parse_theta(parts[0])
        hi = parse_theta(parts[1])
        if hi == 0.0:
            hi = math.pi
    report = nodal_topology.sweep(
        args.m,
        args.n,
        theta_range=(lo, hi),
        samples_per_interval=args.samples,
        resolution=_default_grid(args.grid),
    )
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["theta_over_pi", "domain_count", "n_interior_cz", "n_edge_cz", "anomaly_flag"])
    for s in report.samples:
        writer.writerow(
            [
                f"{_in_pi(s.theta):.12g}",
                s.domain_count,
                "" if s.interior_critical is None else s.interior_critical,
                "" if s.edge_critical is None else s.edge_critical,
                int(s.anomaly),
            ]
        )
    if args.csv:
        _atomic_write(args.csv, buffer.getvalue())
        print(f"wrote {args.csv}", file=out)
    else:
        out.write(buffer.getvalue())
    return 0


def _cmd_verify(args, out) -> int:
    return verify.run_suite(args.suite, emit=lambda line: print(line, file=out))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="squarenodal",
        description="Nodal sets of Dirichlet eigenfunctions of the square",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", help="ranked eigenvalues with multiplicities")
    p.add_argument("--max", type=float, required=True, help="largest eigenvalue to list")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--csv", action="store_true", help="CSV output (the default)")
    p.set_defaults(func=_cmd_spectrum)

    p = sub.add_parser("special-theta", help="extremum angles and special mixing angles")
    p.add_argument("--R", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_special_theta)

    p = sub.add_parser("critical", help="critical zeroes of one eigenfunction")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--theta", type=parse_theta, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_critical)

    p = sub.add_parser("nodal", help="nodal-domain summary, optional SVG")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--theta", type=parse_theta, required=True)
    p.add_argument("--grid", type=int, default=None, help=f"samples per axis (or ${GRID_ENV})")
    p.add_argument("--svg", metavar="PATH", default=None)
    p.add_argument("--json", action="store_true")
    p.add_argument("--math-axes", action="store_true", help="draw with y growing upward")
    p.set_defaults(func=_cmd_nodal)

    p = sub.add_parser("sweep", help="domain counts across mixing angles")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--range", default=None, help="low,high (same angle grammar)")
    p.add_argument("--samples", type=int, default=1, help="samples per open interval")
    p.add_argument("--grid", type=int, default=None)
    p.add_argument("--csv", metavar="PATH", default=None)
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("verify", help="run the acceptance checks")
    p.add_argument("--suite", default="all", choices=sorted(verify.SUITES))
    p.set_defaults(func=_cmd_verify)

    return parser


def run_cli(argv, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else 0
    try:
        return args.func(args, out)
    except (ValueError, argparse.ArgumentTypeError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run_cli(sys.argv[1:]))


if __name__ == "__main__":
    main()
