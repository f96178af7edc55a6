"""Command line front end: spectrum, charpoly, verify, sweep, export.

Exit codes: 0 success, 1 verification mismatch, 2 invalid input, 3 I/O
failure.  Numeric output is fixed at 12 significant digits so golden-file
comparisons stay stable.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .closedform import CubicRoot, charpoly_closed, cubic_s, spectrum_closed
from .errors import DegenerateFamily, InvalidParams, UnsupportedShape
from .family import make_params, signed_edges, vertex_labels
from .polynomial import UniPoly
from .verify import DEFAULT_N_CAP, discrepancy_notes, sweep, verify_instance

N_CAP_ENV = "SEIDELSPECTRA_N_CAP"

__all__ = [
    "main",
    "run",
    "cmd_spectrum",
    "cmd_charpoly",
    "cmd_verify",
    "cmd_sweep",
    "cmd_export",
]


def _fmt_value(value: object, tol: float) -> str:
    if isinstance(value, CubicRoot):
        return f"{value.approx(tol):.12g}"
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    return str(value)


def _json_value(value: object, tol: float) -> object:
    if isinstance(value, int):
        return value
    if isinstance(value, CubicRoot):
        return float(f"{value.approx(tol):.12g}")
    return float(f"{float(value):.12g}")


def cmd_spectrum(args: argparse.Namespace) -> int:
    params = make_params(args.h, args.p, args.k)
    spectrum = spectrum_closed(params, args.tol)
    coeffs = cubic_s(params)
    if args.format == "json":
        payload = {
            "h": params.h,
            "p": params.p,
            "k": params.k,
            "n": params.n,
            "eigenvalues": [
                {"value": _json_value(v, args.tol), "multiplicity": m}
                for v, m in spectrum.entries
            ],
            "cubic": list(coeffs),
        }
        print(json.dumps(payload))
        return 0
    print(f"h={params.h} p={params.p} k={params.k} n={params.n}")
    print("eigenvalues:")
    for value, mult in spectrum.entries:
        print(f"  {_fmt_value(value, args.tol)}  x{mult}")
    print(f"cubic coefficients (ascending): [{', '.join(str(c) for c in coeffs)}]")
    return 0


def cmd_charpoly(args: argparse.Namespace) -> int:
    params = make_params(args.h, args.p, args.k)
    fac = charpoly_closed(params)
    cubic_poly = UniPoly(fac.cubic)
    if args.format == "json":
        payload = {
            "h": params.h,
            "p": params.p,
            "k": params.k,
            "n": params.n,
            "degree": fac.degree,
            "factors": [
                {"root": fac.root1, "exponent": fac.e1},
                {"root": fac.root2, "exponent": fac.e2},
            ],
            "cubic": list(fac.cubic),
        }
        if args.expanded:
            payload["coefficients"] = list(fac.expand().coeffs)
        print(json.dumps(payload))
        return 0
    pieces = []
    if fac.e1:
        pieces.append(f"({fac.root1} - x)^{fac.e1}")
    if fac.e2:
        pieces.append(f"({fac.root2} - x)^{fac.e2}")
    pieces.append(f"({cubic_poly})")
    print(" * ".join(pieces))
    print(f"degree: {fac.degree}")
    if args.expanded:
        print(f"coefficients (ascending): {list(fac.expand().coeffs)}")
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    params = make_params(args.h, args.p, args.k)
    report = verify_instance(params, args.tol)
    spectrum = spectrum_closed(params, args.tol)
    ok = report.charpoly_exact_match and report.spectrum_max_deviation <= args.tol
    if args.format == "json":
        payload = {
            "params": {"h": params.h, "p": params.p, "k": params.k, "n": params.n},
            "charpoly_exact_match": report.charpoly_exact_match,
            "coefficient_diffs": [list(d) for d in report.coefficient_diffs],
            "spectrum_max_deviation": float(f"{report.spectrum_max_deviation:.12g}"),
            "invariants": dict(zip(report.invariant_results._fields,
                                   report.invariant_results)),
            "eigenvalues": [
                {"value": _json_value(v, args.tol), "multiplicity": m}
                for v, m in spectrum.entries
            ],
            "notes": list(discrepancy_notes()),
        }
        print(json.dumps(payload))
        return 0 if ok else 1
    print(f"h={params.h} p={params.p} k={params.k} n={params.n}")
    print(f"charpoly exact match: {'yes' if report.charpoly_exact_match else 'no'}")
    for deg, closed, oracle in report.coefficient_diffs:
        print(f"  degree {deg}: closed form {closed} vs oracle {oracle}")
    print("eigenvalues (closed form):")
    for value, mult in spectrum.entries:
        print(f"  {_fmt_value(value, args.tol)}  x{mult}")
    print(f"max numeric deviation: {report.spectrum_max_deviation:.3e}")
    flags = " ".join(
        f"{name}={'pass' if value else 'FAIL'}"
        for name, value in zip(report.invariant_results._fields,
                               report.invariant_results)
    )
    print(f"invariants: {flags}")
    print("notes:")
    for note in discrepancy_notes():
        print(f"  - {note}")
    return 0 if ok else 1


def _resolve_n_cap(args: argparse.Namespace) -> int:
    if args.n_cap is not None:
        return args.n_cap
    raw = os.environ.get(N_CAP_ENV)
    if raw is None:
        return DEFAULT_N_CAP
    try:
        return int(raw)
    except ValueError:
        raise InvalidParams(f"{N_CAP_ENV} must be an integer, got {raw!r}") from None


def cmd_sweep(args: argparse.Namespace) -> int:
    summary = sweep(args.h_max, args.k_max, args.tol, _resolve_n_cap(args))
    if args.format == "json":
        rows: list[dict] = [
            {
                "h": r.params.h,
                "p": r.params.p,
                "k": r.params.k,
                "n": r.params.n,
                "exact_match": r.charpoly_exact_match,
                "max_dev": float(f"{r.spectrum_max_deviation:.12g}"),
                "elapsed_ms": r.elapsed * 1000.0,
            }
            for r in summary.reports
        ]
        rows.extend(
            {"h": s.h, "p": s.p, "k": s.k, "n": s.n, "skipped": True}
            for s in summary.skipped
        )
        text = json.dumps(rows) + "\n"
    else:
        lines = ["h,p,k,n,exact_match,max_dev,elapsed_ms"]
        for r in summary.reports:
            match = "true" if r.charpoly_exact_match else "false"
            lines.append(
                f"{r.params.h},{r.params.p},{r.params.k},{r.params.n},"
                f"{match},{r.spectrum_max_deviation:.12g},{r.elapsed * 1000.0:.3f}"
            )
        text = "\n".join(lines) + "\n"
    summary_line = (
        f"{summary.passed} passed, {summary.failed} failed, "
        f"{len(summary.skipped)} skipped"
    )
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text)
        print(summary_line)
    else:
        sys.stdout.write(text)
        print(summary_line, file=sys.stderr)
    return 0 if summary.failed == 0 else 1


def cmd_export(args: argparse.Namespace) -> int:
    params = make_params(args.h, args.p, args.k)
    edges = signed_edges(params)
    if args.format == "json":
        payload = {
            "n": params.n,
            "negative_edges": [[i, j] for i, j, sign in edges if sign == -1],
        }
        print(json.dumps(payload))
        return 0
    lines = ["graph G {"]
    for index, label in enumerate(vertex_labels(params)):
        name = (
            f"v{label.clique}_{label.slot}"
            if label.kind == "private"
            else f"u{label.slot}"
        )
        lines.append(f'  {index} [label="{name}"];')
    for i, j, sign in edges:
        lines.append(f'  {i} -- {j} [sign="{"-" if sign == -1 else "+"}"];')
    lines.append("}")
    print("\n".join(lines))
    return 0


def _add_family_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--h", type=int, required=True, help="clique order (>= 2)")
    parser.add_argument("--p", type=int, required=True,
                        help="private vertices per clique (1 <= p <= h)")
    parser.add_argument("--k", type=int, required=True, help="number of cliques")


def _add_tol_arg(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--tol", type=float, default=1e-9,
                        help="numeric tolerance (default 1e-9)")


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="seidelspectra",
        description="exact Seidel spectra of signed complete graphs whose "
        "negative edges form overlapping cliques",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("spectrum", help="eigenvalues with multiplicities")
    _add_family_args(sp)
    _add_tol_arg(sp)
    sp.add_argument("--format", choices=("human", "json"), default="human")
    sp.set_defaults(func=cmd_spectrum)

    cp = sub.add_parser("charpoly", help="factored characteristic polynomial")
    _add_family_args(cp)
    cp.add_argument("--expanded", action="store_true",
                    help="also print the expanded coefficient vector")
    cp.add_argument("--format", choices=("human", "json"), default="human")
    cp.set_defaults(func=cmd_charpoly)

    vf = sub.add_parser("verify", help="closed form vs oracle for one instance")
    _add_family_args(vf)
    _add_tol_arg(vf)
    vf.add_argument("--format", choices=("human", "json"), default="human")
    vf.set_defaults(func=cmd_verify)

    sw = sub.add_parser("sweep", help="verify a whole parameter grid")
    sw.add_argument("--h-max", type=int, required=True)
    sw.add_argument("--k-max", type=int, required=True)
    sw.add_argument("--n-cap", type=int, default=None,
                    help=f"skip points with n above this (default {DEFAULT_N_CAP}, "
                    f"or the {N_CAP_ENV} environment variable)")
    _add_tol_arg(sw)
    sw.add_argument("--out", default=None, help="write results here instead of stdout")
    sw.add_argument("--format", choices=("csv", "json"), default="csv")
    sw.set_defaults(func=cmd_sweep)

    ex = sub.add_parser("export", help="serialize the signed graph")
    _add_family_args(ex)
    ex.add_argument("--format", choices=("dot", "json"), default="dot")
    ex.set_defaults(func=cmd_export)

    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InvalidParams, DegenerateFamily, UnsupportedShape) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


def run() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    run()
