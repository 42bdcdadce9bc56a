"""``spodet`` command-line front end.

Every subcommand prints a JSON report on stdout (resolved config, version, timestamp, result).
``--out`` additionally writes the rows to a file: CSV when the name ends in ``.csv``, JSON
otherwise. Exit codes: 0 success, 1 usage error, 2 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import datetime as _dt
import json
import math
import re
import sys
from dataclasses import asdict, is_dataclass
from fractions import Fraction

import numpy as np

from . import __version__

EXIT_OK, EXIT_USAGE, EXIT_FAIL = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


# -- parsing helpers ------------------------------------------------------------------------

def parse_grid(text: str) -> list[float]:
    """``start:stop:step`` (stop included when hit) or a comma list."""
    if ":" not in text:
        return parse_floats(text)
    parts = text.split(":")
    if len(parts) != 3:
        raise UsageError(f"grid must be start:stop:step, got {text!r}")
    try:
        start, stop, step = (float(p) for p in parts)
    except ValueError as exc:
        raise UsageError(f"malformed grid {text!r}") from exc
    if step <= 0 or stop < start:
        raise UsageError(f"grid needs step > 0 and stop >= start, got {text!r}")
    count = int(math.floor((stop - start) / step + 1e-9)) + 1
    return [round(start + k * step, 12) for k in range(count)]


def parse_floats(text: str) -> list[float]:
    try:
        return [float(v) for v in text.split(",") if v.strip()]
    except ValueError as exc:
        raise UsageError(f"expected comma-separated numbers, got {text!r}") from exc


def parse_complexes(text: str) -> list[complex]:
    from .specialization import parse_complex

    try:
        return [parse_complex(v) for v in text.split(",") if v.strip()]
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def parse_sizes(text: str) -> list[int]:
    """``1..10`` (inclusive) or a comma list."""
    try:
        if ".." in text:
            lo, hi = text.split("..")
            return list(range(int(lo), int(hi) + 1))
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError as exc:
        raise UsageError(f"malformed size list {text!r}") from exc


def parse_half(text: str) -> Fraction:
    try:
        value = Fraction(text)
    except ValueError as exc:
        raise UsageError(f"not a number: {text!r}") from exc
    if (2 * value).denominator != 1 or (2 * value).numerator % 2 == 0:
        raise UsageError(f"{text!r} is not a half-integer")
    return value


def parse_partition(text: str) -> tuple[int, ...]:
    text = text.strip()
    if text in ("", "0", "empty"):
        return ()
    try:
        return tuple(int(v) for v in text.split(","))
    except ValueError as exc:
        raise UsageError(f"malformed partition {text!r}") from exc


def spec_arg(text: str):
    from .specialization import parse_spec

    try:
        return parse_spec(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


# -- serialization ----------------------------------------------------------------------------

def to_jsonable(obj):
    if isinstance(obj, (complex, np.complexfloating)):
        return [float(obj.real), float(obj.imag)]
    if isinstance(obj, (np.floating, np.integer, np.bool_)):
        return obj.item()
    if isinstance(obj, Fraction):
        return str(obj)
    if is_dataclass(obj) and not isinstance(obj, type):
        return to_jsonable(asdict(obj))
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return to_jsonable(obj.tolist())
    return obj


def _flat_cell(v):
    v = to_jsonable(v)
    if isinstance(v, list) and len(v) == 2 and all(isinstance(x, float) for x in v):
        return v[0] if v[1] == 0 else f"{v[0]}{'+' if v[1] >= 0 else '-'}{abs(v[1])}j"
    return v


def write_rows(path: str, rows: list[dict], report: dict):
    if path.endswith(".csv"):
        with open(path, "w", newline="", encoding="utf-8") as fh:
            if rows:
                writer = csv.DictWriter(fh, fieldnames=list(rows[0]))
                writer.writeheader()
                for row in rows:
                    writer.writerow({k: _flat_cell(v) for k, v in row.items()})
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(dump(report))
            fh.write("\n")


def dump(report: dict) -> str:
    return json.dumps(to_jsonable(report), sort_keys=True, indent=2)


# -- subcommands --------------------------------------------------------------------------------
# each returns (result dict, rows for --out, passed flag)

def cmd_char(args):
    from .characters import character, skew_schur

    rho = spec_arg(args.rho)
    lam = parse_partition(args.lam)
    if args.skew is not None:
        if args.kind != "schur":
            raise UsageError("--skew only applies to --kind schur")
        value = skew_schur(lam, parse_partition(args.skew), rho)
    else:
        value = character(args.kind, lam, rho)
    return {"value": value}, [{"kind": args.kind, "lam": args.lam, "value": value}], True


def cmd_kernel(args):
    from .kernel import KernelSpec, kernel_entry_quadrature, kernel_entry_series

    spec = KernelSpec(args.kind, spec_arg(args.rho_plus), spec_arg(args.rho_minus))
    a, b = parse_half(args.a), parse_half(args.b)
    out = {}
    if args.method in ("series", "both"):
        out["series"] = kernel_entry_series(spec, a, b)
    if args.method in ("quadrature", "both"):
        out["quadrature"] = kernel_entry_quadrature(spec, a, b, adaptive=True)
    passed = True
    if args.method == "both":
        out["abs_diff"] = abs(out["series"] - out["quadrature"])
        passed = out["abs_diff"] < args.tol
    return out, [dict(a=str(a), b=str(b), **out)], passed


def cmd_measure_check(args):
    from .kernel import KernelSpec, kernel_matrix
    from .measures import MeasureSpec, brute_correlation, enumerated_sum, normalization

    m = MeasureSpec(args.kind, spec_arg(args.rho_plus), spec_arg(args.rho_minus))
    enum = enumerated_sum(m, args.max_weight)
    Z = normalization(m)
    diff = abs(enum.value - Z)
    out = {"enumerated": enum.value, "normalization": Z, "abs_diff": diff, "tail_bound": enum.tail_bound}
    passed = diff <= enum.tail_bound + args.tol
    rows = [{"quantity": "normalization", "enumerated": enum.value, "closed_form": Z, "abs_diff": diff}]
    if args.points:
        pts = [parse_half(p) for p in args.points.split(",")]
        brute = brute_correlation(m, pts, args.max_weight)
        det = kernel_matrix(KernelSpec.from_measure(m), pts).det()
        cdiff = abs(det - brute.value)
        out["correlation"] = {"kernel_det": det, "enumerated": brute.value, "abs_diff": cdiff,
                              "tail_bound": brute.tail_bound}
        passed = passed and cdiff <= brute.tail_bound + args.tol
        rows.append({"quantity": "correlation", "enumerated": brute.value, "closed_form": det, "abs_diff": cdiff})
    return out, rows, passed


def cmd_verify(args):
    if args.what == "cauchy":
        from .characters import cauchy_check

        xs, ys = parse_complexes(args.xs), parse_complexes(args.ys)
        try:
            lhs, rhs, M = cauchy_check(args.kind, xs, ys, odd=args.odd)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        res = abs(lhs - rhs) / abs(rhs)
        out = {"lhs": lhs, "rhs": rhs, "rel_residual": res, "truncation_weight": M}
        return out, [out], res < args.tol
    from .toeplitz_hankel import Symbol, bo_sides, gessel_sides

    sym = Symbol(parse_complexes(args.rho_plus_coeffs), parse_complexes(args.rho_minus_coeffs))
    if args.what == "gessel":
        try:
            kind = int(args.kind)
        except ValueError as exc:
            raise UsageError("gessel --kind must be 1, 2, 3 or 4") from exc
        if kind not in (1, 2, 3, 4):
            raise UsageError("gessel --kind must be 1, 2, 3 or 4")
        try:
            lhs, rhs = gessel_sides(kind, sym, args.size, args.max_weight)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    else:
        if args.kind not in ("sp", "o"):
            raise UsageError("bo --kind must be sp or o")
        lhs, rhs = bo_sides(args.kind, sym, args.m)
    res = abs(lhs - rhs)
    out = {"lhs": lhs, "rhs": rhs, "residual": res}
    return out, [out], res < args.tol


def cmd_szego(args):
    from .toeplitz_hankel import Symbol, szego_convergence, szego_rhs

    sym = Symbol(parse_complexes(args.rho_plus_coeffs), parse_complexes(args.rho_minus_coeffs))
    try:
        table = szego_convergence(args.kind, sym, parse_sizes(args.sizes), args.family)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    rows = [{"size": n, "value": v, "deviation": d} for n, v, d in table]
    return {"limit": szego_rhs(args.kind, sym), "rows": rows}, rows, True


def cmd_edge(args):
    from .edge import deviations_decrease, edge_convergence_report

    rows = edge_convergence_report(args.model, parse_floats(args.theta), parse_floats(args.s),
                                   use_effective_s=not args.raw_s)
    table = [
        {"model": r.model, "theta": r.theta, "s": r.s, "effective_s": r.effective_s,
         "discrete": r.discrete, "target": r.target, "deviation": r.deviation}
        for r in rows
    ]
    trend = deviations_decrease(rows)
    return {"rows": table, "strictly_decreasing": trend}, table, True


def cmd_continuum(args, tag):
    from .continuum import ContinuumKernel, NystromConfig, fredholm_det_continuum

    try:
        cfg = NystromConfig(args.length, args.nodes)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    k = ContinuumKernel(tag)
    rows = []
    for s in parse_grid(args.s_grid):
        d = fredholm_det_continuum(k, s, cfg)
        rows.append({"s": s, "value": d.value, "refined": d.refined_value, "stable": d.stable})
    return {"kernel": tag, "rows": rows}, rows, all(r["stable"] for r in rows)


def cmd_selftest(args):
    from .selftest import run_selftest

    checks = run_selftest(seed=args.seed)
    rows = [{"check": name, "passed": ok, "detail": detail} for name, ok, detail in checks]
    return {"checks": rows}, rows, all(ok for _, ok, _ in checks)


# -- parser ---------------------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--out", help="also write rows to this file (.csv for CSV, JSON otherwise)")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--threads", type=int, default=1, help="accepted for reproducibility records")
    common.add_argument("--tol", type=float, default=1e-8)

    p = _Parser(prog="spodet", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"spodet {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("char", parents=[common], help="evaluate a character")
    c.add_argument("--kind", choices=["schur", "sp", "o"], required=True)
    c.add_argument("--lam", required=True, help="comma-separated parts")
    c.add_argument("--rho", required=True, help="specialization, e.g. plancherel:0.5 or vars:0.2,0.3")
    c.add_argument("--skew", help="inner partition for a skew Schur function")

    k = sub.add_parser("kernel", parents=[common], help="a correlation kernel entry")
    k.add_argument("--kind", choices=["sp", "o"], required=True)
    k.add_argument("--rho-plus", required=True)
    k.add_argument("--rho-minus", required=True)
    k.add_argument("--a", required=True)
    k.add_argument("--b", required=True)
    k.add_argument("--method", choices=["series", "quadrature", "both"], default="series")

    m = sub.add_parser("measure-check", parents=[common], help="normalization and correlations vs enumeration")
    m.add_argument("--kind", choices=["sp", "o"], required=True)
    m.add_argument("--rho-plus", required=True)
    m.add_argument("--rho-minus", required=True)
    m.add_argument("--max-weight", type=int, default=12)
    m.add_argument("--points", help="comma-separated half-integers")

    v = sub.add_parser("verify", help="identity checks")
    vs = v.add_subparsers(dest="what", required=True, parser_class=_Parser)
    vc = vs.add_parser("cauchy", parents=[common])
    vc.add_argument("--kind", choices=["sp", "o"], required=True)
    vc.add_argument("--xs", required=True)
    vc.add_argument("--ys", required=True)
    vc.add_argument("--odd", action="store_true", help="use the (x, 1/x, 1) alphabet")
    for name in ("gessel", "bo"):
        vp = vs.add_parser(name, parents=[common])
        vp.add_argument("--kind", required=True, help="1-4 for gessel; sp or o for bo")
        vp.add_argument("--rho-plus-coeffs", default="")
        vp.add_argument("--rho-minus-coeffs", default="")
        if name == "gessel":
            vp.add_argument("--size", type=int, required=True)
            vp.add_argument("--max-weight", type=int, default=12)
        else:
            vp.add_argument("--m", type=int, required=True)

    z = sub.add_parser("szego", parents=[common], help="Toeplitz+Hankel values approaching the limit")
    z.add_argument("--kind", choices=["sp", "o"], default="sp")
    z.add_argument("--family", type=int, choices=[1, 2, 3, 4])
    z.add_argument("--sizes", default="1..10")
    z.add_argument("--rho-plus-coeffs", default="")
    z.add_argument("--rho-minus-coeffs", default="")

    e = sub.add_parser("edge", parents=[common], help="discrete edge gaps vs continuum targets")
    e.add_argument("--model", choices=["psp", "po", "pa", "pb"], required=True)
    e.add_argument("--theta", required=True, help="comma-separated, increasing")
    e.add_argument("--s", required=True, help="comma-separated")
    e.add_argument("--raw-s", action="store_true", help="compare at the nominal s instead of the lattice-effective s")

    for name, helptext in (("tw2", "GUE Tracy-Widom distribution"), ("f21", "det(1 - A21+/-)")):
        t = sub.add_parser(name, parents=[common], help=helptext)
        t.add_argument("--s-grid", default="-6:4:0.5")
        t.add_argument("--length", type=float, default=12.0)
        t.add_argument("--nodes", type=int, default=40)
        if name == "f21":
            t.add_argument("--sign", choices=["plus", "minus"], default="plus")

    sub.add_parser("selftest", parents=[common], help="quick invariant suite")
    return p


def _dispatch(args):
    cmd = args.command
    if cmd == "char":
        return cmd_char(args)
    if cmd == "kernel":
        return cmd_kernel(args)
    if cmd == "measure-check":
        return cmd_measure_check(args)
    if cmd == "verify":
        return cmd_verify(args)
    if cmd == "szego":
        return cmd_szego(args)
    if cmd == "edge":
        return cmd_edge(args)
    if cmd == "tw2":
        return cmd_continuum(args, "airy")
    if cmd == "f21":
        return cmd_continuum(args, "a21_plus" if args.sign == "plus" else "a21_minus")
    return cmd_selftest(args)


_NEGATIVE_VALUE = re.compile(r"^-[\d.]")


def _glue_negative_values(argv: list[str]) -> list[str]:
    # argparse reads "-2:0:1" or "-1,0" after a flag as an option name
    out, i = [], 0
    while i < len(argv):
        tok = argv[i]
        if tok.startswith("--") and "=" not in tok and i + 1 < len(argv) and _NEGATIVE_VALUE.match(argv[i + 1]):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def run(argv=None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    argv = _glue_negative_values(list(sys.argv[1:] if argv is None else argv))
    try:
        args = build_parser().parse_args(argv)
        if args.tol <= 0:
            raise UsageError("--tol must be positive")
        if args.threads < 1:
            raise UsageError("--threads must be at least 1")
        result, rows, passed = _dispatch(args)
    except (UsageError, ValueError) as exc:
        print(f"spodet: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    report = {
        "command": args.command,
        "config": {k: v for k, v in vars(args).items()},
        "version": __version__,
        "timestamp": _dt.datetime.now(_dt.timezone.utc).isoformat(),
        "passed": passed,
        "result": result,
    }
    if args.out:
        write_rows(args.out, rows, report)
    stdout.write(dump(report))
    stdout.write("\n")
    return EXIT_OK if passed else EXIT_FAIL


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
