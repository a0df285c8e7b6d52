"""Command-line interface.

Verbs: ``solve``, ``profile``, ``classify``, ``sweep`` and ``curve``. Exit
codes: 0 solved, 2 invalid input, 3 no solution exists, 4 wrong problem
class (not a dam-break, or supercritical data over a terrain step).

Gravity comes from ``--g`` if given, then the problem file, then the
``SWE_RIEMANN_G`` environment variable, then 9.81.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Any, Sequence

import numpy as np

from . import kernels
from .classify import classify_dambreak
from .constructor import DEFAULT_SAMPLES, NoSolutionReport, build_composite_curve, solve
from .core import DEFAULT_G, RiemannProblem
from .errors import NotDamBreak, RiemannError, SupercriticalData
from .sampler import ProfileRequest, profile, uniform_grid
from .wave_curves import Family, emit_curve, sonic_point_on_w1

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_NO_SOLUTION = 3
EXIT_WRONG_CLASS = 4

ENV_G = "SWE_RIEMANN_G"


class CliError(Exception):
    def __init__(self, message: str, code: int = EXIT_INVALID):
        super().__init__(message)
        self.code = code


def _fmt(v: float) -> str:
    # shortest string that round-trips the double exactly
    return repr(float(v))


def _default_g() -> float:
    raw = os.environ.get(ENV_G)
    if raw is None:
        return DEFAULT_G
    try:
        return float(raw)
    except ValueError:
        raise CliError(f"{ENV_G} is not a number: {raw!r}") from None


def load_problem(path: str, g_flag: float | None = None) -> RiemannProblem:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as exc:
        raise CliError(f"cannot read problem file {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise CliError(f"malformed JSON in {path}: {exc.msg} (line {exc.lineno})") from None
    if not isinstance(data, dict):
        raise CliError(f"problem file {path} must hold a JSON object")
    if g_flag is not None:
        g = g_flag
    elif "g" in data:
        try:
            g = float(data["g"])
        except (TypeError, ValueError):
            raise CliError("field g: not a number") from None
    else:
        g = _default_g()
    return RiemannProblem.from_dict(data, g=g)


def _write_json(path: Path, payload: dict[str, Any]) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w") as fh:
        json.dump(payload, fh, indent=2)
        fh.write("\n")


def _write_csv(path: str, header: Sequence[str], rows) -> None:
    Path(path).parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\r\n")
        w.writerow(header)
        for row in rows:
            w.writerow([_fmt(v) if isinstance(v, (float, np.floating)) else v for v in row])


def _solve(p: RiemannProblem, samples: int, any_porosity: bool):
    try:
        return solve(p, n_samples=samples, allow_any_porosity=any_porosity)
    except SupercriticalData as exc:
        raise CliError(f"SupercriticalData: {exc}", EXIT_WRONG_CLASS) from None


# ---------------------------------------------------------------------------
# verbs


def cmd_solve(args) -> int:
    p = load_problem(args.problem, args.g)
    result = _solve(p, args.samples, args.any_porosity)
    out = Path(args.out) / "solution.json"
    if isinstance(result, NoSolutionReport):
        payload = {"problem": p.to_dict(), **result.to_dict()}
        _write_json(out, payload)
        cite = result.classification.citation if result.classification else "no classification"
        print(f"no solution ({cite}); report written to {out}", file=sys.stderr)
        return EXIT_NO_SOLUTION
    _write_json(out, {"problem": p.to_dict(), "solved": True, **result.to_dict()})
    print(f"{result.type_label.value}: wrote {out}")
    return EXIT_OK


def cmd_profile(args) -> int:
    p = load_problem(args.problem, args.g)
    try:
        xs = uniform_grid(args.xmin, args.xmax, args.n)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    result = _solve(p, args.samples, args.any_porosity)
    if isinstance(result, NoSolutionReport):
        print("no solution; profile not written", file=sys.stderr)
        return EXIT_NO_SOLUTION
    try:
        req = ProfileRequest(result, (p.terrain_left, p.terrain_right), args.t, xs, p.g)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    _write_csv(args.out, ("x", "h", "u", "surface", "fr2"), profile(req))
    return EXIT_OK


def cmd_classify(args) -> int:
    p = load_problem(args.problem, args.g)
    try:
        c = classify_dambreak(p, n_samples=args.samples, allow_any_porosity=args.any_porosity)
    except NotDamBreak as exc:
        raise CliError(f"NotDamBreak: {exc}", EXIT_WRONG_CLASS) from None
    payload = c.to_dict()
    if args.out:
        _write_json(Path(args.out), payload)
    else:
        json.dump(payload, sys.stdout, indent=2)
        sys.stdout.write("\n")
    return EXIT_OK


SWEEP_HEADER = (
    "h_R",
    "verdict",
    "type",
    "h_star",
    "intersection_residual",
    "jump_momentum_residual",
)


def _sweep_row(p: RiemannProblem, samples: int, any_porosity: bool) -> list:
    h_r = p.right.h
    try:
        r = solve(p, n_samples=samples, allow_any_porosity=any_porosity)
    except RiemannError as exc:
        return [h_r, "Error", type(exc).__name__, "", "", ""]
    if isinstance(r, NoSolutionReport):
        return [h_r, "NoSolution", "", "", "", ""]
    d = r.diagnostics
    return [
        h_r,
        "Solved",
        r.type_label.value,
        float(d.get("h_star", float("nan"))),
        float(d.get("intersection_residual", 0.0)),
        float(d.get("jump_momentum_residual", 0.0)),
    ]


def cmd_sweep(args) -> int:
    base = load_problem(args.problem, args.g)
    if args.n < 1:
        raise CliError("--n must be at least 1")
    if not (args.from_ > 0.0 and args.to > 0.0):
        raise CliError("h_R range must be positive")
    grid = np.linspace(args.from_, args.to, args.n) if args.n > 1 else np.array([args.from_])
    problems = [base.with_right_height(float(h)) for h in grid]
    with ThreadPoolExecutor(max_workers=args.workers) as pool:
        rows = list(pool.map(lambda q: _sweep_row(q, args.samples, args.any_porosity), problems))
    _write_csv(args.out, SWEEP_HEADER, rows)
    return EXIT_OK


def _curve_rows(p: RiemannProblem, which: str, n: int, hmin: float | None, hmax: float | None):
    g = p.g
    if which in ("w1", "w2b"):
        anchor = p.left if which == "w1" else p.right
        lo = hmin if hmin is not None else 0.01 * anchor.h
        hi = hmax if hmax is not None else 2.0 * anchor.h
        fam = Family.ONE if which == "w1" else Family.TWO_BACKWARD
        for r in emit_curve(anchor, fam, (lo, hi), n, g):
            yield (r.h, r.u, r.branch, r.u * r.u / (g * r.h))
        return
    lo = hmin if hmin is not None else sonic_point_on_w1(p.left, g).h
    hi = hmax if hmax is not None else p.left.h
    curve = build_composite_curve(p.left, p.terrain_left, p.terrain_right, g, h_lo=lo, n_samples=n, h_hi=hi)
    for i, s in enumerate(curve.samples):
        if s.downstream is None:
            up = s.upstream
            yield (up.h, up.u, "gap", up.u * up.u / (g * up.h))
        else:
            yield (s.downstream.h, s.downstream.u, f"branch{curve.branch_of(i)}", s.fr2_plus)


def cmd_curve(args) -> int:
    p = load_problem(args.problem, args.g)
    if args.n < 2:
        raise CliError("--n must be at least 2")
    try:
        rows = list(_curve_rows(p, args.which, args.n, args.hmin, args.hmax))
    except RiemannError as exc:
        raise CliError(f"{type(exc).__name__}: {exc}") from None
    _write_csv(args.out, ("h", "u", "branch", "froude2"), rows)
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="swe-riemann",
        description="Exact Riemann solutions of the shallow water equations across porosity and bed steps.",
    )
    parser.add_argument("--version", action="store_true", help="print version and kernel backend")
    sub = parser.add_subparsers(dest="verb")

    def common(sp):
        sp.add_argument("--problem", required=True, help="JSON problem file")
        sp.add_argument("--g", type=float, default=None, help="gravity [m/s^2]")
        sp.add_argument("--samples", type=int, default=DEFAULT_SAMPLES,
                        help="composite-curve scan samples (default %(default)s)")
        sp.add_argument("--any-porosity", action="store_true", help="accept porosity above 1")

    sp = sub.add_parser("solve", help="solve and write solution.json")
    common(sp)
    sp.add_argument("--out", required=True, help="output directory")
    sp.set_defaults(func=cmd_solve)

    sp = sub.add_parser("profile", help="sample the solution at time t on a uniform grid")
    common(sp)
    sp.add_argument("--t", type=float, required=True, help="time [s]")
    sp.add_argument("--xmin", type=float, required=True)
    sp.add_argument("--xmax", type=float, required=True)
    sp.add_argument("--n", type=int, default=401)
    sp.add_argument("--out", required=True, help="CSV file")
    sp.set_defaults(func=cmd_profile)

    sp = sub.add_parser("classify", help="dam-break case, thresholds and verdict")
    common(sp)
    sp.add_argument("--out", default=None, help="JSON file (stdout if omitted)")
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("sweep", help="solve over a grid of right heights")
    common(sp)
    sp.add_argument("--vary", choices=["hR"], default="hR")
    sp.add_argument("--from", dest="from_", type=float, required=True)
    sp.add_argument("--to", type=float, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--workers", type=int, default=4)
    sp.add_argument("--out", required=True, help="CSV file")
    sp.set_defaults(func=cmd_sweep)

    sp = sub.add_parser("curve", help="tabulate a wave curve or the composite curve")
    common(sp)
    sp.add_argument("--which", choices=["w1", "w2b", "composite"], required=True)
    sp.add_argument("--n", type=int, default=DEFAULT_SAMPLES)
    sp.add_argument("--hmin", type=float, default=None)
    sp.add_argument("--hmax", type=float, default=None)
    sp.add_argument("--out", required=True, help="CSV file")
    sp.set_defaults(func=cmd_curve)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.version:
        from . import __version__

        print(f"swe-riemann {__version__} ({kernels.BACKEND} kernels)")
        return EXIT_OK
    if args.verb is None:
        parser.print_help(sys.stderr)
        return EXIT_INVALID
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except RiemannError as exc:
        where = f" (field {exc.field})" if exc.field else ""
        print(f"error: {type(exc).__name__}: {exc}{where}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
