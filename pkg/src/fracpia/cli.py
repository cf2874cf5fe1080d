"""Command-line interface.

Commands:
  solve    integrate a problem file and emit a report table
  tables   regenerate the benchmark report tables (iterates vs exact)
  figures  emit plot-ready series (CSV) and rendered PNGs for the benchmarks
  oracle   run the Adams-Bashforth-Moulton reference solver on a problem file
  check    run the built-in invariant suites

Exit codes: 0 success, 2 parse/validation error, 3 numeric failure,
4 I/O error.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import replace
from pathlib import Path

import numpy as np

from . import benchmarks
from .exceptions import CapacityError, DivergenceError, PoleError, ProblemError
from .fracpoly import as_exponent
from .oracle import abm_solve
from .pia import PiaConfig, solve
from .problems import bundled_problem_path, load_problem
from .report import build_report, emit

EXIT_OK = 0
EXIT_PROBLEM = 2
EXIT_NUMERIC = 3
EXIT_IO = 4

FIGURE_DEFAULT_ITERATIONS = 16
FIGURE_DEFAULT_ORDERS = {
    1: (("1", "1"), ("7/10", "9/10")),
    2: (("1", "1"), ("1/2", "4/5")),
}


def _parse_grid(text):
    try:
        start_s, stop_s, count_s = text.split(":")
        start, stop, count = float(start_s), float(stop_s), int(count_s)
    except ValueError:
        raise ProblemError(f"grid must be start:stop:count, got {text!r}") from None
    if count < 1 or start < 0 or stop < start:
        raise ProblemError(f"invalid grid {text!r}: need 0 <= start <= stop and count >= 1")
    return np.linspace(start, stop, count)


def _parse_orders(text):
    parts = [p.strip() for p in text.split(",")]
    try:
        return tuple(as_exponent(p) for p in parts)
    except ValueError as exc:
        raise ProblemError(f"invalid orders {text!r}: {exc}") from None


def _resolve_problem(path):
    """Use the file if it exists, otherwise fall back to a bundled name."""
    p = Path(path)
    if p.exists():
        return p
    name = p.name
    if name in ("example1", "example2", "example1.fde", "example2.fde"):
        return bundled_problem_path(name)
    return p  # let load_problem report the missing file


def cmd_solve(args):
    system, config = load_problem(_resolve_problem(args.file))
    if args.iterations:
        config = replace(config, iterations=args.iterations)
    grid = _parse_grid(args.grid)

    solution = solve(system, config)
    reference = None
    if args.reference == "exact":
        case = benchmarks.match_reference(system)
        if case is None or case.exact is None:
            raise ProblemError(
                "no exact solution is known for this system "
                "(exact references exist only for the bundled benchmarks at order 1)"
            )
        reference = case.exact
    elif args.reference == "oracle":
        t_end = float(grid[-1]) if len(grid) and grid[-1] > 0 else 1.0
        reference = abm_solve(system, t_end=t_end, steps=args.oracle_steps)

    report = build_report(solution, grid, reference=reference)
    emit(report, args.out, fmt=args.format, full_precision=args.full_precision)
    return EXIT_OK


def cmd_tables(args):
    examples = (args.example,) if args.example else (1, 2)
    outdir = Path(args.out)
    outdir.mkdir(parents=True, exist_ok=True)
    table_number = {1: (1, 2), 2: (3, 4)}
    grid = np.linspace(0.0, 1.0, 11)
    for example in examples:
        case = benchmarks.reference_case(example)
        solution = solve(case.system, PiaConfig(iterations=case.table_iterations))
        for k in (1, 2):
            report = build_report(
                solution,
                grid,
                states=[k],
                iterations=range(1, case.table_iterations + 1),
                reference=case.exact,
            )
            path = outdir / f"table{table_number[example][k - 1]}.csv"
            emit(report, path, fmt="csv")
            print(path)
    return EXIT_OK


def cmd_figures(args):
    from .plots import render_series  # imported lazily; pulls in matplotlib

    examples = (args.example,) if args.example else (1, 2)
    outdir = Path(args.out)
    outdir.mkdir(parents=True, exist_ok=True)
    grid = np.linspace(0.0, 1.0, args.points)
    for example in examples:
        if args.alphas:
            order_sets = (_parse_orders(args.alphas),)
        else:
            order_sets = FIGURE_DEFAULT_ORDERS[example]
        for orders in order_sets:
            case = benchmarks.reference_case(example, orders=orders)
            solution = solve(case.system, PiaConfig(iterations=args.iterations))
            report = build_report(solution, grid, reference=case.exact)
            label = "_".join(str(a).replace("/", "-") for a in case.system.orders)
            stem = outdir / f"{case.name}_orders_{label}"
            emit(report, stem.with_suffix(".csv"), fmt="csv", full_precision=True)
            print(stem.with_suffix(".csv"))
            if not args.no_plot:
                n = solution.iterations
                series = {
                    f"u{k} (iterate {n})": report.columns[f"u{k}_n{n}"]
                    for k in (1, 2)
                }
                reference = None
                if case.exact is not None:
                    reference = {
                        f"u{k} exact": report.columns[f"u{k}_exact"] for k in (1, 2)
                    }
                render_series(
                    stem.with_suffix(".png"),
                    grid,
                    series,
                    title=f"{case.name}, orders {', '.join(map(str, case.system.orders))}",
                    reference=reference,
                )
                print(stem.with_suffix(".png"))
    return EXIT_OK


def cmd_oracle(args):
    system, _ = load_problem(_resolve_problem(args.file))
    solution = abm_solve(system, t_end=args.t_end, steps=args.steps)
    lines = ["t," + ",".join(f"u{k + 1}" for k in range(system.size))]
    for i, t in enumerate(solution.t):
        lines.append(",".join([repr(float(t))] + [repr(float(v)) for v in solution.values[i]]))
    text = "\n".join(lines) + "\n"
    if args.out == "-":
        sys.stdout.write(text)
    else:
        Path(args.out).write_text(text, encoding="utf-8")
    return EXIT_OK


def cmd_check(args):
    from .checks import run_all

    results = run_all()
    for r in results:
        print(f"{'PASS' if r.passed else 'FAIL'}  {r.name}: {r.detail}")
    return EXIT_OK if all(r.passed for r in results) else EXIT_NUMERIC


def build_parser():
    parser = argparse.ArgumentParser(
        prog="fracpia",
        description="Semi-analytic perturbation-iteration solver for Caputo fractional systems.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve a problem file and emit a report")
    p.add_argument("file", help="problem file (or bundled name: example1, example2)")
    p.add_argument("--iterations", type=int, default=None)
    p.add_argument("--grid", default="0:1:11", help="start:stop:count (default 0:1:11)")
    p.add_argument("--reference", choices=("exact", "oracle", "none"), default="none")
    p.add_argument("--oracle-steps", type=int, default=1000)
    p.add_argument("--out", default="-", help="output path, or - for stdout")
    p.add_argument("--format", choices=("csv", "tsv"), default="csv")
    p.add_argument("--full-precision", action="store_true")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("tables", help="regenerate the benchmark report tables")
    p.add_argument("--example", type=int, choices=(1, 2), default=None)
    p.add_argument("--out", default=".", help="output directory")
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("figures", help="emit plot series (CSV + PNG) for the benchmarks")
    p.add_argument("--example", type=int, choices=(1, 2), default=None)
    p.add_argument("--alphas", default=None, help="comma-separated rational orders, e.g. 7/10,9/10")
    p.add_argument("--points", type=int, default=200)
    p.add_argument("--iterations", type=int, default=FIGURE_DEFAULT_ITERATIONS)
    p.add_argument("--no-plot", action="store_true", help="skip PNG rendering")
    p.add_argument("--out", default=".", help="output directory")
    p.set_defaults(func=cmd_figures)

    p = sub.add_parser("oracle", help="run the reference solver on a problem file")
    p.add_argument("file")
    p.add_argument("--t-end", type=float, default=1.0)
    p.add_argument("--steps", type=int, default=1000)
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("check", help="run the built-in invariant suites")
    p.set_defaults(func=cmd_check)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ProblemError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PROBLEM
    except (CapacityError, DivergenceError, PoleError, ValueError) as exc:
        print(f"numeric failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
