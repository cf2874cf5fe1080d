"""Grid evaluation of solutions, error columns, and delimited output.

Value cells are printed with six fractional digits by default, truncated
toward zero.  Truncation (rather than round-half-even) is deliberate: the
published tables these reports are validated against truncate, e.g. 22/15
appears as 1.466666, and matching them cell for cell requires the same
convention.  Error columns use scientific notation with six significant
digits, and ``full_precision=True`` switches everything to ``repr`` floats.
"""

from __future__ import annotations

import io
import sys
from dataclasses import dataclass
from decimal import ROUND_DOWN, Decimal

import numpy as np

from .oracle import GridSolution
from .pia import PiaSolution


@dataclass(frozen=True, eq=False)
class GridReport:
    """Columns of equal length over a time grid.

    ``columns`` maps name -> ndarray; insertion order is emission order.
    Error columns are flagged by name (``*_abs_err``) so ``emit`` can format
    them sensibly.
    """

    t: np.ndarray
    columns: dict

    def __post_init__(self):
        for name, col in self.columns.items():
            if len(col) != len(self.t):
                raise ValueError(
                    f"column {name!r} has {len(col)} entries for {len(self.t)} grid points"
                )


def _reference_values(reference, system, grid):
    """Reference states on the grid: from a callable, an oracle run, or None."""
    if reference is None:
        return None
    if isinstance(reference, GridSolution):
        return np.column_stack(
            [np.interp(grid, reference.t, reference.values[:, k]) for k in range(system.size)]
        )
    values = np.array([reference(t) for t in grid], dtype=float)
    if values.ndim == 1:
        values = values[:, None]
    return values


def build_report(
    solution: PiaSolution,
    grid,
    states=None,
    iterations=None,
    reference=None,
) -> GridReport:
    """Evaluate iterate columns on a grid, optionally with reference and error.

    ``states`` selects equations (1-based; default all), ``iterations``
    selects rows of the ladder (default: the final row only).  When a
    reference is given -- a callable ``t -> values`` or a ``GridSolution`` to
    interpolate -- each selected state also gets an exact column and an
    absolute-error column for its highest requested iteration.
    """
    grid = np.asarray(grid, dtype=float)
    if grid.ndim != 1:
        raise ValueError("grid must be one-dimensional")
    if len(grid) and (np.any(np.diff(grid) <= 0) or grid[0] < 0):
        raise ValueError("grid must be strictly increasing and start at t >= 0")

    system = solution.system
    if states is None:
        states = tuple(range(1, system.size + 1))
    if iterations is None:
        iterations = (solution.iterations,)
    for n in iterations:
        if not 0 <= n <= solution.iterations:
            raise ValueError(f"iteration {n} not in solution (has 0..{solution.iterations})")

    ref = _reference_values(reference, system, grid)
    columns: dict = {}
    for k in states:
        poly_last = None
        for n in iterations:
            poly = solution.iterates[n][k - 1]
            columns[f"u{k}_n{n}"] = poly.eval(grid) if len(grid) else np.empty(0)
            poly_last = columns[f"u{k}_n{n}"]
        if ref is not None:
            columns[f"u{k}_exact"] = ref[:, k - 1] if len(grid) else np.empty(0)
            columns[f"u{k}_abs_err"] = (
                np.abs(poly_last - ref[:, k - 1]) if len(grid) else np.empty(0)
            )
    return GridReport(t=grid, columns=columns)


def format_value(x, digits=6):
    """Fixed-point with ``digits`` fractional digits, truncated toward zero."""
    d = Decimal(float(x)).quantize(Decimal(1).scaleb(-digits), rounding=ROUND_DOWN)
    if d == 0:
        d = abs(d)  # avoid "-0.000000"
    return f"{d:.{digits}f}"


def format_error(x):
    # 9 significant digits: enough for a reader to recover the value at the
    # published tables' own precision (7-8 fractional digits)
    return f"{float(x):.8E}"


def emit(report: GridReport, destination, fmt="csv", full_precision=False):
    """Write header plus one row per grid point to a path, file object or "-"."""
    if fmt not in ("csv", "tsv"):
        raise ValueError(f"format must be 'csv' or 'tsv', got {fmt!r}")
    sep = "," if fmt == "csv" else "\t"

    def render(name, x):
        if full_precision:
            return repr(float(x))
        if name.endswith("_abs_err"):
            return format_error(x)
        return format_value(x)

    lines = [sep.join(["t", *report.columns])]
    names = list(report.columns)
    for i, t in enumerate(report.t):
        row = [f"{t:g}"]
        row.extend(render(name, report.columns[name][i]) for name in names)
        lines.append(sep.join(row))
    text = "\n".join(lines) + "\n"

    if destination == "-":
        sys.stdout.write(text)
    elif isinstance(destination, io.TextIOBase):
        destination.write(text)
    else:
        with open(destination, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
