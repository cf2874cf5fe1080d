"""Semi-analytic solver for systems of Caputo fractional differential equations.

The solver builds successive closed-form approximations inside an exact
algebra of fractional polynomials (sums of ``c * t^p`` with rational
``p >= 0``), one first-order correction per sweep.  An independent
Adams-Bashforth-Moulton grid solver provides cross-validation at fractional
orders, and bundled benchmark systems with known exact solutions anchor the
whole thing.

Quick start::

    from fractions import Fraction
    import fracpia

    system = fracpia.FdeSystem(
        orders=(Fraction(7, 10), Fraction(9, 10)),
        rhs=(
            ((1.0, 0, (1, 0)), (1.0, 0, (0, 1))),   # u1' part: u1 + u2
            ((-1.0, 0, (1, 0)), (1.0, 0, (0, 1))),  # u2' part: -u1 + u2
        ),
        init=(0.0, 1.0),
    )
    solution = fracpia.solve(system, fracpia.PiaConfig(iterations=5))
    u1, u2 = solution.final
    print(u1.eval(0.5), u2.eval(0.5))
"""

from .benchmarks import (
    ReferenceCase,
    exact_example1,
    exact_example2,
    example1_system,
    example2_system,
    golden_iterate,
    match_reference,
    reference_case,
)
from .exceptions import (
    CapacityError,
    DivergenceError,
    FracPiaError,
    PoleError,
    ProblemError,
)
from .fracpoly import PRUNE_THRESHOLD, TERM_CAP, Exponent, FracPoly, as_exponent, monomial
from .oracle import GridSolution, abm_solve
from .pia import PiaConfig, PiaSolution, correction_rhs, solve, step
from .problems import bundled_problem_path, load_problem, save_problem
from .report import GridReport, build_report, emit, format_value
from .specfun import gamma, gamma_ratio, rgamma
from .system import FdeSystem, RhsExpr, RhsMonomial

__version__ = "0.1.0"

__all__ = [
    "CapacityError",
    "DivergenceError",
    "Exponent",
    "FdeSystem",
    "FracPiaError",
    "FracPoly",
    "GridReport",
    "GridSolution",
    "PiaConfig",
    "PiaSolution",
    "PoleError",
    "ProblemError",
    "PRUNE_THRESHOLD",
    "ReferenceCase",
    "RhsExpr",
    "RhsMonomial",
    "TERM_CAP",
    "abm_solve",
    "as_exponent",
    "build_report",
    "bundled_problem_path",
    "correction_rhs",
    "emit",
    "exact_example1",
    "exact_example2",
    "example1_system",
    "example2_system",
    "format_value",
    "gamma",
    "gamma_ratio",
    "golden_iterate",
    "load_problem",
    "match_reference",
    "monomial",
    "reference_case",
    "rgamma",
    "save_problem",
    "solve",
    "step",
    "__version__",
]
