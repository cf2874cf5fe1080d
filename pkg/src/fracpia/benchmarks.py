"""Bundled benchmark systems with known exact solutions and golden iterates.

Two problems exercise the solver end to end:

* example 1 -- the coupled linear pair
      D^a u1 = u1 + u2,   D^b u2 = -u1 + u2,   u1(0) = 0, u2(0) = 1
  whose exact solution at a = b = 1 is ``u1 = e^t sin t``, ``u2 = e^t cos t``.

* example 2 -- the quadratically coupled pair
      D^a1 u1 = u1 / 2,   D^a2 u2 = u2 + u1^2,   u1(0) = 1, u2(0) = 0
  whose exact solution at a1 = a2 = 1 is ``u1 = e^{t/2}``, ``u2 = t e^t``.

``golden_iterate`` evaluates hand-derived closed forms of the first three
iterates as functions of the orders.  They were worked out independently of
the solver (termwise Caputo differentiation and integration of the previous
iterate, simplified by hand), so agreement between the two is a genuine
regression check rather than a tautology.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from .fracpoly import as_exponent
from .specfun import gamma
from .system import FdeSystem

#: Iteration counts used for the published-style report tables.
TABLE_ITERATIONS = {1: 5, 2: 4}


def example1_system(alpha="1", beta="1") -> FdeSystem:
    """Linear benchmark system at the given rational orders."""
    return FdeSystem(
        orders=(as_exponent(alpha), as_exponent(beta)),
        rhs=(
            ((1.0, 0, (1, 0)), (1.0, 0, (0, 1))),
            ((-1.0, 0, (1, 0)), (1.0, 0, (0, 1))),
        ),
        init=(0.0, 1.0),
    )


def example2_system(alpha1="1", alpha2="1") -> FdeSystem:
    """Quadratic benchmark system at the given rational orders."""
    return FdeSystem(
        orders=(as_exponent(alpha1), as_exponent(alpha2)),
        rhs=(
            ((0.5, 0, (1, 0)),),
            ((1.0, 0, (0, 1)), (1.0, 0, (2, 0))),
        ),
        init=(1.0, 0.0),
    )


def exact_example1(t):
    """(e^t sin t, e^t cos t); valid only for the order-1 configuration."""
    if t < 0:
        raise ValueError("t must be >= 0")
    return math.exp(t) * math.sin(t), math.exp(t) * math.cos(t)


def exact_example2(t):
    """(e^{t/2}, t e^t); valid only for the order-1 configuration."""
    if t < 0:
        raise ValueError("t must be >= 0")
    return math.exp(t / 2.0), t * math.exp(t)


def _golden_example1(n, k, a, b, t):
    fa, fb = float(a), float(b)
    if n == 1:
        return t if k == 1 else 1.0 + t
    if n == 2:
        if k == 1:
            return t * (2.0 + t - t ** (1.0 - fa) / gamma(3 - a))
        return 1.0 + 2.0 * t - t ** (2.0 - fb) / gamma(3 - b)
    if k == 1:
        return (t / 3.0) * (
            9.0
            + t * (9.0 + t)
            + 3.0 * t ** (2.0 - 2.0 * fa) / gamma(4 - 2 * a)
            - 9.0 * t ** (1.0 - fa) * (3.0 + t - fa) / gamma(4 - a)
            - 3.0 * t ** (2.0 - fb) / gamma(4 - b)
        )
    return (
        1.0
        + 3.0 * t
        - t**3 / 3.0
        + t ** (3.0 - fa) / gamma(4 - a)
        + t ** (2.0 - 2.0 * fb)
        * (t / gamma(4 - 2 * b) - t**fb * (9.0 + t - 3.0 * fb) / gamma(4 - b))
    )


def _golden_example2(n, k, a1, a2, t):
    f1, f2 = float(a1), float(a2)
    if n == 1:
        return 1.0 + t / 2.0 if k == 1 else t
    if n == 2:
        if k == 1:
            return 0.125 * (
                8.0 + 8.0 * t + t**2 + 4.0 * t ** (2.0 - f1) / (gamma(2 - a1) * (f1 - 2.0))
            )
        return 2.0 * t + t**2 + t**3 / 12.0 + t ** (2.0 - f2) / (gamma(2 - a2) * (f2 - 2.0))
    if k == 1:
        return (1.0 / 48.0) * (
            48.0
            + 72.0 * t
            + 18.0 * t**2
            + t**3
            + 24.0 * t ** (3.0 - 2.0 * f1) / gamma(4 - 2 * a1)
            - 24.0 * t ** (2.0 - f1) * (9.0 + t - 3.0 * f1) / gamma(4 - a1)
        )
    return (
        3.0 * t
        + 3.0 * t**2
        + 5.0 * t**3 / 6.0
        + t**4 / 12.0
        + t**5 / 320.0
        + t ** (3.0 - 2.0 * f2) / gamma(4 - 2 * a2)
        - t ** (5.0 - 2.0 * f1) / (4.0 * gamma(3 - a1) ** 2 * (2.0 * f1 - 5.0))
        - t ** (3.0 - f1)
        * (
            4.0 * (40.0 + 3.0 * t * (10.0 + t))
            + f1 * (-72.0 - t * (64.0 + 7.0 * t) + (8.0 + t * (8.0 + t)) * f1)
        )
        / (8.0 * gamma(6 - a1))
        - t ** (2.0 - f2)
        * (72.0 + t * (24.0 + t) + 6.0 * f2 * (f2 - 7.0 - t))
        / (2.0 * gamma(5 - a2))
    )


def golden_iterate(example, n, k, orders, t):
    """Closed-form iterate ``u_{k,n}`` of a benchmark at the given orders.

    ``example`` is 1 or 2, ``n`` runs 1..3 (no closed forms are kept beyond
    that; higher iterations are validated numerically), ``k`` is 1 or 2, and
    ``orders`` holds the pair of rational orders in (0, 1].
    """
    if example not in (1, 2):
        raise ValueError(f"example must be 1 or 2, got {example}")
    if n not in (1, 2, 3):
        raise ValueError(f"closed forms cover n = 1..3, got {n}")
    if k not in (1, 2):
        raise ValueError(f"k must be 1 or 2, got {k}")
    a, b = (as_exponent(v) for v in orders)
    for v in (a, b):
        if not 0 < v <= 1:
            raise ValueError(f"orders must be in (0, 1], got {v}")
    if example == 1:
        return _golden_example1(n, k, a, b, float(t))
    return _golden_example2(n, k, a, b, float(t))


@dataclass(frozen=True)
class ReferenceCase:
    """A benchmark system plus whatever reference data exists for it."""

    name: str
    system: FdeSystem
    table_iterations: int
    exact: Optional[Callable] = None  # t -> tuple of exact state values (order 1 only)
    golden: Optional[Callable] = None  # (n, k, t) -> closed-form iterate value


def reference_case(example, orders=None) -> ReferenceCase:
    """Build a benchmark case; ``orders=None`` means the order-1 configuration."""
    if example == 1:
        orders = tuple(orders) if orders else (Fraction(1), Fraction(1))
        system = example1_system(*orders)
        exact = exact_example1 if all(a == 1 for a in system.orders) else None
        return ReferenceCase(
            name="example1",
            system=system,
            table_iterations=TABLE_ITERATIONS[1],
            exact=exact,
            golden=lambda n, k, t: golden_iterate(1, n, k, system.orders, t),
        )
    if example == 2:
        orders = tuple(orders) if orders else (Fraction(1), Fraction(1))
        system = example2_system(*orders)
        exact = exact_example2 if all(a == 1 for a in system.orders) else None
        return ReferenceCase(
            name="example2",
            system=system,
            table_iterations=TABLE_ITERATIONS[2],
            exact=exact,
            golden=lambda n, k, t: golden_iterate(2, n, k, system.orders, t),
        )
    raise ValueError(f"example must be 1 or 2, got {example}")


def match_reference(system: FdeSystem) -> Optional[ReferenceCase]:
    """Return the benchmark case equal to ``system``, if there is one."""
    for example in (1, 2):
        case = reference_case(example, orders=system.orders)
        if case.system == system:
            return case
    return None
