"""Self-contained invariant suites behind the ``check`` CLI command.

Each suite returns a ``CheckResult``; ``run_all`` collects them.  These are
the same identities the test suite pins down, packaged so a deployed install
can be smoke-tested without pytest.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import benchmarks
from .fracpoly import FracPoly
from .pia import PiaConfig, solve
from .specfun import gamma, rgamma


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def _random_poly(rng, max_terms=20):
    """Random polynomial with exponents in {0} u [1, 5].

    Exponents strictly between 0 and 1 are excluded: a Caputo derivative of
    order above the exponent would leave the nonnegative-exponent algebra.
    """
    n_terms = rng.randint(1, max_terms)
    terms = []
    for _ in range(n_terms):
        if rng.random() < 0.2:
            e = Fraction(0)
        else:
            e = Fraction(rng.randint(4, 20), 4)  # 1 to 5 in quarter steps
        terms.append((e, rng.uniform(-10.0, 10.0)))
    return FracPoly(terms)


def check_inversion_identities(count=100, seed=20240801) -> CheckResult:
    """Termwise inversion of differentiation and integration.

    For random p and orders a in {1/4, 1/2, 3/4, 1}:
      * D^a applied after J^a recovers p,
      * J^a applied after D^a recovers p minus its constant term,
    both with coefficient relative error <= 1e-10.
    """
    rng = random.Random(seed)
    orders = [Fraction(1, 4), Fraction(1, 2), Fraction(3, 4), Fraction(1)]
    worst = 0.0
    for i in range(count):
        p = _random_poly(rng)
        alpha = orders[i % len(orders)]
        roundtrip = p.rl_integral(alpha).caputo_deriv(alpha)
        worst = max(worst, _coefficient_mismatch(roundtrip, p))
        no_const = FracPoly([(e, c) for e, c in p.terms if e != 0])
        roundtrip2 = p.caputo_deriv(alpha).rl_integral(alpha)
        worst = max(worst, _coefficient_mismatch(roundtrip2, no_const))
    return CheckResult(
        name="inversion identities",
        passed=worst <= 1e-10,
        detail=f"worst coefficient relative error {worst:.2e} over {count} polynomials",
    )


def _coefficient_mismatch(p: FracPoly, q: FracPoly) -> float:
    """Worst relative coefficient difference between two polynomials."""
    terms_p = dict(p.terms)
    terms_q = dict(q.terms)
    worst = 0.0
    for e in set(terms_p) | set(terms_q):
        cp = terms_p.get(e, 0.0)
        cq = terms_q.get(e, 0.0)
        worst = max(worst, abs(cp - cq) / max(abs(cq), abs(cp), 1e-300))
    return worst


def check_gamma_accuracy() -> CheckResult:
    """Factorials, half-integers via recurrence from sqrt(pi), pole zeros."""
    worst = 0.0
    for n in range(1, 21):
        worst = max(worst, abs(gamma(n) - math.factorial(n - 1)) / math.factorial(n - 1))
    ref = math.sqrt(math.pi)
    x = Fraction(1, 2)
    for _ in range(20):
        worst = max(worst, abs(gamma(x) - ref) / ref)
        ref *= float(x)
        x += 1
    poles_ok = all(rgamma(-n) == 0.0 for n in range(0, 11))
    return CheckResult(
        name="gamma accuracy",
        passed=worst <= 1e-12 and poles_ok,
        detail=f"worst relative error {worst:.2e}; pole zeros {'ok' if poles_ok else 'BROKEN'}",
    )


def check_golden_iterates() -> CheckResult:
    """Solver rows 1..3 against the hand-derived closed forms, both benchmarks."""
    orders_set = [Fraction(1), Fraction(9, 10), Fraction(7, 10), Fraction(1, 2)]
    ts = np.linspace(0.05, 1.0, 20)
    worst = 0.0
    for example in (1, 2):
        for a in orders_set:
            for b in orders_set:
                case = benchmarks.reference_case(example, orders=(a, b))
                solution = solve(case.system, PiaConfig(iterations=3))
                for n in (1, 2, 3):
                    for k in (1, 2):
                        for t in ts:
                            mine = solution.iterates[n][k - 1].eval(float(t))
                            gold = case.golden(n, k, float(t))
                            worst = max(worst, abs(mine - gold) / max(abs(gold), 1e-2))
    return CheckResult(
        name="golden iterates",
        passed=worst <= 1e-10,
        detail=f"worst relative error {worst:.2e} over 32 order pairs",
    )


def run_all() -> list:
    return [
        check_inversion_identities(),
        check_gamma_accuracy(),
        check_golden_iterates(),
    ]
