from fractions import Fraction

import numpy as np
import pytest

from fracpia import benchmarks
from fracpia.exceptions import CapacityError
from fracpia.fracpoly import FracPoly, monomial
from fracpia.pia import PiaConfig, PiaSolution, correction_rhs, solve, step
from fracpia.specfun import gamma
from fracpia.system import FdeSystem

F = Fraction


class TestCorrectionRhs:
    def test_linear_benchmark_first_sweep(self):
        system = benchmarks.example1_system()
        state = (FracPoly.constant(0.0), FracPoly.constant(1.0))
        assert correction_rhs(system, state, 0) == FracPoly.constant(1.0)

    def test_linear_benchmark_second_sweep(self):
        # at state (t, 1+t): f1 - D^a u1 = 1 + 2t - t^{1-a}/Gamma(2-a)
        a = F(1, 2)
        system = benchmarks.example1_system(a, a)
        state = (monomial(1.0, 1), FracPoly([(F(0), 1.0), (F(1), 1.0)]))
        corr = correction_rhs(system, state, 0)
        assert corr.exponents() == (F(0), 1 - a, F(1))
        coeffs = dict(corr.terms)
        assert coeffs[F(0)] == pytest.approx(1.0)
        assert coeffs[F(1)] == pytest.approx(2.0)
        assert coeffs[1 - a] == pytest.approx(-1.0 / gamma(2 - a), rel=1e-13)

    def test_residual_shrinks_near_fixed_point(self):
        # late sweeps at order 1: correction sup-norm on [0, 1/2] keeps dropping
        system = benchmarks.example1_system()
        solution = solve(system, PiaConfig(iterations=8))
        grid = np.linspace(0.0, 0.5, 50)
        sups = []
        for n in range(2, 8):
            state = solution.iterates[n]
            sups.append(
                max(
                    float(np.max(np.abs(correction_rhs(system, state, k).eval(grid))))
                    for k in range(2)
                )
            )
        assert all(sups[i + 1] < sups[i] for i in range(len(sups) - 1))


class TestStep:
    def test_quadratic_benchmark_first_step(self):
        system = benchmarks.example2_system()
        state = (FracPoly.constant(1.0), FracPoly.constant(0.0))
        new = step(system, state)
        assert new[0] == FracPoly([(F(0), 1.0), (F(1), 0.5)])  # 1 + t/2
        assert new[1] == monomial(1.0, 1)  # t

    def test_linear_benchmark_step_from_row_one(self):
        system = benchmarks.example1_system()
        state = (monomial(1.0, 1), FracPoly([(F(0), 1.0), (F(1), 1.0)]))
        new = step(system, state)
        assert new[0] == FracPoly([(F(1), 1.0), (F(2), 1.0)])  # t + t^2
        assert new[1] == FracPoly([(F(0), 1.0), (F(1), 1.0)])  # unchanged: 1 + t

    def test_fixed_point_of_trivial_system(self):
        # D^a u = 0 keeps any constant state unchanged
        system = FdeSystem(orders=(F(1, 2),), rhs=((),), init=(4.0,))
        state = (FracPoly.constant(4.0),)
        assert step(system, state) == state


class TestSolve:
    def test_row_zero_is_initial_state(self):
        system = benchmarks.example1_system("7/10", "9/10")
        solution = solve(system, PiaConfig(iterations=3))
        assert solution.iterates[0] == (FracPoly.constant(0.0), FracPoly.constant(1.0))

    @pytest.mark.parametrize("orders", [("1", "1"), ("7/10", "9/10"), ("1/2", "1/2")])
    @pytest.mark.parametrize("example", [1, 2])
    def test_initial_condition_preserved_exactly(self, example, orders):
        case = benchmarks.reference_case(example, orders=[F(o) for o in orders])
        solution = solve(case.system, PiaConfig(iterations=4))
        for row in solution.iterates:
            for k, u in enumerate(row):
                assert u.constant_term == case.system.init[k]

    def test_classical_limit_gives_integer_exponents(self):
        for example in (1, 2):
            case = benchmarks.reference_case(example)
            solution = solve(case.system, PiaConfig(iterations=5))
            for row in solution.iterates:
                for u in row:
                    assert all(e.denominator == 1 for e in u.exponents())

    @pytest.mark.parametrize("orders", [("1", "1"), ("1/2", "4/5")])
    @pytest.mark.parametrize("example", [1, 2])
    def test_exponent_growth_bound(self, example, orders):
        case = benchmarks.reference_case(example, orders=[F(o) for o in orders])
        solution = solve(case.system, PiaConfig(iterations=6))
        for n, row in enumerate(solution.iterates):
            for u in row:
                assert u.max_exponent() <= 2 * n + 1

    def test_deterministic(self):
        system = benchmarks.example2_system("1/2", "4/5")
        s1 = solve(system, PiaConfig(iterations=6))
        s2 = solve(system, PiaConfig(iterations=6))
        assert s1.iterates == s2.iterates  # exponents and float coefficients bitwise

    def test_golden_agreement_sample(self):
        # full 32-pair sweep lives in the acceptance suite
        case = benchmarks.reference_case(1, orders=(F(7, 10), F(1, 2)))
        solution = solve(case.system, PiaConfig(iterations=3))
        for n in (1, 2, 3):
            for k in (1, 2):
                for t in np.linspace(0.1, 1.0, 7):
                    mine = solution.iterates[n][k - 1].eval(float(t))
                    gold = case.golden(n, k, float(t))
                    assert mine == pytest.approx(gold, rel=1e-10, abs=1e-12)

    def test_term_cap_reports_iteration(self):
        system = benchmarks.example2_system()
        with pytest.raises(CapacityError, match="iteration"):
            solve(system, PiaConfig(iterations=5, term_cap=3))

    def test_invalid_system_rejected(self):
        bad = FdeSystem(orders=(F(3, 2),), rhs=(((1.0, 0, (1,)),),), init=(1.0,))
        with pytest.raises(ValueError, match="invalid system"):
            solve(bad)

    def test_solution_metadata(self):
        system = benchmarks.example1_system()
        config = PiaConfig(iterations=4)
        solution = solve(system, config)
        assert isinstance(solution, PiaSolution)
        assert solution.iterations == 4
        assert len(solution.correction_sup) == 4
        assert solution.final == solution.iterates[4]


class TestPiaConfig:
    def test_defaults(self):
        config = PiaConfig()
        assert config.iterations == 5

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"iterations": 0},
            {"prune_threshold": -1e-3},
            {"term_cap": 0},
        ],
    )
    def test_validation(self, kwargs):
        with pytest.raises(ValueError):
            PiaConfig(**kwargs)
