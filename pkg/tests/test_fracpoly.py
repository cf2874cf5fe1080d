import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fracpia.exceptions import CapacityError
from fracpia.fracpoly import FracPoly, as_exponent, monomial
from fracpia.specfun import gamma

F = Fraction


def poly(*terms):
    return FracPoly(terms)


# Hypothesis building blocks: exponents on a quarter-integer lattice in [0, 5],
# coefficients that stay well clear of the prune threshold.
exponents = st.integers(min_value=0, max_value=20).map(lambda n: F(n, 4))
coefficients = st.floats(min_value=-50.0, max_value=50.0).filter(lambda c: abs(c) > 1e-6)
polys = st.lists(st.tuples(exponents, coefficients), min_size=0, max_size=20).map(FracPoly)


class TestConstruction:
    def test_monomial_constant_one(self):
        p = monomial(1.0, 0)
        assert p.terms == ((F(0), 1.0),)
        assert p.constant_term == 1.0

    def test_monomial_zero_coefficient_prunes(self):
        assert monomial(0.0, F(1, 2)).is_zero

    def test_monomial_direct(self):
        assert monomial(2.0, F(3, 2)).terms == ((F(3, 2), 2.0),)

    def test_negative_exponent_rejected(self):
        with pytest.raises(ValueError):
            monomial(1.0, F(-1, 2))

    def test_inexact_float_exponent_rejected(self):
        with pytest.raises(ValueError):
            as_exponent(0.7)

    def test_exponent_coercions(self):
        assert as_exponent("7/10") == F(7, 10)
        assert as_exponent(2.0) == F(2)
        assert as_exponent(3) == F(3)

    def test_duplicate_exponents_merge(self):
        p = poly((F(1), 2.0), (F(1), 3.0), (F(0), 1.0))
        assert p.terms == ((F(0), 1.0), (F(1), 5.0))

    def test_term_cap_enforced(self):
        from fracpia.fracpoly import TERM_CAP

        terms = [(F(i), 1.0) for i in range(TERM_CAP + 1)]
        with pytest.raises(CapacityError):
            FracPoly(terms)


class TestRingOps:
    def test_add(self):
        t = monomial(1.0, 1)
        one_plus_t = poly((F(0), 1.0), (F(1), 1.0))
        assert (t + one_plus_t).terms == ((F(0), 1.0), (F(1), 2.0))

    def test_add_zero_identity(self):
        p = poly((F(1, 2), 3.0), (F(2), -1.0))
        assert p + FracPoly.zero() == p

    def test_add_cancellation(self):
        assert (monomial(1.0, F(1, 2)) + monomial(-1.0, F(1, 2))).is_zero

    def test_mul_square(self):
        p = poly((F(0), 1.0), (F(1), 0.5))  # 1 + t/2
        sq = p * p
        assert sq.exponents() == (F(0), F(1), F(2))
        assert [c for _, c in sq.terms] == pytest.approx([1.0, 1.0, 0.25])

    def test_mul_identity(self):
        p = poly((F(1, 3), 2.0), (F(2), -0.5))
        assert p * FracPoly.constant(1.0) == p

    def test_mul_exponents_add_exactly(self):
        root = monomial(1.0, F(1, 2))
        assert (root * root).exponents() == (F(1),)

    def test_scalar_mul(self):
        p = poly((F(1), 2.0))
        assert (3.0 * p).terms == ((F(1), 6.0),)

    def test_pow(self):
        p = poly((F(0), 1.0), (F(1), 1.0))
        assert p**0 == FracPoly.constant(1.0)
        cubed = p**3
        assert [c for _, c in cubed.terms] == pytest.approx([1.0, 3.0, 3.0, 1.0])

    def test_pow_negative_rejected(self):
        with pytest.raises(ValueError):
            poly((F(1), 1.0)) ** -1

    def test_mul_capacity_error(self):
        p = FracPoly((F(i), 1.0) for i in range(101))
        q = FracPoly((F(i, 101), 1.0) for i in range(101))
        with pytest.raises(CapacityError):
            p * q


class TestEval:
    def test_table_spot_value(self):
        p = poly((F(1), 1.0), (F(2), 1.0))  # t + t^2
        assert f"{p.eval(0.1):.6f}" == "0.110000"

    def test_constant_at_zero(self):
        p = poly((F(0), 4.5), (F(2), 1.0))
        assert p.eval(0.0) == 4.5

    def test_cubic_spot_value(self):
        p = poly((F(1), 1.0), (F(2), 1.0), (F(3), 1.0 / 3.0))
        from fracpia.report import format_value

        assert format_value(p.eval(1.0)) == "2.333333"

    def test_negative_t_rejected(self):
        with pytest.raises(ValueError):
            poly((F(1), 1.0)).eval(-0.1)
        with pytest.raises(ValueError):
            poly((F(1), 1.0)).eval(np.array([0.5, -0.5]))

    def test_fractional_power_at_zero(self):
        p = poly((F(1, 2), 3.0))
        assert p.eval(0.0) == 0.0

    def test_array_matches_scalar_bitwise(self):
        p = poly((F(0), 1.0), (F(1), 1.0), (F(3), 1.0 / 3.0), (F(5), -1.0 / 30.0))
        ts = np.linspace(0.0, 2.0, 7)
        array_vals = p.eval(ts)
        for i, t in enumerate(ts):
            assert array_vals[i] == p.eval(float(t))

    def test_zero_poly_eval(self):
        assert FracPoly.zero().eval(1.3) == 0.0
        assert np.all(FracPoly.zero().eval(np.array([0.0, 1.0])) == 0.0)


class TestCalculus:
    def test_caputo_kills_constants(self):
        assert FracPoly.constant(7.0).caputo_deriv(F(1, 2)).is_zero
        assert FracPoly.constant(-3.0).caputo_deriv(1).is_zero

    def test_caputo_classical_limit_exact(self):
        p = monomial(1.0, 2)
        d = p.caputo_deriv(1)
        assert d.terms == ((F(1), 2.0),)  # exactly 2t, exponent exactly 1

    def test_caputo_half_order_of_t(self):
        # Gamma(2)/Gamma(3/2) = 2/sqrt(pi)
        d = monomial(1.0, 1).caputo_deriv(F(1, 2))
        assert d.exponents() == (F(1, 2),)
        assert d.terms[0][1] == pytest.approx(2.0 / math.sqrt(math.pi), rel=1e-13)
        assert d.terms[0][1] == pytest.approx(1.1283791671, rel=1e-9)

    def test_caputo_order_validation(self):
        p = monomial(1.0, 2)
        with pytest.raises(ValueError):
            p.caputo_deriv(F(3, 2))
        with pytest.raises(ValueError):
            p.caputo_deriv(0)

    def test_caputo_exponent_leaving_algebra(self):
        with pytest.raises(ValueError):
            monomial(1.0, F(1, 4)).caputo_deriv(F(1, 2))

    def test_rl_integral_of_one(self):
        assert FracPoly.constant(1.0).rl_integral(1).terms == ((F(1), 1.0),)

    def test_rl_semigroup(self):
        # J^{1/2} J^{1/2} 1 == J^1 1 == t
        p = FracPoly.constant(1.0).rl_integral(F(1, 2)).rl_integral(F(1, 2))
        assert p.exponents() == (F(1),)
        assert p.terms[0][1] == pytest.approx(1.0, rel=1e-12)

    def test_rl_integral_of_t(self):
        alpha = F(1, 2)
        p = monomial(1.0, 1).rl_integral(alpha)
        assert p.exponents() == (F(3, 2),)
        assert p.terms[0][1] == pytest.approx(1.0 / gamma(F(2) + alpha), rel=1e-12)

    def test_integrate_basic(self):
        assert FracPoly.constant(1.0).integrate().terms == ((F(1), 1.0),)
        assert FracPoly.zero().integrate().is_zero

    def test_integrate_produces_next_iterate(self):
        # integrate(1 + 2t - t^{1-a}/Gamma(2-a)) == t + t^2 - t^{2-a}/Gamma(3-a)
        a = F(1, 2)
        p = poly((F(0), 1.0), (F(1), 2.0), (1 - a, -1.0 / gamma(2 - a)))
        result = p.integrate()
        expected = poly((F(1), 1.0), (F(2), 1.0), (2 - a, -1.0 / gamma(3 - a)))
        assert result.exponents() == expected.exponents()
        for (_, c1), (_, c2) in zip(result.terms, expected.terms):
            assert c1 == pytest.approx(c2, rel=1e-13)

    @given(polys)
    def test_integrate_matches_rl_order_one(self, p):
        lhs = p.integrate()
        rhs = p.rl_integral(1)
        assert lhs.exponents() == rhs.exponents()
        for (_, c1), (_, c2) in zip(lhs.terms, rhs.terms):
            assert c1 == pytest.approx(c2, rel=1e-12)


class TestInvariants:
    @given(polys, polys)
    def test_terms_sorted_and_unique_after_ops(self, p, q):
        for result in (p + q, p - q, p * q):
            exps = result.exponents()
            assert all(exps[i] < exps[i + 1] for i in range(len(exps) - 1))

    @given(polys, polys, st.floats(min_value=0.0, max_value=2.0))
    def test_eval_ring_homomorphism(self, p, q, t):
        def bound(poly_):
            return 1.0 + sum(abs(c) * max(1.0, t) ** float(e) for e, c in poly_.terms)

        assert abs((p + q).eval(t) - (p.eval(t) + q.eval(t))) <= 1e-12 * (bound(p) + bound(q))
        assert abs((p * q).eval(t) - p.eval(t) * q.eval(t)) <= 1e-12 * bound(p) * bound(q)

    @given(polys, st.sampled_from([F(1, 4), F(1, 2), F(3, 4), F(1)]))
    def test_caputo_inverts_rl(self, p, alpha):
        roundtrip = p.rl_integral(alpha).caputo_deriv(alpha)
        assert _coeff_close(roundtrip, p, rel=1e-10)

    @given(polys, st.sampled_from([F(1, 4), F(1, 2), F(3, 4), F(1)]))
    def test_rl_after_caputo_drops_constant(self, p, alpha):
        # exponents below 1 (other than 0) would leave the algebra under D^a
        p = FracPoly((e, c) for e, c in p.terms if e == 0 or e >= 1)
        roundtrip = p.caputo_deriv(alpha).rl_integral(alpha)
        expected = FracPoly((e, c) for e, c in p.terms if e != 0)
        assert _coeff_close(roundtrip, expected, rel=1e-10)

    @given(polys, polys, st.sampled_from([F(1, 2), F(1)]))
    def test_linearity(self, p, q, alpha):
        p = FracPoly((e, c) for e, c in p.terms if e == 0 or e >= 1)
        q = FracPoly((e, c) for e, c in q.terms if e == 0 or e >= 1)
        lhs = (p + q).caputo_deriv(alpha)
        rhs = p.caputo_deriv(alpha) + q.caputo_deriv(alpha)
        assert _coeff_close(lhs, rhs, rel=1e-10)
        lhs = (p + q).rl_integral(alpha)
        rhs = p.rl_integral(alpha) + q.rl_integral(alpha)
        assert _coeff_close(lhs, rhs, rel=1e-10)

    @given(polys)
    def test_classical_derivative_exact_exponents(self, p):
        p = FracPoly((e, c) for e, c in p.terms if e == 0 or e >= 1)
        d = p.caputo_deriv(1)
        expected = FracPoly((e - 1, c * float(e)) for e, c in p.terms if e != 0)
        assert d == expected  # bitwise: same exponents, same float coefficients

    @settings(max_examples=25)
    @given(
        st.lists(st.floats(min_value=-2.0, max_value=2.0), min_size=1, max_size=3),
        st.sampled_from([F(1, 2), F(7, 10), F(1)]),
        st.integers(min_value=1, max_value=4),
    )
    def test_closure_under_solver_usage(self, inits, alpha, sweeps):
        # substitute -> Caputo -> integrate, repeated, never leaves exponents >= 0
        state = [FracPoly.constant(c) for c in inits]
        for _ in range(sweeps):
            state = [
                u + (state[0] - u.caputo_deriv(alpha)).integrate() for u in state
            ]
        for u in state:
            assert all(e >= 0 for e in u.exponents())

    def test_pruned(self):
        p = poly((F(0), 1.0), (F(1), 1e-18))
        assert p.terms == ((F(0), 1.0),)  # constructor already pruned
        q = poly((F(0), 1.0), (F(1), 1e-8)).pruned(1e-6)
        assert q.terms == ((F(0), 1.0),)


def _coeff_close(p, q, rel):
    terms_p, terms_q = dict(p.terms), dict(q.terms)
    for e in set(terms_p) | set(terms_q):
        cp, cq = terms_p.get(e, 0.0), terms_q.get(e, 0.0)
        if abs(cp - cq) > rel * max(abs(cp), abs(cq), 1e-9):
            return False
    return True
