"""Quadrature oracle: agreement with closed forms, convergence, domains."""

from fractions import Fraction

import pytest
from mpmath import mp, mpf

from arcmellin import (
    DomainError,
    eval_closed_form,
    log_integral_even_cosh,
    log_integral_odd_cosh,
    quad_c_constant,
    quad_log_family,
    quad_phi,
    quad_sinh_over_z,
    sinh_over_z_integral,
    phi_odd_closed_form,
)
from arcmellin.catalog import C1_CLOSED_FORM, C1_DECIMAL, C2_CLOSED_FORM, C2_DECIMAL


TOL25 = mpf(10) ** -25


class TestQuadPhi:
    def test_phi1_3_matches_closed_form(self):
        closed = eval_closed_form(sinh_over_z_integral(1, 4), 30)
        quad = quad_phi(1, 3, 30)
        assert abs(closed - quad.value) < TOL25

    def test_phi2_3_matches_closed_form(self):
        closed = eval_closed_form(sinh_over_z_integral(1, 3), 30)
        quad = quad_phi(2, 3, 30)
        assert abs(closed - quad.value) < TOL25

    def test_inside_bounds_at_fractional_s(self):
        s = Fraction(5, 2)
        value = quad_phi(1, s, 30).value
        with mp.workdps(45):
            assert 2 / (mpf(2.5) ** 2 - 1) < value < 1 / (mpf(2.5) - 1)

    def test_pole_rejected(self):
        with pytest.raises(DomainError):
            quad_phi(1, 1, 20)
        with pytest.raises(DomainError):
            quad_phi(2, "0.9", 20)

    def test_monotone_decreasing_in_s(self):
        values = [quad_phi(1, s, 25).value for s in (2, 3, 5, 9)]
        assert all(a > b for a, b in zip(values, values[1:]))

    def test_cache_returns_identical_result(self):
        a = quad_phi(1, 3, 25)
        b = quad_phi(1, 3, 25)
        assert a is b


class TestQuadLogFamily:
    @pytest.mark.parametrize(
        "q, big_n, builder",
        [
            (0, 3, lambda: log_integral_odd_cosh(0, 1)),
            (1, 4, lambda: log_integral_even_cosh(1, 2)),
            (0, 2, lambda: log_integral_even_cosh(0, 1)),
        ],
    )
    def test_matches_closed_form(self, q, big_n, builder):
        closed = eval_closed_form(builder(), 30)
        quad = quad_log_family(q, big_n, 30)
        assert abs(closed - quad.value) < TOL25

    def test_convergence_precondition(self):
        with pytest.raises(DomainError):
            quad_log_family(2, 4, 20)  # 2q+1 = 5 > 4


class TestQuadSinhOverZ:
    @pytest.mark.parametrize("q, big_n", [(1, 4), (2, 6), (1, 3)])
    def test_matches_closed_form(self, q, big_n):
        closed = eval_closed_form(sinh_over_z_integral(q, big_n), 30)
        quad = quad_sinh_over_z(q, big_n, 30)
        assert abs(closed - quad.value) < TOL25

    def test_equals_odd_mellin_value(self):
        # the (2, 6) instance is the s = 5 value of the plain transform
        quad = quad_sinh_over_z(2, 6, 30).value
        phi = quad_phi(1, 5, 30).value
        assert abs(quad - phi) < TOL25

    def test_convergence_precondition(self):
        with pytest.raises(DomainError):
            quad_sinh_over_z(0, 5, 20)
        with pytest.raises(DomainError):
            quad_sinh_over_z(3, 6, 20)


class TestQuadCConstant:
    def test_c1_against_printed_decimals(self):
        value = quad_c_constant(1, 30).value
        with mp.workdps(45):
            assert abs(value - mpf(C1_DECIMAL)) < mpf(10) ** -19

    def test_c2_against_printed_decimals(self):
        value = quad_c_constant(2, 30).value
        with mp.workdps(45):
            assert abs(value - mpf(C2_DECIMAL)) < mpf(10) ** -19

    def test_c1_against_closed_form(self):
        quad = quad_c_constant(1, 30).value
        closed = eval_closed_form(C1_CLOSED_FORM, 30)
        assert abs(quad - closed) < TOL25

    def test_c2_against_closed_form(self):
        quad = quad_c_constant(2, 30).value
        closed = eval_closed_form(C2_CLOSED_FORM, 30)
        assert abs(quad - closed) < TOL25


class TestQuadIntegralDispatch:
    def test_every_family_routes_to_its_oracle(self):
        from arcmellin import IntegralSpec, quad_integral

        cases = [
            IntegralSpec("log-odd", q=0, n=1),
            IntegralSpec("log-even", q=1, n=2),
            IntegralSpec("sinh-over-z", q=1, n=4),
            IntegralSpec("phi1", s=3),
            IntegralSpec("phi2", s=5),
        ]
        for spec in cases:
            closed = eval_closed_form(spec.closed_form(), 25)
            quad = quad_integral(spec, 25)
            assert abs(closed - quad.value) < mpf(10) ** -20


class TestConvergenceBehaviour:
    def test_error_estimate_is_honest(self):
        # the reported estimate must dominate the distance to a
        # higher-precision recomputation
        low = quad_phi(1, 3, 20)
        high = quad_phi(1, 3, 40)
        assert abs(low.value - high.value) < low.error_estimate

    def test_level_doubling_improves(self):
        # requesting more digits must never move the value outside the
        # earlier error estimate, and estimates shrink with precision
        prev = quad_sinh_over_z(1, 4, 15)
        for prec in (25, 35):
            cur = quad_sinh_over_z(1, 4, prec)
            assert abs(cur.value - prev.value) < prev.error_estimate
            assert cur.error_estimate < prev.error_estimate
            prev = cur

    def test_nodes_are_counted(self):
        result = quad_phi(2, 5, 25)
        assert result.nodes_used > 50
        assert result.levels >= 2

    def test_phi_odd_form_evaluates_to_quadrature(self):
        closed = eval_closed_form(phi_odd_closed_form(2, 2), 30)
        quad = quad_phi(2, 5, 30).value
        assert abs(closed - quad) < TOL25
