"""Verification suites: spot values, report structure, determinism."""

import json
import math
from fractions import Fraction

import pytest

from arcmellin import (
    IdentityFamily,
    binomial,
    check_asymptotic_constants,
    check_bounds,
    check_coupled,
    check_cross_representation,
    check_even_argument_relations,
    reproduce_reference_tables,
    run_identity,
)
from arcmellin.verify import (
    _alt_binom_even_cell,
    _alt_binom_odd_cell,
    _d_identity_cell,
    _euler_bernoulli_cell,
    coupled_tail_bound,
)


class TestSpotValues:
    def test_alt_binom_odd_interior_zero(self):
        cell = _alt_binom_odd_cell((2, 1))
        assert cell.ok and cell.detail == "lhs=0"

    def test_alt_binom_odd_endpoint(self):
        cell = _alt_binom_odd_cell((2, 2))
        assert cell.ok and cell.detail == f"lhs={4**2 * math.factorial(5)}"
        assert 4**2 * math.factorial(5) == 1920

    def test_alt_binom_even_j0_is_half_central_binomial(self):
        # brute force: sum_{k=0}^{n-1} (-1)^k C(2n,k) = (-1)^{n+1} C(2n,n)/2
        for n in (1, 2, 3, 5, 8):
            lhs = sum((-1) ** k * binomial(2 * n, k) for k in range(n))
            assert Fraction(lhs) == Fraction((-1) ** (n + 1) * binomial(2 * n, n), 2)
        assert _alt_binom_even_cell((2, 0)).ok

    def test_d_identity_n1(self):
        cell = _d_identity_cell((1,))
        assert cell.ok and Fraction(4, 3) == Fraction(4**1, 2 * 1 + 1)

    def test_euler_bernoulli_q0_n1(self):
        cell = _euler_bernoulli_cell((1, 0))
        assert cell.ok
        # second line closed value: (-1)^{q+n+1} 2^{2q+1} q! n! (2n-2q-2)! /
        # ((n-q-1)! (2n)!) = 2 * 1 * 1 * 1 / (1 * 2) = 1
        assert "line2=1" in cell.detail


class TestExactSuites:
    @pytest.mark.parametrize(
        "family",
        [
            IdentityFamily.ALT_BINOM_ODD,
            IdentityFamily.ALT_BINOM_EVEN,
            IdentityFamily.C_ODD_POWER,
            IdentityFamily.EULERIAN_A_SUM,
            IdentityFamily.EULERIAN_B_SUM,
            IdentityFamily.BINOM_COSH_SUM,
            IdentityFamily.VANISHING,
        ],
    )
    def test_small_ranges_pass(self, family):
        report = run_identity(family, n_range=(1, 8))
        assert report.passed
        assert report.first_counterexample is None

    def test_eta_coeff_small(self):
        assert run_identity(IdentityFamily.ETA_COEFF, n_range=(1, 12)).passed

    def test_zeta2_coeff_small(self):
        assert run_identity(IdentityFamily.ZETA2_COEFF, n_range=(2, 10)).passed

    def test_d_identity_small(self):
        assert run_identity(IdentityFamily.D_IDENTITY, n_range=(0, 8)).passed

    def test_euler_bernoulli_small(self):
        assert run_identity(IdentityFamily.EULER_BERNOULLI, n_range=(1, 8)).passed

    def test_accepts_string_names(self):
        assert run_identity("alt-binom-odd", n_range=(1, 4)).passed

    def test_workers_merge_in_grid_order(self):
        seq = run_identity(IdentityFamily.ALT_BINOM_ODD, n_range=(1, 6))
        par = run_identity(IdentityFamily.ALT_BINOM_ODD, n_range=(1, 6), workers=4)
        assert [c.params for c in par.cells] == [c.params for c in seq.cells]
        assert par.passed


class TestNumericSuites:
    def test_bounds_small_grid(self):
        report = check_bounds(s_grid=("2", "3"), prec=25)
        assert report.passed
        assert report.precision == 25

    def test_coupled_n0_term_sign(self):
        # at n = 0 the second identity's weight is -1/(2*0-1) = +1, so the
        # series starts at +Phi_2(s); a tiny truncation already reveals a
        # residual below the T=2 bound only because of that sign
        report = check_coupled(4, truncation=8, prec=20)
        assert report.passed

    def test_coupled_residual_decreases_with_truncation(self):
        def residual(report):
            return float(report.cells[1].detail.split("residual=")[1].split(" ")[0])

        r10 = check_coupled(6, truncation=10, prec=20)
        r20 = check_coupled(6, truncation=20, prec=20)
        r30 = check_coupled(6, truncation=30, prec=20)
        assert residual(r10) > residual(r20) > residual(r30)

    def test_tail_bound_shrinks(self):
        assert coupled_tail_bound(1, 60) < coupled_tail_bound(1, 30)
        assert coupled_tail_bound(2, 60) < coupled_tail_bound(2, 30)

    def test_cross_representation_small(self):
        report = check_cross_representation(n_max=2, prec=25)
        assert report.passed
        assert report.tolerance == "1e-20"

    def test_asymptotic_constants_suite(self):
        report = check_asymptotic_constants(prec=25)
        assert report.passed
        kinds = {params[1] for params in (c.params for c in report.cells)}
        assert kinds == {"closed-vs-quad", "printed-prefix", "limit-trend"}

    def test_even_argument_relations(self):
        report = check_even_argument_relations(cap=40, prec=25)
        assert report.passed
        assert len(report.cells) == 7
        # the residual is the dropped tail itself, so it must sit well under
        # the bound, not just scrape past it
        for cell in report.cells:
            residual = float(cell.detail.split("residual=")[1].split(" ")[0])
            bound = float(cell.detail.split("bound=")[1])
            assert residual < bound / 2


class TestReports:
    def test_json_schema(self):
        report = run_identity(IdentityFamily.D_IDENTITY, n_range=(0, 3))
        data = json.loads(report.to_json())
        assert set(data) == {
            "family",
            "precision",
            "tolerance",
            "cells",
            "passed",
            "first_counterexample",
        }
        assert data["family"] == "d-identity"
        assert data["passed"] is True
        assert all(set(c) == {"params", "ok", "detail"} for c in data["cells"])

    def test_json_deterministic(self):
        a = run_identity(IdentityFamily.ALT_BINOM_EVEN, n_range=(1, 5)).to_json()
        b = run_identity(IdentityFamily.ALT_BINOM_EVEN, n_range=(1, 5)).to_json()
        assert a == b

    def test_reference_tables_pass(self):
        report = reproduce_reference_tables(prec=25)
        assert report.passed
        assert len(report.cells) == 12 + 13 + 8 + 2
