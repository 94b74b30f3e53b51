"""Polylogarithm and log-moment values against quadrature and brute summation."""

import math

import numpy as np
import pytest
from scipy.integrate import quad

from radii_lab import inverse_square_tail, log_moment, polylog
from radii_lab.errors import ArgumentOutOfRange

PI2_OVER_6 = math.pi**2 / 6


def brute_polylog(k, x, terms=1_000_000):
    n = np.arange(1, terms + 1)
    return float(np.sum(x**n / n.astype(float) ** k))


class TestPolylog:
    def test_zero_argument(self):
        got = polylog(2, 0.0)
        assert got.value == 0.0 and got.abs_error_bound == 0.0

    def test_order_one_closed_form(self):
        got = polylog(1, 0.5)
        assert abs(got.value - math.log(2)) < 1e-15

    def test_dilog_near_root_radius(self):
        # x = 0.613 is the square of the radius where the dilogarithm
        # equation changes sign.
        oracle = brute_polylog(2, 0.613)
        got = polylog(2, 0.613)
        assert abs(got.value - oracle) <= got.abs_error_bound + 1e-13
        assert got.abs_error_bound <= 1e-12

    @pytest.mark.parametrize("x", [0.05, 0.3, 0.5, 0.55, 0.8, 0.95])
    def test_dilog_against_brute_force(self, x):
        assert abs(polylog(2, x).value - brute_polylog(2, x)) < 1e-12

    @pytest.mark.parametrize("k", [3, 4])
    def test_higher_orders_against_brute_force(self, k):
        assert abs(polylog(k, 0.9).value - brute_polylog(k, 0.9)) < 1e-12

    @pytest.mark.parametrize("x", [round(0.1 * i, 1) for i in range(1, 10)])
    def test_reflection_identity(self, x):
        lhs = polylog(2, x).value + polylog(2, 1.0 - x).value
        rhs = PI2_OVER_6 - math.log(x) * math.log(1.0 - x)
        assert abs(lhs - rhs) < 1e-10

    def test_domain_errors(self):
        for bad in (-0.1, 1.0, 1.5):
            with pytest.raises(ArgumentOutOfRange):
                polylog(2, bad)
        with pytest.raises(ArgumentOutOfRange):
            polylog(0, 0.5)


class TestLogMoment:
    @pytest.mark.parametrize("n", [2, 3, 5, 9])
    def test_against_quadrature(self, n):
        oracle, err = quad(lambda t: t ** (n - 2) * math.log(1.0 / t), 0.0, 1.0)
        assert err < 1e-7
        assert abs(log_moment(n) - oracle) < max(1e-9, 2 * err)

    def test_small_cases(self):
        assert log_moment(2) == 1.0
        assert log_moment(3) == 0.25
        assert log_moment(11) == pytest.approx(0.01, abs=1e-15)

    def test_identity_through_64(self):
        worst = max(abs(log_moment(n) * (n - 1) ** 2 - 1.0) for n in range(2, 65))
        assert worst < 1e-12

    def test_domain(self):
        with pytest.raises(ArgumentOutOfRange):
            log_moment(1)


class TestInverseSquareTail:
    def test_matches_pi_squared_combination(self):
        # sum_{n>=2} (n+1)^-2 = pi^2/6 - 1 - 1/4.
        assert abs(inverse_square_tail(3) - (PI2_OVER_6 - 1.25)) < 1e-9

    def test_full_series(self):
        assert abs(inverse_square_tail(1) - PI2_OVER_6) < 1e-9
