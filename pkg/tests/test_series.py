"""Truncated-series arithmetic against independent expansions."""

import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from radii_lab import (
    FunctionRep,
    PolynomialMajorant,
    PowerGeometricMajorant,
    TruncatedSeries,
    catalog_function,
    derivative,
    dilate,
    eval_at,
    eval_on_circle,
    integrate_t_over_f,
    linear_combine,
    mul,
    reciprocal,
)
from radii_lab.errors import ArgumentOutOfRange, NearZeroConstantTerm, TailBoundUnavailable

from conftest import ORDER


def poly(coeffs, order=8):
    return TruncatedSeries.polynomial(coeffs, order)


def long_division_oracle(a, n_terms):
    """Exact reciprocal coefficients over the rationals."""
    a = [Fraction(x) for x in a] + [Fraction(0)] * n_terms
    out = [Fraction(1) / a[0]]
    for k in range(1, n_terms):
        out.append(-sum(a[j] * out[k - j] for j in range(1, k + 1)) / a[0])
    return out


class TestLinearCombine:
    def test_cancellation(self):
        got = linear_combine(1, poly([1, 1], 1), 1, poly([1, -1], 1))
        assert np.array_equal(got.coeffs, [2, 0])

    def test_identity(self):
        x = poly([1, 2, 3])
        got = linear_combine(1, x, 0, poly([9, 9, 9]))
        assert np.array_equal(got.coeffs, x.coeffs)

    def test_koebe_pair_mix(self):
        # Hand expansion: 0.5 (1-z)^2 + 0.5 (1-z) = 1 - 1.5 z + 0.5 z^2.
        f = catalog_function("koebe", 8)
        g = catalog_function("z/(1-z)", 8)
        got = linear_combine(0.5, g.zoverf, 0.5, f.zoverf)
        assert np.allclose(got.coeffs[:4], [1, -1.5, 0.5, 0])

    def test_order_is_minimum(self):
        got = linear_combine(1, poly([1, 1], 3), 1, poly([1], 5))
        assert got.order == 3


class TestMul:
    def test_difference_of_squares(self):
        got = mul(poly([1, 1]), poly([1, -1]))
        assert np.allclose(got.coeffs[:3], [1, 0, -1])

    def test_binomial_fourth_power(self):
        # (1-z)^4 via the binomial oracle.
        expected = [math.comb(4, k) * (-1) ** k for k in range(5)]
        sq = poly([1, -2, 1])
        assert np.allclose(mul(sq, sq).coeffs[:5], expected)

    def test_koebe_pair_product(self):
        k = catalog_function("koebe", 8)
        got = mul(k.zoverf, k.zoverf)
        assert np.allclose(got.coeffs[:5], [1, -4, 6, -4, 1])
        assert np.allclose(got.coeffs[5:], 0)


class TestReciprocal:
    def test_geometric(self):
        got = reciprocal(poly([1, -1]))
        assert np.allclose(got.coeffs, np.ones(9))

    def test_differentiated_geometric(self):
        got = reciprocal(poly([1, -2, 1]))
        assert np.allclose(got.coeffs, np.arange(1, 10))

    def test_cubic_long_division(self):
        a = [1, Fraction(2, 3), 0, Fraction(1, 3)]
        expected = [float(x) for x in long_division_oracle(a, 9)]
        got = reciprocal(poly([1, 2 / 3, 0, 1 / 3]))
        assert np.allclose(got.coeffs, expected, atol=1e-14)
        assert np.allclose(got.coeffs[:4], [1, -2 / 3, 4 / 9, -17 / 27])

    def test_near_zero_constant_term(self):
        with pytest.raises(NearZeroConstantTerm):
            reciprocal(poly([1e-13, 1]))


class TestDerivative:
    def test_constant(self):
        assert np.allclose(derivative(poly([1], 4)).coeffs, 0)

    def test_extremal_quadratic(self):
        got = derivative(poly([0, 1, 0.5], 4))
        assert np.allclose(got.coeffs, [1, 1, 0, 0])

    def test_koebe_denominator(self):
        got = derivative(poly([1, -2, 1], 4))
        assert np.allclose(got.coeffs, [-2, 2, 0, 0])


class TestIntegrateTOverF:
    def termwise_oracle(self, b):
        # z + sum b_n z^(n+1)/(n+1), exactly over the rationals.
        out = [Fraction(0), Fraction(1)]
        out += [Fraction(bn) / (n + 1) for n, bn in enumerate(b[1:], start=1)]
        return [float(x) for x in out]

    def test_identity(self):
        rep = catalog_function("identity", 6)
        got = integrate_t_over_f(rep)
        assert np.allclose(got.coeffs[:3], [0, 1, 0])

    def test_koebe(self):
        rep = catalog_function("koebe", 6)
        got = integrate_t_over_f(rep)
        assert np.allclose(got.coeffs[:5], self.termwise_oracle([1, -2, 1, 0])[:5])
        assert np.allclose(got.coeffs[:4], [0, 1, -1, 1 / 3])

    def test_half_plane_map(self):
        rep = catalog_function("z/(1-z)", 6)
        got = integrate_t_over_f(rep)
        assert np.allclose(got.coeffs[:4], [0, 1, -0.5, 0])


class TestDilate:
    def test_identity_fixed(self):
        rep = dilate(catalog_function("identity", 6), 0.37)
        assert np.allclose(rep.zoverf.coeffs, catalog_function("identity", 6).zoverf.coeffs)

    def test_koebe_half(self):
        rep = dilate(catalog_function("koebe", 6), 0.5)
        assert np.allclose(rep.zoverf.coeffs[:3], [1, -1, 0.25])

    def test_f1_half(self):
        rep = dilate(catalog_function("f1", 6), 0.5)
        assert np.allclose(rep.f.coeffs[:3], [0, 1, 0.25])

    def test_composition(self):
        rep = catalog_function("cexA", 16)
        once = dilate(dilate(rep, 0.8), 0.6)
        combined = dilate(rep, 0.48)
        assert np.max(np.abs(once.zoverf.coeffs - combined.zoverf.coeffs)) < 1e-12
        assert np.max(np.abs(once.f.coeffs - combined.f.coeffs)) < 1e-12

    def test_out_of_range(self):
        with pytest.raises(ArgumentOutOfRange):
            dilate(catalog_function("identity", 6), 1.0)


class TestEvalOnCircle:
    def test_pure_square(self):
        circle = eval_on_circle(poly([0, 0, 1], 4), 0.3, 16)
        assert np.allclose(np.abs(circle.values), 0.09)
        assert circle.tail_bound == 0.0

    def test_koebe_m_defect_near_boundary(self):
        from radii_lab import ClassId, defect_series

        defect = defect_series(catalog_function("koebe", 16), ClassId("M"))
        circle = eval_on_circle(defect, 1 - 1e-6, 64)
        assert abs(circle.max_modulus() - (1 - 1e-6) ** 2) < 1e-12

    def test_quartic_at_half(self):
        # (1-z)^4 at z = -0.5 equals 1.5^4 = 5.0625, the modulus maximum.
        series = poly([1, -4, 6, -4, 1])
        circle = eval_on_circle(series, 0.5, 64)
        assert abs(circle.max_modulus() - 5.0625) < 1e-12

    def test_requires_majorant(self):
        bare = TruncatedSeries([1, 2, 3])
        with pytest.raises(TailBoundUnavailable):
            eval_on_circle(bare, 0.5, 16)

    def test_sample_floor(self):
        with pytest.raises(ArgumentOutOfRange):
            eval_on_circle(poly([1]), 0.5, 4)

    @pytest.mark.parametrize("name", ["koebe", "f1", "convex-half", "cexA"])
    @pytest.mark.parametrize("r", [0.1, 0.5, 0.9])
    def test_max_below_coefficient_sum(self, name, r):
        rep = catalog_function(name, ORDER)
        for side in (rep.f, rep.zoverf):
            circle = eval_on_circle(side, r, 256)
            bound = float(np.sum(np.abs(side.coeffs) * r ** np.arange(ORDER + 1)))
            assert circle.max_modulus() <= bound + circle.tail_bound + 1e-12


class TestMajorantTails:
    @pytest.mark.parametrize("power", [0, 1, 2, 3, 4])
    @pytest.mark.parametrize("x", [0.2, 0.7, 0.95])
    def test_power_geometric_tail_matches_brute_force(self, power, x):
        maj = PowerGeometricMajorant(1.0, power, 1.0)
        order = 12
        brute = sum((n + 1) ** power * x**n for n in range(order + 1, 4000))
        assert abs(maj.tail(x, order) - brute) < 1e-12 * max(1.0, brute)

    def test_ratio_one_at_radius_one_is_infinite(self):
        assert PowerGeometricMajorant(1.0, 0, 1.0).tail(1.0, 8) == math.inf

    def test_polynomial_tail_is_zero(self):
        assert PolynomialMajorant(3).tail(0.99, 8) == 0.0
        with pytest.raises(TailBoundUnavailable):
            PolynomialMajorant(9).tail(0.5, 8)


class TestFunctionRepInvariants:
    @pytest.mark.parametrize(
        "name",
        ["identity", "koebe", "z/(1+z)", "z/(1-z^2)", "f1", "convex-half", "cexA", "cexB"],
    )
    def test_dual_form_consistency(self, name):
        rep = catalog_function(name, ORDER)
        assert rep.f.coefficient(0) == 0
        assert rep.f.coefficient(1) == 1
        assert rep.zoverf.coefficient(0) == 1
        product = np.convolve(rep.f.coeffs[1:], rep.zoverf.coeffs[:-1])[:ORDER]
        product[0] -= 1
        assert np.max(np.abs(product)) < 1e-10

    @pytest.mark.parametrize("name", ["koebe", "f1", "cexA"])
    def test_reciprocal_roundtrip(self, name):
        rep = catalog_function(name, ORDER)
        for side in (rep.zoverf,):
            round_trip = mul(reciprocal(side), side)
            expected = np.zeros(ORDER + 1)
            expected[0] = 1
            assert np.max(np.abs(round_trip.coeffs[:ORDER] - expected[:ORDER])) < 1e-10

    def test_mismatched_sides_rejected(self):
        with pytest.raises(ArgumentOutOfRange):
            FunctionRep(poly([0, 1, 1], 4), poly([1, 1], 4), "zoverf")


coeff_lists = st.lists(
    st.complex_numbers(max_magnitude=3, allow_nan=False, allow_infinity=False),
    min_size=1,
    max_size=8,
)


@settings(max_examples=60, deadline=None)
@given(coeff_lists, coeff_lists)
def test_product_rule(xs, ys):
    a, b = TruncatedSeries(xs), TruncatedSeries(ys)
    n = min(a.order, b.order) - 1  # both sides are exact through order N - 2
    if n < 1:
        return
    lhs = derivative(mul(a, b))
    rhs = linear_combine(1, mul(derivative(a), b), 1, mul(a, derivative(b)))
    assert np.max(np.abs(lhs.coeffs[:n] - rhs.coeffs[:n])) < 1e-10


@settings(max_examples=60, deadline=None)
@given(
    coeff_lists,
    st.floats(min_value=0.05, max_value=0.95),
    st.floats(min_value=0.05, max_value=0.95),
)
def test_horner_scaling_consistency(xs, r, s):
    series = TruncatedSeries(xs)
    z = r * np.exp(1j * s * math.pi)
    direct = sum(c * z**n for n, c in enumerate(xs))
    assert abs(eval_at(series, z) - direct) < 1e-9 * (1 + abs(direct))


@settings(max_examples=40, deadline=None)
@given(coeff_lists)
def test_reciprocal_inverts(xs):
    if abs(xs[0]) < 0.1:
        xs = [xs[0] + 1.0] + list(xs[1:])
    a = TruncatedSeries(xs)
    prod = mul(reciprocal(a), a)
    expected = np.zeros(prod.order + 1)
    expected[0] = 1
    scale = max(1.0, float(np.max(np.abs(a.coeffs))) / abs(xs[0]))
    assert np.max(np.abs(prod.coeffs - expected)) < 1e-8 * scale ** max(1, a.order)
