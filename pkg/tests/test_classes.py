"""Defect operators, certificates, and generators."""

import numpy as np
import pytest

from radii_lab import (
    Certificate,
    ClassId,
    TruncatedSeries,
    area_functional,
    catalog_function,
    certificate_sufficient,
    defect_series,
    dilate,
    generate_M_member,
    generate_Omega_member,
    quartic_necessary,
    sup_defect,
)
from radii_lab.classes import CERTIFIED_INSIDE, CERTIFIED_OUTSIDE
from radii_lab.errors import NotSchwarzBounded, ParamOutOfRange, UnsupportedClass

from conftest import ORDER, random_schwarz_quadratic


def quadratic_schwarz(c=1.0, order=ORDER):
    return TruncatedSeries.polynomial([0, 0, c], order)


class TestDefectSeries:
    def test_identity_all_classes(self):
        rep = catalog_function("identity", 16)
        for tag in ("M", "U", "P", "Omega"):
            assert np.allclose(defect_series(rep, ClassId(tag)).coeffs, 0)

    def test_koebe_m_defect_is_square(self):
        d = defect_series(catalog_function("koebe", 16), ClassId("M"))
        expected = np.zeros(17)
        expected[2] = 1
        assert np.allclose(d.coeffs, expected)

    def test_f1_omega_defect(self):
        d = defect_series(catalog_function("f1", 16), ClassId("Omega"))
        expected = np.zeros(17)
        expected[2] = 0.5
        assert np.allclose(d.coeffs, expected)

    def test_p_defect_index_shift(self):
        # (z/f)'' for the Koebe side (1-z)^2 is the constant 2.
        d = defect_series(catalog_function("koebe", 16), ClassId("P"))
        assert d.order == 14
        assert np.allclose(d.coeffs[0], 2.0)
        assert np.allclose(d.coeffs[1:], 0)

    def test_unsupported(self):
        with pytest.raises(UnsupportedClass):
            defect_series(catalog_function("koebe", 8), ClassId("OmegaA"))


class TestSupDefect:
    def test_koebe_inside_m(self):
        report = sup_defect(catalog_function("koebe", ORDER), ClassId("M"), 0.9)
        assert report.verdict == CERTIFIED_INSIDE
        assert abs(report.sup_sampled - 0.81) < 1e-12

    def test_cexA_outside_m(self):
        report = sup_defect(catalog_function("cexA", ORDER), ClassId("M"), 0.95)
        assert report.verdict == CERTIFIED_OUTSIDE
        assert abs(report.sup_sampled - (4.0 / 3.0) * 0.95**3) < 1e-12

    def test_halfplane_u_defect_vanishes(self):
        for r in (0.2, 0.7, 0.999):
            report = sup_defect(catalog_function("z/(1-z)", ORDER), ClassId("U"), r)
            assert report.verdict == CERTIFIED_INSIDE
            assert report.sup_sampled == 0.0

    @pytest.mark.parametrize("name", ["koebe", "cexA"])
    def test_monotone_in_radius(self, name):
        rep = catalog_function(name, ORDER)
        sups = [
            sup_defect(rep, ClassId("M"), 0.1 * k, samples=512).sup_sampled
            for k in range(1, 10)
        ]
        assert all(b >= a - 1e-12 for a, b in zip(sups, sups[1:]))

    def test_generated_member_monotone(self):
        rng = np.random.default_rng(7)
        rep = generate_M_member(random_schwarz_quadratic(rng))
        sups = [
            sup_defect(rep, ClassId("U"), 0.1 * k, samples=512).sup_sampled
            for k in range(1, 10)
        ]
        assert all(b >= a - 1e-12 for a, b in zip(sups, sups[1:]))


class TestCertificates:
    def test_integer_coefficient_member(self):
        # z/f = 1 + z + z^2 gives sum (n-1)^2 |b_n| = 1, the boundary case.
        cert = certificate_sufficient(catalog_function("z/(1+z+z^2)", ORDER), ClassId("M"))
        assert cert.kind == "sum_sufficient"
        assert cert.value == pytest.approx(1.0, abs=1e-14)
        assert cert.holds

    def test_f1_omega_sum_boundary(self):
        cert = certificate_sufficient(catalog_function("f1", ORDER), ClassId("OmegaA"))
        assert cert.value == pytest.approx(0.5, abs=1e-14)
        assert cert.holds

    @pytest.mark.parametrize("r", [0.3, 0.6])
    def test_dilated_koebe_sum(self, r):
        cert = certificate_sufficient(dilate(catalog_function("koebe", ORDER), r), ClassId("M"))
        assert cert.value == pytest.approx(r**2, abs=1e-14)

    def test_unsupported_classes(self):
        rep = catalog_function("koebe", 8)
        for tag in ("U", "P", "Omega"):
            with pytest.raises(UnsupportedClass):
                certificate_sufficient(rep, ClassId(tag))

    def test_area_functional(self):
        assert area_functional(catalog_function("identity", ORDER), 1.0).value == 0.0
        koebe = area_functional(catalog_function("koebe", ORDER), 1.0)
        assert koebe.value == pytest.approx(1.0, abs=1e-14) and koebe.holds
        lemn = area_functional(catalog_function("z/(1-z^2)", ORDER), 1.0)
        assert lemn.value == pytest.approx(1.0, abs=1e-14) and lemn.holds

    def test_quartic_necessary(self):
        assert quartic_necessary(catalog_function("koebe", ORDER)).value == pytest.approx(1.0)
        assert quartic_necessary(catalog_function("identity", ORDER)).value == 0.0
        cex_b = quartic_necessary(catalog_function("cexB", ORDER))
        assert cex_b.value == pytest.approx(4.0, abs=1e-12)
        assert not cex_b.holds

    def test_certificate_holds_invariant(self):
        cert = Certificate("sum_sufficient", 1.0 + 5e-13, 1.0)
        assert cert.holds
        assert not Certificate("sum_sufficient", 1.1, 1.0).holds


class TestGenerateMMember:
    def test_square_data_gives_lemniscate_like_member(self):
        rep = generate_M_member(quadratic_schwarz(), lam=1.0, b1=0.0)
        expected = np.zeros(ORDER + 1)
        expected[0] = 1
        expected[2] = 1
        assert np.allclose(rep.zoverf.coeffs, expected)

    def test_zero_data_reduces_to_first_coefficient(self):
        rep = generate_M_member(TruncatedSeries.polynomial([0, 0, 0], ORDER), b1=-2.0)
        expected = np.zeros(ORDER + 1)
        expected[0] = 1
        expected[1] = 2
        assert np.allclose(rep.zoverf.coeffs, expected)
        assert np.allclose(defect_series(rep, ClassId("M")).coeffs, 0)

    def test_unimodular_square_defect(self):
        c = np.exp(1j * 0.83)
        rep = generate_M_member(quadratic_schwarz(c))
        d = defect_series(rep, ClassId("M"))
        assert np.allclose(d.coeffs[2], c)
        report = sup_defect(rep, ClassId("M"), 0.77)
        assert abs(report.sup_sampled - 0.77**2) < 1e-12

    def test_roundtrip_on_seeded_data(self):
        rng = np.random.default_rng(42)
        for _ in range(25):
            w = random_schwarz_quadratic(rng)
            lam = rng.uniform(0.3, 1.0)
            b1 = complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
            rep = generate_M_member(w, lam=lam, b1=b1)
            assert np.max(
                np.abs(defect_series(rep, ClassId("M", lam)).coeffs - lam * w.coeffs)
            ) < 1e-12
            assert rep.zoverf.coefficient(1) == pytest.approx(-b1)

    def test_rejects_unbounded_data(self):
        with pytest.raises(NotSchwarzBounded):
            generate_M_member(quadratic_schwarz(2.0))

    def test_rejects_low_order_terms(self):
        with pytest.raises(NotSchwarzBounded):
            generate_M_member(TruncatedSeries.polynomial([0, 0.5, 0.5], ORDER))

    def test_rejects_large_b1(self):
        with pytest.raises(ParamOutOfRange):
            generate_M_member(quadratic_schwarz(), b1=2.5)


class TestGenerateOmegaMember:
    def test_unimodular_constant_gives_extremal_quadratic(self):
        rep = generate_Omega_member(TruncatedSeries.polynomial([1.0], ORDER))
        assert np.allclose(rep.f.coeffs[:3], [0, 1, 0.5])
        assert np.allclose(rep.f.coeffs[3:], 0)

    def test_zero_gives_identity(self):
        rep = generate_Omega_member(TruncatedSeries.polynomial([0.0], ORDER))
        assert np.allclose(rep.f.coeffs[2:], 0)

    def test_linear_data(self):
        rep = generate_Omega_member(TruncatedSeries.polynomial([0.0, 1.0], ORDER))
        expected = np.zeros(ORDER + 3)
        expected[1] = 1
        expected[3] = 0.25
        assert np.allclose(rep.f.coeffs, expected[: rep.order + 1])

    def test_defect_is_half_square_times_data(self):
        rng = np.random.default_rng(3)
        from conftest import random_small_sum_poly

        w = random_small_sum_poly(rng)
        rep = generate_Omega_member(w)
        d = defect_series(rep, ClassId("Omega"))
        assert np.max(np.abs(d.coeffs[2 : w.order + 3] - 0.5 * w.coeffs[: w.order + 1])) < 1e-14

    def test_rejects_large_data(self):
        with pytest.raises(NotSchwarzBounded):
            generate_Omega_member(TruncatedSeries.polynomial([1.2], ORDER))


class TestMembershipProperties:
    def test_integer_coefficient_functions_inside_m_and_u(self):
        from radii_lab import S_Z_NAMES

        for name in S_Z_NAMES:
            rep = catalog_function(name, ORDER)
            for tag in ("M", "U"):
                report = sup_defect(rep, ClassId(tag), 0.999)
                assert report.verdict == CERTIFIED_INSIDE, (name, tag)
                assert report.tail_bound == 0.0

    def test_generated_members_inside_p_and_u(self):
        rng = np.random.default_rng(123)
        for _ in range(100):
            rep = generate_M_member(random_schwarz_quadratic(rng))
            for tag in ("P", "U"):
                report = sup_defect(rep, ClassId(tag), 0.99, samples=1024)
                assert report.verdict == CERTIFIED_INSIDE
