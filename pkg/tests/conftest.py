"""Shared helpers: small orders for unit tests, seeded generator data."""

from __future__ import annotations

import numpy as np
import pytest

from radii_lab import TruncatedSeries

ORDER = 64


@pytest.fixture
def order():
    return ORDER


def random_schwarz_quadratic(rng, order=ORDER, degree=12, budget=None):
    """Polynomial w = z^2 v(z) with sum |v_k| <= budget <= 1, so |w| <= |z|^2."""
    raw = rng.normal(size=degree - 1) + 1j * rng.normal(size=degree - 1)
    if budget is None:
        budget = rng.uniform(0.2, 0.95)
    raw *= budget / np.sum(np.abs(raw))
    coeffs = np.zeros(degree + 1, dtype=np.complex128)
    coeffs[2:] = raw
    return TruncatedSeries.polynomial(coeffs, order)


def random_small_sum_poly(rng, order=ORDER, degree=10, budget=None):
    """Polynomial w with sum |w_k| <= budget <= 1 (so also sup |w| <= 1)."""
    raw = rng.normal(size=degree + 1) + 1j * rng.normal(size=degree + 1)
    if budget is None:
        budget = rng.uniform(0.2, 0.95)
    raw *= budget / np.sum(np.abs(raw))
    return TruncatedSeries.polynomial(raw, order)
