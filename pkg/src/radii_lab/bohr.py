"""Majorant-sum quantities and growth bounds for the coefficient class OmegaA.

For f with sum_{n>=2} (n-1)|a_n| <= 1/2 the image boundary stays at least
1/2 away from the origin, so each quantity below is compared against the
distance bound 1/2.  Quantities are explicit finite sums through the stored
order plus a certified geometric tail: the coefficient condition gives
sum_{n>N} |a_n| r^n <= r^(N+1)/2 and n|a_n| <= 1 for the derivative tail.
With the default order 256 these tails are far below every tolerance used
here, but they keep each "satisfied" verdict sound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .classes import ClassId, certificate_sufficient
from .errors import ArgumentOutOfRange, NotCertifiedOmegaA
from .series import FunctionRep, derivative, eval_at

DISTANCE_BOUND = 0.5

_SATISFIED_TOL = 1e-12


@dataclass(frozen=True)
class BohrReport:
    """One majorant-type quantity at radius r against the distance bound 1/2."""

    kind: str  # bohr | rogosinski | improved
    r: float
    quantity: float
    distance_bound: float = DISTANCE_BOUND
    satisfied: bool = field(init=False)

    def __post_init__(self):
        object.__setattr__(
            self, "satisfied", self.quantity <= self.distance_bound + _SATISFIED_TOL
        )


def growth_bounds(r: float) -> tuple[float, float, float, float]:
    """Sharp envelopes (|f| lower, |f| upper, |f'| lower, |f'| upper) at |z| = r.

    (r - r^2/2, r + r^2/2, 1 - r, 1 + r); z + z^2/2 attains all four.
    """
    if not 0.0 <= r < 1.0:
        raise ArgumentOutOfRange(f"radius {r} outside [0, 1)")
    return (r - 0.5 * r * r, r + 0.5 * r * r, 1.0 - r, 1.0 + r)


def _require_certified(rep: FunctionRep) -> None:
    cert = certificate_sufficient(rep, ClassId("OmegaA"))
    if not cert.holds:
        raise NotCertifiedOmegaA(
            f"coefficient sum {cert.value} exceeds 1/2; quantities would be unsound"
        )


def _abs_coeff_sum(rep: FunctionRep, r: float, first: int) -> float:
    """sum_{n>=first} |a_n| r^n through the stored order plus the certified tail."""
    n = np.arange(rep.order + 1)
    powers = np.abs(rep.f.coeffs) * r ** n.astype(float)
    finite = float(np.sum(powers[first:]))
    return finite + 0.5 * r ** (rep.order + 1)


def bohr_quantity(rep: FunctionRep, r: float) -> BohrReport:
    """Classical majorant sum r + sum_{n>=2} |a_n| r^n versus 1/2."""
    if not 0.0 < r < 1.0:
        raise ArgumentOutOfRange(f"radius {r} outside (0, 1)")
    _require_certified(rep)
    return BohrReport("bohr", r, r + _abs_coeff_sum(rep, r, 2))


def rogosinski_quantity(rep: FunctionRep, z: complex, n_start: int = 2) -> BohrReport:
    """Partial-sum style quantity |f(z)| + sum_{n>=n_start} |a_n| r^n at r = |z|."""
    r = abs(z)
    if not 0.0 < r < 1.0:
        raise ArgumentOutOfRange(f"|z| = {r} outside (0, 1)")
    if n_start < 1:
        raise ArgumentOutOfRange(f"sum start {n_start} must be >= 1")
    _require_certified(rep)
    eval_tail = 0.5 * r ** (rep.order + 1)
    quantity = abs(eval_at(rep.f, z)) + eval_tail + _abs_coeff_sum(rep, r, n_start)
    return BohrReport("rogosinski", r, quantity)


def improved_quantity(rep: FunctionRep, z: complex) -> BohrReport:
    """|f(z)| + |f'(z)| |z| + sum_{n>=2} |a_n| r^n versus 1/2."""
    r = abs(z)
    if not 0.0 < r < 1.0:
        raise ArgumentOutOfRange(f"|z| = {r} outside (0, 1)")
    _require_certified(rep)
    eval_tail = 0.5 * r ** (rep.order + 1)
    # n|a_n| <= n/(2(n-1)) <= 1 for n >= 2 bounds the derivative tail by a
    # plain geometric series.
    deriv_tail = r**rep.order / (1.0 - r)
    quantity = (
        abs(eval_at(rep.f, z))
        + eval_tail
        + (abs(eval_at(derivative(rep.f), z)) + deriv_tail) * r
        + _abs_coeff_sum(rep, r, 2)
    )
    return BohrReport("improved", r, quantity)


def distance_for_f1(samples: int = 4096) -> float:
    """Distance from the origin to the boundary image of z + z^2/2.

    Computed as the minimum of |f(e^(i theta))| over a uniform angle grid;
    the minimum sits at theta = pi, which the (even) default grid contains,
    and equals 1/2 exactly.
    """
    if samples < 8:
        raise ArgumentOutOfRange(f"need at least 8 samples, got {samples}")
    zs = np.exp(2j * np.pi * np.arange(samples) / samples)
    values = zs + 0.5 * zs * zs
    return float(np.min(np.abs(values)))
