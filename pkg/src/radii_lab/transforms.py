"""Constructions that map normalized functions to new normalized functions.

Everything operates purely in coefficient space, so each construction is a
short exact rule on the a- or b-side:

  omitted_value(f, a):        z/g = z/f - z/a           (only b_1 changes)
  harmonic_combination(f,g,t): z/F = (1-t)(z/g) + t(z/f)
  quotient_product(g, h):     z/F = (z/g)(z/h)          (F = g h / z)
  square_over(f):             z/F = f/z                 (F = z^2 / f)
  square_over_integral(f):    z/F = 1 + sum b_n z^n/(n+1)
                              (F = z^2 / int_0^z (t/f) dt)

Because only b_1 moves under the omitted-value map, every defect series
built from the n >= 2 coefficients is exactly invariant under it.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ArgumentOutOfRange, DegenerateTransform, ParamOutOfRange, ZeroDenominator
from .series import (
    FunctionRep,
    PolynomialMajorant,
    PowerGeometricMajorant,
    TruncatedSeries,
    eval_at,
    linear_combine,
    mul,
)

OMITTED_ON_GRID = "omitted_on_grid"
ATTAINED_ON_GRID = "attained_on_grid"

_GRID_RADII = (0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.95, 0.99, 0.999)
_GRID_ANGLES = 512


@dataclass(frozen=True)
class TransformTag:
    """Record of which construction produced a representation."""

    name: str
    params: dict

    _NAMES = ("omitted_value", "harmonic", "quotient_product", "square_over", "square_over_integral")

    def __post_init__(self):
        if self.name not in self._NAMES:
            raise ParamOutOfRange(f"unknown transform {self.name!r}")
        if self.name == "harmonic" and not 0.0 <= self.params.get("t", -1.0) <= 1.0:
            raise ParamOutOfRange("harmonic weight t must lie in [0, 1]")
        if self.name == "omitted_value" and self.params.get("a", 0) == 0:
            raise ParamOutOfRange("omitted value a must be nonzero")


@dataclass(frozen=True)
class ForbiddenPointReport:
    """Excluded point -1/(f''(0)/2 + mu) with a sampled non-attainment verdict."""

    point: complex
    grid_min_distance: float
    verdict: str


def omitted_value(rep: FunctionRep, a: complex) -> FunctionRep:
    """af/(a - f) for an omitted value a != 0; shifts b_1 by -1/a."""
    TransformTag("omitted_value", {"a": a})
    b = np.array(rep.zoverf.coeffs)
    b[1] -= 1.0 / a
    if abs(b[0] - 1.0) > 1e-12:
        raise DegenerateTransform("transformed series lost its normalization")
    maj = rep.zoverf.majorant
    if isinstance(maj, PolynomialMajorant):
        maj = PolynomialMajorant(max(maj.degree, 1))
    return FunctionRep.from_zoverf(TruncatedSeries(b, maj))


def forbidden_point(rep: FunctionRep, mu: complex, lam: float) -> ForbiddenPointReport:
    """The point -1/(f''(0)/2 + mu), which members of M(lam) omit for |mu| <= 1 - lam.

    The verdict is a partial-sum sample over circles up to radius 0.999,
    not a proof: truncation error is not subtracted from the distances.
    """
    if not 0.0 < lam <= 1.0:
        raise ParamOutOfRange(f"level {lam} outside (0, 1]")
    if abs(mu) > 1.0 - lam + 1e-12:
        raise ParamOutOfRange(f"|mu| = {abs(mu)} exceeds 1 - lam = {1.0 - lam}")
    half_fpp = rep.f.coefficient(2) if rep.order >= 2 else 0.0
    denom = half_fpp + mu
    if abs(denom) < 1e-12:
        raise ZeroDenominator("f''(0)/2 + mu vanishes")
    point = -1.0 / denom
    angles = np.exp(2j * np.pi * np.arange(_GRID_ANGLES) / _GRID_ANGLES)
    best = min(
        float(np.min(np.abs(eval_at(rep.f, r * angles) - point))) for r in _GRID_RADII
    )
    margin = 1e-9 * (1.0 + abs(point))
    verdict = OMITTED_ON_GRID if best > margin else ATTAINED_ON_GRID
    return ForbiddenPointReport(point, best, verdict)


def harmonic_combination(f: FunctionRep, g: FunctionRep, t: float) -> FunctionRep:
    """fg/((1-t)f + tg): in coefficient space z/F = (1-t)(z/g) + t(z/f).

    Defects are linear along the path: defect(F) = (1-t) defect(g) + t defect(f).
    """
    TransformTag("harmonic", {"t": t})
    b = linear_combine(1.0 - t, g.zoverf, t, f.zoverf)
    coeffs = np.array(b.coeffs)
    coeffs[0] = 1.0
    return FunctionRep.from_zoverf(TruncatedSeries(coeffs, b.majorant))


def quotient_product(g: FunctionRep, h: FunctionRep) -> FunctionRep:
    """F = g h / z via z/F = (z/g)(z/h)."""
    b = mul(g.zoverf, h.zoverf)
    coeffs = np.array(b.coeffs)
    coeffs[0] = 1.0
    return FunctionRep.from_zoverf(TruncatedSeries(coeffs, b.majorant))


def square_over(f: FunctionRep) -> FunctionRep:
    """F = z^2/f: the b-side of F is the a-side of f shifted down one index."""
    a = f.f
    coeffs = a.coeffs[1:]
    maj = a.majorant
    if isinstance(maj, PolynomialMajorant):
        b = TruncatedSeries.polynomial(coeffs[: max(maj.degree, 1)], a.order)
        return FunctionRep.from_zoverf(b)
    if isinstance(maj, PowerGeometricMajorant):
        # |B_n| = |a_(n+1)| <= scale (n+2)^p ratio^(n+1) <= scale ratio 2^p (n+1)^p ratio^n.
        maj = PowerGeometricMajorant(maj.scale * maj.ratio * 2**maj.power, maj.power, maj.ratio)
    return FunctionRep.from_zoverf(TruncatedSeries(coeffs, maj))


def square_over_integral(f: FunctionRep) -> FunctionRep:
    """F = z^2 / int_0^z (t/f(t)) dt: divides each b_n by n + 1.

    The M defect of the result has coefficients (n-1)^2 b_n/(n+1), so any
    function whose weighted b-sums are finite stays tame under this map.
    """
    arr = f.zoverf.coeffs / np.arange(1, f.order + 2)
    arr[0] = 1.0
    # |b_n/(n+1)| <= |b_n|, so the b-side majorant carries over unchanged.
    return FunctionRep.from_zoverf(TruncatedSeries(arr, f.zoverf.majorant))
