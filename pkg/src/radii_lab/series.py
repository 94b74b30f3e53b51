"""Exact-truncation arithmetic for complex power series centered at 0.

A :class:`TruncatedSeries` holds the coefficients c_0 .. c_N of an analytic
germ on the unit disk.  Arithmetic never fabricates high-order terms: a
result carries ``order = min`` of the operand orders (one less per
differentiation).  A series may also carry a coefficient *majorant*
describing the terms beyond the stored degree; majorants are what turn
sampled circle suprema into certified bounds.

All values are immutable after construction and every operation is pure,
so everything here is safe to use from multiple threads.  Circle
evaluation uses a fixed Horner summation order, hence results are
bit-identical from run to run.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

from .errors import ArgumentOutOfRange, NearZeroConstantTerm, TailBoundUnavailable

DEFAULT_ORDER = 256

# Per-coefficient tolerance for the dual-form consistency check of FunctionRep.
CONSISTENCY_TOL = 1e-10

_RECIPROCAL_EPS = 1e-12


def default_order() -> int:
    """Truncation degree used when none is given; RADII_LAB_ORDER overrides."""
    return int(os.environ.get("RADII_LAB_ORDER", DEFAULT_ORDER))


def _power_sum(j: int, x: float) -> float:
    """Closed form of sum_{k>=0} k^j x^k for 0 <= x < 1 and j in 0..4."""
    one = 1.0 - x
    if j == 0:
        return 1.0 / one
    if j == 1:
        return x / one**2
    if j == 2:
        return x * (1.0 + x) / one**3
    if j == 3:
        return x * (1.0 + 4.0 * x + x * x) / one**4
    if j == 4:
        return x * (1.0 + x * (11.0 + x * (11.0 + x))) / one**5
    raise ArgumentOutOfRange(f"power {j} not supported (0..4)")


@dataclass(frozen=True)
class PolynomialMajorant:
    """Asserts the series is exactly a polynomial of degree <= ``degree``.

    The tail beyond any stored order >= degree is identically zero.
    """

    degree: int

    def tail(self, r: float, order: int) -> float:
        if order < self.degree:
            raise TailBoundUnavailable(
                f"series truncated at {order} below polynomial degree {self.degree}"
            )
        return 0.0

    def lifted(self, extra_power: int, extra_scale: float = 1.0) -> "PolynomialMajorant":
        # Coefficientwise weights do not enlarge the support of a polynomial.
        return self


@dataclass(frozen=True)
class PowerGeometricMajorant:
    """Asserts |c_n| <= scale * (n+1)**power * ratio**n for all n > the stored order.

    ``tail(r, N)`` returns sum_{n>N} scale (n+1)^power (ratio*r)^n exactly
    (up to floating-point rounding), via the binomial expansion
    (N+2+k)^p = sum_j C(p,j) (N+2)^(p-j) k^j and the closed forms of
    sum k^j x^k.  All terms are positive, so no cancellation occurs.
    """

    scale: float
    power: int = 0
    ratio: float = 1.0

    def tail(self, r: float, order: int) -> float:
        x = self.ratio * r
        if x >= 1.0:
            return math.inf
        if x <= 0.0 or self.scale == 0.0:
            return 0.0
        base = (order + 2.0) ** np.arange(self.power, -1, -1)
        total = sum(
            math.comb(self.power, j) * base[j] * _power_sum(j, x)
            for j in range(self.power + 1)
        )
        return self.scale * x ** (order + 1) * total

    def lifted(self, extra_power: int, extra_scale: float = 1.0) -> "PowerGeometricMajorant":
        """Majorant for coefficients reweighted by at most extra_scale*(n+1)**extra_power."""
        return PowerGeometricMajorant(
            self.scale * extra_scale, self.power + extra_power, self.ratio
        )


Majorant = Union[PolynomialMajorant, PowerGeometricMajorant]


class TruncatedSeries:
    """Degree-N truncation c_0 + c_1 z + ... + c_N z^N of an analytic germ."""

    __slots__ = ("_coeffs", "majorant")

    def __init__(self, coeffs: Sequence[complex], majorant: Majorant | None = None):
        arr = np.array(coeffs, dtype=np.complex128)
        if arr.ndim != 1 or arr.size == 0:
            raise ArgumentOutOfRange("coeffs must be a nonempty one-dimensional sequence")
        arr.flags.writeable = False
        object.__setattr__(self, "_coeffs", arr)
        object.__setattr__(self, "majorant", majorant)

    def __setattr__(self, name, value):  # immutable
        raise AttributeError("TruncatedSeries is immutable")

    @property
    def coeffs(self) -> np.ndarray:
        return self._coeffs

    @property
    def order(self) -> int:
        return self._coeffs.size - 1

    def coefficient(self, n: int) -> complex:
        if not 0 <= n <= self.order:
            raise ArgumentOutOfRange(f"index {n} outside 0..{self.order}")
        return complex(self._coeffs[n])

    @classmethod
    def polynomial(cls, coeffs: Sequence[complex], order: int | None = None) -> "TruncatedSeries":
        """Series that *is* the polynomial with the given coefficients, zero-padded.

        The attached majorant certifies the zero tail, so circle suprema on
        such series come with tail bound 0.
        """
        given = np.asarray(coeffs, dtype=np.complex128)
        if given.ndim == 0:
            given = given.reshape(1)
        degree = given.size - 1 if given.size else 0
        if order is None:
            order = max(default_order(), degree)
        if order < degree:
            raise ArgumentOutOfRange(
                f"order {order} cannot hold a degree-{degree} polynomial"
            )
        padded = np.zeros(order + 1, dtype=np.complex128)
        padded[: given.size] = given
        return cls(padded, PolynomialMajorant(degree))

    @classmethod
    def monomial(cls, degree: int, order: int | None = None) -> "TruncatedSeries":
        coeffs = [0.0] * degree + [1.0]
        return cls.polynomial(coeffs, order)

    def with_majorant(self, majorant: Majorant | None) -> "TruncatedSeries":
        return TruncatedSeries(self._coeffs, majorant)

    def truncated(self, order: int) -> "TruncatedSeries":
        """Drop coefficients above ``order``; keeps only still-valid majorants."""
        if order >= self.order:
            return self
        maj = self.majorant
        if not isinstance(maj, PolynomialMajorant) or maj.degree > order:
            maj = None
        return TruncatedSeries(self._coeffs[: order + 1], maj)

    def tail_bound(self, r: float) -> float:
        if self.majorant is None:
            raise TailBoundUnavailable("series carries no coefficient majorant")
        return self.majorant.tail(r, self.order)

    def __repr__(self) -> str:
        head = np.array2string(self._coeffs[: min(4, self._coeffs.size)], precision=6)
        return f"TruncatedSeries(order={self.order}, coeffs={head}...)"


def _combined_linear_majorant(
    alpha: complex, a: TruncatedSeries, beta: complex, b: TruncatedSeries, order: int
) -> Majorant | None:
    ma, mb = a.majorant, b.majorant
    if isinstance(ma, PolynomialMajorant) and isinstance(mb, PolynomialMajorant):
        return PolynomialMajorant(max(ma.degree, mb.degree))
    # A polynomial whose degree fits inside the result contributes nothing
    # beyond the stored order, so the other operand's majorant survives.
    if isinstance(ma, PolynomialMajorant) and ma.degree <= order and mb is not None:
        return mb.lifted(0, abs(beta)) if isinstance(mb, PowerGeometricMajorant) else mb
    if isinstance(mb, PolynomialMajorant) and mb.degree <= order and ma is not None:
        return ma.lifted(0, abs(alpha)) if isinstance(ma, PowerGeometricMajorant) else ma
    if (
        isinstance(ma, PowerGeometricMajorant)
        and isinstance(mb, PowerGeometricMajorant)
        and a.order == b.order
    ):
        return PowerGeometricMajorant(
            abs(alpha) * ma.scale + abs(beta) * mb.scale,
            max(ma.power, mb.power),
            max(ma.ratio, mb.ratio),
        )
    return None


def linear_combine(
    alpha: complex, a: TruncatedSeries, beta: complex, b: TruncatedSeries
) -> TruncatedSeries:
    """Coefficientwise alpha*a + beta*b at the minimum of the two orders."""
    order = min(a.order, b.order)
    coeffs = alpha * a.coeffs[: order + 1] + beta * b.coeffs[: order + 1]
    return TruncatedSeries(coeffs, _combined_linear_majorant(alpha, a, beta, b, order))


def mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated at the minimum of the two orders."""
    order = min(a.order, b.order)
    coeffs = np.convolve(a.coeffs[: order + 1], b.coeffs[: order + 1])[: order + 1]
    maj = None
    if isinstance(a.majorant, PolynomialMajorant) and isinstance(b.majorant, PolynomialMajorant):
        maj = PolynomialMajorant(a.majorant.degree + b.majorant.degree)
    return TruncatedSeries(coeffs, maj)


def reciprocal(a: TruncatedSeries) -> TruncatedSeries:
    """Multiplicative inverse by forward substitution (series long division)."""
    a0 = complex(a.coeffs[0])
    if abs(a0) <= _RECIPROCAL_EPS:
        raise NearZeroConstantTerm(f"|constant term| = {abs(a0):.3e} too small to invert")
    n = a.order
    inv = np.zeros(n + 1, dtype=np.complex128)
    inv[0] = 1.0 / a0
    coeffs = a.coeffs
    for k in range(1, n + 1):
        inv[k] = -np.dot(coeffs[1 : k + 1], inv[k - 1 :: -1]) / a0
    return TruncatedSeries(inv)


def derivative(a: TruncatedSeries) -> TruncatedSeries:
    """Termwise derivative; the order drops by one."""
    if a.order == 0:
        return TruncatedSeries([0.0], PolynomialMajorant(0))
    n = np.arange(1, a.order + 1)
    coeffs = n * a.coeffs[1:]
    maj = a.majorant
    if isinstance(maj, PolynomialMajorant):
        maj = PolynomialMajorant(max(maj.degree - 1, 0))
    elif isinstance(maj, PowerGeometricMajorant):
        # |(k+1) c_{k+1}| <= scale (k+1)(k+2)^p rho^(k+1)
        #                  <= scale rho 2^p (k+1)^(p+1) rho^k.
        maj = PowerGeometricMajorant(
            maj.scale * maj.ratio * 2**maj.power, maj.power + 1, maj.ratio
        )
    return TruncatedSeries(coeffs, maj)


def eval_at(a: TruncatedSeries, z) -> complex | np.ndarray:
    """Horner evaluation of the stored polynomial part at scalar or array z."""
    zs = np.asarray(z, dtype=np.complex128)
    out = np.zeros_like(zs)
    for c in a.coeffs[::-1]:
        out = out * zs + c
    return complex(out) if out.ndim == 0 else out


@dataclass(frozen=True)
class CircleValues:
    """Samples of a series on |z| = r plus a certified bound on the dropped tail."""

    values: np.ndarray
    tail_bound: float

    def max_modulus(self) -> float:
        return float(np.max(np.abs(self.values)))


def eval_on_circle(a: TruncatedSeries, r: float, samples: int = 4096) -> CircleValues:
    """Evaluate at the uniform angles theta_k = 2 pi k / samples on |z| = r.

    Raises TailBoundUnavailable when the series carries no majorant, since
    the sampled maximum would then certify nothing.
    """
    if not 0.0 < r < 1.0:
        raise ArgumentOutOfRange(f"radius {r} outside (0, 1)")
    if samples < 8:
        raise ArgumentOutOfRange(f"need at least 8 samples, got {samples}")
    tail = a.tail_bound(r)
    zs = r * np.exp(2j * np.pi * np.arange(samples) / samples)
    return CircleValues(eval_at(a, zs), tail)


class FunctionRep:
    """Normalized analytic function held in dual coefficient form.

    Stores f(z) = z + a_2 z^2 + ... and z/f(z) = 1 + b_1 z + ... to the
    same truncation order.  The two sides must satisfy
    (f(z)/z) * (z/f(z)) = 1 through degree order-1, within CONSISTENCY_TOL
    per coefficient; the normalization a_0 = 0, a_1 = 1, b_0 = 1 is exact.

    ``built_from`` records which side the instance was constructed from;
    the text round-trip in :mod:`radii_lab.catalog` relies on it.
    """

    __slots__ = ("f", "zoverf", "built_from")

    def __init__(self, f: TruncatedSeries, zoverf: TruncatedSeries, built_from: str):
        if f.order != zoverf.order:
            raise ArgumentOutOfRange("both sides must share one truncation order")
        a = f.coeffs
        b = zoverf.coeffs
        if a[0] != 0 or a[1] != 1:
            raise ArgumentOutOfRange("need a_0 = 0 and a_1 = 1 exactly")
        if b[0] != 1:
            raise ArgumentOutOfRange("need b_0 = 1 exactly")
        n = f.order
        product = np.convolve(a[1:], b[:n])[:n]
        product[0] -= 1.0
        worst = float(np.max(np.abs(product)))
        if worst > CONSISTENCY_TOL:
            raise ArgumentOutOfRange(
                f"dual forms inconsistent: worst product deviation {worst:.3e}"
            )
        object.__setattr__(self, "f", f)
        object.__setattr__(self, "zoverf", zoverf)
        object.__setattr__(self, "built_from", built_from)

    def __setattr__(self, name, value):
        raise AttributeError("FunctionRep is immutable")

    @property
    def order(self) -> int:
        return self.f.order

    @classmethod
    def from_zoverf(
        cls, zoverf: TruncatedSeries, f_majorant: Majorant | None = None
    ) -> "FunctionRep":
        """Build from the z/f side; the f side comes from series division."""
        recip = reciprocal(zoverf)  # = f(z)/z
        a = np.zeros(zoverf.order + 1, dtype=np.complex128)
        a[1:] = recip.coeffs[:-1]
        a[1] = 1.0  # exact normalization; reciprocal already gives 1/b_0 = 1
        return cls(TruncatedSeries(a, f_majorant), zoverf, "zoverf")

    @classmethod
    def from_f(
        cls, f: TruncatedSeries, zoverf_majorant: Majorant | None = None
    ) -> "FunctionRep":
        """Build from the f side; z/f comes from series division.

        When f is polynomial-flagged, f/z is known exactly to full order and
        the result keeps f's order; otherwise the order drops by one.
        """
        a = f.coeffs
        if a[0] != 0 or a[1] != 1:
            raise ArgumentOutOfRange("need a_0 = 0 and a_1 = 1 exactly")
        if isinstance(f.majorant, PolynomialMajorant):
            over_z = TruncatedSeries.polynomial(a[1:], f.order)
            f_side = f
        else:
            over_z = TruncatedSeries(a[1:])  # order drops by one
            f_side = f.truncated(f.order - 1)
        b = reciprocal(over_z)
        b_arr = np.array(b.coeffs)
        b_arr[0] = 1.0
        return cls(f_side, TruncatedSeries(b_arr, zoverf_majorant), "f")

    def __repr__(self) -> str:
        return f"FunctionRep(order={self.order}, b1={self.zoverf.coefficient(min(1, self.order))})"


def dilate(rep: FunctionRep, r: float) -> FunctionRep:
    """Representation of f(rz)/r: b_n -> b_n r^n and a_n -> a_n r^(n-1)."""
    if not 0.0 < r < 1.0:
        raise ArgumentOutOfRange(f"dilation radius {r} outside (0, 1)")
    n = np.arange(rep.order + 1)
    powers = r**n
    b = rep.zoverf.coeffs * powers
    a = rep.f.coeffs * powers / r

    def scaled(maj: Majorant | None, side: str) -> Majorant | None:
        if isinstance(maj, PowerGeometricMajorant):
            scale = maj.scale / r if side == "f" else maj.scale
            return PowerGeometricMajorant(scale, maj.power, maj.ratio * r)
        return maj

    a_arr = np.array(a)
    a_arr[1] = 1.0
    b_arr = np.array(b)
    b_arr[0] = 1.0
    return FunctionRep(
        TruncatedSeries(a_arr, scaled(rep.f.majorant, "f")),
        TruncatedSeries(b_arr, scaled(rep.zoverf.majorant, "zoverf")),
        rep.built_from,
    )


def integrate_t_over_f(rep: FunctionRep) -> TruncatedSeries:
    """Coefficients of int_0^z (t/f(t)) dt = z + sum_{n>=1} b_n z^(n+1)/(n+1)."""
    b = rep.zoverf.coeffs
    out = np.zeros(rep.order + 2, dtype=np.complex128)
    out[1:] = b / np.arange(1, rep.order + 2)
    maj = rep.zoverf.majorant
    if isinstance(maj, PolynomialMajorant):
        maj = PolynomialMajorant(maj.degree + 1)
    elif isinstance(maj, PowerGeometricMajorant):
        # |b_{m-1}/m| <= (scale/ratio) (m+1)^power ratio^m for m > order+1.
        maj = PowerGeometricMajorant(maj.scale / maj.ratio, maj.power, maj.ratio)
    return TruncatedSeries(out, maj)
