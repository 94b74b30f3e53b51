"""Defect operators, membership certificates, and member generators.

The classes handled here are defined by inequalities on the unit disk:

  M(lam):    |z^2 (z/f)'' + f'(z) (z/f)^2 - 1| <= lam
  U(lam):    |f'(z) (z/f)^2 - 1| <= lam
  P(lam):    |(z/f)''| <= 2 lam
  Omega:     |z f'(z) - f(z)| < 1/2        (strict)
  OmegaA:    sum_{n>=2} (n-1) |a_n| <= 1/2  (coefficient form, sufficient
                                             for Omega)

With z/f = 1 + sum b_n z^n and f = z + sum a_n z^n, each pointwise defect
is itself a power series with explicitly weighted coefficients:

  M:      sum_{n>=2} (n-1)^2 b_n z^n
  U:     -sum_{n>=2} (n-1)   b_n z^n
  P:      sum_{n>=2} n(n-1)  b_n z^(n-2)
  Omega:  sum_{n>=2} (n-1)   a_n z^n

A sampled circle supremum of the defect plus a certified tail bound then
decides membership at a given radius.  Sign convention: b_1 = -f''(0)/2.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import (
    ArgumentOutOfRange,
    NotSchwarzBounded,
    ParamOutOfRange,
    TailBoundUnavailable,
    UnsupportedClass,
)
from .series import (
    FunctionRep,
    Majorant,
    PolynomialMajorant,
    PowerGeometricMajorant,
    TruncatedSeries,
    eval_on_circle,
)
from .special import log_moment

CLASS_TAGS = ("M", "U", "P", "Omega", "OmegaA")

CERTIFIED_INSIDE = "certified_inside"
CERTIFIED_OUTSIDE = "certified_outside"
INCONCLUSIVE = "inconclusive"

# Numerical guard band for strict inequalities and verdicts.
GUARD = 1e-12

_SCHWARZ_SAMPLES = 4096
_SCHWARZ_RADIUS = 0.999


@dataclass(frozen=True)
class ClassId:
    """A class tag plus its level parameter (ignored for Omega and OmegaA)."""

    tag: str
    lam: float = 1.0

    def __post_init__(self):
        if self.tag not in CLASS_TAGS:
            raise ParamOutOfRange(f"unknown class tag {self.tag!r}")
        if not self.lam > 0:
            raise ParamOutOfRange(f"class level must be positive, got {self.lam}")

    @property
    def threshold(self) -> float:
        if self.tag in ("Omega", "OmegaA"):
            return 0.5
        if self.tag == "P":
            return 2.0 * self.lam
        return self.lam


@dataclass(frozen=True)
class DefectReport:
    """Outcome of a sampled defect supremum at one radius."""

    class_id: ClassId
    defect: TruncatedSeries
    radius: float
    sup_sampled: float
    tail_bound: float
    verdict: str


@dataclass(frozen=True)
class Certificate:
    """A coefficient-functional test: value against bound.

    ``sum_sufficient`` holding certifies membership; the two quadratic
    functionals (``area_necessary``, ``quartic_necessary``) failing certifies
    exclusion from the corresponding class.
    """

    kind: str
    value: float
    bound: float
    holds: bool = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "holds", self.value <= self.bound + GUARD)


def _weighted_majorant(maj: Majorant | None, extra_power: int, shift: int = 0) -> Majorant | None:
    """Majorant for defect coefficients weight(n) * c_n with weight <= (n+1)^extra_power.

    ``shift = 2`` covers the second-derivative case d_k = (k+2)(k+1) c_{k+2}:
    (k+2)(k+1) <= 2 (k+1)^2 and (k+3)^p <= 3^p (k+1)^p give
    |d_k| <= 2 * 3^p * scale * ratio^2 * (k+1)^(p+2) ratio^k.
    """
    if maj is None:
        return None
    if isinstance(maj, PolynomialMajorant):
        return PolynomialMajorant(max(maj.degree - shift, 0))
    if shift == 0:
        return maj.lifted(extra_power)
    return PowerGeometricMajorant(
        2.0 * 3**maj.power * maj.scale * maj.ratio**shift,
        maj.power + 2,
        maj.ratio,
    )


def defect_series(rep: FunctionRep, class_id: ClassId) -> TruncatedSeries:
    """Coefficient form of the class's defining expression for this function."""
    n = np.arange(rep.order + 1, dtype=np.float64)
    if class_id.tag == "M":
        coeffs = (n - 1) ** 2 * rep.zoverf.coeffs
        coeffs[:2] = 0.0
        return TruncatedSeries(coeffs, _weighted_majorant(rep.zoverf.majorant, 2))
    if class_id.tag == "U":
        coeffs = -(n - 1) * rep.zoverf.coeffs
        coeffs[:2] = 0.0
        return TruncatedSeries(coeffs, _weighted_majorant(rep.zoverf.majorant, 1))
    if class_id.tag == "P":
        if rep.order < 2:
            return TruncatedSeries([0.0], PolynomialMajorant(0))
        coeffs = (n * (n - 1) * rep.zoverf.coeffs)[2:]
        return TruncatedSeries(coeffs, _weighted_majorant(rep.zoverf.majorant, 2, shift=2))
    if class_id.tag == "Omega":
        coeffs = (n - 1) * rep.f.coeffs
        coeffs[:2] = 0.0
        return TruncatedSeries(coeffs, _weighted_majorant(rep.f.majorant, 1))
    raise UnsupportedClass(f"{class_id.tag} has no pointwise defect series")


def sup_defect(
    rep: FunctionRep, class_id: ClassId, r: float, samples: int = 4096
) -> DefectReport:
    """Sample the defect on |z| = r and certify a verdict.

    ``certified_outside`` needs one sample beyond the threshold by more than
    the guard band; ``certified_inside`` needs sampled sup plus tail within
    the threshold (strictly within, minus the guard band, for Omega).
    Anything else is inconclusive.
    """
    defect = defect_series(rep, class_id)
    if defect.majorant is None:
        raise TailBoundUnavailable(
            f"no tail majorant registered for the {class_id.tag} defect of this function"
        )
    circle = eval_on_circle(defect, r, samples)
    sup = circle.max_modulus()
    threshold = class_id.threshold
    if sup > threshold + GUARD:
        verdict = CERTIFIED_OUTSIDE
    else:
        inside_limit = threshold - GUARD if class_id.tag == "Omega" else threshold
        verdict = CERTIFIED_INSIDE if sup + circle.tail_bound <= inside_limit else INCONCLUSIVE
    return DefectReport(class_id, defect, r, sup, circle.tail_bound, verdict)


def _abs_sum_with_tail(
    coeffs: np.ndarray, weights: np.ndarray, maj: Majorant | None, lifted_power: int
) -> float:
    """sum weights*|coeffs| over the stored range plus the tail at radius 1.

    Infinite when the majorant cannot control the weighted tail; raises when
    no majorant is registered at all.
    """
    if maj is None:
        raise TailBoundUnavailable("no coefficient majorant registered")
    finite = float(np.sum(weights * np.abs(coeffs)))
    tail = _weighted_majorant(maj, lifted_power)
    return finite + tail.tail(1.0, coeffs.size - 1)


def certificate_sufficient(rep: FunctionRep, class_id: ClassId) -> Certificate:
    """Coefficient-sum sufficient condition for M(lam) or OmegaA.

    M(lam):  sum (n-1)^2 |b_n| <= lam;  OmegaA:  sum (n-1) |a_n| <= 1/2.
    Failure of either sum is not exclusion; these are one-sided tests.
    """
    n = np.arange(rep.order + 1, dtype=np.float64)
    if class_id.tag == "M":
        weights = (n - 1) ** 2
        weights[:2] = 0.0
        value = _abs_sum_with_tail(rep.zoverf.coeffs, weights, rep.zoverf.majorant, 2)
        return Certificate("sum_sufficient", value, class_id.lam)
    if class_id.tag == "OmegaA":
        weights = n - 1
        weights[:2] = 0.0
        value = _abs_sum_with_tail(rep.f.coeffs, weights, rep.f.majorant, 1)
        return Certificate("sum_sufficient", value, 0.5)
    raise UnsupportedClass(f"no coefficient-sum sufficient condition for {class_id.tag}")


def area_functional(rep: FunctionRep, mu: float) -> Certificate:
    """Area-theorem functional sum_{n>=1} (n - mu) |b_n|^2 against the bound mu.

    Valid as a necessary condition when (z/f)^mu = 1 + sum b_n z^n for a
    univalent f; with mu = 1 it applies directly to the stored z/f side.
    """
    if not mu > 0:
        raise ParamOutOfRange(f"area parameter must be positive, got {mu}")
    n = np.arange(rep.order + 1, dtype=np.float64)
    weights = n - mu
    weights[0] = 0.0
    sq = np.abs(rep.zoverf.coeffs) ** 2
    finite = float(np.sum(weights * sq))
    maj = rep.zoverf.majorant
    if isinstance(maj, PowerGeometricMajorant):
        # (n - mu)|b_n|^2 <= scale^2 (n+1)^(2p+1) ratio^(2n).
        tail = PowerGeometricMajorant(maj.scale**2, 2 * maj.power + 1, maj.ratio**2)
        finite += tail.tail(1.0, rep.order)
    elif maj is None:
        raise TailBoundUnavailable("no coefficient majorant registered")
    return Certificate("area_necessary", finite, mu)


def quartic_necessary(rep: FunctionRep) -> Certificate:
    """Necessary condition for M(1): sum_{n>=2} (n-1)^4 |b_n|^2 <= 1.

    A failing certificate excludes the function from M(1).
    """
    n = np.arange(rep.order + 1, dtype=np.float64)
    weights = (n - 1) ** 4
    weights[:2] = 0.0
    sq = np.abs(rep.zoverf.coeffs) ** 2
    finite = float(np.sum(weights * sq))
    maj = rep.zoverf.majorant
    if isinstance(maj, PowerGeometricMajorant):
        tail = PowerGeometricMajorant(maj.scale**2, 2 * maj.power + 4, maj.ratio**2)
        finite += tail.tail(1.0, rep.order)
    elif maj is None:
        raise TailBoundUnavailable("no coefficient majorant registered")
    return Certificate("quartic_necessary", finite, 1.0)


def _sampled_schwarz_sup(w: TruncatedSeries, quadratic: bool) -> float:
    """Max of |w(z)| (or |w(z)|/|z|^2) on the dense check circle, tail included."""
    circle = eval_on_circle(w, _SCHWARZ_RADIUS, _SCHWARZ_SAMPLES)
    sup = circle.max_modulus() + circle.tail_bound
    if quadratic:
        sup /= _SCHWARZ_RADIUS**2
    return sup


def generate_M_member(
    w: TruncatedSeries, lam: float = 1.0, b1: complex = 0.0
) -> FunctionRep:
    """Member of M(lam) from Schwarz data w with w(0) = w'(0) = 0.

    Realizes z/f = 1 - b1 z + lam * sum_{n>=2} w_n z^n / (n-1)^2, the
    coefficientwise form of averaging w against the t^(-2) log(1/t) kernel.
    The M defect of the result is exactly lam * w.
    """
    if not lam > 0:
        raise ParamOutOfRange(f"class level must be positive, got {lam}")
    if abs(b1) > 2.0 + GUARD:
        raise ParamOutOfRange(f"|b1| = {abs(b1)} exceeds the univalence bound 2")
    if w.order < 2 or w.coefficient(0) != 0 or w.coefficient(1) != 0:
        raise NotSchwarzBounded("need w_0 = w_1 = 0 exactly")
    if _sampled_schwarz_sup(w, quadratic=True) > 1.0 + GUARD:
        raise NotSchwarzBounded("sampled sup of |w(z)|/|z|^2 exceeds 1")
    weights = np.zeros(w.order + 1)
    weights[2:] = [lam * log_moment(idx) for idx in range(2, w.order + 1)]
    b = weights * w.coeffs
    b[0] = 1.0
    b[1] = -complex(b1)
    maj = w.majorant
    if isinstance(maj, PowerGeometricMajorant):
        maj = PowerGeometricMajorant(lam * maj.scale, maj.power, maj.ratio)
    return FunctionRep.from_zoverf(TruncatedSeries(b, maj))


def generate_Omega_member(w: TruncatedSeries) -> FunctionRep:
    """Member of Omega from any analytic w with |w| <= 1 on the disk.

    Realizes f = z + (z^2/2) * int_0^1 w(zt) dt, i.e. a_n = w_(n-2)/(2(n-1))
    for n >= 2; the Omega defect z f' - f is then exactly (z^2/2) w.
    """
    if _sampled_schwarz_sup(w, quadratic=False) > 1.0 + GUARD:
        raise NotSchwarzBounded("sampled sup of |w(z)| exceeds 1")
    order = w.order + 2
    a = np.zeros(order + 1, dtype=np.complex128)
    a[1] = 1.0
    a[2:] = w.coeffs / (2.0 * np.arange(1, order))
    maj = w.majorant
    if isinstance(maj, PolynomialMajorant):
        maj = PolynomialMajorant(maj.degree + 2)
    elif isinstance(maj, PowerGeometricMajorant):
        # |a_m| = |w_(m-2)| / (2(m-1)) <= (scale / (2 ratio^2)) (m+1)^power ratio^m.
        maj = PowerGeometricMajorant(maj.scale / (2.0 * maj.ratio**2), maj.power, maj.ratio)
    return FunctionRep.from_f(TruncatedSeries(a, maj))
