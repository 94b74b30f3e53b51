"""Verification records: one row per reproduced constant or checked property.

Every record compares a computed value against a registered expectation at a
fixed tolerance.  For inequality-style items the ``computed`` field is the
checked quantity and ``abs_diff`` is the violation magnitude (zero when the
inequality holds), so the uniform rule pass <=> abs_diff <= tolerance applies
to every row.

``direct_defect_series`` rebuilds each class's defining expression from raw
series arithmetic (products, reciprocals, derivatives).  It shares no code
with the weighted-coefficient formulas in :mod:`radii_lab.classes`, which is
what makes the "oracle" row an actual cross-check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import bohr, radii, transforms
from .catalog import CATALOG_NAMES, S_Z_NAMES, catalog_function
from .classes import (
    CERTIFIED_INSIDE,
    ClassId,
    defect_series,
    generate_M_member,
    quartic_necessary,
    sup_defect,
)
from .series import (
    FunctionRep,
    TruncatedSeries,
    default_order,
    derivative,
    eval_at,
    linear_combine,
    mul,
    reciprocal,
)
from .special import PI2_OVER_6, inverse_square_tail, log_moment, polylog

_ROOT_ITEMS = ("theo1", "dilationM", "th8ii", "th8iii", "th8iv", "th9i", "t1", "t4", "t4B", "t4C")
_CLOSED_ITEMS = ("th8i", "dilationM", "t1corM2", "bohrG1", "bohrG2", "bohrG3")
_SHARP_ITEMS = ("th8i", "th8ii", "th8iii", "t1", "bohrG1", "bohrG2", "bohrG3")

_SEED = 20240817


@dataclass(frozen=True)
class VerificationRecord:
    item: str
    expected: float
    computed: float
    tolerance: float
    provenance: str
    abs_diff: float = field(init=False)
    passed: bool = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "abs_diff", abs(self.computed - self.expected))
        object.__setattr__(self, "passed", self.abs_diff <= self.tolerance)




def direct_defect_series(rep: FunctionRep, tag: str) -> TruncatedSeries:
    """The defining expression of a class, built from generic series arithmetic.

    M:     z^2 (z/f)'' + f'(z) (z/f)^2 - 1
    U:     f'(z) (z/f)^2 - 1
    P:     (z/f)''
    Omega: z f'(z) - f(z)
    """
    order = rep.order
    b = rep.zoverf
    a = rep.f
    one = TruncatedSeries.polynomial([1.0], order)
    z2 = TruncatedSeries.monomial(2, order)
    if tag == "M":
        curvature = mul(z2, derivative(derivative(b)))
        slope = mul(derivative(a), mul(b, b))
        return linear_combine(1.0, linear_combine(1.0, curvature, 1.0, slope), -1.0, one)
    if tag == "U":
        return linear_combine(1.0, mul(derivative(a), mul(b, b)), -1.0, one)
    if tag == "P":
        return derivative(derivative(b))
    if tag == "Omega":
        z1 = TruncatedSeries.monomial(1, order)
        return linear_combine(1.0, mul(z1, derivative(a)), -1.0, a)
    raise ValueError(f"no defining expression for {tag!r}")


def _root_records(order: int) -> list[VerificationRecord]:
    records = []
    for eq_id in _ROOT_ITEMS:
        entry = radii.get_equation(eq_id)
        root = radii.solve_radius(eq_id, 1e-12)
        records.append(
            VerificationRecord(
                f"root:{eq_id}", entry.expected_root, root, entry.tolerance, "stated decimal"
            )
        )
    return records


def _closed_form_records(order: int) -> list[VerificationRecord]:
    records = []
    for eq_id in _CLOSED_ITEMS:
        closed = radii.closed_form_radius(eq_id)
        root = radii.solve_radius(eq_id, 1e-12)
        records.append(
            VerificationRecord(f"closedform:{eq_id}", closed, root, 1e-10, "algebraic root")
        )
    return records


def _special_records(order: int) -> list[VerificationRecord]:
    records = [
        VerificationRecord(
            "special:inverse-squares",
            PI2_OVER_6 - 1.25,
            inverse_square_tail(3),
            1e-9,
            "pi^2/6 - 5/4",
        )
    ]
    worst = max(abs(log_moment(n) * (n - 1) ** 2 - 1.0) for n in range(2, 65))
    records.append(
        VerificationRecord("special:log-moment", 0.0, worst, 1e-12, "(n-1)^-2 identity")
    )
    dev = 0.0
    for x in np.arange(0.1, 0.95, 0.1):
        lhs = polylog(2, float(x)).value + polylog(2, float(1.0 - x)).value
        rhs = PI2_OVER_6 - math.log(x) * math.log1p(-x)
        dev = max(dev, abs(lhs - rhs))
    records.append(
        VerificationRecord("special:li2-reflection", 0.0, dev, 1e-10, "reflection identity")
    )
    return records


def _counterexample_records(order: int) -> list[VerificationRecord]:
    cex_a = catalog_function("cexA", order)
    m1 = ClassId("M")

    def overshoot(r: float) -> float:
        return sup_defect(cex_a, m1, r, samples=512).sup_sampled - 1.0

    lo, hi = 0.5, 0.999
    for _ in range(60):
        mid = 0.5 * (lo + hi)
        if overshoot(mid) > 0.0:
            hi = mid
        else:
            lo = mid
    crossing = 0.5 * (lo + hi)
    records = [
        VerificationRecord(
            "counterexample:cexA-crossing", 0.75 ** (1.0 / 3.0), crossing, 1e-5, "(3/4)^(1/3)"
        )
    ]
    cert = quartic_necessary(catalog_function("cexB", order))
    records.append(
        VerificationRecord(
            "counterexample:cexB-quartic", 4.0, cert.value, 1e-12, "(3-1)^4 (1/2)^2"
        )
    )
    return records


def _sharpness_records(order: int) -> list[VerificationRecord]:
    records = []
    for eq_id in _SHARP_ITEMS:
        report = radii.verify_sharpness(eq_id)
        rec = VerificationRecord(
            f"sharpness:{eq_id}",
            report.threshold,
            report.at_root,
            1e-8,
            "witness value at the radius",
        )
        if not (report.below_root <= report.threshold + 1e-9 and report.above_root > report.threshold):
            rec = VerificationRecord(
                f"sharpness:{eq_id}", report.threshold, math.inf, 1e-8, "crossing check failed"
            )
        records.append(rec)
    return records


def _sz_records(order: int) -> list[VerificationRecord]:
    records = []
    for name in S_Z_NAMES:
        rep = catalog_function(name, order)
        overshoot = 0.0
        inside = True
        for tag in ("M", "U"):
            report = sup_defect(rep, ClassId(tag), 0.999)
            inside &= report.verdict == CERTIFIED_INSIDE
            overshoot = max(overshoot, report.sup_sampled + report.tail_bound - 1.0)
        violation = max(overshoot, 0.0) if inside else max(overshoot, 1.0)
        records.append(
            VerificationRecord(f"sz:{name}", 0.0, violation, 0.0, "defect within 1 at r = 0.999")
        )
    return records


def _bohr_records(order: int) -> list[VerificationRecord]:
    f1 = catalog_function("f1", order)
    root2 = math.sqrt(2.0)
    root3 = math.sqrt(3.0)
    quantities = {
        "bohr:f1-bohr": bohr.bohr_quantity(f1, root2 - 1.0).quantity,
        "bohr:f1-rogosinski": bohr.rogosinski_quantity(f1, (root3 - 1.0) / 2.0).quantity,
        "bohr:f1-improved": bohr.improved_quantity(f1, (root2 - 1.0) / 2.0).quantity,
    }
    records = [
        VerificationRecord(item, 0.5, value, 1e-10, "boundary equality")
        for item, value in sorted(quantities.items())
    ]
    records.append(
        VerificationRecord("bohr:distance-f1", 0.5, bohr.distance_for_f1(), 1e-6, "boundary minimum")
    )
    return records


def _oracle_records(order: int) -> list[VerificationRecord]:
    rng = np.random.default_rng(_SEED)
    angles = rng.uniform(0.0, 2.0 * math.pi, size=512)
    zs = 0.7 * np.exp(1j * angles)
    worst = 0.0
    for name in CATALOG_NAMES:
        rep = catalog_function(name, order)
        for tag in ("M", "U", "P", "Omega"):
            fast = eval_at(defect_series(rep, ClassId(tag)), zs)
            slow = eval_at(direct_defect_series(rep, tag), zs)
            worst = max(worst, float(np.max(np.abs(fast - slow))))
    return [VerificationRecord("oracle:defect-equivalence", 0.0, worst, 1e-9, "series-arithmetic rebuild")]


def _transform_records(order: int) -> list[VerificationRecord]:
    records = []
    # Omitted-value invariance: only b_1 moves, so every defect with weights
    # supported on n >= 2 is bitwise unchanged.
    worst = 0.0
    for name in ("koebe", "z/(1-z)", "cexA"):
        rep = catalog_function(name, order)
        moved = transforms.omitted_value(rep, 2.0 + 1.0j)
        for tag in ("M", "U", "P"):
            delta = defect_series(rep, ClassId(tag)).coeffs - defect_series(moved, ClassId(tag)).coeffs
            worst = max(worst, float(np.max(np.abs(delta))))
    records.append(VerificationRecord("transform:omitted-invariance", 0.0, worst, 1e-14, "b1-only shift"))

    f = catalog_function("koebe", order)
    g = catalog_function("z/(1-z)", order)
    df = defect_series(f, ClassId("M")).coeffs
    dg = defect_series(g, ClassId("M")).coeffs
    worst = 0.0
    for t in np.arange(0.0, 1.0001, 0.1):
        combined = transforms.harmonic_combination(f, g, float(t))
        delta = defect_series(combined, ClassId("M")).coeffs - ((1.0 - t) * dg + t * df)
        worst = max(worst, float(np.max(np.abs(delta))))
    records.append(VerificationRecord("transform:harmonic-linearity", 0.0, worst, 1e-12, "defect linearity"))

    rng = np.random.default_rng(_SEED + 1)
    worst = 0.0
    for _ in range(20):
        w = _random_schwarz_quadratic(rng, order)
        lam = float(rng.uniform(0.3, 1.0))
        member = generate_M_member(w, lam=lam, b1=complex(*rng.uniform(-0.7, 0.7, 2)))
        delta = defect_series(member, ClassId("M", lam)).coeffs - lam * w.coeffs
        worst = max(worst, float(np.max(np.abs(delta))))
    records.append(VerificationRecord("transform:m-generator-roundtrip", 0.0, worst, 1e-12, "defect equals data"))
    return records


def _random_schwarz_quadratic(
    rng: np.random.Generator, order: int, degree: int = 16, total: float | None = None
) -> TruncatedSeries:
    """Random polynomial w = z^2 v(z) with sum |v_k| <= 1, so |w(z)| <= |z|^2."""
    raw = rng.normal(size=degree - 1) + 1j * rng.normal(size=degree - 1)
    budget = total if total is not None else float(rng.uniform(0.2, 0.95))
    raw *= budget / np.sum(np.abs(raw))
    coeffs = np.zeros(degree + 1, dtype=np.complex128)
    coeffs[2:] = raw
    return TruncatedSeries.polynomial(coeffs, order)


def run_all(order: int | None = None) -> list[VerificationRecord]:
    """Every verification record, sorted by item id."""
    if order is None:
        order = default_order()
    records: list[VerificationRecord] = []
    for group in (
        _root_records,
        _closed_form_records,
        _special_records,
        _counterexample_records,
        _sharpness_records,
        _sz_records,
        _bohr_records,
        _oracle_records,
        _transform_records,
    ):
        records.extend(group(order))
    return sorted(records, key=lambda rec: rec.item)
