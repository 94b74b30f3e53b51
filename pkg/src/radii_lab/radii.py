"""Catalog of radius equations, a bracketed smallest-root solver, closed
forms, and sharpness witnesses.

Every entry evaluates a function G(r) on (0, 1) with the sign convention
G < 0 on the good region, so the radius in question is the smallest root.
``solve_radius`` locates the first sign change with a 1e-3 step scan and
then bisects; bisection is the contract-bearing solver because it cannot
escape its bracket.

The t4 family evaluates square roots whose radicands are provably positive
on (0, 1); defensively, a negative radicand is clamped to zero and the
event is recorded (see :func:`radicand_clamp_events`).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from . import transforms
from .catalog import catalog_function
from .errors import (
    NoBracketFound,
    NoClosedForm,
    NoWitness,
    ParamOutOfRange,
    UnknownEquation,
)
from .series import FunctionRep
from .special import polylog

_SQRT2 = math.sqrt(2.0)

_SCAN_STEP = 1e-3
_BISECT_MAX_ITER = 200

_clamp_events: list[tuple[str, float, float]] = []


def radicand_clamp_events() -> tuple[tuple[str, float, float], ...]:
    """Recorded (eq_id, r, radicand) triples where a radicand went negative."""
    return tuple(_clamp_events)


def reset_radicand_clamp_log() -> None:
    _clamp_events.clear()


def _safe_sqrt(radicand: float, eq_id: str, r: float) -> float:
    if radicand < 0.0:
        _clamp_events.append((eq_id, r, radicand))
        radicand = 0.0
    return math.sqrt(radicand)


def _tail_cubes_bound(r: float, eq_id: str) -> float:
    """sqrt of sum_{n>=4} (n-1)^3 r^(2n) in closed form."""
    radicand = -8.0 * r**10 + 31.0 * r**8 - 44.0 * r**6 + 27.0 * r**4
    return r * r * _safe_sqrt(radicand, eq_id, r) / (1.0 - r * r) ** 2


def _tail_quartic_bound(r: float, eq_id: str) -> float:
    """sqrt of the closed form used for sum_{n>=4} (n-1)^4 r^(2n) / (n-2)."""
    x = r * r
    radicand = x**4 * (15.0 - 20.0 * x + 15.0 * x**2 - 4.0 * x**3) / (1.0 - x) ** 4 - x * x * (
        math.log1p(-x) + x
    )
    return _safe_sqrt(radicand, eq_id, r)


def _tail_squares_sum(r: float) -> float:
    """sum_{n>=4} (n-1)^2 r^n = r^4 (4r^2 - 11r + 9)/(1-r)^3."""
    return r**4 * (4.0 * r**2 - 11.0 * r + 9.0) / (1.0 - r) ** 3


def th9i_envelope(r: float) -> float:
    """r^2 times the squared tail envelope sum_{n>=2} (n-1)^3 r^(2n)/(n+1)^2.

    Nonnegative and nondecreasing on [0, 1).
    """
    x = r * r
    li2 = polylog(2, x)
    return (
        (-4.0 * x + 4.0 * x * x + x**3) / (1.0 - x) ** 2
        - 12.0 * math.log1p(-x)
        - 8.0 * li2.value
    )


def th9i_monotone_core(r: float) -> float:
    """Auxiliary whose nonnegativity makes :func:`th9i_envelope` increasing."""
    x = r * r
    num = 8.0 * x - 20.0 * x**2 + 15.0 * x**3 - x**4
    den = 8.0 - 24.0 * x + 24.0 * x**2 - 8.0 * x**3
    return num / den + math.log1p(-x)


def _th9i_equation(r: float) -> float:
    x = r * r
    li2 = polylog(2, x)
    return (
        (-4.0 + 4.0 * x + x * x) / (1.0 - x) ** 2
        - (12.0 / x) * math.log1p(-x)
        - (8.0 / x) * li2.value
        - 1.0
    )


@dataclass(frozen=True)
class SharpnessWitness:
    """Extremal function attaining the threshold exactly at the radius."""

    description: str
    side: int  # evaluation point z = side * r
    quantity: Callable[[float], float]  # closed-form value at |z| = r
    build: Callable[[int], FunctionRep]
    threshold: float


@dataclass(frozen=True)
class RadiusEquation:
    """One catalog entry; ``evaluate`` is G(r) with G < 0 inside the radius."""

    eq_id: str
    params: dict
    evaluate: Callable[[float], float]
    bracket: tuple[float, float] | None
    expected_root: float | None
    tolerance: float
    closed_form_value: float | None = None
    witness: SharpnessWitness | None = None


@dataclass(frozen=True)
class SharpnessReport:
    eq_id: str
    root: float
    threshold: float
    at_root: float
    below_root: float
    above_root: float
    passed: bool


def _check_level(value: float, name: str) -> float:
    if not value > 0:
        raise ParamOutOfRange(f"{name} must be positive, got {value}")
    return float(value)


def _witness_square_over(name: str) -> Callable[[int], FunctionRep]:
    return lambda order: transforms.square_over(catalog_function(name, order))


_WITNESSES = {
    "th8i": SharpnessWitness(
        "z(1-z)^2, the square-over image of the Koebe function",
        +1,
        lambda r: (3.0 * r**2 + 4.0 * r**3 - r**4) / (1.0 - r) ** 4,
        _witness_square_over("koebe"),
        1.0,
    ),
    "th8ii": SharpnessWitness(
        "z(1-z), the square-over image of z/(1-z)",
        +1,
        lambda r: r * r * (1.0 + r) / (1.0 - r) ** 3,
        _witness_square_over("z/(1-z)"),
        1.0,
    ),
    "th8iii": SharpnessWitness(
        "z(1-z)^2/(1-z/2), the square-over image of z(1-z/2)/(1-z)^2",
        +1,
        lambda r: (2.0 * r**2 + 2.0 * r**3 - r**4) / (1.0 - r) ** 4,
        _witness_square_over("convex-half"),
        1.0,
    ),
    "t1": SharpnessWitness(
        "quotient product of the Koebe function with itself, at z = -r",
        -1,
        lambda r: 9.0 * r**4 + 16.0 * r**3 + 6.0 * r**2,
        lambda order: transforms.quotient_product(
            catalog_function("koebe", order), catalog_function("koebe", order)
        ),
        1.0,
    ),
    "bohrG1": SharpnessWitness(
        "partial-sum quantity |f(r)| + tail for f = z + z^2/2",
        +1,
        lambda r: r + r * r,
        lambda order: catalog_function("f1", order),
        0.5,
    ),
    "bohrG2": SharpnessWitness(
        "majorant quantity r + tail for f = z + z^2/2",
        +1,
        lambda r: r + 0.5 * r * r,
        lambda order: catalog_function("f1", order),
        0.5,
    ),
    "bohrG3": SharpnessWitness(
        "derivative-augmented quantity for f = z + z^2/2",
        +1,
        lambda r: 2.0 * r + 2.0 * r * r,
        lambda order: catalog_function("f1", order),
        0.5,
    ),
}


def _reject_unknown(params: dict, allowed: set[str], eq_id: str) -> None:
    extra = set(params) - allowed
    if extra:
        raise ParamOutOfRange(f"{eq_id} does not take parameters {sorted(extra)}")


def _build_theo(params: dict) -> RadiusEquation:
    _reject_unknown(params, {"lam"}, "theo")
    lam = _check_level(params.get("lam", 1.0), "lam")

    def evaluate(r: float) -> float:
        return r**4 * (r**4 + 4.0 * r**2 + 1.0) - lam**2 * (1.0 - r * r) ** 4

    expected = 0.557384 if lam == 1.0 else None
    return RadiusEquation(
        "theo", {"lam": lam}, evaluate, _scan_bracket(evaluate), expected, 5e-5
    )


def _build_t1cor2(params: dict) -> RadiusEquation:
    _reject_unknown(params, {"lam", "lam2", "mu"}, "t1cor2")
    lam = _check_level(params.get("lam", 1.0), "lam")
    lam2 = _check_level(params.get("lam2", 1.0), "lam2")
    mu = _check_level(params.get("mu", 1.0), "mu")
    cross = lam * lam + lam * lam2 + lam2 * lam2

    def evaluate(r: float) -> float:
        return 3.0 * cross * r**4 + (lam + lam2) * r * r - mu

    s = lam + lam2
    closed = math.sqrt((-s + math.sqrt(s * s + 12.0 * mu * cross)) / (6.0 * cross))
    closed = closed if closed < 1.0 else None
    return RadiusEquation(
        "t1cor2",
        {"lam": lam, "lam2": lam2, "mu": mu},
        evaluate,
        _scan_bracket(evaluate),
        closed,
        1e-10,
        closed_form_value=closed,
    )


def _fixed(
    eq_id: str,
    evaluate: Callable[[float], float],
    bracket: tuple[float, float],
    expected: float | None,
    tolerance: float = 5e-5,
    closed: float | None = None,
) -> Callable[[dict], RadiusEquation]:
    def build(params: dict) -> RadiusEquation:
        if params:
            raise ParamOutOfRange(f"{eq_id} takes no parameters, got {sorted(params)}")
        return RadiusEquation(
            eq_id, {}, evaluate, bracket, expected, tolerance,
            closed_form_value=closed, witness=_WITNESSES.get(eq_id),
        )

    return build


def _t4_family(eq_id: str, quad: float, cubic: float, quartic_weight: float):
    def evaluate(r: float) -> float:
        value = (
            quad * r * r
            + cubic * r**3
            + 2.0 * _tail_cubes_bound(r, eq_id)
            + _tail_squares_sum(r)
            - 1.0
        )
        if quartic_weight:
            value += quartic_weight * _tail_quartic_bound(r, eq_id)
        return value

    return evaluate


_BUILDERS: dict[str, Callable[[dict], RadiusEquation]] = {
    "theo": _build_theo,
    "theo1": _fixed(
        "theo1",
        lambda r: 8.0 * r**6 - 5.0 * r**4 + 4.0 * r**2 - 1.0,
        (0.5, 0.6),
        0.557384,
    ),
    "dilationM": _fixed(
        "dilationM",
        lambda r: r**4 + r**2 - 1.0,
        (0.7, 0.85),
        0.786151,
        closed=math.sqrt((math.sqrt(5.0) - 1.0) / 2.0),
    ),
    "th8i": _fixed(
        "th8i",
        lambda r: r * r * (3.0 + 4.0 * r - r * r) - (1.0 - r) ** 4,
        (0.2, 0.3),
        2.0 - math.sqrt(3.0),
        tolerance=1e-10,
        closed=2.0 - math.sqrt(3.0),
    ),
    "th8ii": _fixed(
        "th8ii",
        lambda r: -(1.0 - 3.0 * r + 2.0 * r**2 - 2.0 * r**3),
        (0.35, 0.45),
        0.396608,
    ),
    "th8iii": _fixed(
        "th8iii",
        lambda r: -(2.0 * r**4 - 6.0 * r**3 + 4.0 * r**2 - 4.0 * r + 1.0),
        (0.25, 0.35),
        0.304725,
    ),
    "th8iv": _fixed(
        "th8iv",
        lambda r: 3.0 * r - 2.0 * r**2 + (r**2 - 5.0 * r + 4.0) * math.log1p(-r),
        (0.7, 0.8),
        0.75085,
        tolerance=1e-4,
    ),
    "th9i": _fixed("th9i", _th9i_equation, (0.7, 0.85), 0.7829, tolerance=1e-4),
    "t1": _fixed(
        "t1",
        lambda r: 9.0 * r**4 + 16.0 * r**3 + 6.0 * r**2 - 1.0,
        (0.25, 0.35),
        0.294876,
    ),
    "t1corM2": _fixed(
        "t1corM2",
        lambda r: 9.0 * r**4 + 2.0 * r**2 - 1.0,
        (0.45, 0.55),
        math.sqrt(math.sqrt(10.0) - 1.0) / 3.0,
        tolerance=1e-10,
        closed=math.sqrt(math.sqrt(10.0) - 1.0) / 3.0,
    ),
    "t1cor2": _build_t1cor2,
    "t4": _fixed(
        "t4",
        _t4_family("t4", 6.0, 4.0 * (_SQRT2 + 4.0), 4.0),
        (0.2, 0.3),
        0.260985,
    ),
    "t4B": _fixed(
        "t4B",
        _t4_family("t4B", 2.0, 4.0 * (_SQRT2 + 2.0), 2.0),
        (0.25, 0.35),
        0.313967,
    ),
    "t4C": _fixed(
        "t4C",
        _t4_family("t4C", 2.0, 4.0 * _SQRT2, 0.0),
        (0.3, 0.4),
        0.352049,
    ),
    "bohrG1": _fixed(
        "bohrG1",
        lambda r: 2.0 * r + 2.0 * r**2 - 1.0,
        (0.3, 0.4),
        (math.sqrt(3.0) - 1.0) / 2.0,
        tolerance=1e-10,
        closed=(math.sqrt(3.0) - 1.0) / 2.0,
    ),
    "bohrG2": _fixed(
        "bohrG2",
        lambda r: 2.0 * r + r**2 - 1.0,
        (0.35, 0.45),
        math.sqrt(2.0) - 1.0,
        tolerance=1e-10,
        closed=math.sqrt(2.0) - 1.0,
    ),
    "bohrG3": _fixed(
        "bohrG3",
        lambda r: 4.0 * r + 4.0 * r**2 - 1.0,
        (0.15, 0.25),
        (math.sqrt(2.0) - 1.0) / 2.0,
        tolerance=1e-10,
        closed=(math.sqrt(2.0) - 1.0) / 2.0,
    ),
}


def equation_ids() -> tuple[str, ...]:
    return tuple(sorted(_BUILDERS))


def get_equation(eq_id: str, **params) -> RadiusEquation:
    try:
        builder = _BUILDERS[eq_id]
    except KeyError:
        raise UnknownEquation(eq_id) from None
    return builder(params)


def _scan_bracket(evaluate: Callable[[float], float]) -> tuple[float, float] | None:
    prev_r = _SCAN_STEP
    prev_v = evaluate(prev_r)
    if prev_v == 0.0:
        return (prev_r, prev_r)
    k = 2
    while (r := k * _SCAN_STEP) < 1.0:
        v = evaluate(r)
        if prev_v * v <= 0.0:
            return (prev_r, r)
        prev_r, prev_v = r, v
        k += 1
    return None


def eval_equation(eq_id: str, r: float, **params) -> float:
    """G(r) for the registered equation; deterministic in all arguments."""
    if not 0.0 < r < 1.0:
        raise ParamOutOfRange(f"radius {r} outside (0, 1)")
    return get_equation(eq_id, **params).evaluate(r)


def solve_radius(eq_id: str, tol: float = 1e-12, **params) -> float:
    """Smallest root of the registered equation in (0, 1), to absolute tol.

    A left-to-right scan with step 1e-3 finds the first sign change (several
    catalog functions are not monotone); bisection then narrows the bracket.
    """
    if tol < 1e-14:
        raise ParamOutOfRange(f"tolerance {tol} below bisection resolution 1e-14")
    entry = get_equation(eq_id, **params)
    bracket = _scan_bracket(entry.evaluate)
    if bracket is None:
        raise NoBracketFound(f"{eq_id}: no sign change on the (0, 1) scan grid")
    lo, hi = bracket
    if lo == hi:
        return lo
    flo = entry.evaluate(lo)
    for _ in range(_BISECT_MAX_ITER):
        mid = 0.5 * (lo + hi)
        fm = entry.evaluate(mid)
        if fm == 0.0:
            return mid
        if flo * fm < 0.0:
            hi = mid
        else:
            lo, flo = mid, fm
        if hi - lo <= tol:
            break
    return 0.5 * (lo + hi)


def closed_form_radius(eq_id: str, **params) -> float:
    """Exact algebraic root evaluated in double precision, where one exists."""
    entry = get_equation(eq_id, **params)
    if entry.closed_form_value is None:
        raise NoClosedForm(f"{eq_id} has no registered closed-form root")
    return entry.closed_form_value


def root_uncertainty(eq_id: str, root: float, **params) -> float | None:
    """Propagated evaluation uncertainty at the root (dilogarithm entry only)."""
    if eq_id != "th9i":
        return None
    entry = get_equation(eq_id, **params)
    err = (8.0 / root**2) * polylog(2, root * root).abs_error_bound
    h = 1e-6
    slope = (entry.evaluate(root + h) - entry.evaluate(root - h)) / (2.0 * h)
    return err / abs(slope) if slope else math.inf


def verify_sharpness(eq_id: str, **params) -> SharpnessReport:
    """Check the witness quantity just below and just above the radius.

    Passes when the quantity stays within threshold + 1e-9 at root - 1e-6,
    exceeds the threshold at root + 1e-3, and matches the threshold at the
    root to 1e-8.
    """
    entry = get_equation(eq_id, **params)
    if entry.witness is None:
        raise NoWitness(f"{eq_id} carries no sharpness witness")
    w = entry.witness
    root = (
        entry.closed_form_value
        if entry.closed_form_value is not None
        else solve_radius(eq_id, 1e-12, **params)
    )
    at_root = w.quantity(root)
    below = w.quantity(root - 1e-6)
    above = w.quantity(root + 1e-3)
    passed = (
        below <= w.threshold + 1e-9
        and above > w.threshold
        and abs(at_root - w.threshold) <= 1e-8
    )
    return SharpnessReport(eq_id, root, w.threshold, at_root, below, above, passed)
