"""Named catalog of test functions and the text grammar for function specs.

The catalog covers the nine univalent functions with integer coefficients,
the extremal quadratic z + z^2/2, the close-to-convex sharpness function
z(1 - z/2)/(1 - z)^2, and the two cubic counterexamples with z/f equal to
1 + 2z/3 + z^3/3 and 1 + z/2 + z^3/2.  Each entry registers coefficient
majorants on both sides so that circle suprema and coefficient sums come
with certified tails.

Text grammar accepted by :func:`parse_function_spec`:
  <catalog name>            one of CATALOG_NAMES
  coeffs:a2,a3,...          Taylor coefficients of f from a_2 on
  zoverf:b1,b2,...          coefficients of z/f from b_1 on
"""

from __future__ import annotations

import numpy as np

from .errors import ParseError
from .series import (
    FunctionRep,
    PolynomialMajorant,
    PowerGeometricMajorant,
    TruncatedSeries,
    default_order,
)

CATALOG_NAMES: tuple[str, ...] = (
    "identity",
    "koebe",
    "koebe-neg",
    "z/(1-z)",
    "z/(1+z)",
    "z/(1-z^2)",
    "z/(1+z^2)",
    "z/(1-z+z^2)",
    "z/(1+z+z^2)",
    "f1",
    "convex-half",
    "cexA",
    "cexB",
)

# The nine univalent functions whose Taylor coefficients are all integers.
S_Z_NAMES: tuple[str, ...] = CATALOG_NAMES[:9]

# z/f polynomials for the members that have one; the paired value bounds the
# f-side coefficients: |a_n| <= scale * (n+1)^power (ratio 1 throughout).
_POLY_ZOVERF = {
    "identity": ([1.0], PowerGeometricMajorant(1.0, 0)),
    "koebe": ([1.0, -2.0, 1.0], PowerGeometricMajorant(1.0, 1)),
    "koebe-neg": ([1.0, 2.0, 1.0], PowerGeometricMajorant(1.0, 1)),
    "z/(1-z)": ([1.0, -1.0], PowerGeometricMajorant(1.0, 0)),
    "z/(1+z)": ([1.0, 1.0], PowerGeometricMajorant(1.0, 0)),
    "z/(1-z^2)": ([1.0, 0.0, -1.0], PowerGeometricMajorant(1.0, 0)),
    "z/(1+z^2)": ([1.0, 0.0, 1.0], PowerGeometricMajorant(1.0, 0)),
    # 1/(1-z+z^2) = (1+z)/(1+z^3) and 1/(1+z+z^2) = (1-z)/(1-z^3):
    # the f-side coefficients lie in {-1, 0, 1}.
    "z/(1-z+z^2)": ([1.0, -1.0, 1.0], PowerGeometricMajorant(1.0, 0)),
    "z/(1+z+z^2)": ([1.0, 1.0, 1.0], PowerGeometricMajorant(1.0, 0)),
    # z/f = 1 + 2z/3 + z^3/3 factors through (1+z)(z^2-z+3)/3; partial
    # fractions give f = -(3/5)/(1+z) + (3/5)(z+3)/(z^2-z+3), whose
    # coefficients are bounded by 3/5 + 0.87 * 0.77^n <= 1.5.
    "cexA": ([1.0, 2.0 / 3.0, 0.0, 1.0 / 3.0], PowerGeometricMajorant(1.5, 0)),
    # z/f = 1 + z/2 + z^3/2 factors through (1+z)(z^2-z+2)/2; here
    # f = -(1/2)/(1+z) + (z+2)/(2(z^2-z+2)) with |a_n| <= 1/2 + 0.92 * 0.71^n.
    "cexB": ([1.0, 0.5, 0.0, 0.5], PowerGeometricMajorant(1.5, 0)),
}


def catalog_function(name: str, order: int | None = None) -> FunctionRep:
    """Build a catalog member at the given truncation order."""
    if order is None:
        order = default_order()
    if name in _POLY_ZOVERF:
        b_coeffs, f_majorant = _POLY_ZOVERF[name]
        b = TruncatedSeries.polynomial(b_coeffs, order)
        return FunctionRep.from_zoverf(b, f_majorant=f_majorant)
    if name == "f1":
        # f = z + z^2/2, so z/f = 1/(1 + z/2) with |b_n| = 2^-n.
        a = TruncatedSeries.polynomial([0.0, 1.0, 0.5], order)
        return FunctionRep.from_f(a, zoverf_majorant=PowerGeometricMajorant(1.0, 0, 0.5))
    if name == "convex-half":
        # f = z(1 - z/2)/(1-z)^2:  b_1 = -3/2 and b_n = 2^-n for n >= 2,
        # while a_n = (n+1)/2 <= n+1.
        b = np.zeros(order + 1, dtype=np.complex128)
        b[0] = 1.0
        b[1] = -1.5
        b[2:] = 0.5 ** np.arange(2, order + 1)
        series = TruncatedSeries(b, PowerGeometricMajorant(1.0, 0, 0.5))
        return FunctionRep.from_zoverf(series, f_majorant=PowerGeometricMajorant(1.0, 1))
    raise ParseError(f"unknown function name {name!r}", 0)


def _parse_complex_list(body: str, offset: int) -> list[complex]:
    values: list[complex] = []
    position = offset
    if body.strip() == "":
        return values
    for token in body.split(","):
        stripped = token.strip()
        try:
            values.append(complex(stripped))
        except ValueError:
            raise ParseError(f"bad coefficient {stripped!r}", position) from None
        position += len(token) + 1
    return values


def parse_function_spec(text: str, order: int | None = None) -> FunctionRep:
    """Parse a catalog name, ``coeffs:...``, or ``zoverf:...`` spec string."""
    if order is None:
        order = default_order()
    spec = text.strip()
    if spec in CATALOG_NAMES:
        return catalog_function(spec, order)
    if spec.startswith("coeffs:"):
        tail = _parse_complex_list(spec[len("coeffs:") :], len("coeffs:"))
        a = TruncatedSeries.polynomial([0.0, 1.0, *tail], order)
        return FunctionRep.from_f(a)
    if spec.startswith("zoverf:"):
        tail = _parse_complex_list(spec[len("zoverf:") :], len("zoverf:"))
        b = TruncatedSeries.polynomial([1.0, *tail], order)
        return FunctionRep.from_zoverf(b)
    raise ParseError(f"unknown function spec {spec!r}", 0)


def _format_coefficient(c: complex) -> str:
    if c.imag == 0.0:
        return repr(c.real)
    return repr(c)


def function_spec_text(rep: FunctionRep) -> str:
    """Coefficient text form that reparses to the identical representation.

    Emits the side the instance was built from, so reparsing runs the same
    construction path on the same numbers and reproduces both coefficient
    arrays bit for bit.  Polynomial-flagged sides are emitted only up to
    their degree.
    """
    if rep.built_from == "zoverf":
        side = rep.zoverf
        first, prefix = 1, "zoverf:"
    else:
        side = rep.f
        first, prefix = 2, "coeffs:"
    last = side.order
    if isinstance(side.majorant, PolynomialMajorant):
        last = min(last, side.majorant.degree)
    coeffs = [complex(side.coeffs[n]) for n in range(first, last + 1)]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return prefix + ",".join(_format_coefficient(c) for c in coeffs)
