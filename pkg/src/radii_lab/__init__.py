"""Coefficient-space machinery for disk function classes: truncated series
arithmetic, membership defects and certificates, extremal transforms, a
radius-equation catalog with a bracketed smallest-root solver, and
Bohr-type majorant quantities.
"""

from .bohr import (
    BohrReport,
    bohr_quantity,
    distance_for_f1,
    growth_bounds,
    improved_quantity,
    rogosinski_quantity,
)
from .catalog import (
    CATALOG_NAMES,
    S_Z_NAMES,
    catalog_function,
    function_spec_text,
    parse_function_spec,
)
from .classes import (
    Certificate,
    ClassId,
    DefectReport,
    area_functional,
    certificate_sufficient,
    defect_series,
    generate_M_member,
    generate_Omega_member,
    quartic_necessary,
    sup_defect,
)
from .radii import (
    RadiusEquation,
    SharpnessReport,
    SharpnessWitness,
    closed_form_radius,
    equation_ids,
    eval_equation,
    get_equation,
    radicand_clamp_events,
    solve_radius,
    verify_sharpness,
)
from .series import (
    CircleValues,
    FunctionRep,
    PolynomialMajorant,
    PowerGeometricMajorant,
    TruncatedSeries,
    default_order,
    derivative,
    dilate,
    eval_at,
    eval_on_circle,
    integrate_t_over_f,
    linear_combine,
    mul,
    reciprocal,
)
from .special import PolylogValue, inverse_square_tail, log_moment, polylog
from .transforms import (
    ForbiddenPointReport,
    TransformTag,
    forbidden_point,
    harmonic_combination,
    omitted_value,
    quotient_product,
    square_over,
    square_over_integral,
)
from .verify import VerificationRecord, direct_defect_series, run_all

__version__ = "0.1.0"
