"""Exact coefficient polynomials of T = sum Q_k(x)/k! D^k for basis maps x^n -> P_n(x)."""

from .analysis import (
    ClassificationReport,
    InterlacingReport,
    NotThreeTermError,
    StabilityVerdict,
    classify_constant_coefficient_operator,
    fit_three_term,
    interlacing_report,
    is_appell,
    stability_orientation,
    unit_disk_image_check,
    verify_laguerre_ddq,
)
from .bases import (
    BasisSpec,
    InvalidSpecError,
    ThreeTermRecurrence,
    basis_poly,
    basis_sequence,
    hermite_via_heat_operator,
    laguerre_via_ddq,
    legendre_via_rodrigues,
)
from .diffop import (
    OperatorRep,
    TruncationError,
    apply_operator,
    closed_form_Q,
    coefficient_polys,
    legendre_C,
    legendre_derivative_expansion,
)
from .exactpoly import (
    ComplexRational,
    InexactDivisionError,
    IsolatingInterval,
    Polynomial,
    compose_affine,
    derivative,
    evaluate,
    is_real_rooted,
    isolate_real_roots,
    sturm_count,
)
from .series import (
    TruncatedBivariateSeries,
    laguerre_generating,
    laguerre_Q_generating,
    pde_residual,
    series_exp,
)

__version__ = "0.1.0"
