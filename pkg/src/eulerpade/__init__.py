"""Exact Pade approximations to Euler's factorial series, p-adic evaluation
with certified tails, and non-vanishing certificates with effective bounds."""

from .numfield import FieldElement, QuadraticField, Rational, arch_abs_normalized
from .places import (
    LogAbs,
    Place,
    factorial_valuation,
    normalized_abs_log,
    places_above,
    product_formula_defect,
    valuation,
)
from .padics import (
    PRECISION_CAP,
    CertifiedValue,
    CompletionElement,
    euler_eval_certified,
    genfact_eval,
    hensel_sqrt,
)
from .pade import (
    GenericPadeSystem,
    PadeSystem,
    SigmaVector,
    operator_weights,
    pade_construct,
    pade_determinant,
    pade_generic,
    pade_order_check,
    remainder_at_unity,
    select_mu,
    sigma_annihilation_check,
    sigma_coeffs,
)
from .certify import (
    BoundReport,
    Certificate,
    ValuationSetDescriptor,
    certificate_from_json,
    certify_nonvanishing,
    constants_c1_c2,
    even_factorial_linear_form,
    fibonacci_linear_form,
    limsup_sequence,
    linear_form_value,
    log_height_margin,
    mertens_sum,
    monotone_decrease_onset,
    recurrence_to_linear_form,
    residue_condition,
    effective_bounds,
    verify_certificate,
    z_inverse,
)

__all__ = [
    "FieldElement",
    "QuadraticField",
    "Rational",
    "arch_abs_normalized",
    "LogAbs",
    "Place",
    "factorial_valuation",
    "normalized_abs_log",
    "places_above",
    "product_formula_defect",
    "valuation",
    "PRECISION_CAP",
    "CertifiedValue",
    "CompletionElement",
    "euler_eval_certified",
    "genfact_eval",
    "hensel_sqrt",
    "GenericPadeSystem",
    "PadeSystem",
    "SigmaVector",
    "operator_weights",
    "pade_construct",
    "pade_determinant",
    "pade_generic",
    "pade_order_check",
    "remainder_at_unity",
    "select_mu",
    "sigma_annihilation_check",
    "sigma_coeffs",
    "BoundReport",
    "Certificate",
    "ValuationSetDescriptor",
    "certificate_from_json",
    "certify_nonvanishing",
    "constants_c1_c2",
    "even_factorial_linear_form",
    "fibonacci_linear_form",
    "limsup_sequence",
    "linear_form_value",
    "log_height_margin",
    "mertens_sum",
    "monotone_decrease_onset",
    "recurrence_to_linear_form",
    "residue_condition",
    "effective_bounds",
    "verify_certificate",
    "z_inverse",
]

__version__ = "0.1.0"
