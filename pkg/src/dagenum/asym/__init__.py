"""Asymptotic machinery: Airy numerics, scaled transform tables,
growth-rate predictions, and the two-sided bound verifier."""

from .airy import airy_ai, airy_ai_prime, airy_root_a1
from .scaled import (
    ScaledTable,
    build_scaled_table,
    drift,
    exact_transform_diagonal,
    profile_check,
    verify_transform,
    weight_u,
)
from .predict import RatioPoint, log_factorial, predictor_log, ratio_diagnostic
from .bounds import (
    BoundParams,
    BoundReport,
    bound_value,
    h_product_log,
    min_eta,
    p_ratio_check,
    s_factor,
    verify_bounds,
)

__all__ = [
    "airy_ai",
    "airy_ai_prime",
    "airy_root_a1",
    "ScaledTable",
    "build_scaled_table",
    "drift",
    "exact_transform_diagonal",
    "profile_check",
    "verify_transform",
    "weight_u",
    "RatioPoint",
    "log_factorial",
    "predictor_log",
    "ratio_diagnostic",
    "BoundParams",
    "BoundReport",
    "bound_value",
    "h_product_log",
    "min_eta",
    "p_ratio_check",
    "s_factor",
    "verify_bounds",
]
