"""Empirical verification: decay fits, quotient experiments, extremizer
search, and the weighted-quotient conditions."""

from .extremizer import ExtremizerResult, extremizer_search
from .kernel_mass import kernel_l1_report, multiplier_kernel_l1
from .opnorm import OpNormEstimate, estimate_opnorm
from .quotient import QuotientProblem, QuotientSample, gn_quotient
from .slopes import (SlopeReport, annulus_norm_exponent, fit_dyadic_decay,
                     knapp_norm_exponent, quotient_predicted_slope,
                     slope_experiment)
from .weighted import weight_integral, weighted_quotient_check

__all__ = [
    "QuotientProblem", "QuotientSample", "gn_quotient",
    "OpNormEstimate", "estimate_opnorm",
    "SlopeReport", "fit_dyadic_decay", "slope_experiment",
    "knapp_norm_exponent", "annulus_norm_exponent", "quotient_predicted_slope",
    "ExtremizerResult", "extremizer_search",
    "multiplier_kernel_l1", "kernel_l1_report",
    "weight_integral", "weighted_quotient_check",
]
