"""Exact-arithmetic calculus of admissible exponent regions."""

from .acalculus import (a_eps, a_formulas, big_a, binding_formulas,
                        exceptional_horizontal, exceptional_vertical,
                        in_exceptional_set)
from .checkers import (check_gn1d_general, check_gn_1d, check_gn_highd_general,
                       check_gn_sphere, check_large_freq, check_local_gn,
                       check_local_gn_general, critical_membership_search,
                       dyadic_bound, in_critical_set, in_large_freq_set)
from .profile import SymbolProfile
from .rational import RecipExponent, parse_rational, recip
from .regions import (RegionPolyline, acalculus_diagram, exceptional_segments,
                      region_boundary, sobolev_lines, strong_region_boundary)
from .verdict import Condition, Status, Trace, Verdict
from .waveops import (schroedinger_exponent, schroedinger_integrand_exponent,
                      schroedinger_scaling_exponent, wave_exponent,
                      wave_integrand_exponent, wave_scaling_exponent)

__all__ = [
    "RecipExponent", "SymbolProfile", "Status", "Condition", "Verdict", "Trace",
    "parse_rational", "recip",
    "big_a", "a_eps", "a_formulas", "binding_formulas", "in_exceptional_set",
    "exceptional_vertical", "exceptional_horizontal",
    "check_gn_sphere", "check_gn_1d", "check_large_freq", "check_gn1d_general",
    "check_gn_highd_general", "check_local_gn", "check_local_gn_general",
    "in_critical_set", "in_large_freq_set", "critical_membership_search",
    "dyadic_bound",
    "wave_exponent", "schroedinger_exponent",
    "wave_scaling_exponent", "wave_integrand_exponent",
    "schroedinger_scaling_exponent", "schroedinger_integrand_exponent",
    "RegionPolyline", "acalculus_diagram", "exceptional_segments",
    "sobolev_lines", "strong_region_boundary", "region_boundary",
]
