"""Exponent calculators for the wave and Schroedinger operators.

These two operators have unbounded characteristic sets, so the surface
calculus does not apply; instead an L^2-based weighted-quotient argument
pins a single target exponent q per (d, kappa).  The exact scaling and
integrability exponents used by that argument are computed here; their
numerical counterpart lives in the verify package.
"""

from __future__ import annotations

from fractions import Fraction

from .rational import recip
from .verdict import Trace, Verdict


def wave_exponent(d: int, kappa) -> Verdict:
    """Target exponent q = 2d/(d-4+4kappa) for the wave operator at r = 2.

    Strong for 1/2 <= kappa <= 1 when d >= 3 and 1/2 < kappa <= 1 when
    d = 2.  The extras carry q (and its reciprocal) whenever the
    denominator is positive.
    """
    kappa = Fraction(kappa)
    t = Trace()
    if d < 2:
        return t.out_of_scope(f"d = {d} < 2")
    denom = d - 4 + 4 * kappa
    extras = {}
    if not t.check("q-defined", denom > 0,
                   f"denominator d - 4 + 4*kappa = {denom} must be positive"):
        return t.fails()
    q = Fraction(2 * d) / denom
    extras["q"] = q
    extras["iq"] = 1 / q
    if d >= 3:
        t.check("kappa-range", Fraction(1, 2) <= kappa <= 1,
                f"kappa = {kappa} in [1/2, 1] for d >= 3")
    else:
        t.check("kappa-range", Fraction(1, 2) < kappa <= 1,
                f"kappa = {kappa} in (1/2, 1] for d = 2")
    return t.verdict(extras)


def schroedinger_exponent(d: int, kappa) -> Verdict:
    """Target exponent q = 2(d+1)/(d-3+4kappa) for the Schroedinger
    operator at r = 2; Strong for 1/2 <= kappa <= 1, d >= 2."""
    kappa = Fraction(kappa)
    t = Trace()
    if d < 2:
        return t.out_of_scope(f"d = {d} < 2")
    denom = d - 3 + 4 * kappa
    extras = {}
    if not t.check("q-defined", denom > 0,
                   f"denominator d - 3 + 4*kappa = {denom} must be positive"):
        return t.fails()
    q = Fraction(2 * (d + 1)) / denom
    extras["q"] = q
    extras["iq"] = 1 / q
    t.check("kappa-range", Fraction(1, 2) <= kappa <= 1,
            f"kappa = {kappa} in [1/2, 1]")
    return t.verdict(extras)


# Exact ingredients of the weighted-quotient boundedness test.  The scaling
# exponent must vanish for the quotient to be bounded; the integrand
# exponent a must satisfy -1 < a < 1 for the weight integral
# int |rho|^a / (1 + rho^2) d rho to converge.

def wave_scaling_exponent(d: int, kappa, iq) -> Fraction:
    kappa, y = Fraction(kappa), recip(iq)
    return (1 - kappa) / 2 - Fraction(1, 4) * (Fraction(d, 2) - d * y)


def wave_integrand_exponent(d: int, iq) -> Fraction:
    return Fraction(d - 2, 2) - d * recip(iq)


def schroedinger_scaling_exponent(d: int, kappa, iq) -> Fraction:
    kappa, y = Fraction(kappa), recip(iq)
    return (1 - kappa) / 2 - Fraction(d + 1, 8) + Fraction(d + 1, 4) * y


def schroedinger_integrand_exponent(d: int, iq) -> Fraction:
    return Fraction(d - 1, 2) - (d + 1) * recip(iq)
