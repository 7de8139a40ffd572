"""Weighted-quotient boundedness test for the wave and Schroedinger
operators at r = 2.

The L^2 reduction turns the inequality into boundedness of a weighted
one-dimensional quotient, controlled by two exact quantities: a scaling
exponent in the dilation parameter (must vanish) and the exponent a of the
weight integral int |rho|^a / (1 + rho^2) d rho (must satisfy -1 < a < 1
for convergence).  The integral itself is evaluated numerically with an
analytic tail expansion.
"""

from __future__ import annotations

from fractions import Fraction

from scipy.integrate import quad

from ..exponents.rational import recip
from ..exponents.verdict import Trace, Verdict
from ..exponents.waveops import (schroedinger_integrand_exponent,
                                 schroedinger_scaling_exponent,
                                 wave_integrand_exponent,
                                 wave_scaling_exponent)


def weight_integral(a: float, cutoff: float = 50.0) -> float:
    """int_R |rho|^a / (1 + rho^2) d rho for -1 < a < 1.

    [0, 1]: substitute w = rho^{a+1} to remove the endpoint singularity;
    [1, cutoff]: direct quadrature; tail: expand 1/(1+rho^2) in rho^{-2}
    and integrate term by term.
    """
    if not -1.0 < a < 1.0:
        raise ValueError(f"integral diverges for a = {a}")

    def core(w: float) -> float:
        rho = w ** (1.0 / (a + 1.0))
        return 1.0 / (1.0 + rho * rho)

    head = quad(core, 0.0, 1.0, limit=200)[0] / (a + 1.0)
    body = quad(lambda rho: rho ** a / (1.0 + rho * rho), 1.0, cutoff, limit=200)[0]
    tail, term_sign, m = 0.0, 1.0, 0
    while True:
        expo = a - 1.0 - 2.0 * m
        term = term_sign * cutoff ** expo / (2.0 * m + 1.0 - a)
        tail += term
        if abs(term) < 1e-15:
            break
        term_sign, m = -term_sign, m + 1
        if m > 60:
            break
    return 2.0 * (head + body + tail)


_MODELS = {
    "wave": (wave_scaling_exponent, wave_integrand_exponent),
    "schroedinger": (schroedinger_scaling_exponent, schroedinger_integrand_exponent),
}


def weighted_quotient_check(model: str, d: int, kappa, iq) -> Verdict:
    """Boundedness conditions of the weighted quotient at (d, kappa, q).

    Strong iff the exact scaling exponent is zero and the weight integral
    converges (-1 < a < 1).  Extras carry both exact exponents and, when
    convergent, the numeric integral value.
    """
    key = model.strip().lower()
    if key not in _MODELS:
        raise ValueError(f"unknown model {model!r}: expected wave or schroedinger")
    scaling_fn, integrand_fn = _MODELS[key]
    kappa, y = Fraction(kappa), recip(iq)
    t = Trace()
    if d < 2:
        return t.out_of_scope(f"d = {d} < 2")
    e = scaling_fn(d, kappa, y)
    a = integrand_fn(d, y)
    t.check("scaling-exponent-zero", e == 0,
            f"dilation-scaling exponent {e} must vanish for boundedness")
    conv = t.check("integral-converges", -1 < a < 1,
                   f"weight-integral exponent a = {a} must lie in (-1, 1)")
    extras = {"scaling_exponent": e, "integrand_exponent": a, "model": key}
    if conv:
        extras["integral"] = weight_integral(float(a))
    return t.verdict(extras)
