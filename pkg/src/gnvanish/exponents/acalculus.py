"""Decay-exponent calculus for the thin-slab dyadic operators.

For a hypersurface piece with k non-vanishing principal curvatures in R^d,
the operator localizing to a 2^-j neighbourhood of the surface maps
L^p -> L^q with norm O(2^{-j A(p,q)}).  A(p,q) is the minimum of eight
affine expressions in (1/p, 1/q); on an exceptional set E of exponent
pairs only weak or restricted weak-type bounds are available, which costs
an arbitrarily small eps in the exponent.
"""

from __future__ import annotations

from fractions import Fraction

from .rational import recip

_NAMES = ("A0", "A1", "A2", "A2'", "A3", "A3'", "A4", "A4'")


def a_formulas(ip, iq, d: int, k: int) -> dict[str, Fraction]:
    """The eight expressions whose minimum is A(p,q); primes are the duals
    obtained by evaluating at (q', p')."""
    x, y = recip(ip), recip(iq)
    xd, yd = 1 - y, 1 - x  # dual pair (1/q', 1/p')
    half_k2 = Fraction(k + 2, 2)

    def a1(a, b):
        return half_k2 * (a - b)

    def a2(a, b):
        return half_k2 - (k + 1) * b

    def a3(a, b):
        return Fraction(2 * d - k, 2) - (2 * d - k - 1) * b

    def a4(a, b):
        return a1(a, b) + Fraction(2 * d - k - 2, 2) - (2 * d - k - 2) * b

    return {
        "A0": Fraction(1),
        "A1": a1(x, y),
        "A2": a2(x, y),
        "A2'": a2(xd, yd),
        "A3": a3(x, y),
        "A3'": a3(xd, yd),
        "A4": a4(x, y),
        "A4'": a4(xd, yd),
    }


def _validate_region(ip: Fraction, iq: Fraction, d: int, k: int) -> None:
    if d < 2:
        raise ValueError(f"d = {d} < 2; the slab calculus needs a hypersurface")
    if not 1 <= k <= d - 1:
        raise ValueError(f"curvature count k = {k} outside 1..{d - 1}")
    if iq > ip:
        # Translation-invariant operators are unbounded L^p -> L^q for q < p.
        raise ValueError(f"1/q = {iq} > 1/p = {ip}: outside the range p <= q")


def big_a(ip, iq, d: int, k: int) -> Fraction:
    """A(p,q) = min of the eight formulas, exact."""
    x, y = recip(ip), recip(iq)
    _validate_region(x, y, d, k)
    return min(a_formulas(x, y, d, k).values())


def binding_formulas(ip, iq, d: int, k: int) -> list[str]:
    """Names of the formulas attaining the minimum (region labels)."""
    vals = a_formulas(recip(ip), recip(iq), d, k)
    m = min(vals.values())
    return [name for name in _NAMES if vals[name] == m]


def exceptional_vertical(k: int) -> tuple[Fraction, Fraction]:
    """(1/p, max 1/q) of the vertical exceptional segment."""
    return Fraction(k + 2, 2 * (k + 1)), Fraction(k * k, 2 * (k + 1) * (k + 2))


def exceptional_horizontal(k: int) -> tuple[Fraction, Fraction]:
    """(min 1/p, 1/q) of the horizontal exceptional segment."""
    return (
        Fraction(k * k + 6 * k + 4, 2 * (k + 1) * (k + 2)),
        Fraction(k, 2 * (k + 1)),
    )


def in_exceptional_set(ip, iq, k: int) -> bool:
    """Membership in the exceptional set E (weak bounds only), exact."""
    if k < 1:
        raise ValueError(f"curvature count k = {k} < 1")
    x, y = recip(ip), recip(iq)
    vp, vq = exceptional_vertical(k)
    if x == vp and y <= vq:
        return True
    hp, hq = exceptional_horizontal(k)
    return y == hq and x >= hp


def a_eps(ip, iq, d: int, k: int, eps) -> Fraction:
    """A(p,q) minus eps exactly on the exceptional set; 1/p - 1/q when d = 1."""
    eps = Fraction(eps)
    if eps <= 0:
        raise ValueError(f"eps = {eps} must be positive")
    x, y = recip(ip), recip(iq)
    if d == 1:
        if y > x:
            raise ValueError(f"1/q = {y} > 1/p = {x}: outside the range p <= q")
        return x - y
    a = big_a(x, y, d, k)
    if in_exceptional_set(x, y, k):
        return a - eps
    return a
