"""Admissibility checkers for the interpolation inequalities.

Every checker decides, in exact rational arithmetic, whether an exponent
tuple is admissible:

    ||u||_q <= C ||P1(D)u||_{r1}^{1-kappa} ||P2(D)u||_{r2}^{kappa}

for symbols vanishing of orders alpha1, alpha2 on a compact characteristic
surface (or a finite zero set when d = 1) and growing of orders s1, s2 at
infinity.  The returned Verdict carries one entry per condition tested, so
a failure can always be traced to the binding constraint.

Strong means the inequality holds with the full Lebesgue norms.  Inputs
outside a checker's hypothesis range are OutOfScope, never silently
coerced.  WeakTypeOnly is reserved for the dyadic operator bounds at
exceptional exponent pairs, see dyadic_bound.
"""

from __future__ import annotations

from fractions import Fraction

from .acalculus import big_a, in_exceptional_set
from .profile import SymbolProfile
from .rational import recip
from .verdict import Status, Trace, Verdict

_HALF = Fraction(1, 2)


# ---------------------------------------------------------------------------
# Special-case checkers: power symbol |xi|^s - 1 against the identity.
# ---------------------------------------------------------------------------

def check_gn_sphere(d: int, s, kappa, ir, iq) -> Verdict:
    """Admissibility for | |D|^s - 1 |-interpolation on the unit sphere,
    d >= 2, with r in [1,2] and q in [2,inf].

    Three conditions: the curvature (restriction) lower bound on 1/r - 1/q,
    the smoothing upper bound, and the Stein-Tomas style minimum condition
    on min(1/r, 1/q'), strict when kappa = 0.
    """
    s, kappa = Fraction(s), Fraction(kappa)
    x, y = recip(ir), recip(iq)
    t = Trace()
    if d < 2:
        return t.out_of_scope(f"d = {d} < 2; use the one-dimensional checker")
    if s <= 0:
        return t.out_of_scope(f"s = {s} <= 0")
    if not 0 <= kappa <= 1:
        return t.out_of_scope(f"kappa = {kappa} outside [0, 1]")
    if not (x >= _HALF >= y):
        return t.out_of_scope(
            f"(1/r, 1/q) = ({x}, {y}) outside r in [1,2], q in [2,inf]")

    diff = x - y
    lo = 2 * (1 - kappa) / Fraction(d + 1)
    hi = (1 - kappa) * s / d
    t.check("curvature-lower", lo <= diff,
            f"2(1-kappa)/(d+1) = {lo} <= 1/r - 1/q = {diff}")
    t.check("smoothing-upper", diff <= hi,
            f"1/r - 1/q = {diff} <= (1-kappa)s/d = {hi}")

    mn = min(x, 1 - y)
    bound = Fraction(d + 1, 2 * d) - kappa / d  # (d+1-2kappa)/(2d)
    if kappa > 0:
        t.check("min-condition", mn >= bound,
                f"min(1/r, 1/q') = {mn} >= (d+1-2kappa)/(2d) = {bound}")
    else:
        t.check("min-condition-strict", mn > bound,
                f"min(1/r, 1/q') = {mn} > (d+1)/(2d) = {bound} (strict: kappa = 0)")
    return t.verdict()


def check_gn_1d(kappa, s, iq, ir1, ir2) -> Verdict:
    """One-dimensional admissibility for | |D|^s - 1 | against the identity:
    1-kappa <= (1-kappa)/r1 + kappa/r2 - 1/q <= (1-kappa)s."""
    s, kappa = Fraction(s), Fraction(kappa)
    y, x1, x2 = recip(iq), recip(ir1), recip(ir2)
    t = Trace()
    if s <= 0:
        return t.out_of_scope(f"s = {s} <= 0")
    if not 0 <= kappa <= 1:
        return t.out_of_scope(f"kappa = {kappa} outside [0, 1]")
    mid = (1 - kappa) * x1 + kappa * x2 - y
    t.check("lower", 1 - kappa <= mid,
            f"1-kappa = {1 - kappa} <= (1-kappa)/r1 + kappa/r2 - 1/q = {mid}")
    t.check("upper", mid <= (1 - kappa) * s,
            f"(1-kappa)/r1 + kappa/r2 - 1/q = {mid} <= (1-kappa)s = {(1 - kappa) * s}")
    return t.verdict()


# ---------------------------------------------------------------------------
# Large-frequency (growth-order) conditions.
# ---------------------------------------------------------------------------

def check_large_freq(profile: SymbolProfile, iq, ir1, ir2) -> Verdict:
    """Admissibility of the high-frequency part of the inequality.

    Requires 0 <= (1-kappa)/r1 + kappa/r2 - 1/q <= sbar/d, with extra
    endpoint conditions when the upper bound is attained:

    (i)   q = inf: both 1/r_i - s_i/d nonzero, or r1 = r2 = inf with
          s1 = s2 = 0, or d = 1 with 1/r_i = s_i in {0, 1};
    (ii)  1 < q < inf with 1/r1 - s1/d = 1/q = 1/r2 - s2/d and r1 = 1,
          kappa < 1: need 1 < r2 < q with kappa >= r2/q, or r2 = inf with
          1/q <= kappa <= 1/q';
    (iii) the mirror image of (ii) for r2 = 1, kappa > 0.

    The conclusions here are strong bounds; WeakTypeOnly is never returned.
    Membership (status Strong) defines the admissible set for the
    high-frequency regime at the profile's weight kappa.
    """
    y, x1, x2 = recip(iq), recip(ir1), recip(ir2)
    kappa, d = profile.kappa, profile.d
    s1, s2, sbar = profile.s1, profile.s2, profile.sbar
    t = Trace()
    mid = (1 - kappa) * x1 + kappa * x2 - y
    t.check("nonnegative", mid >= 0,
            f"(1-kappa)/r1 + kappa/r2 - 1/q = {mid} >= 0")
    t.check("growth-upper", mid <= sbar / d,
            f"(1-kappa)/r1 + kappa/r2 - 1/q = {mid} <= sbar/d = {sbar / d}")

    if t.all_ok and mid == sbar / d:
        g1 = x1 - s1 / d
        g2 = x2 - s2 / d
        if y == 0:
            ok = (g1 != 0 and g2 != 0) \
                or (x1 == 0 and x2 == 0 and s1 == 0 and s2 == 0) \
                or (d == 1 and x1 == s1 and x2 == s2
                    and s1 in (0, 1) and s2 in (0, 1))
            t.check("endpoint-q-inf", ok,
                    "q = inf endpoint: 1/r_i - s_i/d != 0 for i = 1,2, "
                    "or one of the listed exceptional pairs")
        elif 0 < y < 1 and g1 == y == g2:
            if x1 == 1 and kappa < 1:
                ok = (y < x2 < 1 and kappa * x2 >= y) \
                    or (x2 == 0 and y <= kappa <= 1 - y)
                t.check("endpoint-r1-one", ok,
                        "r1 = 1 endpoint: need 1 < r2 < q with kappa >= r2/q, "
                        "or r2 = inf with 1/q <= kappa <= 1/q'")
            if x2 == 1 and kappa > 0:
                ok = (y < x1 < 1 and (1 - kappa) * x1 >= y) \
                    or (x1 == 0 and y <= 1 - kappa <= 1 - y)
                t.check("endpoint-r2-one", ok,
                        "r2 = 1 endpoint: need 1 < r1 < q with 1-kappa >= r1/q, "
                        "or r1 = inf with 1/q <= 1-kappa <= 1/q'")
    return t.verdict()


def in_large_freq_set(profile: SymbolProfile, iq, ir1, ir2) -> bool:
    return check_large_freq(profile, iq, ir1, ir2).ok


# ---------------------------------------------------------------------------
# General one-dimensional checker.
# ---------------------------------------------------------------------------

def check_gn1d_general(profile: SymbolProfile, iq, ir1, ir2) -> Verdict:
    """General d = 1 admissibility for vanishing orders alpha1, alpha2 and
    growth orders s1, s2, under the hypothesis 0 < abar <= sbar.

    Strong iff abar <= (1-kappa)/r1 + kappa/r2 - 1/q <= sbar together with
    the endpoint conditions: on the growth side (middle value = sbar) the
    conditions of check_large_freq with d = 1; on the vanishing side
    (middle value = abar):

    (iv)  q = inf: both 1/r_i - alpha_i nonzero, or 1/r_i = alpha_i with
          alpha_i in {0, 1};
    (v)   1 < q < inf with 1/r1 - alpha1 = 1/q = 1/r2 - alpha2: need
          alpha1, alpha2 in [0, 1], and if r1 = 1 with kappa < 1 also
          1 < r2 < q with kappa >= r2/q;
    (vi)  the mirror image of (v) for r2 = 1 with kappa > 0.
    """
    y, x1, x2 = recip(iq), recip(ir1), recip(ir2)
    t = Trace()
    if profile.d != 1:
        return t.out_of_scope(f"d = {profile.d} != 1")
    kappa = profile.kappa
    a1, a2, abar = profile.alpha1, profile.alpha2, profile.abar
    s1, s2, sbar = profile.s1, profile.s2, profile.sbar
    if not 0 < abar <= sbar:
        return t.out_of_scope(
            f"hypothesis 0 < abar <= sbar violated: abar = {abar}, sbar = {sbar}")

    mid = (1 - kappa) * x1 + kappa * x2 - y
    t.check("vanishing-lower", abar <= mid,
            f"abar = {abar} <= (1-kappa)/r1 + kappa/r2 - 1/q = {mid}")
    t.check("growth-upper", mid <= sbar,
            f"(1-kappa)/r1 + kappa/r2 - 1/q = {mid} <= sbar = {sbar}")
    if not t.all_ok:
        return t.fails()

    if mid == sbar:
        g1, g2 = x1 - s1, x2 - s2
        if y == 0:
            t.check("s-endpoint-q-inf",
                    (g1 != 0 and g2 != 0)
                    or (x1 == s1 and x2 == s2 and s1 in (0, 1) and s2 in (0, 1)),
                    "q = inf growth endpoint: 1/r_i - s_i != 0 for i = 1,2, "
                    "or 1/r_i = s_i in {0,1}")
        elif 0 < y < 1 and g1 == y == g2:
            if x1 == 1:
                t.check("s-endpoint-r1-one",
                        (y < x2 < 1 and kappa * x2 >= y)
                        or (x2 == 0 and y <= kappa <= 1 - y),
                        "r1 = 1 growth endpoint: 1 < r2 < q with kappa >= r2/q, "
                        "or r2 = inf with 1/q <= kappa <= 1/q'")
            if x2 == 1:
                t.check("s-endpoint-r2-one",
                        (y < x1 < 1 and (1 - kappa) * x1 >= y)
                        or (x1 == 0 and y <= 1 - kappa <= 1 - y),
                        "r2 = 1 growth endpoint: 1 < r1 < q with 1-kappa >= r1/q, "
                        "or r1 = inf with 1/q <= 1-kappa <= 1/q'")

    if mid == abar:
        h1, h2 = x1 - a1, x2 - a2
        if y == 0:
            t.check("a-endpoint-q-inf",
                    (h1 != 0 and h2 != 0)
                    or (x1 == a1 and x2 == a2 and a1 in (0, 1) and a2 in (0, 1)),
                    "q = inf vanishing endpoint: 1/r_i - alpha_i != 0 for "
                    "i = 1,2, or 1/r_i = alpha_i in {0,1}")
        elif 0 < y < 1 and h1 == y == h2:
            t.check("a-endpoint-orders", 0 <= a1 <= 1 and 0 <= a2 <= 1,
                    "vanishing endpoint with matching Sobolev lines needs "
                    "alpha1, alpha2 in [0, 1]")
            if x1 == 1 and kappa < 1:
                t.check("a-endpoint-r1-one",
                        y < x2 < 1 and kappa * x2 >= y,
                        "r1 = 1 vanishing endpoint: need 1 < r2 < q with "
                        "kappa >= r2/q")
            if x2 == 1 and kappa > 0:
                t.check("a-endpoint-r2-one",
                        y < x1 < 1 and (1 - kappa) * x1 >= y,
                        "r2 = 1 vanishing endpoint: need 1 < r1 < q with "
                        "1-kappa >= r1/q")
    return t.verdict()


# ---------------------------------------------------------------------------
# General higher-dimensional checker (diagonal r1 = r2 = r).
# ---------------------------------------------------------------------------

def check_gn_highd_general(profile: SymbolProfile, iq, ir) -> Verdict:
    """General d >= 2 admissibility with r1 = r2 = r in [1,2], q in [2,inf],
    under the hypothesis 0 <= abar <= 1.

    Strong iff 2*abar/(k+2) <= 1/r - 1/q <= sbar/d and
    min(1/r, 1/q') >= (k+2*abar)/(2(k+1)), the minimum condition holding
    strictly when abar = 1, alpha1 = alpha2, or kappa in {0, 1}; the single
    point (q, r) = (inf, d/sbar) is excluded when s1 = s2 = sbar in (0, d].
    """
    x, y = recip(ir), recip(iq)
    t = Trace()
    if profile.d < 2:
        return t.out_of_scope(f"d = {profile.d} < 2; use the one-dimensional checker")
    if not (x >= _HALF >= y):
        return t.out_of_scope(
            f"(1/r, 1/q) = ({x}, {y}) outside r in [1,2], q in [2,inf]")
    if not 0 <= profile.abar <= 1:
        return t.out_of_scope(
            f"hypothesis 0 <= abar <= 1 violated: abar = {profile.abar}")

    k, d = profile.k, profile.d
    kappa = profile.kappa
    a1, a2, abar = profile.alpha1, profile.alpha2, profile.abar
    s1, s2, sbar = profile.s1, profile.s2, profile.sbar

    diff = x - y
    t.check("curvature-lower", 2 * abar / (k + 2) <= diff,
            f"2*abar/(k+2) = {2 * abar / (k + 2)} <= 1/r - 1/q = {diff}")
    t.check("growth-upper", diff <= sbar / d,
            f"1/r - 1/q = {diff} <= sbar/d = {sbar / d}")

    mn = min(x, 1 - y)
    bound = (k + 2 * abar) / (2 * Fraction(k + 1))
    if abar == 1 or a1 == a2 or kappa in (0, 1):
        t.check("min-condition-strict", mn > bound,
                f"min(1/r, 1/q') = {mn} > (k+2*abar)/(2(k+1)) = {bound} "
                "(strict: abar = 1, equal vanishing orders, or kappa in {0,1})")
    else:
        t.check("min-condition", mn >= bound,
                f"min(1/r, 1/q') = {mn} >= (k+2*abar)/(2(k+1)) = {bound}")

    excluded = y == 0 and s1 == s2 and 0 < sbar <= d and x == sbar / d
    t.check("excluded-point", not excluded,
            "the single point (q, r) = (inf, d/sbar) is excluded when "
            "s1 = s2 = sbar in (0, d]")
    return t.verdict()


# ---------------------------------------------------------------------------
# Dyadic operator bound at a single exponent pair.
# ---------------------------------------------------------------------------

def dyadic_bound(ip, iq, d: int, k: int, eps=Fraction(1, 100)) -> Verdict:
    """Claim strength of the thin-slab dyadic bound at one (1/p, 1/q) pair.

    Strong with decay exponent A(p,q) off the exceptional set; on the
    exceptional set only weak / restricted weak-type bounds hold, costing
    an arbitrarily small eps: WeakTypeOnly with exponent A(p,q) - eps.
    """
    x, y = recip(ip), recip(iq)
    t = Trace()
    if d == 1:
        if y > x:
            return t.out_of_scope(f"1/q = {y} > 1/p = {x}: outside p <= q")
        t.check("range", True, "d = 1: decay exponent is 1/p - 1/q")
        return t.verdict({"decay": x - y})
    try:
        a = big_a(x, y, d, k)
    except ValueError as exc:
        return t.out_of_scope(str(exc))
    if in_exceptional_set(x, y, k):
        t.check("exceptional", True,
                "pair lies in the exceptional set: weak-type bounds only")
        return Verdict(Status.WEAK_TYPE_ONLY, t.conditions,
                       {"decay": a - Fraction(eps), "strong_decay_unavailable": a})
    t.check("exceptional", True, "pair is off the exceptional set")
    return t.verdict({"decay": a})


# ---------------------------------------------------------------------------
# Local inequalities (quotient-constrained functions).
# ---------------------------------------------------------------------------

def check_local_gn(d: int, s, kappa, iq, ir) -> Verdict:
    """Admissibility of the local inequality for | |D|^s - 1 | against the
    identity, valid for functions with ||(|D|^s-1)u||_r <= R ||u||_r.

    d = 1:  1-kappa <= 1/r - 1/q <= s;
    d >= 2: 2(1-kappa)/(k+2) <= 1/r - 1/q <= s/d and
            min(1/r, 1/q') >= (k+2-2kappa)/(2(k+1)), with k = d-1.
    Both exclude the single point (q, r) = (inf, d/s) when 0 < s <= d.
    """
    s, kappa = Fraction(s), Fraction(kappa)
    x, y = recip(ir), recip(iq)
    t = Trace()
    if not 0 < kappa < 1:
        return t.out_of_scope(f"kappa = {kappa} outside (0, 1)")
    if s <= 0:
        return t.out_of_scope(f"s = {s} <= 0")
    excluded = y == 0 and s <= d and x == s / d
    t.check("excluded-point", not excluded,
            "the single point (q, r) = (inf, d/s) is excluded when 0 < s <= d")
    if d == 1:
        diff = x - y
        t.check("lower", 1 - kappa <= diff,
                f"1-kappa = {1 - kappa} <= 1/r - 1/q = {diff}")
        t.check("upper", diff <= s, f"1/r - 1/q = {diff} <= s = {s}")
        return t.verdict()
    k = d - 1
    if not (x >= _HALF >= y):
        return t.out_of_scope(
            f"(1/r, 1/q) = ({x}, {y}) outside r in [1,2], q in [2,inf]")
    diff = x - y
    lo = 2 * (1 - kappa) / Fraction(k + 2)
    t.check("curvature-lower", lo <= diff,
            f"2(1-kappa)/(k+2) = {lo} <= 1/r - 1/q = {diff}")
    t.check("smoothing-upper", diff <= s / d,
            f"1/r - 1/q = {diff} <= s/d = {s / d}")
    mn = min(x, 1 - y)
    bound = Fraction(k + 2 - 2 * kappa, 1) / (2 * (k + 1))
    t.check("min-condition", mn >= bound,
            f"min(1/r, 1/q') = {mn} >= (k+2-2kappa)/(2(k+1)) = {bound}")
    return t.verdict()


# ---------------------------------------------------------------------------
# Critical-frequency membership and the general local inequality.
# ---------------------------------------------------------------------------

def in_critical_set(profile: SymbolProfile, iq, ir1, ir2) -> bool:
    """Membership in the admissible set for the critical-frequency regime at
    the profile's weight kappa.

    d >= 2 uses the diagonal reduction (r1 = r2, equal interpolation
    targets), so it requires ir1 == ir2.  d = 1 reuses the vanishing-side
    logic of check_gn1d_general with the growth constraint relaxed.
    Sound but not complete: a False may just mean "not provable by the
    implemented reductions".
    """
    y, x1, x2 = recip(iq), recip(ir1), recip(ir2)
    p = profile
    if p.d >= 2:
        if x1 != x2 or not (x1 >= _HALF >= y):
            return False
        if not 0 <= p.abar <= 1:
            return False
        if x1 - y < 2 * p.abar / (p.k + 2):
            return False
        mn = min(x1, 1 - y)
        bound = (p.k + 2 * p.abar) / (2 * Fraction(p.k + 1))
        strict = p.abar == 1 or p.alpha1 == p.alpha2 or p.kappa in (0, 1)
        return mn > bound if strict else mn >= bound
    if p.abar == 0:
        # Degenerate vanishing order: only the open half-space is claimed.
        return (1 - p.kappa) * x1 + p.kappa * x2 - y > 0
    relaxed = SymbolProfile(1, 1, p.alpha1, p.alpha2,
                            max(p.s1, 1, p.alpha1), max(p.s2, 1, p.alpha2), p.kappa)
    return check_gn1d_general(relaxed, iq, ir1, ir2).ok


def check_local_gn_general(profile: SymbolProfile, iq, ir1, ir2,
                           steps: int = 16) -> Verdict:
    """General local inequality: admissible iff the tuple lies in the
    critical-frequency set at some weight kappa1 and in the large-frequency
    set at some weight kappa2, both in [0, kappa].

    The two weights are searched on the rational grid {j*kappa/steps}.
    Sufficient but not exhaustive over the continuum of weights.
    """
    if steps < 1:
        raise ValueError("steps must be >= 1")
    kappa = profile.kappa
    t = Trace()
    candidates = sorted({Fraction(j, steps) * kappa for j in range(steps + 1)})
    hit1 = next((k1 for k1 in candidates
                 if in_critical_set(profile.with_kappa(k1), iq, ir1, ir2)), None)
    hit2 = next((k2 for k2 in candidates
                 if in_large_freq_set(profile.with_kappa(k2), iq, ir1, ir2)), None)
    t.check("critical-membership", hit1 is not None,
            f"critical-frequency membership at some kappa1 in [0, {kappa}] "
            f"(grid step kappa/{steps})")
    t.check("large-freq-membership", hit2 is not None,
            f"large-frequency membership at some kappa2 in [0, {kappa}] "
            f"(grid step kappa/{steps})")
    extras = {}
    if hit1 is not None:
        extras["kappa1"] = hit1
    if hit2 is not None:
        extras["kappa2"] = hit2
    return t.verdict(extras)


# ---------------------------------------------------------------------------
# Research mode: exhaustive interpolation-target search.
# ---------------------------------------------------------------------------

def critical_membership_search(profile: SymbolProfile, iq, ir1, ir2,
                               denominator: int = 24) -> tuple[bool, dict]:
    """NON-AUTHORITATIVE grid search for critical-frequency admissibility.

    Scans interpolation targets (q1, q2) with reciprocals on the grid
    {0, 1/N, ..., 1} and reports a witness when

        (1-kappa) A(r1, q1) + kappa A(r2, q2) > abar,
        1/q = (1-kappa)/q1 + kappa/q2,  q_i >= r_i.

    A hit proves membership; a miss proves nothing (the grid may be too
    coarse), and no sharpness claim is attached to either outcome.  Kept
    separate from the checkers, which rely on the computed reductions.
    """
    y, x1, x2 = recip(iq), recip(ir1), recip(ir2)
    p = profile
    if p.d == 1:
        def decay(xr, yq):
            return xr - yq
    else:
        def decay(xr, yq):
            return big_a(xr, yq, p.d, p.k)

    kappa, abar = p.kappa, p.abar
    ys = [Fraction(i, denominator) for i in range(denominator + 1)]
    for y1 in ys:
        if y1 > x1:
            continue
        if kappa == 0:
            if y1 != y:
                continue
            y2 = x2
        else:
            y2 = (y - (1 - kappa) * y1) / kappa
            if not 0 <= y2 <= x2:
                continue
        total = (1 - kappa) * decay(x1, y1) + kappa * decay(x2, y2)
        if total > abar:
            return True, {"iq1": y1, "iq2": y2, "decay": total}
    return False, {}
