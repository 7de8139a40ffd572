from fractions import Fraction as F

import pytest

from gnvanish.exponents import (RecipExponent, Status, SymbolProfile,
                                check_gn1d_general, check_gn_1d,
                                check_gn_highd_general, check_gn_sphere,
                                check_large_freq, check_local_gn,
                                check_local_gn_general,
                                critical_membership_search, dyadic_bound,
                                in_large_freq_set)

R = RecipExponent


def test_sphere_examples():
    assert check_gn_sphere(2, 2, F(1, 2), R(F(1, 2)), R(F(1, 6))).status is Status.STRONG
    v = check_gn_sphere(2, 2, F(1, 2), R(F(1, 2)), R(F(1, 4)))
    assert v.status is Status.FAILS
    assert any(c.cond_id == "curvature-lower" for c in v.violated())
    # kappa = 0 needs 2/3 <= 1/3: false
    assert check_gn_sphere(2, 2, F(0), R(F(1, 2)), R(F(1, 6))).status is Status.FAILS


def test_sphere_reduces_to_r2_wedge():
    # At r = 2 the minimum condition collapses to kappa >= 1/2, so the
    # Strong set is exactly the classical wedge in (kappa, 1/q).
    d, s = 3, F(2)
    for ik in range(0, 9):
        kappa = F(ik, 8)
        for jq in range(0, 9):
            iq = F(jq, 16)  # 1/q in [0, 1/2]
            got = check_gn_sphere(d, s, kappa, R(F(1, 2)), R(iq)).ok
            want = (kappa >= F(1, 2)
                    and 2 * (1 - kappa) / F(d + 1) <= F(1, 2) - iq
                    and F(1, 2) - iq <= (1 - kappa) * s / d)
            assert got == want, (kappa, iq)


def test_sphere_out_of_scope():
    assert check_gn_sphere(1, 2, F(1, 2), R(F(1, 2)), R(F(1, 6))).status \
        is Status.OUT_OF_SCOPE
    assert check_gn_sphere(2, 2, F(1, 2), R(F(1, 4)), R(F(1, 6))).status \
        is Status.OUT_OF_SCOPE  # r > 2
    assert check_gn_sphere(2, 0, F(1, 2), R(F(1, 2)), R(F(1, 6))).status \
        is Status.OUT_OF_SCOPE  # s <= 0


def test_oned_examples():
    assert check_gn_1d(F(1, 2), 2, R(F(0)), R(F(1)), R(F(1))).ok
    # kappa = 1 with q = r2 is degenerate-admissible
    assert check_gn_1d(F(1), 5, R(F(1, 3)), R(F(1, 2)), R(F(1, 3))).ok
    v = check_gn_1d(F(0), 1, R(F(1, 2)), R(F(1)), R(F(1, 3)))
    assert v.status is Status.FAILS  # middle value 1/2 < 1


def test_large_freq_interior_and_endpoints():
    # strict interior of the growth window
    p = SymbolProfile(2, 1, 1, 0, 2, 0, F(0))
    assert check_large_freq(p, R(F(1, 4)), R(F(1, 2)), R(F(1, 2))).ok
    # q = inf endpoint hitting 1/r1 = s1/d without any listed exception
    p2 = SymbolProfile(2, 1, 1, 0, 2, 0, F(1, 2))
    assert check_large_freq(p2, R(F(0)), R(F(1)), R(F(0))).status is Status.FAILS
    # r1 = r2 = q with sbar = 0 but nonzero growth offsets: strong
    p3 = SymbolProfile(1, 1, 1, 0, 1, -1, F(1, 2))
    assert check_large_freq(p3, R(F(1, 2)), R(F(1, 2)), R(F(1, 2))).ok
    # the listed d = 1 exception (r1, r2) = (1/s1, 1/s2), s_i in {0, 1}
    p4 = SymbolProfile(1, 1, 1, 0, 1, 0, F(1, 2))
    assert check_large_freq(p4, R(F(0)), R(F(1)), R(F(0))).ok
    assert in_large_freq_set(p4, R(F(0)), R(F(1)), R(F(0)))


def test_large_freq_r1_one_endpoint_conditions():
    # 1 < q < inf, 1/r1 - s1/d = 1/q = 1/r2 - s2/d with r1 = 1, kappa < 1:
    # admissible only for 1 < r2 < q with kappa >= r2/q (or r2 = inf window).
    d, q = 1, 4
    s1 = 1 - F(1, q)           # makes r1 = 1 sit on the endpoint line
    for ir2, kappa, want in [
            (F(1, 2), F(1, 2), True),    # r2 = 2 < 4, kappa = 1/2 >= 2/4
            (F(1, 2), F(1, 4), False),   # kappa < r2/q
            (F(1, 8), F(1, 2), False),   # r2 = 8 > q
            (F(0), F(1, 2), True),       # r2 = inf, 1/q <= kappa <= 1/q'
            (F(0), F(1, 8), False),      # r2 = inf, kappa < 1/q
    ]:
        s2 = ir2 - F(1, q)
        p = SymbolProfile(d, 1, 1, 0, s1, s2, kappa)
        got = check_large_freq(p, R(F(1, q)), R(F(1)), R(ir2)).ok
        assert got == want, (ir2, kappa)


def test_general1d_out_of_scope_hypothesis():
    p = SymbolProfile(1, 1, 0, 0, 1, 1, F(1, 2))  # abar = 0
    assert check_gn1d_general(p, R(F(1, 2)), R(F(1)), R(F(1))).status \
        is Status.OUT_OF_SCOPE


@pytest.mark.parametrize("kappa", [F(1, 4), F(1, 2), F(3, 4)])
@pytest.mark.parametrize("s", [1, 2])
def test_general1d_matches_special_case(kappa, s):
    # Power-symbol profile: verdicts must coincide with the direct d = 1
    # checker on a rational grid of (1/q, 1/r1, 1/r2).
    prof = SymbolProfile(1, 1, 1, 0, s, 0, kappa)
    n = 10
    vals = [F(i, n) for i in range(n + 1)]
    for y in vals:
        for x1 in vals:
            for x2 in vals:
                a = check_gn_1d(kappa, s, R(y), R(x1), R(x2)).status
                b = check_gn1d_general(prof, R(y), R(x1), R(x2)).status
                assert a == b, (y, x1, x2)


def test_general1d_alpha_endpoint_conditions():
    # q = inf with both vanishing offsets nonzero: strong
    p = SymbolProfile(1, 1, F(1, 2), F(1, 2), 1, 1, F(1, 2))
    assert check_gn1d_general(p, R(F(0)), R(F(1)), R(F(0))).ok
    # interior q, matching lines, r1 = 1 with r2 outside (1, q): fails
    p2 = SymbolProfile(1, 1, F(1, 2), F(0), F(1, 2), F(1, 4), F(1, 2))
    v = check_gn1d_general(p2, R(F(1, 2)), R(F(1)), R(F(1, 2)))
    assert v.status is Status.FAILS
    assert any(c.cond_id == "a-endpoint-r1-one" for c in v.violated())
    # same geometry with r2 strictly between 1 and q and kappa >= r2/q: strong
    p3 = SymbolProfile(1, 1, F(3, 4), F(1, 12), F(3, 4), F(1, 12), F(3, 4))
    assert check_gn1d_general(p3, R(F(1, 4)), R(F(1)), R(F(1, 3))).ok


def test_generalhd_examples():
    # abar = 1 via kappa = 0: boundary of the strict minimum condition fails
    prof = SymbolProfile.sphere_power(3, 2, F(0))
    bound = F(2 + 2, 2 * 3)  # (k + 2 abar)/(2(k+1)) at k = 2, abar = 1
    v = check_gn_highd_general(prof, R(1 - bound), R(F(5, 6)))
    assert v.status is Status.FAILS
    assert any("min-condition" in c.cond_id for c in v.violated())
    # kappa in (0,1) with alpha1 = alpha2 = 0 requires strict > k/(2(k+1))
    prof2 = SymbolProfile(3, 2, 0, 0, 2, 2, F(1, 2))
    assert not check_gn_highd_general(prof2, R(F(1, 3)), R(F(1, 3))).ok
    assert check_gn_highd_general(prof2, R(F(1, 2)), R(F(1, 2))).ok


def test_generalhd_excluded_point():
    # s1 = s2 = sbar in (0, d]: the single pair (q, r) = (inf, d/sbar) drops
    prof = SymbolProfile(2, 1, F(1, 2), F(1, 2), 2, 2, F(1, 2))
    v = check_gn_highd_general(prof, R(F(0)), R(F(1)))  # 1/r = 1 = sbar/d
    assert v.status is Status.FAILS
    assert any(c.cond_id == "excluded-point" for c in v.violated())
    # same tuple with distinct growth orders is fine
    prof2 = SymbolProfile(2, 1, F(1, 2), F(1, 2), 3, 1, F(1, 2))
    assert check_gn_highd_general(prof2, R(F(0)), R(F(1))).ok


def test_local_examples():
    assert check_local_gn(2, 2, F(1, 2), R(F(1, 4)), R(F(1, 2))).status is Status.FAILS
    assert check_local_gn(1, 1, F(1, 2), R(F(1, 2)), R(F(1))).ok
    # non-strict boundary of the minimum condition is admissible here
    assert check_local_gn(2, 2, F(1, 2), R(F(1, 6)), R(F(1, 2))).ok
    # excluded single point (q, r) = (inf, d/s)
    assert check_local_gn(2, 2, F(1, 2), R(F(0)), R(F(1))).status is Status.FAILS
    assert check_local_gn(2, 2, F(0), R(F(1, 6)), R(F(1, 2))).status \
        is Status.OUT_OF_SCOPE


def test_local_general_grid_search():
    prof = SymbolProfile.sphere_power(2, 2, F(1, 2))
    v = check_local_gn_general(prof, R(F(1, 6)), R(F(1, 2)), R(F(1, 2)), steps=8)
    assert v.ok
    assert "kappa1" in v.extras and "kappa2" in v.extras
    # hopeless tuple: 1/r - 1/q too large for the growth side at any weight
    v2 = check_local_gn_general(prof, R(F(0)), R(F(1)), R(F(1)), steps=8)
    assert v2.status is Status.FAILS


def test_monotonicity_random_probes():
    # If (r, q) is Strong and decreasing 1/q keeps every inequality
    # satisfied, the verdict stays Strong (finite rational systems).
    import random
    rng = random.Random(7)
    prof = SymbolProfile.sphere_power(3, 2, F(1, 2))
    hits = 0
    while hits < 25:
        x = F(rng.randint(60, 120), 120)
        y = F(rng.randint(0, 60), 120)
        v = check_gn_highd_general(prof, R(y), R(x))
        if not v.ok:
            continue
        hits += 1
        y2 = y - F(1, 120)
        if y2 >= 0:
            v2 = check_gn_highd_general(prof, R(y2), R(x))
            lower_ok = 2 * prof.abar / (prof.k + 2) <= x - y2
            upper_ok = x - y2 <= prof.sbar / prof.d
            if lower_ok and upper_ok and min(x, 1 - y2) >= (prof.k + 2 * prof.abar) / (2 * F(prof.k + 1)):
                assert v2.ok


def test_fails_trace_is_reproducible():
    v = check_gn_sphere(2, 2, F(1, 2), R(F(1, 2)), R(F(1, 4)))
    assert v.status is Status.FAILS and v.violated()
    again = check_gn_sphere(2, 2, F(1, 2), R(F(1, 2)), R(F(1, 4)))
    assert [c.cond_id for c in v.violated()] == [c.cond_id for c in again.violated()]


def test_dyadic_bound_weak_on_exceptional_set():
    v = dyadic_bound(F(2, 3), F(0), 4, 2)
    assert v.status is Status.WEAK_TYPE_ONLY
    assert v.extras["decay"] == F(1) - F(1, 100)
    v2 = dyadic_bound(F(1, 2), F(1, 4), 4, 2)
    assert v2.ok and v2.extras["decay"] == F(1, 2)


def test_research_mode_search():
    # At r = 2 the best decay available is 1/2, so abar = 1/4 has a grid
    # witness but abar = 1/2 does not (the Stein-Tomas limited boundary).
    prof = SymbolProfile.sphere_power(4, 2, F(3, 4))
    hit, witness = critical_membership_search(prof, F(1, 4), F(1, 2), F(1, 2),
                                              denominator=16)
    assert hit and witness["decay"] > prof.abar
    prof2 = SymbolProfile.sphere_power(4, 2, F(1, 2))
    hit2, _ = critical_membership_search(prof2, F(1, 4), F(1, 2), F(1, 2),
                                         denominator=16)
    assert not hit2
