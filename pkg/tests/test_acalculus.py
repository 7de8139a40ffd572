from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gnvanish.exponents import (a_eps, a_formulas, big_a, binding_formulas,
                                exceptional_horizontal, exceptional_vertical,
                                in_exceptional_set)


def test_anchor_values():
    # p = q = 2 is the Plancherel point: no decay.
    assert big_a(F(1, 2), F(1, 2), 4, 2) == 0
    # (1, inf): the flat bound binds.
    assert big_a(F(1), F(0), 4, 2) == 1
    assert "A0" in binding_formulas(F(1), F(0), 4, 2)


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
def test_stein_tomas_vertex(k):
    ip, iq = F(1, 2), F(k, 2 * (k + 2))
    assert big_a(ip, iq, k + 1, k) == F(1, 2)
    vals = a_formulas(ip, iq, k + 1, k)
    assert vals["A1"] == F(1, 2) and vals["A2'"] == F(1, 2)


pairs = st.tuples(
    st.fractions(min_value=0, max_value=1, max_denominator=60),
    st.fractions(min_value=0, max_value=1, max_denominator=60),
)


@given(pairs, st.integers(min_value=2, max_value=5))
def test_duality(pair, d):
    ip, iq = max(pair), min(pair)
    for k in range(1, d):
        assert big_a(ip, iq, d, k) == big_a(1 - iq, 1 - ip, d, k)


def test_nonnegative_on_restriction_range():
    # On 1 <= p <= 2 <= q <= inf the minimum is nonnegative, vanishing
    # exactly at (1/2, 1/2).  (Off this range it can go negative: the
    # kernel bounds grow for thin slabs near p = q = 1.)
    for i in range(0, 21):
        for j in range(0, 21):
            ip = F(1, 2) + F(i, 40)
            iq = F(1, 2) - F(j, 40)
            a = big_a(ip, iq, 4, 2)
            assert a >= 0
            assert (a == 0) == (ip == iq == F(1, 2))
    assert big_a(F(1), F(1), 4, 2) < 0  # outside that range


def test_domain_validation():
    with pytest.raises(ValueError):
        big_a(F(1, 4), F(1, 2), 4, 2)  # q < p not allowed
    with pytest.raises(ValueError):
        big_a(F(1, 2), F(1, 4), 1, 1)  # d = 1 has no slab calculus
    with pytest.raises(ValueError):
        big_a(F(1, 2), F(1, 4), 4, 5)  # k > d - 1


def test_exceptional_set_members():
    assert in_exceptional_set(F(2, 3), F(0), 2)
    assert not in_exceptional_set(F(1, 2), F(1, 4), 2)
    assert in_exceptional_set(F(5, 6), F(1, 3), 2)  # dual branch


def test_exceptional_segment_endpoints_k2():
    assert exceptional_vertical(2) == (F(2, 3), F(1, 6))
    assert exceptional_horizontal(2) == (F(5, 6), F(1, 3))


def test_exceptional_set_is_self_dual():
    for i in range(25):
        for j in range(25):
            ip, iq = F(i, 24), F(j, 24)
            if iq > ip:
                continue
            assert in_exceptional_set(ip, iq, 2) == \
                in_exceptional_set(1 - iq, 1 - ip, 2)


def test_a_eps():
    # dimension one: plain difference of reciprocals, any eps
    assert a_eps(F(1), F(0), 1, 1, F(1, 100)) == 1
    assert a_eps(F(1), F(0), 1, 1, F(7, 9)) == 1
    # exceptional pair: exact eps discount
    assert a_eps(F(2, 3), F(0), 4, 2, F(1, 100)) == big_a(F(2, 3), F(0), 4, 2) - F(1, 100)
    # ordinary pair: no discount
    assert a_eps(F(1, 2), F(1, 2), 4, 2, F(1, 100)) == 0
    with pytest.raises(ValueError):
        a_eps(F(1, 2), F(1, 4), 4, 2, 0)


def test_a_eps_discount_exactly_on_exceptional_set():
    eps = F(1, 64)
    for i in range(0, 25):
        for j in range(0, 25):
            ip, iq = F(i, 24), F(j, 24)
            if iq > ip:
                continue
            gap = big_a(ip, iq, 4, 2) - a_eps(ip, iq, 4, 2, eps)
            assert gap == (eps if in_exceptional_set(ip, iq, 2) else 0)
