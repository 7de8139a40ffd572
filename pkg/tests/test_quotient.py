import math
from fractions import Fraction as F

import numpy as np
import pytest

from gnvanish.exponents import SymbolProfile
from gnvanish.spectral import Grid, GridFunction, Space, SymbolSpec
from gnvanish.verify import QuotientProblem, gn_quotient
from conftest import gaussian_on


def test_kappa_one_identity_gives_unit_quotient(grid1d):
    prob = QuotientProblem(
        profile=SymbolProfile(1, 1, 1, 0, 2, 0, F(1)),
        p1=SymbolSpec.radial_power_minus_one(2.0), p2=SymbolSpec.identity(),
        iq=F(1, 2), ir1=F(1, 2), ir2=F(1, 2))
    u = gaussian_on(grid1d)
    assert gn_quotient(u, prob).quotient == pytest.approx(1.0, rel=1e-12)


def test_scale_invariance(grid1d):
    prob = QuotientProblem.sphere_power(1, 2, F(1, 2), F(1, 4), F(1, 2))
    u = gaussian_on(grid1d)
    q1 = gn_quotient(u, prob).quotient
    q7 = gn_quotient(7.0 * u, prob).quotient
    assert q7 == pytest.approx(q1, rel=1e-12)


def test_gaussian_quotient_against_quadrature_oracle():
    # d = 1, (s, kappa, r1, r2, q) = (2, 1/2, 2, 2, 4), u = exp(-x^2/2).
    # Oracle by closed-form Gaussian integrals:
    #   ||u||_4 = (pi/2)^{1/8}, ||u||_2 = pi^{1/4},
    #   ||(|D|^2-1)u||_2 = (3 sqrt(pi)/4)^{1/2}.
    expected = (math.pi / 2) ** 0.125 / (
        (0.75 * math.sqrt(math.pi)) ** 0.25 * math.pi ** 0.125)
    prob = QuotientProblem.sphere_power(1, 2, F(1, 2), F(1, 4), F(1, 2))
    base = gn_quotient(gaussian_on(Grid(1, 512, 20.0)), prob).quotient
    dense = gn_quotient(gaussian_on(Grid(1, 2048, 20.0)), prob).quotient
    assert base == pytest.approx(expected, abs=1e-4)
    assert base == pytest.approx(dense, abs=1e-4)


def test_degenerate_denominator_raises(grid2d):
    # spectrum exactly on the shell where the symbol vanishes to grid
    # precision would make the denominator tiny; force an exact zero with a
    # tabulated symbol
    prob = QuotientProblem(
        profile=SymbolProfile(2, 1, 1, 0, 2, 0, F(1, 2)),
        p1=SymbolSpec.tabulated(np.zeros(grid2d.shape())),
        p2=SymbolSpec.identity(),
        iq=F(1, 4), ir1=F(1, 2), ir2=F(1, 2))
    with pytest.raises(ValueError, match="denominator degenerate"):
        gn_quotient(gaussian_on(grid2d), prob)


def test_sample_recompute_invariant(grid1d):
    prob = QuotientProblem.sphere_power(1, 2, F(1, 2), F(1, 4), F(1, 2))
    sample = gn_quotient(gaussian_on(grid1d), prob)
    assert sample.recompute() == pytest.approx(sample.quotient, rel=1e-10)
