from fractions import Fraction as F

import numpy as np
import pytest

from gnvanish.spectral import (Grid, GridFunction, Space, SymbolSpec,
                               apply_multiplier, lp_norm)
from conftest import gaussian_on


def _single_mode(grid, index):
    hat = np.zeros(grid.shape(), dtype=complex)
    hat[index] = 1.0
    return GridFunction(grid, hat, Space.FREQUENCY).to_physical()


def test_identity_keeps_function(grid2d):
    u = gaussian_on(grid2d)
    v = apply_multiplier(u, SymbolSpec.identity())
    assert np.abs(v.samples - u.samples).max() < 1e-12


def test_bessel_on_single_mode(grid1d):
    # one Fourier mode at xi0: the operator multiplies by (1 + xi0^2)
    idx = grid1d.n // 2 + 12
    xi0 = grid1d.axis_frequency()[idx]
    u = _single_mode(grid1d, idx)
    v = apply_multiplier(u, SymbolSpec.bessel_power(2.0))
    ratio = v.samples[5] / u.samples[5]
    assert ratio == pytest.approx(1.0 + xi0 ** 2, rel=1e-10)


def test_vanishing_symbol_kills_shell_modes():
    grid = Grid(2, 64, 16.0)
    r = grid.frequency_radius()
    # place spectrum on the grid frequencies closest to the unit sphere
    ring = np.abs(r - 1.0) < 0.5 * grid.dxi
    assert ring.any()
    u = GridFunction(grid, ring.astype(complex), Space.FREQUENCY).to_physical()
    v = apply_multiplier(u, SymbolSpec.radial_power_minus_one(2.0))
    # |xi|^2 - 1 is within O(dxi) of zero on those modes
    assert lp_norm(v, F(1, 2)) <= 3.0 * grid.dxi * lp_norm(u, F(1, 2))


def test_composition_matches_product(grid1d):
    u = gaussian_on(grid1d)
    m1 = SymbolSpec.bessel_power(1.0)
    m2 = SymbolSpec.radial_power_minus_one(2.0)
    once = apply_multiplier(u, m1 * m2)
    twice = apply_multiplier(apply_multiplier(u, m1), m2)
    scale = np.abs(once.samples).max()
    assert np.abs(once.samples - twice.samples).max() <= 1e-10 * scale


def test_singular_symbol_at_occupied_frequency(grid1d):
    u = gaussian_on(grid1d)  # occupies xi = 0
    with pytest.raises(ValueError, match="not finite at occupied frequency"):
        apply_multiplier(u, SymbolSpec.radial_power(-1.0))
    # but a function avoiding the singular frequency passes
    idx = grid1d.n // 2 + 20
    v = _single_mode(grid1d, idx)
    apply_multiplier(v, SymbolSpec.radial_power(-1.0))


def test_point_zeros_symbol(grid1d):
    m = SymbolSpec.point_zeros([(1.0, 1.0), (-1.0, 1.0)])
    vals = m.evaluate(grid1d)
    xi = grid1d.axis_frequency()
    assert vals == pytest.approx(np.abs(xi - 1.0) * np.abs(xi + 1.0))
    with pytest.raises(ValueError):
        m.evaluate(Grid(2, 16, 4.0))


def test_tabulated_shape_check(grid1d):
    with pytest.raises(ValueError):
        SymbolSpec.tabulated(np.ones(7)).evaluate(grid1d)
