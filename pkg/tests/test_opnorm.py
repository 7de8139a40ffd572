from fractions import Fraction as F

import pytest

from gnvanish.spectral import BumpProfile, Grid, annulus_kernel, lp_norm
from gnvanish.verify import estimate_opnorm


def test_identity_estimate_has_equality_witness():
    est = estimate_opnorm("identity", Grid(1, 128, 8.0), 0, F(1, 2), F(1, 2),
                          ensemble_size=2, seed=1)
    assert est.lower >= 1.0 - 1e-10
    assert est.upper == pytest.approx(1.0)
    assert est.witness


def test_point_mass_realizes_young_bound_at_one_inf(eta):
    grid = Grid(2, 128, 16.0)
    est = estimate_opnorm("annulus", grid, 1, F(1), F(0), ensemble_size=2, seed=2)
    kern_max = lp_norm(annulus_kernel(grid, 1, [0.0, 0.0], eta), F(0))
    assert est.upper == pytest.approx(kern_max, rel=1e-12)
    assert est.lower == pytest.approx(est.upper, rel=1e-10)
    assert est.witness == "delta"


@pytest.mark.parametrize("projector,ip,iq", [
    ("annulus", F(1), F(0)),
    ("annulus", F(1, 2), F(1, 2)),
    ("slab", F(1, 2), F(1, 6)),
    ("slab", F(1), F(0)),
])
def test_lower_never_exceeds_upper(projector, ip, iq):
    grid = Grid(2, 128, 32.0)
    est = estimate_opnorm(projector, grid, 2, ip, iq, ensemble_size=3, seed=5)
    assert est.upper is not None
    assert est.lower <= est.upper * (1 + 1e-10)
