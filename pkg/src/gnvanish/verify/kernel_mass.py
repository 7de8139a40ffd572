"""Kernel L^1 mass of a Fourier multiplier, with Richardson refinement.

A finite L^1 kernel certifies the symbol as a universal multiplier
(Young's inequality bounds it on every L^p simultaneously), so this is
the numeric side of the multiplier criteria used for the growth-order
analysis.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from ..spectral.grid import Grid, lp_norm
from ..spectral.projectors import kernel_from_multiplier


def _mass_on(grid: Grid, m) -> float:
    vals = np.asarray(m.evaluate(grid), dtype=np.complex128)
    vals = np.where(np.isfinite(vals), vals, 0.0)
    return lp_norm(kernel_from_multiplier(grid, vals), Fraction(1))


def kernel_l1_report(m, grid: Grid) -> dict:
    """Kernel mass at the given resolution and at double resolution (same
    box), with the h^2 Richardson extrapolant."""
    coarse = _mass_on(grid, m)
    fine = _mass_on(Grid(grid.d, grid.n * 2, grid.half_width), m)
    return {
        "coarse": coarse,
        "fine": fine,
        "extrapolated": (4.0 * fine - coarse) / 3.0,
        "ratio": fine / coarse if coarse else float("inf"),
    }


def multiplier_kernel_l1(m, grid: Grid) -> float:
    """h^d sum |F^{-1} m| with Richardson extrapolation over two
    resolutions."""
    return kernel_l1_report(m, grid)["extrapolated"]
