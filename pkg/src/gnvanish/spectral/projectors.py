"""Dyadic frequency projectors: annuli around a point and thin slabs
around the characteristic surface, with their convolution kernels.

Kernels are returned in operator normalization: K = (2pi)^{-d/2} times the
unitary inverse transform of the multiplier.  With that scaling the grid
identity T u = h^d (K * u) holds exactly, so discrete Young bounds
||T u||_q <= ||K||_r ||u||_p are directly comparable with probe quotients.
"""

from __future__ import annotations

import math
import warnings

import numpy as np

from .bumps import BumpProfile, CutoffTau
from .grid import Grid, GridFunction, Space


def kernel_from_multiplier(grid: Grid, mult: np.ndarray) -> GridFunction:
    """Operator-normalized convolution kernel of a frequency multiplier."""
    scale = (2.0 * math.pi) ** (-grid.d / 2.0)
    gf = GridFunction(grid, mult.astype(np.complex128), Space.FREQUENCY).to_physical()
    return GridFunction(grid, scale * gf.samples, Space.PHYSICAL)


def _annulus_multiplier(grid: Grid, j: int, xi0, eta: BumpProfile) -> np.ndarray:
    xi0 = np.atleast_1d(np.asarray(xi0, dtype=float))
    if xi0.shape != (grid.d,):
        raise ValueError(f"xi0 must have {grid.d} components")
    mesh = grid.frequency_mesh()
    dist_sq = sum((m - c) ** 2 for m, c in zip(mesh, xi0))
    return eta(2.0 ** j * np.sqrt(dist_sq))


def dyadic_projector(u: GridFunction, j: int, xi0, eta: BumpProfile) -> GridFunction:
    """Localize u to the annulus |xi - xi0| ~ 2^{-j} (support of
    eta(2^j |xi - xi0|)).  An annulus lying entirely outside the grid's
    frequency range produces the zero function and a warning."""
    mult = _annulus_multiplier(u.grid, j, xi0, eta)
    if not mult.any():
        warnings.warn(f"annulus 2^{-j}[1/2, 2] around {xi0} misses the frequency grid; "
                      "returning zero", stacklevel=2)
    hat = u.to_frequency()
    return GridFunction(u.grid, hat.samples * mult, Space.FREQUENCY).to_physical()


def annulus_kernel(grid: Grid, j: int, xi0, eta: BumpProfile) -> GridFunction:
    """Convolution kernel of the annulus projector (physical space)."""
    return kernel_from_multiplier(grid, _annulus_multiplier(grid, j, xi0, eta))


def _slab_multiplier(grid: Grid, j: int, eta: BumpProfile,
                     xi_star: float = 1.0) -> np.ndarray:
    width = 2.0 ** (-j)
    if width < grid.dxi:
        raise ValueError(
            f"slab of width 2^-{j} = {width:.3g} unresolvable: frequency spacing "
            f"is {grid.dxi:.3g}; use a finer grid")
    if grid.d == 1:
        arg = grid.axis_frequency() - xi_star
    else:
        arg = grid.frequency_radius() - 1.0
        if 1.0 + 2.0 * width >= grid.xi_max:
            raise ValueError(
                f"slab support | |xi| - 1 | <= {2 * width:.3g} exceeds the grid "
                f"frequency extent {grid.xi_max:.3g}")
    return eta(2.0 ** j * arg)


def slab_projector(u: GridFunction, j: int, eta: BumpProfile,
                   xi_star: float = 1.0) -> GridFunction:
    """Localize u to the 2^{-j}-thick shell around the unit sphere (d >= 2,
    radial form) or around the point xi_star (d = 1)."""
    mult = _slab_multiplier(u.grid, j, eta, xi_star)
    hat = u.to_frequency()
    return GridFunction(u.grid, hat.samples * mult, Space.FREQUENCY).to_physical()


def slab_kernel(grid: Grid, j: int, eta: BumpProfile,
                xi_star: float = 1.0) -> GridFunction:
    """Convolution kernel of the slab projector (physical space)."""
    return kernel_from_multiplier(grid, _slab_multiplier(grid, j, eta, xi_star))


def split_frequencies(u: GridFunction, tau: CutoffTau) -> tuple[GridFunction, GridFunction]:
    """Split u = u1 + u2 with u1 carrying the frequencies near the surface
    (multiplier tau) and u2 the rest (multiplier 1 - tau).  The second hat
    is formed as hat(u) - hat(u1), so reconstruction is exact."""
    hat = u.to_frequency()
    t = tau.evaluate(u.grid)
    hat1 = hat.samples * t
    hat2 = hat.samples - hat1
    u1 = GridFunction(u.grid, hat1, Space.FREQUENCY).to_physical()
    u2 = GridFunction(u.grid, hat2, Space.FREQUENCY).to_physical()
    return u1, u2
