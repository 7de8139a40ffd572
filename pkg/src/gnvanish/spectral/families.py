"""Structured test-function families used by the verification experiments.

All constructors return physical-space GridFunctions.  The cap and shell
families are built directly in frequency space from smoothed indicators
whose smoothing scales are proportional to the cap dimensions, so the
family is self-similar across the concentration parameter.
"""

from __future__ import annotations

import numpy as np

from .bumps import plateau
from .grid import Grid, GridFunction, Space


def _l2_normalized_from_hat(grid: Grid, hat: np.ndarray) -> GridFunction:
    gf = GridFunction(grid, hat.astype(np.complex128), Space.FREQUENCY)
    nrm = gf.l2()
    if nrm == 0.0:
        raise ValueError("empty frequency support on this grid")
    return GridFunction(grid, gf.samples / nrm, Space.FREQUENCY).to_physical()


def knapp_cap(grid: Grid, delta: float, axis: int = 0) -> GridFunction:
    """Unit-L2 function whose spectrum is a smoothed cap
    { | |xi| - 1 | <= delta, angle(xi, e_axis) <= sqrt(delta) }.

    The cap must be resolved: delta >= 4 * dxi.  Radial and angular
    smoothing widths are proportional to delta and sqrt(delta), so caps at
    different delta are rescaled copies of each other.
    """
    if grid.d < 2:
        raise ValueError("a spherical cap needs d >= 2")
    if not 0.0 < delta < 0.25:
        raise ValueError(f"delta = {delta} outside (0, 1/4)")
    if delta < 4.0 * grid.dxi:
        raise ValueError(
            f"cap of thickness {delta:.3g} unresolved: frequency spacing "
            f"{grid.dxi:.3g} (need delta >= 4 dxi)")
    if grid.xi_max < 1.0 + 2.0 * delta:
        raise ValueError("frequency grid does not contain the unit sphere")
    r = grid.frequency_radius()
    mesh = grid.frequency_mesh()
    with np.errstate(invalid="ignore", divide="ignore"):
        cos_angle = np.where(r > 0, mesh[axis] / np.where(r > 0, r, 1.0), 0.0)
    angle = np.arccos(np.clip(cos_angle, -1.0, 1.0))
    hat = plateau((r - 1.0) / delta) * plateau(angle / np.sqrt(delta))
    return _l2_normalized_from_hat(grid, hat)


def knapp_grid(d: int, delta: float, spacing_ratio: float = 0.25,
               max_freq: float = 2.0) -> Grid:
    """Grid tailored to a cap of thickness delta: frequency spacing
    spacing_ratio * delta and one-sided extent >= max_freq.  Keeping the
    ratio fixed across delta keeps the sampled caps self-similar."""
    dxi = spacing_ratio * delta
    n = 8
    while n // 2 * dxi < max_freq:
        n *= 2
    return Grid(d, n, np.pi / dxi)


def annulus_bump(grid: Grid, delta: float) -> GridFunction:
    """Unit-L2 function whose spectrum is the full smoothed shell
    { | |xi| - 1 | <= delta } (no angular cutoff)."""
    if not 0.0 < delta < 0.25:
        raise ValueError(f"delta = {delta} outside (0, 1/4)")
    if delta < 4.0 * grid.dxi:
        raise ValueError(
            f"shell of thickness {delta:.3g} unresolved: frequency spacing "
            f"{grid.dxi:.3g} (need delta >= 4 dxi)")
    if grid.xi_max < 1.0 + 2.0 * delta:
        raise ValueError("frequency grid does not contain the unit sphere")
    if grid.d == 1:
        arg = np.abs(grid.axis_frequency()) - 1.0
    else:
        arg = grid.frequency_radius() - 1.0
    hat = plateau(arg / delta)
    return _l2_normalized_from_hat(grid, hat)


def dilated_modulated_bump(grid: Grid, R: float, sigma: float = 4.0,
                           aliasing_tol: float = 1e-6,
                           normalize: str = "fourier_sup") -> GridFunction:
    """u_R(x) = phi(R x) e^{i R x_1} for the Gaussian bump
    phi(y) = exp(-|y|^2 / (2 sigma^2)).

    normalize: 'fourier_sup' scales so max |u_hat| = 1; 'none' keeps the
    raw amplitude (then ||u_R||_q = R^{-d/q} ||phi||_q up to quadrature).
    The spectrum sits around R e_1 with width R/sigma; R may not exceed a
    quarter of the grid's frequency extent, and the construction fails if
    more than aliasing_tol of the spectral mass sits in the outermost
    frequency shell (the aliasing audit).
    """
    if normalize not in ("fourier_sup", "none"):
        raise ValueError(f"unknown normalization {normalize!r}")
    if R < 1.0:
        raise ValueError(f"R = {R} must be >= 1")
    if R > grid.xi_max / 4.0:
        raise ValueError(
            f"R = {R} exceeds a quarter of the grid frequency extent "
            f"{grid.xi_max:.3g}")
    axes = [grid.axis_physical()] * grid.d
    rsq = grid.physical_radius_sq()
    u = np.exp(-(R ** 2) * rsq / (2.0 * sigma ** 2)).astype(np.complex128)
    x1 = axes[0]
    phase = np.exp(1j * R * x1)
    u = u * phase.reshape((-1,) + (1,) * (grid.d - 1))
    gf = GridFunction(grid, u, Space.PHYSICAL)
    hat = gf.to_frequency()
    mags = np.abs(hat.samples)
    total = float(np.sum(mags ** 2))
    edge = np.zeros(grid.shape(), dtype=bool)
    for ax in range(grid.d):
        sl = [slice(None)] * grid.d
        sl[ax] = slice(0, 2)
        edge[tuple(sl)] = True
        sl[ax] = slice(-2, None)
        edge[tuple(sl)] = True
    leak = float(np.sum(mags[edge] ** 2))
    if leak > aliasing_tol * total:
        raise ValueError(
            f"aliasing audit failed: boundary-shell mass fraction {leak / total:.2e}")
    if normalize == "none":
        return gf
    peak = mags.max()
    return GridFunction(grid, hat.samples / peak, Space.FREQUENCY).to_physical()


def dilated_grid(d: int, r_max: float, n: int = 1024) -> Grid:
    """Grid for the dilated-modulated family: frequency extent 4 * r_max."""
    dxi_needed = 4.0 * r_max / (n // 2)
    return Grid(d, n, np.pi / dxi_needed)


def random_band_limited(grid: Grid, seed: int, band: tuple[float, float]) -> GridFunction:
    """Unit-L2 function with i.i.d. complex Gaussian coefficients on the
    radial band {band[0] <= |xi| <= band[1]}; deterministic per seed."""
    lo, hi = float(band[0]), float(band[1])
    if not 0.0 <= lo < hi:
        raise ValueError(f"bad band {band}")
    if hi > grid.xi_max:
        raise ValueError(f"band {band} exceeds the grid frequency extent "
                         f"{grid.xi_max:.3g}")
    r = grid.frequency_radius() if grid.d > 1 else np.abs(grid.axis_frequency())
    mask = (r >= lo) & (r <= hi)
    if not mask.any():
        raise ValueError(f"band {band} contains no grid frequencies")
    rng = np.random.default_rng(seed)
    coeff = rng.standard_normal(grid.shape()) + 1j * rng.standard_normal(grid.shape())
    return _l2_normalized_from_hat(grid, np.where(mask, coeff, 0.0))
