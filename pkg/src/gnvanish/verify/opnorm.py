"""Operator-norm estimation for the dyadic projectors.

True L^p -> L^q norms are not computable from finitely many probes, so an
estimate is always reported as a pair: a certified lower bound (the best
quotient over an ensemble of probes) and, when Young's convolution
inequality applies, a kernel-norm upper bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import math

import numpy as np

from ..exponents.rational import recip
from ..spectral.bumps import BumpProfile, plateau
from ..spectral.families import random_band_limited
from ..spectral.grid import Grid, GridFunction, Space, lp_norm
from ..spectral.projectors import (annulus_kernel, dyadic_projector,
                                   slab_kernel, slab_projector)


@dataclass
class OpNormEstimate:
    lower: float
    upper: float | None
    witness: str
    projector: str
    j: int

    def to_dict(self) -> dict:
        return {"lower": self.lower, "upper": self.upper,
                "witness": self.witness, "projector": self.projector, "j": self.j}


def _point_mass(grid: Grid) -> GridFunction:
    u = np.zeros(grid.shape(), dtype=np.complex128)
    u[(grid.n // 2,) * grid.d] = 1.0
    return GridFunction(grid, u, Space.PHYSICAL)


def _from_hat(grid: Grid, hat: np.ndarray) -> GridFunction | None:
    gf = GridFunction(grid, hat.astype(np.complex128), Space.FREQUENCY)
    nrm = gf.l2()
    if nrm == 0.0:
        return None
    return GridFunction(grid, gf.samples / nrm, Space.FREQUENCY).to_physical()


def _adapted_probes(projector: str, grid: Grid, j: int,
                    eta: BumpProfile) -> list[tuple[str, GridFunction]]:
    """Extremizer-style probes whose spectra sit exactly on the projector's
    multiplier support: the full dyadic shell and, for the slab, the shell
    cut to an angular sector of aperture sqrt(2^-j) (a cap)."""
    if projector == "slab":
        mult = _slab_mult(grid, j, eta)
    elif projector == "annulus":
        mult = _annulus_mult(grid, j, eta)
    else:
        return []
    out = []
    shell = _from_hat(grid, mult)
    if shell is not None:
        out.append(("shell", shell))
    if projector == "slab" and grid.d >= 2:
        mesh = grid.frequency_mesh()
        r = grid.frequency_radius()
        with np.errstate(invalid="ignore", divide="ignore"):
            cosang = np.where(r > 0, mesh[0] / np.where(r > 0, r, 1.0), 0.0)
        angle = np.arccos(np.clip(cosang, -1.0, 1.0))
        cap = _from_hat(grid, mult * plateau(angle / math.sqrt(2.0 ** (-j))))
        if cap is not None:
            out.append(("cap", cap))
    return out


def _slab_mult(grid: Grid, j: int, eta: BumpProfile) -> np.ndarray:
    from ..spectral.projectors import _slab_multiplier
    return _slab_multiplier(grid, j, eta)


def _annulus_mult(grid: Grid, j: int, eta: BumpProfile) -> np.ndarray:
    from ..spectral.projectors import _annulus_multiplier
    return _annulus_multiplier(grid, j, [0.0] * grid.d, eta)


def _probes(projector: str, grid: Grid, j: int, ensemble_size: int,
            seed: int, eta: BumpProfile) -> list[tuple[str, GridFunction]]:
    # The point mass realizes the L^1 -> L^inf Young bound exactly.
    out: list[tuple[str, GridFunction]] = [("delta", _point_mass(grid))]
    out.extend(_adapted_probes(projector, grid, j, eta))
    width = 2.0 ** (-j)
    if projector == "slab":
        band = (max(1.0 - 2.0 * width, 0.0), min(1.0 + 2.0 * width, grid.xi_max * 0.98))
    elif projector == "annulus":
        band = (0.55 * width, min(1.9 * width, grid.xi_max * 0.98))
    else:  # identity
        band = (0.0, grid.xi_max * 0.5)
    for i in range(ensemble_size):
        try:
            out.append((f"random-{i}", random_band_limited(grid, seed + i, band)))
        except ValueError:
            pass
    return out


def _apply(projector: str, u: GridFunction, j: int, eta: BumpProfile) -> GridFunction:
    if projector == "slab":
        return slab_projector(u, j, eta)
    if projector == "annulus":
        return dyadic_projector(u, j, [0.0] * u.grid.d, eta)
    if projector == "identity":
        return u.to_physical()
    raise ValueError(f"unknown projector {projector!r}")


def _kernel(projector: str, grid: Grid, j: int, eta: BumpProfile) -> GridFunction | None:
    if projector == "slab":
        return slab_kernel(grid, j, eta)
    if projector == "annulus":
        return annulus_kernel(grid, j, [0.0] * grid.d, eta)
    return None


def estimate_opnorm(projector: str, grid: Grid, j: int, ip, iq,
                    ensemble_size: int = 4, seed: int = 0,
                    eta: BumpProfile | None = None) -> OpNormEstimate:
    """Lower-bound estimate of ||T||_{p->q} as max ||T u||_q / ||u||_p over
    the probe ensemble, with a Young upper bound ||K||_r, 1/r = 1-(1/p-1/q),
    attached for the convolution projectors."""
    if ensemble_size < 0:
        raise ValueError("ensemble_size must be >= 0")
    eta = eta or BumpProfile()
    x, y = recip(ip), recip(iq)
    best, witness = 0.0, ""
    for name, u in _probes(projector, grid, j, ensemble_size, seed, eta):
        tu = _apply(projector, u, j, eta)
        denom = lp_norm(u, x)
        if denom == 0.0:
            continue
        val = lp_norm(tu, y) / denom
        if val > best:
            best, witness = val, name
    upper = None
    kern = _kernel(projector, grid, j, eta)
    if kern is not None:
        ir_young = Fraction(1) - (x - y)  # reciprocal of the Young exponent
        upper = lp_norm(kern, ir_young)
    elif projector == "identity":
        upper = 1.0 if x == y else None
    return OpNormEstimate(lower=best, upper=upper, witness=witness,
                          projector=projector, j=j)
