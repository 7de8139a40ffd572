"""Grid-based realization of Fourier multipliers, dyadic projectors, and
structured test-function families."""

from .bumps import BumpProfile, CutoffTau, plateau, smooth_step
from .families import (annulus_bump, dilated_grid, dilated_modulated_bump,
                       knapp_cap, knapp_grid, random_band_limited)
from .grid import (Grid, GridFunction, Space, load_gridfunction, lp_norm,
                   save_gridfunction)
from .multipliers import SymbolSpec, apply_multiplier
from .projectors import (annulus_kernel, dyadic_projector, slab_kernel,
                         slab_projector, split_frequencies)

__all__ = [
    "Grid", "GridFunction", "Space", "lp_norm",
    "save_gridfunction", "load_gridfunction",
    "BumpProfile", "CutoffTau", "plateau", "smooth_step",
    "SymbolSpec", "apply_multiplier",
    "dyadic_projector", "annulus_kernel", "slab_projector", "slab_kernel",
    "split_frequencies",
    "knapp_cap", "knapp_grid", "annulus_bump", "dilated_modulated_bump",
    "dilated_grid", "random_band_limited",
]
