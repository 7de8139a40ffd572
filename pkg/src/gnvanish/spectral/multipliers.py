"""Fourier symbols and their action as multiplier operators on grids."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .grid import Grid, GridFunction, Space

_OCCUPIED_RTOL = 1e-13


@dataclass(frozen=True)
class SymbolSpec:
    """A Fourier symbol evaluable on grid frequencies.

    kinds:
      identity                    1
      radial_power_minus_one(s)   |xi|^s - 1   (vanishes on the unit sphere)
      radial_power(s)             |xi|^s
      bessel_power(s)             (1 + |xi|^2)^{s/2}
      point_zeros([(xi*, a)])     prod |xi - xi*|^a   (d = 1 zero sets)
      tabulated(values)           frequency-sampled values, given directly
    """

    kind: str
    power: float | None = None
    zeros: tuple[tuple[float, float], ...] = ()
    table: np.ndarray | None = field(default=None, repr=False)

    @classmethod
    def identity(cls) -> "SymbolSpec":
        return cls("identity")

    @classmethod
    def radial_power_minus_one(cls, s: float) -> "SymbolSpec":
        return cls("radial_power_minus_one", power=float(s))

    @classmethod
    def radial_power(cls, s: float) -> "SymbolSpec":
        return cls("radial_power", power=float(s))

    @classmethod
    def bessel_power(cls, s: float) -> "SymbolSpec":
        return cls("bessel_power", power=float(s))

    @classmethod
    def point_zeros(cls, zeros: Sequence[tuple[float, float]]) -> "SymbolSpec":
        return cls("point_zeros", zeros=tuple((float(a), float(b)) for a, b in zeros))

    @classmethod
    def tabulated(cls, values: np.ndarray) -> "SymbolSpec":
        return cls("tabulated", table=np.asarray(values))

    def evaluate(self, grid: Grid) -> np.ndarray:
        if self.kind == "identity":
            return np.ones(grid.shape())
        if self.kind == "tabulated":
            if self.table.shape != grid.shape():
                raise ValueError("tabulated symbol shape does not match the grid")
            return self.table
        if self.kind == "point_zeros":
            if grid.d != 1:
                raise ValueError("point_zeros symbols are one-dimensional")
            xi = grid.axis_frequency()
            out = np.ones_like(xi)
            with np.errstate(divide="ignore"):
                for center, order in self.zeros:
                    out = out * np.abs(xi - center) ** order
            return out
        r = grid.frequency_radius()
        with np.errstate(divide="ignore"):
            if self.kind == "radial_power_minus_one":
                return r ** self.power - 1.0
            if self.kind == "radial_power":
                return r ** self.power
            if self.kind == "bessel_power":
                return (1.0 + r ** 2) ** (self.power / 2.0)
        raise ValueError(f"unknown symbol kind {self.kind!r}")

    def __mul__(self, other: "SymbolSpec") -> "_SymbolProduct":
        return _SymbolProduct((self, other))


@dataclass(frozen=True)
class _SymbolProduct:
    factors: tuple

    def evaluate(self, grid: Grid) -> np.ndarray:
        out = np.ones(grid.shape())
        for f in self.factors:
            out = out * f.evaluate(grid)
        return out

    def __mul__(self, other) -> "_SymbolProduct":
        return _SymbolProduct(self.factors + (other,))


def apply_multiplier(u: GridFunction, m) -> GridFunction:
    """Frequency-wise product with the symbol, returned in physical space.

    Linear; exact on band-limited inputs up to transform round-off.  A
    non-finite symbol value at an occupied frequency (one carrying spectral
    mass) raises, naming the offending frequency.
    """
    hat = u.to_frequency()
    vals = np.asarray(m.evaluate(u.grid))
    bad = ~np.isfinite(vals)
    if bad.any():
        occupied = np.abs(hat.samples) > _OCCUPIED_RTOL * np.abs(hat.samples).max(initial=0.0)
        hit = bad & occupied
        if hit.any():
            idx = tuple(int(i) for i in np.argwhere(hit)[0])
            ax = u.grid.axis_frequency()
            xi = tuple(float(ax[i]) for i in idx)
            raise ValueError(f"symbol is not finite at occupied frequency xi = {xi}")
        vals = np.where(bad, 0.0, vals)
    out = GridFunction(u.grid, hat.samples * vals, Space.FREQUENCY)
    return out.to_physical()
