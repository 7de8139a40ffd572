"""Smooth cutoffs: the dyadic bump with exact telescoping and the radial
shell cutoff used to split frequencies around the characteristic surface."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np


def smooth_step(t: np.ndarray) -> np.ndarray:
    """C-infinity monotone step: 0 for t <= 0, 1 for t >= 1."""
    t = np.asarray(t, dtype=float)
    with np.errstate(divide="ignore", over="ignore", invalid="ignore"):
        a = np.where(t > 0.0, np.exp(-1.0 / np.maximum(t, 1e-300)), 0.0)
        b = np.where(t < 1.0, np.exp(-1.0 / np.maximum(1.0 - t, 1e-300)), 0.0)
    out = a / (a + b)
    return np.where(t <= 0.0, 0.0, np.where(t >= 1.0, 1.0, out))


def plateau(t: np.ndarray, inner: float = 0.5, outer: float = 1.0) -> np.ndarray:
    """Smooth even plateau: 1 on |t| <= inner, 0 off |t| >= outer."""
    t = np.abs(np.asarray(t, dtype=float))
    return smooth_step((outer - t) / (outer - inner))


@dataclass(frozen=True)
class BumpProfile:
    """Dyadic bump eta supported in [-2, -1/2] u [1/2, 2] built as
    eta(t) = theta(t) - theta(2t) from a smooth cutoff theta that is 1 on
    |t| <= 1 and 0 off |t| >= 2.  The telescoping construction makes

        sum_j eta(2^j t) = theta(2^a t) - theta(2^{b+1} t)

    for any finite index window [a, b], hence the dyadic partition of
    unity is exact (to round-off) wherever the window covers the scale.

    The profile keeps a dense sample table of eta on [-2, 2] alongside
    the closed form, for inspection and plotting.
    """

    n_samples: int = 2049
    ts: np.ndarray = field(init=False, repr=False)
    values: np.ndarray = field(init=False, repr=False)

    def __post_init__(self) -> None:
        ts = np.linspace(-2.0, 2.0, self.n_samples)
        object.__setattr__(self, "ts", ts)
        object.__setattr__(self, "values", self.eta(ts))

    @staticmethod
    def theta(t: np.ndarray) -> np.ndarray:
        return plateau(t, inner=1.0, outer=2.0)

    def eta(self, t) -> np.ndarray:
        t = np.asarray(t, dtype=float)
        return self.theta(t) - self.theta(2.0 * t)

    def __call__(self, t) -> np.ndarray:
        return self.eta(t)

    def partition_sum(self, t, j_min: int, j_max: int) -> np.ndarray:
        """sum_{j=j_min}^{j_max} eta(2^j t), evaluated via the telescope."""
        t = np.asarray(t, dtype=float)
        return self.theta(2.0 ** j_min * t) - self.theta(2.0 ** (j_max + 1) * t)


@dataclass(frozen=True)
class CutoffTau:
    """Radial cutoff tau: 1 where | |xi| - 1 | <= rho_in, 0 where
    | |xi| - 1 | >= rho_out, smooth monotone in between."""

    rho_in: float = 0.25
    rho_out: float = 0.5

    def __post_init__(self) -> None:
        if not 0.0 < self.rho_in < self.rho_out < 1.0:
            raise ValueError("need 0 < rho_in < rho_out < 1")

    def __call__(self, radius) -> np.ndarray:
        dist = np.abs(np.asarray(radius, dtype=float) - 1.0)
        return smooth_step((self.rho_out - dist) / (self.rho_out - self.rho_in))

    def evaluate(self, grid) -> np.ndarray:
        return self(grid.frequency_radius())
