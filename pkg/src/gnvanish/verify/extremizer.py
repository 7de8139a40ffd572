"""Derivative-free stochastic search for large interpolation quotients.

Random coordinate perturbations of the frequency coefficients with a
decreasing step, simulated-annealing acceptance, and restarts.  No
gradients: robustness over speed.  Deterministic per seed.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..spectral.bumps import plateau
from ..spectral.grid import Grid, GridFunction, Space
from .quotient import QuotientProblem, gn_quotient


@dataclass
class ExtremizerResult:
    best_quotient: float
    support: list[tuple[int, ...]]
    values: list[complex]
    iteration_log: list[float] = field(default_factory=list)
    seed: int = 0
    grid: Grid | None = None

    def best_function(self) -> GridFunction:
        hat = np.zeros(self.grid.shape(), dtype=np.complex128)
        for idx, val in zip(self.support, self.values):
            hat[tuple(idx)] = val
        return GridFunction(self.grid, hat, Space.FREQUENCY).to_physical()

    def to_dict(self) -> dict:
        return {
            "best_quotient": self.best_quotient,
            "seed": self.seed,
            "iteration_log": self.iteration_log,
            "support": [list(map(int, idx)) for idx in self.support],
            "values": [[v.real, v.imag] for v in self.values],
        }


def _band_mask(grid: Grid, band: tuple[float, float]) -> np.ndarray:
    r = grid.frequency_radius() if grid.d > 1 else np.abs(grid.axis_frequency())
    mask = (r >= band[0]) & (r <= band[1])
    if not mask.any():
        raise ValueError(f"band {band} contains no grid frequencies")
    return mask


def _concentrated_start(grid: Grid, mask: np.ndarray, width: float) -> np.ndarray:
    """Deterministic first candidate: coefficients concentrated in a thin
    shell around the characteristic radius 1 (a cap-like profile)."""
    r = grid.frequency_radius() if grid.d > 1 else np.abs(grid.axis_frequency())
    prof = plateau((r - 1.0) / max(width, 2.0 * grid.dxi))
    vals = prof[mask].astype(np.complex128)
    if not vals.any():
        vals = np.ones(int(mask.sum()), dtype=np.complex128)
    return vals


def extremizer_search(prob: QuotientProblem, grid: Grid, *, budget: int = 3,
                      seed: int = 0, band: tuple[float, float] = (0.0, 3.0),
                      iters: int = 120) -> ExtremizerResult:
    """Maximize the interpolation quotient over band-limited functions.

    budget counts restarts (>= 1); each restart runs `iters` annealing
    steps.  The iteration log records the best value seen so far, hence is
    non-decreasing.  The reported coefficients re-evaluate to the reported
    quotient exactly.
    """
    if budget < 1:
        raise ValueError("budget must allow at least one restart")
    band = (float(band[0]), min(float(band[1]), grid.xi_max * 0.95))
    mask = _band_mask(grid, band)
    idxs = np.argwhere(mask)
    m = idxs.shape[0]
    rng = np.random.default_rng(seed)

    def evaluate(coeff: np.ndarray) -> float:
        hat = np.zeros(grid.shape(), dtype=np.complex128)
        hat[mask] = coeff
        u = GridFunction(grid, hat, Space.FREQUENCY).to_physical()
        try:
            return gn_quotient(u, prob).quotient
        except ValueError:
            return 0.0

    best_coeff = None
    best_val = -np.inf
    log: list[float] = []

    for restart in range(budget):
        if restart == 0:
            coeff = _concentrated_start(grid, mask, width=0.1)
        else:
            coeff = rng.standard_normal(m) + 1j * rng.standard_normal(m)
        cur = evaluate(coeff)
        if cur > best_val:
            best_val, best_coeff = cur, coeff.copy()
        log.append(best_val)
        temperature = 0.05 * max(cur, 1e-12)
        scale = float(np.max(np.abs(coeff))) or 1.0
        step = 0.5 * scale
        for _ in range(iters):
            cand = coeff.copy()
            hits = rng.integers(0, m, size=max(1, m // 16))
            cand[hits] += step * (rng.standard_normal(hits.size)
                                  + 1j * rng.standard_normal(hits.size))
            val = evaluate(cand)
            accept = val > cur or rng.random() < np.exp((val - cur) / max(temperature, 1e-300))
            if accept:
                coeff, cur = cand, val
            if cur > best_val:
                best_val, best_coeff = cur, coeff.copy()
            log.append(best_val)
            step *= 0.985
            temperature *= 0.985

    support = [tuple(int(v) for v in row) for row in idxs]
    return ExtremizerResult(
        best_quotient=float(best_val),
        support=support,
        values=[complex(c) for c in best_coeff],
        iteration_log=[float(v) for v in log],
        seed=seed,
        grid=grid,
    )
