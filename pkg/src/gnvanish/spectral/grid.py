"""Periodic grids and sampled functions with a unitary Fourier transform.

The physical box is [-L, L)^d sampled at n points per axis (n a power of
two), so the spacing is h = 2L/n; the frequency grid has spacing
dxi = pi/L and covers [-pi n/(2L), pi n/(2L))^d.  Both sides use the
"natural" centered ordering: index 0 corresponds to coordinate -n/2 * h
(resp. -n/2 * dxi).  The transform is unitary with the (2pi)^{-d/2}
convention, so the discrete Plancherel identity

    h^d sum |u|^2 = dxi^d sum |u_hat|^2

holds exactly up to FFT round-off.
"""

from __future__ import annotations

import enum
import json
import math
import struct
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from ..exponents.rational import recip


class Space(enum.Enum):
    PHYSICAL = 0
    FREQUENCY = 1


@dataclass(frozen=True)
class Grid:
    d: int
    n: int
    half_width: float

    def __post_init__(self) -> None:
        if self.d not in (1, 2, 3):
            raise ValueError(f"d = {self.d}: grids support d in 1..3")
        if self.n < 8 or self.n & (self.n - 1) != 0:
            raise ValueError(f"n = {self.n} must be a power of two, >= 8")
        if not self.half_width > 0:
            raise ValueError("half_width must be positive")

    @property
    def h(self) -> float:
        return 2.0 * self.half_width / self.n

    @property
    def dxi(self) -> float:
        return math.pi / self.half_width

    @property
    def xi_max(self) -> float:
        """One-sided extent of the frequency grid."""
        return self.dxi * (self.n // 2)

    @property
    def cell_volume(self) -> float:
        return self.h ** self.d

    @property
    def freq_cell_volume(self) -> float:
        return self.dxi ** self.d

    def axis_physical(self) -> np.ndarray:
        return (np.arange(self.n) - self.n // 2) * self.h

    def axis_frequency(self) -> np.ndarray:
        return (np.arange(self.n) - self.n // 2) * self.dxi

    def frequency_mesh(self) -> tuple[np.ndarray, ...]:
        ax = self.axis_frequency()
        return tuple(np.meshgrid(*([ax] * self.d), indexing="ij"))

    def frequency_radius(self) -> np.ndarray:
        ax = self.axis_frequency()
        sq = ax ** 2
        out = sq
        for _ in range(self.d - 1):
            out = out[..., None] + sq
        return np.sqrt(out)

    def physical_radius_sq(self) -> np.ndarray:
        ax = self.axis_physical()
        sq = ax ** 2
        out = sq
        for _ in range(self.d - 1):
            out = out[..., None] + sq
        return out

    def shape(self) -> tuple[int, ...]:
        return (self.n,) * self.d


def _freeze(a: np.ndarray) -> np.ndarray:
    a = np.ascontiguousarray(a, dtype=np.complex128)
    a.setflags(write=False)
    return a


@dataclass(frozen=True)
class GridFunction:
    grid: Grid
    samples: np.ndarray
    space: Space

    def __post_init__(self) -> None:
        if self.samples.shape != self.grid.shape():
            raise ValueError(
                f"sample shape {self.samples.shape} != grid shape {self.grid.shape()}")
        object.__setattr__(self, "samples", _freeze(self.samples))

    # -- transforms ---------------------------------------------------------

    def to_frequency(self) -> "GridFunction":
        if self.space is Space.FREQUENCY:
            return self
        g = self.grid
        scale = (2.0 * math.pi) ** (-g.d / 2.0) * g.cell_volume
        hat = scale * np.fft.fftshift(np.fft.fftn(np.fft.ifftshift(self.samples)))
        return GridFunction(g, hat, Space.FREQUENCY)

    def to_physical(self) -> "GridFunction":
        if self.space is Space.PHYSICAL:
            return self
        g = self.grid
        scale = (2.0 * math.pi) ** (-g.d / 2.0) * g.freq_cell_volume * g.n ** g.d
        u = scale * np.fft.fftshift(np.fft.ifftn(np.fft.ifftshift(self.samples)))
        return GridFunction(g, u, Space.PHYSICAL)

    # -- algebra -------------------------------------------------------------

    def __add__(self, other: "GridFunction") -> "GridFunction":
        self._compatible(other)
        return GridFunction(self.grid, self.samples + other.samples, self.space)

    def __sub__(self, other: "GridFunction") -> "GridFunction":
        self._compatible(other)
        return GridFunction(self.grid, self.samples - other.samples, self.space)

    def __mul__(self, c) -> "GridFunction":
        return GridFunction(self.grid, self.samples * c, self.space)

    __rmul__ = __mul__

    def _compatible(self, other: "GridFunction") -> None:
        if self.grid != other.grid or self.space is not other.space:
            raise ValueError("grid functions live on different grids or spaces")

    def l2(self) -> float:
        vol = (self.grid.cell_volume if self.space is Space.PHYSICAL
               else self.grid.freq_cell_volume)
        return float(np.sqrt(vol * np.sum(np.abs(self.samples) ** 2)))


def lp_norm(u: GridFunction, ip, weak: bool = False) -> float:
    """Lebesgue norm of physical-space samples with cell-volume quadrature.

    ip is the reciprocal exponent: ip = 0 gives the max norm.  With
    weak=True the Lorentz L^{p,inf} quasinorm sup_t t (h^d #{|u| > t})^{1/p}
    is returned, maximized over the sample thresholds; weak norms at
    p in {1, inf} are rejected.
    """
    if u.space is not Space.PHYSICAL:
        raise ValueError("lp_norm expects physical-space samples")
    x = recip(ip)
    mags = np.abs(u.samples).ravel()
    vol = u.grid.cell_volume
    if weak:
        if x == 0 or x == 1:
            raise ValueError("weak quasinorm undefined for p in {1, inf} here")
        p = 1.0 / float(x)
        s = np.sort(mags)[::-1]
        counts = np.arange(1, s.size + 1, dtype=float)
        return float(np.max(s * (vol * counts) ** (1.0 / p)))
    if x == 0:
        return float(mags.max(initial=0.0))
    p = 1.0 / float(x)
    return float((vol * np.sum(mags ** p)) ** (1.0 / p))


# ---------------------------------------------------------------------------
# Serialization: fixed binary layout plus a JSON sidecar.
# ---------------------------------------------------------------------------

_HEADER = struct.Struct("<qqdq")  # d, n, half_width, space flag


def save_gridfunction(u: GridFunction, path: str | Path) -> None:
    path = Path(path)
    with open(path, "wb") as fh:
        fh.write(_HEADER.pack(u.grid.d, u.grid.n, u.grid.half_width, u.space.value))
        fh.write(np.ascontiguousarray(u.samples, dtype="<c16").tobytes())
    sidecar = {
        "d": u.grid.d,
        "n": u.grid.n,
        "half_width": u.grid.half_width,
        "space": u.space.name,
        "layout": "row-major, centered indexing, little-endian complex128",
        "header": "int64 d, int64 n, float64 half_width, int64 space",
    }
    Path(str(path) + ".json").write_text(json.dumps(sidecar, indent=2, sort_keys=True))


def load_gridfunction(path: str | Path) -> GridFunction:
    raw = Path(path).read_bytes()
    d, n, half_width, flag = _HEADER.unpack_from(raw)
    data = np.frombuffer(raw, dtype="<c16", offset=_HEADER.size)
    grid = Grid(int(d), int(n), float(half_width))
    return GridFunction(grid, data.reshape(grid.shape()).astype(np.complex128),
                        Space(int(flag)))
