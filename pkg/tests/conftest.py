import numpy as np
import pytest

from gnvanish.spectral import BumpProfile, Grid, GridFunction, Space


@pytest.fixture(scope="session")
def eta() -> BumpProfile:
    return BumpProfile()


@pytest.fixture()
def grid1d() -> Grid:
    return Grid(1, 256, 16.0)


@pytest.fixture()
def grid2d() -> Grid:
    return Grid(2, 64, 16.0)


def gaussian_on(grid: Grid, width: float = 1.0) -> GridFunction:
    rsq = grid.physical_radius_sq()
    return GridFunction(grid, np.exp(-rsq / (2.0 * width ** 2)).astype(complex),
                        Space.PHYSICAL)
