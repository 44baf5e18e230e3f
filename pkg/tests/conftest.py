"""Shared fixtures: the default lab grid plus seeded random-state helpers."""

from __future__ import annotations

import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from zenolab import Grid, Propagator, WaveFunction, halfline_pair, momentum_operator

settings.register_profile(
    "suite",
    max_examples=30,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")


@pytest.fixture(scope="session")
def grid() -> Grid:
    """The default lab domain: [-40, 40] at 2^12 points."""
    return Grid(-40.0, 40.0, 4096)


@pytest.fixture(scope="session")
def small_grid() -> Grid:
    """A cheap grid (k_max ~ 10) for property tests and moment checks."""
    return Grid(-40.0, 40.0, 256)


@pytest.fixture(scope="session")
def momentum(grid):
    return momentum_operator(grid)


@pytest.fixture(scope="session")
def translator(momentum):
    return Propagator(momentum)


@pytest.fixture(scope="session")
def zone_pair(grid):
    return halfline_pair(grid)


def random_state(space, seed: int) -> WaveFunction:
    """Normalized state with iid complex-normal samples from a seeded rng."""
    rng = np.random.default_rng(seed)
    values = rng.normal(size=space.n_points) + 1j * rng.normal(size=space.n_points)
    return WaveFunction(space, values).normalized()
