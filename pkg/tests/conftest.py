"""Shared fixtures and random-setup generators for the test suite."""

import random

import pytest

from tls_heat_engine import BathPair, EngineSetup


@pytest.fixture
def figure_baths():
    """The bath pair used for all figure-derived checks."""
    return BathPair(9.0, 1.0)


def random_extracting_setup(rng: random.Random, max_ratio=20.0, max_x1=3.0) -> EngineSetup:
    """Random setup with nu strictly above theta, so the swap extracts work.

    Gap/temperature ratios stay below ~60 so no occupation saturates and
    finite-difference probes keep their nominal accuracy.
    """
    t2 = 10.0 ** rng.uniform(-1.0, 1.0)
    t1 = t2 * rng.uniform(1.2, max_ratio)
    theta = t2 / t1
    nu = theta + (1.0 - theta) * rng.uniform(1e-3, 0.999)
    a1 = t1 * rng.uniform(0.05, max_x1)
    return EngineSetup(a1, nu * a1, BathPair(t1, t2))


def random_setup(rng: random.Random, max_ratio=20.0, max_x1=3.0) -> EngineSetup:
    """Random setup with nu anywhere in (0, 1), extracting or not."""
    t2 = 10.0 ** rng.uniform(-1.0, 1.0)
    t1 = t2 * rng.uniform(1.2, max_ratio)
    nu = rng.uniform(1e-3, 0.999)
    a1 = t1 * rng.uniform(0.05, max_x1)
    return EngineSetup(a1, nu * a1, BathPair(t1, t2))
