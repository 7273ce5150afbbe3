from __future__ import annotations

import random

import pytest

from softsets import t1ss, t2ss
from softsets.io import load_fixture


@pytest.fixture(scope="session")
def triangle_triple():
    """The three Type-1 soft sets of the triangle counterexample."""
    return (
        load_fixture("triangle_F"),
        load_fixture("triangle_G"),
        load_fixture("triangle_H"),
    )


@pytest.fixture(scope="session")
def houses():
    """The two Type-2 soft sets over the five-house universe."""
    return load_fixture("houses_F"), load_fixture("houses_G")


@pytest.fixture(scope="session")
def deterministic_example():
    """The deterministic Type-2 soft set."""
    return load_fixture("deterministic")


@pytest.fixture(scope="session")
def pantries():
    """The ideal and the two candidate menus of the decision example."""
    return (
        load_fixture("diet_ideal"),
        load_fixture("diet_pantry1"),
        load_fixture("diet_pantry2"),
    )


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)
