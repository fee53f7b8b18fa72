"""Shared fixtures: the documented sample configurations."""

import pytest

from swanson.model import SwansonParams
from swanson.potentials import RosenMorseConfig, ScreenedConfig


@pytest.fixture
def rm_default():
    """Default Rosen-Morse configuration (one admissible level)."""
    return RosenMorseConfig(), SwansonParams(2.0, 0.5, epsilon_hint=2.0)


@pytest.fixture
def rm_three_levels():
    """epsilon = 10 deepens the well to three admissible levels."""
    return RosenMorseConfig(epsilon=10.0), SwansonParams(2.0, 0.5, epsilon_hint=10.0)


@pytest.fixture
def screened_default():
    """Default screened configuration: valid but bound-state-free."""
    return ScreenedConfig(), SwansonParams(2.0, 0.5)


@pytest.fixture
def screened_bound():
    """alpha = -12 flips the matched wA positive: one bound level."""
    return ScreenedConfig(), SwansonParams(2.0, -12.0)


@pytest.fixture
def screened_two_levels():
    """alpha = -100: deep enough for two bound levels."""
    return ScreenedConfig(), SwansonParams(2.0, -100.0)
