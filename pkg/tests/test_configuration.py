import pytest

import hopfforge.configuration as config_module
from hopfforge.configuration import (
    MAX_DIM_ENV_VAR,
    bounds_from_environment,
    configure,
    get_bounds,
    reset,
)


def test_configure():
    """Test engine configuration."""
    bounds = configure(max_group_order=16, max_dimension=32, max_hexagon_dimension=8)
    assert get_bounds() is bounds
    assert bounds.max_group_order == 16
    assert bounds.max_dimension == 32
    assert bounds.max_hexagon_dimension == 8


def test_configure_defaults():
    """Test the default bounds."""
    bounds = configure()
    assert bounds.max_group_order == 64
    assert bounds.max_dimension == 64
    assert bounds.max_hexagon_dimension == 32


def test_configure_multiple_times():
    """Test that configure can be called multiple times."""
    configure(max_dimension=8)
    configure(max_dimension=16)
    assert get_bounds().max_dimension == 16


def test_get_bounds_before_configure(monkeypatch):
    """Test defaults apply when configure was never called."""
    monkeypatch.delenv(MAX_DIM_ENV_VAR, raising=False)
    config_module._bounds = None
    assert get_bounds().max_dimension == 64


def test_reset():
    """Test reset drops configured bounds."""
    configure(max_dimension=8)
    reset()
    assert config_module._bounds is None


def test_bounds_from_environment(monkeypatch):
    """Test HOPFFORGE_MAX_DIM sets the dimension bound."""
    monkeypatch.setenv(MAX_DIM_ENV_VAR, "16")
    assert bounds_from_environment().max_dimension == 16
    reset()
    assert get_bounds().max_dimension == 16


@pytest.mark.parametrize("raw", ["sixteen", "0", "-4"])
def test_bounds_from_environment_ignores_bad_values(monkeypatch, raw):
    """Test unusable HOPFFORGE_MAX_DIM values fall back to the default."""
    monkeypatch.setenv(MAX_DIM_ENV_VAR, raw)
    assert bounds_from_environment().max_dimension == 64


def test_configure_rejects_zero():
    """Test bounds must be positive."""
    with pytest.raises(ValueError):
        configure(max_group_order=0)
