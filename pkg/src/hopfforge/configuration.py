import os
from typing import Optional

from .enums.severity_enum import Severity_Enum
from .forge_logging import log_info, log_warning
from .models.engine_bounds import EngineBoundsModel

MAX_DIM_ENV_VAR = "HOPFFORGE_MAX_DIM"

# Global bounds instance
_bounds: Optional[EngineBoundsModel] = None


def configure(
    max_group_order: int = 64,
    max_dimension: int = 64,
    max_hexagon_dimension: int = 32,
) -> EngineBoundsModel:
    """
    Configure the engine bounds.

    Args:
        max_group_order (int): Largest group order accepted by enumerations. Default is 64.
        max_dimension (int): Largest algebra dimension accepted by constructions. Default is 64.
        max_hexagon_dimension (int): Largest dimension for the triple-tensor checks. Default is 32.
    """
    global _bounds
    _bounds = EngineBoundsModel(
        max_group_order=max_group_order,
        max_dimension=max_dimension,
        max_hexagon_dimension=max_hexagon_dimension,
    )
    log_info(
        Severity_Enum.Info.value,
        f"Engine configured with max_group_order: {max_group_order}, "
        f"max_dimension: {max_dimension}, "
        f"max_hexagon_dimension: {max_hexagon_dimension}",
    )
    return _bounds


def bounds_from_environment() -> EngineBoundsModel:
    """Default bounds with HOPFFORGE_MAX_DIM applied when it is set."""
    raw = os.environ.get(MAX_DIM_ENV_VAR)
    if raw is None:
        return EngineBoundsModel()
    try:
        return EngineBoundsModel(max_dimension=int(raw))
    except ValueError:
        log_warning(
            Severity_Enum.Warn.value,
            f"Ignoring {MAX_DIM_ENV_VAR}={raw!r}: not a positive integer",
        )
        return EngineBoundsModel()


# Utility function to get the shared bounds
def get_bounds() -> EngineBoundsModel:
    """Get the configured bounds, falling back to defaults and the environment."""
    if _bounds is None:
        return bounds_from_environment()
    return _bounds


def reset():
    """Drop configured bounds so the defaults apply again."""
    global _bounds
    _bounds = None
