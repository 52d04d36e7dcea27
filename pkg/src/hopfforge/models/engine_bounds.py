from pydantic import BaseModel, ConfigDict, Field


class EngineBoundsModel(BaseModel):
    """
    Desk-scale bounds applied by every enumeration and construction.
    """

    max_group_order: int = Field(default=64, ge=1, alias="maxGroupOrder")
    max_dimension: int = Field(default=64, ge=1, alias="maxDimension")
    max_hexagon_dimension: int = Field(default=32, ge=1, alias="maxHexagonDimension")

    model_config = ConfigDict(populate_by_name=True, frozen=True)
