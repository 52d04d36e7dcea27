from typing import NamedTuple

from ..hopf_core import TensorElement
from ..mixins import DumpableFileResource, LoadableFileResource
from ..models.rmatrix import RMatrixFileModel
from .scalars import cyclo_from_model, cyclo_to_model


class RMatrixData(NamedTuple):
    dimension: int
    rmatrix: TensorElement


class RMatrixFile(LoadableFileResource, DumpableFileResource):
    """
    R-matrix file resource: sparse [i, j, c] triples.
    """

    MODEL = RMatrixFileModel
    RESOURCE_NAME = "R-matrix"

    @classmethod
    def from_model(cls, model: RMatrixFileModel) -> RMatrixData:
        R = {}
        for i, j, c in model.entries:
            value = R.get((i, j))
            value = cyclo_from_model(c) if value is None else value + cyclo_from_model(c)
            if value.is_zero():
                R.pop((i, j), None)
            else:
                R[(i, j)] = value
        return RMatrixData(model.dimension, R)

    @classmethod
    def to_model(cls, data: RMatrixData) -> RMatrixFileModel:
        return RMatrixFileModel(
            dimension=data.dimension,
            entries=[(i, j, cyclo_to_model(data.rmatrix[(i, j)])) for i, j in sorted(data.rmatrix)],
        )
