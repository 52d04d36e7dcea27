from typing import List, NamedTuple, Optional, Tuple

from ..hd_builder import HDAlgebra
from ..hopf_core import Element
from ..mixins import DumpableFileResource, LoadableFileResource
from ..models.generators import GeneratorsFileModel, SkewGeneratorModel
from .scalars import sparse_from_model, sparse_to_model


class GeneratorsData(NamedTuple):
    grouplikes: List[Element]
    skew_primitives: Optional[List[Tuple[Tuple[int, ...], Element]]]


class GeneratorsFile(LoadableFileResource, DumpableFileResource):
    """
    Generators file resource used by recognition.
    """

    MODEL = GeneratorsFileModel
    RESOURCE_NAME = "generators"

    @classmethod
    def from_model(cls, model: GeneratorsFileModel) -> GeneratorsData:
        skew = None
        if model.skew_primitives is not None:
            skew = [
                (tuple(entry.grade), sparse_from_model(entry.element))
                for entry in model.skew_primitives
            ]
        return GeneratorsData([sparse_from_model(g) for g in model.grouplikes], skew)

    @classmethod
    def to_model(cls, data: GeneratorsData) -> GeneratorsFileModel:
        skew = None
        if data.skew_primitives is not None:
            skew = [
                SkewGeneratorModel(grade=list(grade), element=sparse_to_model(x))
                for grade, x in data.skew_primitives
            ]
        return GeneratorsFileModel(
            grouplikes=[sparse_to_model(g) for g in data.grouplikes], skew_primitives=skew
        )

    @classmethod
    def from_algebra(cls, hd: HDAlgebra) -> GeneratorsData:
        return GeneratorsData(
            hd.generator_grouplikes(),
            [(tuple(grade), x) for grade, x in hd.skew_generators()],
        )
