from typing import List

from ..hd_builder import GeneratorSymbol, HDAlgebra, HDBasisLabel
from ..mixins import DumpableFileResource, LoadableFileResource
from ..models.label_map import LabelEntryModel, LabelMapModel


class LabelMapFile(LoadableFileResource, DumpableFileResource):
    """
    Label map of H(D): basis index to group part and wedge part.
    """

    MODEL = LabelMapModel
    RESOURCE_NAME = "label map"

    @classmethod
    def from_model(cls, model: LabelMapModel) -> List[HDBasisLabel]:
        entries = sorted(model.labels, key=lambda entry: entry.index)
        return [
            HDBasisLabel(
                tuple(entry.group_part),
                tuple(GeneratorSymbol(tuple(grade), index) for grade, index in entry.wedge_part),
            )
            for entry in entries
        ]

    @classmethod
    def to_model(cls, hd: HDAlgebra) -> LabelMapModel:
        return LabelMapModel(
            labels=[
                LabelEntryModel(
                    index=i,
                    group_part=list(label.group_part),
                    wedge_part=[(list(s.grade), s.index) for s in label.wedge_part],
                )
                for i, label in enumerate(hd.labels)
            ]
        )
