from ..abgroup import CharacterIsomorphism, FiniteAbelianGroup
from ..mixins import DumpableFileResource, LoadableFileResource
from ..models.structure_choice import MMapEntryModel, StructureChoiceModel
from ..triangular import StructureChoice
from .scalars import cyclo_from_model, cyclo_to_model


class StructureChoiceFile(LoadableFileResource, DumpableFileResource):
    """
    Structure choice T = (phi, (M_g)) resource.
    """

    MODEL = StructureChoiceModel
    RESOURCE_NAME = "structure choice"

    @classmethod
    def from_model(cls, model: StructureChoiceModel) -> StructureChoice:
        group = FiniteAbelianGroup(model.cyclic_factors)
        return StructureChoice(
            CharacterIsomorphism(group, model.phi),
            {
                tuple(entry.grade): [[cyclo_from_model(c) for c in row] for row in entry.matrix]
                for entry in model.m_maps
            },
        )

    @classmethod
    def to_model(cls, choice: StructureChoice) -> StructureChoiceModel:
        return StructureChoiceModel(
            cyclic_factors=list(choice.phi.group.cyclic_factors),
            phi=[list(image) for image in choice.phi.images],
            m_maps=[
                MMapEntryModel(
                    grade=list(g),
                    matrix=[[cyclo_to_model(c) for c in row] for row in choice.m_maps[g]],
                )
                for g in sorted(choice.m_maps)
            ],
        )
