from ..cyclo import CycloNumber
from ..hopf_core import HopfStructure
from ..mixins import DumpableFileResource, LoadableFileResource
from ..models.structure import StructureFileModel
from .scalars import cyclo_from_model, cyclo_to_model, sparse_from_model, sparse_to_model


class StructureFile(LoadableFileResource, DumpableFileResource):
    """
    Structure-constant file resource.
    """

    MODEL = StructureFileModel
    RESOURCE_NAME = "structure"

    @classmethod
    def from_model(cls, model: StructureFileModel) -> HopfStructure:
        d = model.dimension
        mult = {}
        for i, j, k, c in model.mult:
            mult.setdefault((i, j), []).append((k, c))
        comult = [[] for _ in range(d)]
        for i, j, k, c in model.comult:
            comult[i].append(((j, k), c))
        return HopfStructure(
            model.basis_labels,
            {key: sparse_from_model(entries) for key, entries in mult.items()},
            sparse_from_model(model.unit),
            [_tensor_from_entries(entries) for entries in comult],
            [cyclo_from_model(c) for c in model.counit],
            [
                {j: value for j, c in enumerate(row) if not (value := cyclo_from_model(c)).is_zero()}
                for row in model.antipode
            ],
        )

    @classmethod
    def to_model(cls, H: HopfStructure) -> StructureFileModel:
        zero = CycloNumber.zero()
        return StructureFileModel(
            dimension=H.dimension,
            basis_labels=list(H.basis_labels),
            unit=sparse_to_model(H.unit),
            mult=[
                (i, j, k, cyclo_to_model(value[k]))
                for (i, j), value in sorted(H.mult.items())
                for k in sorted(value)
            ],
            comult=[
                (i, j, k, cyclo_to_model(H.comult[i][(j, k)]))
                for i in range(H.dimension)
                for (j, k) in sorted(H.comult[i])
            ],
            counit=[cyclo_to_model(c) for c in H.counit],
            antipode=[
                [cyclo_to_model(H.antipode[i].get(j, zero)) for j in range(H.dimension)]
                for i in range(H.dimension)
            ],
        )


def _tensor_from_entries(entries):
    tensor = {}
    for key, model in entries:
        value = tensor.get(key, CycloNumber.zero()) + cyclo_from_model(model)
        if value.is_zero():
            tensor.pop(key, None)
        else:
            tensor[key] = value
    return tensor
