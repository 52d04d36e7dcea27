from ..abgroup import FiniteAbelianGroup, SkewForm
from ..exceptions import DeserializationError
from ..hd_builder import Datum
from ..mixins import DumpableFileResource, LoadableFileResource
from ..models.datum import DatumModel, MultiplicityEntryModel
from ..models.form import FormModel
from ..models.group import GroupModel


def form_to_model(form: SkewForm) -> FormModel:
    return FormModel(
        cyclic_factors=list(form.group.cyclic_factors),
        conductor=form.conductor,
        exponent_matrix=[list(row) for row in form.exponent_matrix],
    )


def form_from_model(model: FormModel) -> SkewForm:
    return SkewForm(
        FiniteAbelianGroup(model.cyclic_factors), model.exponent_matrix, model.conductor
    )


class DatumFile(LoadableFileResource, DumpableFileResource):
    """
    Datum file resource: {"group": ..., "form": ..., "n": [...]}.
    """

    MODEL = DatumModel
    RESOURCE_NAME = "datum"

    @classmethod
    def from_model(cls, model: DatumModel) -> Datum:
        group = FiniteAbelianGroup(model.group.cyclic_factors)
        multiplicities = {}
        for entry in model.n:
            key = tuple(entry.element)
            if key in multiplicities:
                raise DeserializationError(f"Duplicate multiplicity for element {entry.element}")
            multiplicities[key] = entry.value
        return Datum(group, form_from_model(model.form), multiplicities)

    @classmethod
    def to_model(cls, datum: Datum) -> DatumModel:
        return DatumModel(
            group=GroupModel(cyclic_factors=list(datum.group.cyclic_factors)),
            form=form_to_model(datum.form),
            n=[
                MultiplicityEntryModel(element=list(g), value=value)
                for g, value in sorted(datum.n.items())
            ],
        )
