"""Tests for the file resources."""

import json
from fractions import Fraction

import pytest

from hopfforge.cyclo import CycloNumber, root_of_unity
from hopfforge.exceptions import DeserializationError
from hopfforge.models.verdict import VerdictReportModel
from hopfforge.resources import (
    DatumFile,
    GeneratorsFile,
    LabelMapFile,
    ReportFile,
    RMatrixData,
    RMatrixFile,
    StructureChoiceFile,
    StructureFile,
)
from hopfforge.resources.scalars import cyclo_from_model, cyclo_to_model, sparse_from_model

SWEEDLER_JSON = (
    '{"form":{"conductor":2,"cyclic_factors":[2],"exponent_matrix":[[1]]},'
    '"group":{"cyclic_factors":[2]},"n":[{"element":[1],"value":1}]}\n'
)


def datum_payload(**overrides):
    payload = json.loads(SWEEDLER_JSON)
    payload.update(overrides)
    return json.dumps(payload)


def test_datum_file_canonical_output(sweedler_datum):
    """Test datum files are written as canonical JSON."""
    assert DatumFile.dumps(sweedler_datum) == SWEEDLER_JSON


def test_datum_file_load(tmp_path, sweedler_datum):
    """Test loading a datum file from disk."""
    path = tmp_path / "sweedler.json"
    path.write_text(SWEEDLER_JSON, encoding="utf-8")
    assert DatumFile.load(str(path)) == sweedler_datum


def test_datum_file_dump(write_datum, z2xz2_datum):
    """Test dump writes a file that loads back to the same datum."""
    path = write_datum(z2xz2_datum, "z2xz2.json")
    assert DatumFile.load(path) == z2xz2_datum


def test_datum_file_missing_key_count_as_zero(h0_datum):
    """Test an absent n list means every multiplicity is zero."""
    payload = json.loads(SWEEDLER_JSON)
    del payload["n"]
    assert DatumFile.loads(json.dumps(payload)) == h0_datum


@pytest.mark.parametrize(
    "text",
    [
        "{not json",
        datum_payload(group={"cyclic_factors": [1]}),
        datum_payload(n=[{"element": [1], "value": -1}]),
        datum_payload(n=[{"element": [1], "value": 1}, {"element": [1], "value": 2}]),
        datum_payload(
            form={"conductor": 2, "cyclic_factors": [2], "exponent_matrix": [[1, 0]]}
        ),
        datum_payload(form={"cyclic_factors": [2], "exponent_matrix": [[1]]}),
    ],
)
def test_datum_file_rejects_malformed_input(text):
    """Test malformed datum files raise DeserializationError."""
    with pytest.raises(DeserializationError):
        DatumFile.loads(text)


def test_datum_file_missing_path(tmp_path):
    """Test a missing file raises DeserializationError."""
    with pytest.raises(DeserializationError):
        DatumFile.load(str(tmp_path / "missing.json"))


def test_structure_file(tmp_path, sweedler):
    """Test a structure file reproduces the structure constants."""
    path = str(tmp_path / "structure.json")
    StructureFile.dump(sweedler.structure, path)
    loaded = StructureFile.load(path)
    H = sweedler.structure
    assert loaded.dimension == H.dimension
    assert (loaded.mult, loaded.unit) == (H.mult, H.unit)
    assert (loaded.comult, loaded.counit, loaded.antipode) == (H.comult, H.counit, H.antipode)
    assert loaded.basis_labels == sweedler.structure.basis_labels


def test_structure_file_rejects_bad_index(sweedler):
    """Test out-of-range indices and decimal coefficients are rejected."""
    payload = json.loads(StructureFile.dumps(sweedler.structure))
    bad_index = dict(payload, mult=payload["mult"] + [[9, 0, 0, {"conductor": 1, "coeffs": ["1"]}]])
    with pytest.raises(DeserializationError):
        StructureFile.loads(json.dumps(bad_index))
    bad_coeff = dict(payload, counit=[{"conductor": 1, "coeffs": ["0.5"]}] * 4)
    with pytest.raises(DeserializationError):
        StructureFile.loads(json.dumps(bad_coeff))
    short = dict(payload, counit=payload["counit"][:2])
    with pytest.raises(DeserializationError):
        StructureFile.loads(json.dumps(short))


def test_rmatrix_file(sweedler_rmatrix):
    """Test R-matrix files keep every coefficient."""
    text = RMatrixFile.dumps(RMatrixData(4, sweedler_rmatrix))
    data = RMatrixFile.loads(text)
    assert data.dimension == 4
    assert data.rmatrix == sweedler_rmatrix


def test_rmatrix_file_merges_duplicate_entries():
    """Test repeated [i, j] entries add up and cancellations drop."""
    one = {"conductor": 1, "coeffs": ["1"]}
    minus_one = {"conductor": 1, "coeffs": ["-1"]}
    text = json.dumps(
        {"dimension": 2, "entries": [[0, 0, one], [0, 0, one], [1, 1, one], [1, 1, minus_one]]}
    )
    assert RMatrixFile.loads(text).rmatrix == {(0, 0): 2}


def test_rmatrix_file_rejects_out_of_range():
    """Test entries outside the dimension are rejected."""
    text = json.dumps({"dimension": 2, "entries": [[0, 2, {"conductor": 1, "coeffs": ["1"]}]]})
    with pytest.raises(DeserializationError):
        RMatrixFile.loads(text)


def test_structure_choice_file(h2_choice, sweedler_choice):
    """Test structure choices with cyclotomic entries survive serialization."""
    assert StructureChoiceFile.loads(StructureChoiceFile.dumps(h2_choice)) == h2_choice
    payload = json.loads(StructureChoiceFile.dumps(sweedler_choice))
    assert payload["phi"] == [[1]]
    assert payload["m_maps"] == [
        {"grade": [1], "matrix": [[{"conductor": 1, "coeffs": ["2"]}]]}
    ]


def test_label_map_file(tmp_path, h2):
    """Test label maps list group and wedge parts by basis index."""
    path = str(tmp_path / "labels.json")
    LabelMapFile.dump(h2, path)
    assert LabelMapFile.load(path) == list(h2.labels)
    payload = json.loads(LabelMapFile.dumps(h2))
    assert payload["labels"][-1] == {
        "group_part": [1],
        "index": 7,
        "wedge_part": [[[1], 1], [[1], 2]],
    }


def test_generators_file(sweedler):
    """Test generators files carry grouplikes and graded skew primitives."""
    data = GeneratorsFile.from_algebra(sweedler)
    loaded = GeneratorsFile.loads(GeneratorsFile.dumps(data))
    assert loaded.grouplikes == [{1: 1}]
    assert loaded.skew_primitives == [((1,), {2: 1})]


def test_generators_file_without_skew_primitives():
    """Test skew primitives are optional."""
    text = json.dumps({"grouplikes": [[[1, {"conductor": 1, "coeffs": ["1"]}]]]})
    loaded = GeneratorsFile.loads(text)
    assert loaded.skew_primitives is None


def test_report_file():
    """Test machine reports are sorted with pass and witness fields."""
    report = VerdictReportModel()
    report.record("unitarity", True)
    report.record("counit", False, [3])
    assert ReportFile.dumps(report) == (
        '{"counit":{"pass":false,"witness":[3]},"unitarity":{"pass":true,"witness":null}}\n'
    )


def test_scalar_models():
    """Test cyclotomic scalars serialize as conductor and rational strings."""
    i = root_of_unity(4, 1)
    model = cyclo_to_model(i)
    assert model.conductor == 4
    assert model.coeffs == ["0", "1"]
    assert cyclo_from_model(model) == i
    half = cyclo_to_model(CycloNumber.from_rational(Fraction(-1, 2)))
    assert half.coeffs == ["-1/2"]


def test_sparse_from_model_drops_cancellations():
    """Test repeated sparse entries add up."""
    one = cyclo_to_model(CycloNumber.one())
    minus_one = cyclo_to_model(-CycloNumber.one())
    assert sparse_from_model([(0, one), (0, minus_one), (1, one)]) == {1: 1}
