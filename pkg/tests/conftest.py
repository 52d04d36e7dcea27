"""
conftest.py for hopfforge tests.

This file adds the src directory to the Python path so tests can import
the hopfforge package without requiring installation, and provides the
standard data: Sweedler's algebra, k[Z_2] as H(D) with n = 0, the
8-dimensional H(2), a Z_2 x Z_2 datum and an infeasible Z_4 x Z_4 datum.
"""

import sys
from pathlib import Path

# Add the src directory to the Python path
src_path = Path(__file__).parent.parent / "src"
if str(src_path) not in sys.path:
    sys.path.insert(0, str(src_path))

import pytest

from hopfforge.abgroup import FiniteAbelianGroup, SkewForm, form_inverse_map
from hopfforge.configuration import reset
from hopfforge.cyclo import CycloNumber, root_of_unity
from hopfforge.hd_builder import Datum, build_hd
from hopfforge.resources import DatumFile
from hopfforge.triangular import StructureChoice, build_f_T, rmatrix_from_f


def make_datum(factors, exponent_matrix, n=None, conductor=None):
    group = FiniteAbelianGroup(factors)
    form = SkewForm(group, exponent_matrix, conductor)
    return Datum(group, form, n or {})


@pytest.fixture(autouse=True)
def reset_bounds():
    """Drop bounds configured by a test."""
    yield
    reset()


@pytest.fixture
def sweedler_datum():
    return make_datum([2], [[1]], {(1,): 1})


@pytest.fixture
def h0_datum():
    return make_datum([2], [[1]])


@pytest.fixture
def h2_datum():
    return make_datum([2], [[1]], {(1,): 2})


@pytest.fixture
def z2xz2_datum():
    return make_datum([2, 2], [[1, 0], [0, 1]], {(1, 0): 1, (0, 1): 1})


@pytest.fixture
def z4xz4_datum():
    """I_F contains (1, 0) and (3, 0) but only one of them carries a generator."""
    return make_datum([4, 4], [[2, 1], [3, 2]], {(1, 0): 1})


@pytest.fixture(scope="session")
def sweedler():
    return build_hd(make_datum([2], [[1]], {(1,): 1}))


@pytest.fixture(scope="session")
def h2():
    return build_hd(make_datum([2], [[1]], {(1,): 2}))


@pytest.fixture(scope="session")
def z2xz2():
    return build_hd(make_datum([2, 2], [[1, 0], [0, 1]], {(1, 0): 1, (0, 1): 1}))


@pytest.fixture(scope="session")
def sweedler_choice():
    datum = make_datum([2], [[1]], {(1,): 1})
    return StructureChoice(form_inverse_map(datum.form), {(1,): [[2]]})


@pytest.fixture(scope="session")
def sweedler_rmatrix(sweedler, sweedler_choice):
    return rmatrix_from_f(sweedler.structure, build_f_T(sweedler, sweedler_choice))


@pytest.fixture(scope="session")
def h2_choice():
    datum = make_datum([2], [[1]], {(1,): 2})
    i = root_of_unity(4, 1)
    return StructureChoice(
        form_inverse_map(datum.form), {(1,): [[CycloNumber.one(), i], [i, 2]]}
    )


@pytest.fixture
def write_datum(tmp_path):
    """Write a datum file and return its path."""

    def write(datum, name="datum.json"):
        path = tmp_path / name
        DatumFile.dump(datum, str(path))
        return str(path)

    return write


@pytest.fixture
def datum_factory():
    """Build a Datum from cyclic factors, an exponent matrix and multiplicities."""
    return make_datum
