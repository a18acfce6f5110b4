import pytest
from hypothesis import given
from hypothesis import strategies as st

from mhgarside.cells import add_top_cell, build_complex, format_complex, parse_complex, polygon
from mhgarside.errors import ComplexFormatError, Disconnected, NonRegular


def test_polygon_counts():
    c = polygon(5)
    assert c.cell_counts() == [5, 5]
    assert c.euler_characteristic() == 0


def test_top_cell_is_a_disk():
    c = add_top_cell(polygon(4))
    assert c.cell_counts() == [4, 4, 1]
    assert c.euler_characteristic() == 1
    top = len(c) - 1
    assert c.faces_of(top) == frozenset(range(top + 1))


@given(st.integers(3, 12))
def test_round_trip(n):
    c = add_top_cell(polygon(n))
    again = parse_complex(format_complex(c, comment="round trip"))
    assert again.dims == c.dims and again.faces == c.faces and again.labels == c.labels


def test_loop_edge_is_rejected():
    with pytest.raises(NonRegular):
        build_complex([(0, [], [0]), (1, [0], [0, 0])])


def test_disconnected():
    with pytest.raises(Disconnected):
        build_complex([(0, [], [0]), (0, [], [1])])


def test_face_must_be_earlier():
    with pytest.raises(ComplexFormatError):
        build_complex([(0, [], [0]), (1, [2], [0])])


@pytest.mark.parametrize("text", ["", "cells x", "cells 2\na 0 faces= verts=a", "cells 1\na 0 faces=b verts=a"])
def test_bad_files(text):
    with pytest.raises(ComplexFormatError):
        parse_complex(text)


def test_closure_of_top_cell():
    c = add_top_cell(polygon(3))
    sub, old = c.closure(len(c) - 1)
    assert sub.cell_counts() == [3, 3, 1]
    assert sorted(old) == list(range(len(c)))
