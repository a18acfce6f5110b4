import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mhgarside.arrangement import covectors_from_hyperplanes
from mhgarside.errors import NoCircuits
from mhgarside.matroid import check_om_circuit_axioms, circuits_from_topes, om_rank, star_set

from .conftest import loaded


def sympy_rank(normals):
    import sympy
    return sympy.Matrix(normals).rank()


def test_i23_circuits():
    cs = circuits_from_topes(loaded("I23").lattice)
    vecs = cs.as_sign_vectors()
    assert len(vecs) == 2
    assert vecs[0] == tuple(-s for s in vecs[1])
    assert all(0 not in v for v in vecs)
    assert check_om_circuit_axioms(cs).passed
    assert om_rank(cs) == 2


def test_s4_rank():
    cs = circuits_from_topes(loaded("S4").lattice)
    assert om_rank(cs) == 3 and check_om_circuit_axioms(cs).passed


def test_no_circuits():
    cs = circuits_from_topes(covectors_from_hyperplanes([(1, 0), (0, 1)]))
    assert len(cs) == 0
    with pytest.raises(NoCircuits):
        om_rank(cs)


normal = st.tuples(*[st.integers(-2, 2)] * 3).filter(any)


@settings(max_examples=25, deadline=None)
@given(st.lists(normal, min_size=2, max_size=5))
def test_axioms_and_rank_on_realizable(normals):
    cs = circuits_from_topes(covectors_from_hyperplanes(normals))
    assert check_om_circuit_axioms(cs).passed
    for c in cs.circuits:
        assert star_set(c) in cs.circuits
    if len(cs):
        assert om_rank(cs) == sympy_rank(normals)


def test_nonpappus_axioms():
    cs = circuits_from_topes(loaded("NONPAP").lattice)
    assert check_om_circuit_axioms(cs).passed and om_rank(cs) == 3
