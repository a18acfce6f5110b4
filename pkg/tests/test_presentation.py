import pytest

from mhgarside import garside as G
from mhgarside.presentation import (
    Presentation,
    abelianization,
    cyclic_reduce,
    expand_word,
    format_presentation,
    free_reduce,
    is_braid_relation,
    parse_presentation,
    presentation,
    reduce_presentation,
)

from .conftest import context, loaded, salvetti


def reduced(name):
    return reduce_presentation(presentation(salvetti(name)), loaded(name).completed)


def test_i23_raw_counts():
    pres = presentation(salvetti("I23"))
    assert len(pres.generators) == 12 and len(pres.relations) == 6


@pytest.mark.parametrize("m", [2, 3, 4, 5, 6])
def test_first_homology_counts_lines(m):
    # H1 of the complement of m lines through the origin is free abelian of rank m
    assert abelianization(reduced(f"I2{m}")) == (m, [])


def test_s4_first_homology():
    assert abelianization(reduced("S4")) == (6, [])


def test_i22_is_free_abelian():
    pres = reduced("I22")
    assert len(pres.generators) == 2 and len(pres.relations) == 1
    (r,) = pres.relators()
    a, b = pres.generators
    assert sorted(r) == sorted([(a, 1), (b, 1), (a, -1), (b, -1)])


def test_i23_is_the_pure_braid_group():
    # three generators with x y z = y z x = z x y: the fundamental group of the
    # complement of three lines, not the braid group on three strands
    pres = reduced("I23")
    assert len(pres.generators) == 3 and len(pres.relations) == 2
    assert not is_braid_relation(pres)


@pytest.mark.parametrize("name", ["I22", "I23", "I24", "S4"])
def test_relations_hold_in_the_groupoid(name):
    ctx, sal = context(name), salvetti(name)
    pres = reduced(name)
    for r in pres.relators():
        assert G.is_trivial(ctx, sal, expand_word(pres, r), pres.base)


@pytest.mark.parametrize("name", ["I23", "S4"])
def test_raw_relations_hold(name):
    ctx, sal = context(name), salvetti(name)
    pres = presentation(sal)
    for lhs, rhs in pres.relations:
        wl = [pres.sources[g] + (False,) for g, _ in lhs]
        wr = [pres.sources[g] + (False,) for g, _ in rhs]
        assert G.equal(ctx, sal, wl, wr)


def test_braid_shape_detector():
    pres = Presentation(["a", "b"], [([("a", 1), ("b", 1), ("a", 1)], [("b", 1), ("a", 1), ("b", 1)])])
    assert is_braid_relation(pres)
    assert abelianization(pres) == (1, [])
    swapped = Presentation(["a", "b"], [([("b", -1), ("a", -1), ("b", -1)], [("a", -1), ("b", -1), ("a", -1)])])
    assert is_braid_relation(swapped)


def test_word_reductions():
    assert free_reduce([("a", 1), ("b", 1), ("b", -1), ("a", -1)]) == []
    assert cyclic_reduce([("a", 1), ("b", 1), ("a", -1)]) == [("b", 1)]


def test_text_round_trip():
    pres = reduced("I23")
    again = parse_presentation(format_presentation(pres))
    assert again.generators == pres.generators and again.relations == pres.relations


def test_torsion_is_reported():
    pres = Presentation(["a"], [([("a", 1), ("a", 1)], [])])
    assert abelianization(pres) == (0, [2])
