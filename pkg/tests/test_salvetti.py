from math import comb

import pytest

from mhgarside.cells import parse_complex, polygon, format_complex
from mhgarside.errors import NotPositive, NotQmh
from mhgarside.oracle import PathOracle
from mhgarside.salvetti import build_salvetti, check_positive, opposite_path
from mhgarside.verify import morphism_classes

from .conftest import context, loaded, salvetti


@pytest.mark.parametrize("m", [2, 3, 4, 5, 6])
def test_dihedral_cell_counts(m):
    # a Coxeter arrangement of rank r has |W| * C(r, k) Salvetti cells in dimension k
    assert salvetti(f"I2{m}", completed=False).complex.cell_counts() == [2 * m, 4 * m]
    assert salvetti(f"I2{m}").complex.cell_counts() == [2 * m, 4 * m, 2 * m]


def test_s4_cell_counts():
    assert salvetti("S4").complex.cell_counts() == [24 * comb(3, k) for k in range(4)]


def test_euler_characteristic_vanishes():
    for name in ("I23", "I25", "S4", "GEN4"):
        assert salvetti(name).complex.euler_characteristic() == 0


def test_projection_and_orientation():
    sal = salvetti("I23")
    q = sal.q
    for (base, apex), (a, b) in sal.directed_edges():
        assert a == apex and q.verts[base] == {a, b}
        assert sal.project((base, apex)) == base
    assert sorted(sal.fiber(len(q) - 1)) == sorted(sal.index[(len(q) - 1, v)] for v in q.vertices)


def test_boundary_uses_nearest_vertex():
    sal = salvetti("S4")
    q, maps = sal.q, context("S4").maps
    for sid, (e, v) in enumerate(sal.cells):
        expect = {sal.index[(f, maps.nearest(v, f))] for f in q.faces[e]}
        assert sal.complex.faces[sid] == frozenset(expect)


def test_path_letters_round_trip():
    sal = salvetti("I23")
    path = (0, 1, 2, 5, 4)
    letters = sal.path_edges(path)
    assert sal.edges_path(letters) == path


def test_not_positive():
    with pytest.raises(NotPositive):
        check_positive(loaded("I23").dual, (0, 2))


def test_serialization_ids():
    text = format_complex(salvetti("I22").complex)
    assert parse_complex(text).cell_counts() == [4, 8, 4]
    assert all("@" in line.split()[0] for line in text.splitlines()[1:])


def test_odd_polygon_has_no_salvetti():
    with pytest.raises(NotQmh):
        build_salvetti(polygon(5))


def test_opposite_path_anti_isomorphism():
    # on I23 morphisms of length <= 3: involutive, length preserving, well defined
    # on classes, and f <= g from x iff g° >= f° into x
    ctx = context("I23")
    o = PathOracle(ctx.q, ctx.maps)
    for x in ctx.q.vertices:
        classes = morphism_classes(ctx, x, 3)
        opp = {}
        for c in classes:
            images = {opposite_path(ctx.q, p) for p in c.members}
            assert {opposite_path(ctx.q, p) for p in images} == set(c.members)
            img = o.class_of(next(iter(images)))
            assert img.members == frozenset(images) and img.length == c.length and img.target == x
            opp[c] = img
        for f in classes:
            for g in classes:
                assert o.left_divides(f, g) == o.right_divides(opp[f], opp[g])
