import pytest

from mhgarside.cells import add_top_cell, polygon
from mhgarside.errors import ExplosionGuard, NotPositive
from mhgarside.oracle import PathOracle, check_flat, enumerate_minimal_paths

from .conftest import loaded

FIXTURES = ["I22", "I23", "I24", "I25", "I26", "S4", "GEN4"]


def test_minimal_paths_on_hexagon():
    q = loaded("I23").dual
    assert len(enumerate_minimal_paths(q, 0, 5)) == 2
    assert all(len(p) == 4 for p in enumerate_minimal_paths(q, 0, 5))


def test_bare_hexagon_is_not_flat():
    ok, (v, w, p1, p2) = check_flat(loaded("I23").dual)
    assert not ok and p1 != p2 and p1[0] == p2[0] == v and p1[-1] == p2[-1] == w


@pytest.mark.parametrize("name", FIXTURES)
def test_completed_fixtures_are_flat(name):
    assert check_flat(loaded(name).completed)[0]


@pytest.mark.parametrize("name", FIXTURES)
def test_confined_moves_give_the_same_classes(name):
    # moves restricted to a single closed cell generate the same equivalence
    q = loaded(name).completed
    free, confined = PathOracle(q), PathOracle(q, confine_to_cell=True)
    for v in q.vertices[:6]:
        for w in q.vertices:
            for p in free.minimal_paths(v, w):
                assert free.class_of(p).members == confined.class_of(p).members


def test_s4_sixteen_geodesics_to_antipode():
    q = loaded("S4").completed
    o = PathOracle(q)
    for v in q.vertices:
        w = max(q.vertices, key=lambda u: q.distance(v, u))
        paths = o.minimal_paths(v, w)
        assert len(paths) == 16 and len(paths[0]) == 7
        assert o.class_of(paths[0]).members == frozenset(paths)


def test_moves_preserve_endpoints_and_length():
    q = loaded("I24").completed
    o = PathOracle(q)
    p = o.geodesic(0, 7) if q.distance(0, 7) else (0,)
    for r in o.moves(p + p[-2:-1]):
        assert len(r) == len(p) + 1 and r[0] == p[0] and r[-1] == p[-2]


def test_cap():
    q = loaded("S4").completed
    o = PathOracle(q, cap=3)
    v = q.vertices[0]
    w = max(q.vertices, key=lambda u: q.distance(v, u))
    with pytest.raises(ExplosionGuard):
        o.class_of(o.geodesic(v, w))


def test_meet_join_on_square():
    q = add_top_cell(polygon(4))
    o = PathOracle(q)
    assert o.meet((0, 1), (0, 3)).representative == (0,)
    assert o.join((0, 1), (0, 3)).members == {(0, 1, 2), (0, 3, 2)}
    with pytest.raises(NotPositive):
        o.meet((0, 1), (1, 2))
