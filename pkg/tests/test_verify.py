import pytest

from mhgarside.presentation import presentation, reduce_presentation
from mhgarside.verify import morphism_classes, positive_paths, verify_garside, word_problem_sweep

from .conftest import context, loaded, salvetti


def test_positive_path_count():
    # the hexagon is 2-regular: 1 + 2 + 4 + 8 paths of length <= 3 from each vertex
    assert len(positive_paths(loaded("I23").dual, 0, 3)) == 15


def test_classes_partition_paths():
    ctx = context("I23")
    classes = morphism_classes(ctx, 0, 3)
    members = [p for c in classes for p in c.members]
    assert len(members) == len(set(members)) == len(positive_paths(ctx.q, 0, 3))


@pytest.mark.parametrize("name", ["I22", "I24"])
def test_verify_small(name):
    rep = verify_garside(context(name), 2)
    assert rep.passed and rep.lines()[-1] == "ALL PASS"
    assert all(rep.counts[r.name] > 0 for r in rep.results)


def test_word_sweep_i22():
    ctx, sal = context("I22"), salvetti("I22")
    pres = reduce_presentation(presentation(sal), ctx.q)
    res = word_problem_sweep(ctx, sal, pres, 4)
    assert res.passed and res.words == sum(4 ** k for k in range(5))


def test_sweep_deadline_is_reported():
    ctx, sal = context("I23"), salvetti("I23")
    pres = reduce_presentation(presentation(sal), ctx.q)
    res = word_problem_sweep(ctx, sal, pres, 8, deadline=0.0)
    assert not res.finished and not res.passed
