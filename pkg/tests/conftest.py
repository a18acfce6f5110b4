from functools import lru_cache

import pytest

from mhgarside.fixtures import load_fixture
from mhgarside.garside import make_context
from mhgarside.salvetti import build_salvetti


@lru_cache(maxsize=None)
def loaded(name):
    return load_fixture(name)


@lru_cache(maxsize=None)
def context(name, confine=False):
    return make_context(loaded(name).completed, confine_to_cell=confine)


@lru_cache(maxsize=None)
def salvetti(name, completed=True):
    lo = loaded(name)
    return build_salvetti(lo.completed if completed else lo.dual)


@pytest.fixture
def i23():
    return context("I23")


@pytest.fixture
def s4():
    return context("S4")
