"""Bundled fixtures and input-file detection."""

import re
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path

from .arrangement import completed_complex, covectors_from_hyperplanes, dual_complex, parse_arrangement, parse_covectors
from .cells import parse_complex
from .errors import MhGarsideError
from .wiring import parse_wiring, sweep_covectors

FIXTURE_DIR = Path(__file__).parent / "fixtures"


def dihedral_normals(m):
    """``m`` central lines in the plane: the axes plus ``(1, k)`` for k = 1..m-2."""
    if m < 2:
        raise MhGarsideError(f"I2m needs m >= 2, got {m}")
    return [(1, 0), (0, 1)] + [(1, k) for k in range(1, m - 1)]


def fixture_names():
    return sorted(p.stem for p in FIXTURE_DIR.iterdir() if p.suffix in (".arr", ".cov"))


@dataclass
class Loaded:
    """One input: a hyperplane list, a covector set, a wiring diagram or a complex."""

    kind: str
    name: str
    normals: list = None
    lattice: object = None
    given_complex: object = None

    @cached_property
    def dual(self):
        if self.given_complex is not None:
            return self.given_complex
        return dual_complex(self.lattice)

    @cached_property
    def completed(self):
        if self.given_complex is not None:
            return self.given_complex
        return completed_complex(self.dual)

    def complex(self, completed=False):
        return self.completed if completed else self.dual


def detect_kind(text):
    lines = [raw.split("#", 1)[0].strip() for raw in text.splitlines()]
    lines = [line for line in lines if line]
    if not lines:
        raise MhGarsideError("empty input")
    head = lines[0].split()[0]
    if head == "cells":
        return "complex"
    if head == "wires":
        return "wiring"
    # sign strings only; a file of lone "0" lines reads as (zero) normals
    if all(re.fullmatch(r"[+0-]+", line) for line in lines) and any(line != "0" for line in lines):
        return "covectors"
    return "arrangement"


def parse_input(text, name="<input>"):
    kind = detect_kind(text)
    if kind == "complex":
        return Loaded(kind, name, given_complex=parse_complex(text))
    if kind == "wiring":
        return Loaded(kind, name, lattice=sweep_covectors(parse_wiring(text)).validate())
    if kind == "covectors":
        return Loaded(kind, name, lattice=parse_covectors(text))
    normals = parse_arrangement(text)
    return Loaded(kind, name, normals=normals, lattice=covectors_from_hyperplanes(normals))


def load_input(path):
    with open(path, encoding="utf-8") as fh:
        return parse_input(fh.read(), name=str(path))


def load_fixture(name):
    for suffix in (".arr", ".cov"):
        path = FIXTURE_DIR / f"{name}{suffix}"
        if path.exists():
            loaded = load_input(path)
            loaded.name = name
            return loaded
    m = re.fullmatch(r"I2(\d+)", name)
    if m:
        normals = dihedral_normals(int(m.group(1)))
        return Loaded("arrangement", name, normals=normals, lattice=covectors_from_hyperplanes(normals))
    raise MhGarsideError(f"unknown fixture {name!r}; known: {', '.join(fixture_names())}, I2<m>")
