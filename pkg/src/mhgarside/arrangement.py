"""Central arrangements, covector face lattices and their dual complexes.

Sign vectors are tuples over ``{1, 0, -1}`` and print as strings over
``+ 0 -``.  A :class:`FaceLattice` is a set of covectors ordered by
``X <= Y`` iff every nonzero entry of ``X`` agrees with ``Y``.
"""

from fractions import Fraction
from functools import cached_property

import numpy as np
import sympy

from . import _kernels
from .cells import add_top_cell, build_complex
from .errors import (
    ArrangementError,
    BadSignChar,
    MissingZeroVector,
    NoTopes,
    NotCentrallySymmetric,
    NotGraded,
    RaggedLengths,
    ZeroNormal,
)
from .feasibility import fm_feasible, integer_row, sign_rows

_CHAR = {1: "+", 0: "0", -1: "-"}
_SIGN = {"+": 1, "0": 0, "-": -1}


def sign_string(x):
    return "".join(_CHAR[s] for s in x)


def parse_sign(s):
    try:
        return tuple(_SIGN[ch] for ch in s)
    except KeyError as exc:
        raise BadSignChar(f"bad sign character {exc.args[0]!r} in {s!r}") from None


def negate(x):
    return tuple(-s for s in x)


def compose(x, y):
    """Covector composition: ``x`` where nonzero, else ``y``."""
    return tuple(a if a else b for a, b in zip(x, y))


def _masks(x):
    plus = minus = 0
    for i, s in enumerate(x):
        if s > 0:
            plus |= 1 << i
        elif s < 0:
            minus |= 1 << i
    return plus, minus


def _sort_key(x):
    return (-x.count(0), sign_string(x).translate(str.maketrans("+0-", "012")))


class FaceLattice:
    """Covector set of an oriented matroid (or of a central arrangement)."""

    def __init__(self, covectors, n=None):
        cov = {tuple(int(s) for s in x) for x in covectors}
        if n is None:
            if not cov:
                raise ArrangementError("empty covector set")
            n = len(next(iter(cov)))
        if any(len(x) != n for x in cov):
            raise RaggedLengths("covectors have different lengths")
        self.n = n
        self.covectors = tuple(sorted(cov, key=_sort_key))
        self.index = {x: i for i, x in enumerate(self.covectors)}

    def __eq__(self, other):
        return isinstance(other, FaceLattice) and self.n == other.n and set(self.covectors) == set(other.covectors)

    def __hash__(self):
        return hash((self.n, frozenset(self.covectors)))

    def __len__(self):
        return len(self.covectors)

    def __iter__(self):
        return iter(self.covectors)

    def __contains__(self, x):
        return tuple(x) in self.index

    def __repr__(self):
        return f"FaceLattice(n={self.n}, covectors={len(self)}, topes={len(self.topes)})"

    @property
    def zero(self):
        return (0,) * self.n

    @cached_property
    def topes(self):
        return tuple(x for x in self.covectors if 0 not in x)

    @staticmethod
    def leq(x, y):
        return all(a == 0 or a == b for a, b in zip(x, y))

    @cached_property
    def order(self):
        """Boolean matrix ``order[i, j] = covectors[i] <= covectors[j]``."""
        masks = [_masks(x) for x in self.covectors]
        plus = np.array([m[0] for m in masks], dtype=np.int64)
        minus = np.array([m[1] for m in masks], dtype=np.int64)
        return _kernels.leq_matrix(plus, minus)

    @cached_property
    def heights(self):
        """Length of every maximal chain from each covector up to a tope.

        Raises :class:`NotGraded` when two maximal chains above the same
        covector have different lengths.
        """
        order = self.order
        n = len(self.covectors)
        zeros = [x.count(0) for x in self.covectors]
        strict = order & ~np.eye(n, dtype=bool)
        longest = [0] * n
        shortest = [0] * n
        # process covectors with fewer zeros first; they sit higher
        for i in sorted(range(n), key=lambda k: zeros[k]):
            above = np.flatnonzero(strict[i])
            if above.shape[0] == 0:
                continue
            # covers: elements above i with nothing strictly between
            covers = [j for j in above if not strict[np.ix_(above, [j])].any()]
            longest[i] = 1 + max(longest[j] for j in covers)
            shortest[i] = 1 + min(shortest[j] for j in covers)
            if longest[i] != shortest[i]:
                raise NotGraded(f"covector {sign_string(self.covectors[i])} has maximal chains of "
                                f"lengths {shortest[i]} and {longest[i]}", witness=(self.covectors[i],))
        return dict(zip(self.covectors, longest))

    @property
    def rank(self):
        """Height of the zero covector (the rank of the oriented matroid)."""
        return self.heights[self.zero] if self.zero in self.index else max(self.heights.values()) + 1

    def below(self, t):
        i = self.index[tuple(t)]
        return [self.covectors[j] for j in np.flatnonzero(self.order[:, i])]

    def validate(self):
        if self.zero not in self.index:
            raise MissingZeroVector("covector set lacks the zero vector")
        for x in self.covectors:
            if negate(x) not in self.index:
                raise NotCentrallySymmetric(f"negation of {sign_string(x)} is missing", witness=(x,))
        return self

    def is_centrally_symmetric(self):
        return all(negate(x) in self.index for x in self.covectors)


# ------------------------------------------------------- construction ---

def parse_normals(normals):
    out = []
    for n in normals:
        row = tuple(Fraction(x) for x in n)
        if not any(row):
            raise ZeroNormal(f"zero normal vector {n!r}")
        out.append(row)
    if not out:
        raise ArrangementError("need at least one normal")
    if len({len(r) for r in out}) != 1:
        raise RaggedLengths("normals have different dimensions")
    return out


def covectors_from_hyperplanes(normals):
    """All realizable sign vectors of the central arrangement with these normals.

    Candidates are grown one coordinate at a time and a prefix is extended
    only if it is exactly feasible, which visits every feasible sign vector
    of each prefix arrangement once.
    """
    rows = [integer_row(n) for n in parse_normals(normals)]
    dim = len(rows[0])
    found = []

    def grow(prefix):
        k = len(prefix)
        if k == len(rows):
            found.append(tuple(prefix))
            return
        for s in (1, 0, -1):
            cand = prefix + [s]
            if fm_feasible(sign_rows(rows[:k + 1], cand), dim):
                grow(cand)

    grow([])
    return FaceLattice(found, n=len(rows))


def check_proper(normals):
    rows = parse_normals(normals)
    return sympy.Matrix(rows).rank() == len(rows[0])


def dual_complex(fl):
    """Cell complex with one cell per nonzero covector, order reversed.

    Vertices are topes (listed first, in covector order); the cell of ``X``
    has the topes above ``X`` as vertices and dimension equal to the chain
    length from ``X`` up to a tope.  ``complex.covector[i]`` recovers ``X``.
    """
    if not fl.topes:
        raise NoTopes("face lattice has no topes")
    heights = fl.heights
    cells = [x for x in fl.covectors if any(x)]
    cells.sort(key=lambda x: (heights[x], _sort_key(x)))
    pos = {x: i for i, x in enumerate(cells)}
    order = fl.order
    descriptors = []
    for x in cells:
        i = fl.index[x]
        above = [fl.covectors[j] for j in np.flatnonzero(order[i]) if j != i]
        if heights[x] == 0:
            descriptors.append((0, [], [pos[x]]))
        else:
            faces = sorted(pos[y] for y in above)
            verts = sorted(pos[y] for y in above if 0 not in y)
            descriptors.append((heights[x], faces, verts))
    cx = build_complex(descriptors)
    cx.covector = tuple(cells)
    return cx


def completed_complex(q):
    """Add the single top cell (the ball bounded by ``q``)."""
    out = add_top_cell(q)
    cov = getattr(q, "covector", None)
    if cov is not None:
        out.covector = tuple(cov) + ((0,) * len(cov[0]),)
    return out


def check_simplicial(fl):
    """Is every closed chamber combinatorially a simplex?

    Returns ``(ok, witness)``; the witness is ``(tope, facets, rank)`` for a
    chamber whose interval ``[0, T]`` is not Boolean.
    """
    heights = fl.heights
    r = fl.rank
    for t in fl.topes:
        interval = fl.below(t)
        rank_in = {x: r - heights[x] for x in interval}
        atoms = [x for x in interval if rank_in[x] == 1]
        facets = [x for x in interval if rank_in[x] == r - 1]
        ok = len(atoms) == r and len(interval) == 2 ** r
        if ok:
            seen = set()
            for x in interval:
                sig = frozenset(a for a in atoms if FaceLattice.leq(a, x))
                if len(sig) != rank_in[x] or sig in seen:
                    ok = False
                    break
                seen.add(sig)
        if not ok:
            return False, (t, len(facets), r)
    return True, None


# ----------------------------------------------------------------- I/O ---

def _content_lines(text):
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            yield line


def parse_covectors(text):
    vecs = [parse_sign(line) for line in _content_lines(text)]
    if not vecs:
        raise ArrangementError("no covectors in input")
    if len({len(v) for v in vecs}) != 1:
        raise RaggedLengths("sign strings have different lengths")
    return FaceLattice(vecs).validate()


def format_covectors(fl, comment=None):
    out = [f"# {line}" for line in comment.splitlines()] if comment else []
    out.extend(sign_string(x) for x in fl.covectors)
    return "\n".join(out) + "\n"


def load_covectors(path):
    with open(path, encoding="utf-8") as fh:
        return parse_covectors(fh.read())


def save_covectors(fl, path, comment=None):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_covectors(fl, comment))


def parse_arrangement(text):
    rows = []
    for line in _content_lines(text):
        try:
            rows.append(tuple(Fraction(tok) for tok in line.split()))
        except (ValueError, ZeroDivisionError):
            raise ArrangementError(f"bad rational coordinates in {line!r}") from None
    return parse_normals(rows)


def load_arrangement(path):
    with open(path, encoding="utf-8") as fh:
        return parse_arrangement(fh.read())


def format_arrangement(normals, comment=None):
    out = [f"# {line}" for line in comment.splitlines()] if comment else []
    out.extend(" ".join(str(Fraction(c)) for c in n) for n in normals)
    return "\n".join(out) + "\n"
