"""Nearest/farthest vertex maps and the QMH, LMH, MH and involution checks.

Maps are computed globally (skeleton distances of the whole complex) or
locally (distances inside one closed cell viewed as a complex of its own);
the difference between the two is what separates LMH from MH.
"""

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from . import _kernels
from .errors import NotInvolutive, Tie


class HemisphereMaps:
    """Nearest and farthest vertex maps of one complex.

    Stored as ``(n_vertices, n_cells)`` arrays of vertex rows with ``-1``
    marking a tie; :meth:`nearest` / :meth:`farthest` translate to cell ids
    and raise :class:`Tie` on ambiguous entries.
    """

    def __init__(self, complex_):
        self.complex = complex_
        c = complex_
        cptr = np.zeros(len(c) + 1, dtype=np.int64)
        rows = []
        for e in range(len(c)):
            vs = sorted(int(c.vrow[v]) for v in c.verts[e])
            rows.extend(vs)
            cptr[e + 1] = cptr[e] + len(vs)
        self._cptr = cptr
        self._cverts = np.asarray(rows, dtype=np.int64)
        self.near, self.far = _kernels.hemisphere_maps(c.dist, cptr, self._cverts)
        self._ids = np.asarray(c.vertices, dtype=np.int64)

    @cached_property
    def first_tie(self):
        """First ``(vertex, cell, kind)`` with a non-unique extremum, or None."""
        for kind, arr in (("nearest", self.near), ("farthest", self.far)):
            bad = np.argwhere(arr < 0)
            if bad.shape[0]:
                r, e = bad[0]
                return int(self._ids[r]), int(e), kind
        return None

    @property
    def total(self):
        return self.first_tie is None

    def _lookup(self, arr, v, e, kind):
        r = self.complex.vrow[v]
        if r < 0:
            raise KeyError(f"{v!r} is not a vertex")
        w = arr[r, e]
        if w < 0:
            raise Tie(f"{kind} vertex of cell {e} from {v} is not unique", witness=(v, e))
        return int(self._ids[w])

    def nearest(self, v, e):
        return self._lookup(self.near, v, e, "nearest")

    def farthest(self, v, e):
        return self._lookup(self.far, v, e, "farthest")


def compute_maps(c):
    return HemisphereMaps(c)


def nearest_vertex(c, v, e, maps=None):
    return (maps or HemisphereMaps(c)).nearest(v, e)


def farthest_vertex(c, v, e, maps=None):
    return (maps or HemisphereMaps(c)).farthest(v, e)


@dataclass
class PropertyResult:
    name: str
    passed: bool
    witness: tuple = None
    detail: str = ""

    def line(self, labels=None):
        status = "PASS" if self.passed else "FAIL"
        out = f"{self.name} {status}"
        if not self.passed and self.witness is not None:
            parts = []
            for w in self.witness:
                if labels is not None and isinstance(w, (int, np.integer)):
                    parts.append(labels[w])
                else:
                    parts.append(str(w))
            out += " witness=(" + ",".join(parts) + ")"
            if self.detail:
                out += f" [{self.detail}]"
        return out


@dataclass
class MhReport:
    qmh: PropertyResult
    lmh: PropertyResult
    mh: PropertyResult
    additive_identity: PropertyResult
    formulations_agree: bool = True
    extras: dict = field(default_factory=dict)

    def lines(self, labels=None):
        return [r.line(labels) for r in (self.qmh, self.lmh, self.mh, self.additive_identity)]


def _containment_pairs(c):
    outer, inner = [], []
    for e in range(len(c)):
        for f in sorted(c.faces_of(e)):
            outer.append(e)
            inner.append(f)
    return np.asarray(outer, dtype=np.int64), np.asarray(inner, dtype=np.int64)


def _qmh(c, maps):
    """Returns (qmh result, additive-identity result)."""
    tie = maps.first_tie
    if tie is not None:
        v, e, kind = tie
        res = PropertyResult("qmh", False, (v, e), f"{kind} tie")
        return res, PropertyResult("additive_identity", False, (v, e), f"{kind} tie")
    ids = maps._ids
    outer, inner = _containment_pairs(c)
    r, k = _kernels.conditions_ab(maps.near, maps.far, outer, inner)
    if r >= 0:
        qmh = PropertyResult("qmh", False, (int(ids[r]), int(outer[k]), int(inner[k])), "condition (A)/(B)")
    else:
        qmh = PropertyResult("qmh", True)
    r, e, w = _kernels.additive_identity(c.dist, maps.far, maps._cptr, maps._cverts)
    if r >= 0:
        add = PropertyResult("additive_identity", False, (int(ids[r]), e, int(ids[w])),
                             "d(v,far) != d(v,w) + d(w,far)")
    else:
        add = PropertyResult("additive_identity", True)
    return qmh, add


def check_qmh(c, maps=None):
    """QMH verdict plus the equivalent additive-distance formulation.

    Returns ``(qmh, additive, agree)``; ``agree`` is False only if the two
    formulations disagree, which would contradict their known equivalence.
    """
    maps = maps or HemisphereMaps(c)
    qmh, add = _qmh(c, maps)
    return qmh, add, qmh.passed == add.passed


def _local_maps(c):
    """Per-cell maps computed inside each closed cell.

    Returns ``(local, failure)`` where ``local[e]`` maps ``(v, f)`` to the
    local (nearest, farthest) pair for ``v`` in V(e), ``f`` in Q(e).
    ``failure`` is the first cell whose closure is not QMH, with witness.
    """
    local = {}
    for e in range(len(c)):
        if c.dims[e] == 0:
            local[e] = {(e, e): (e, e)}
            continue
        sub, old = c.closure(e)
        sm = HemisphereMaps(sub)
        q, _ = _qmh(sub, sm)
        if not q.passed:
            wit = tuple(old[x] for x in q.witness)
            return local, (e, wit, q.detail)
        table = {}
        for sv in sub.vertices:
            for sf in range(len(sub)):
                table[(old[sv], old[sf])] = (old[sm.nearest(sv, sf)], old[sm.farthest(sv, sf)])
        local[e] = table
    return local, None


def check_lmh(c):
    return _lmh(c)[0]


def _lmh(c):
    local, failure = _local_maps(c)
    if failure is not None:
        e, wit, detail = failure
        lmh = PropertyResult("lmh", False, (e,) + wit, f"closed cell not QMH ({detail})")
        return lmh, None
    seen = {}
    lmh = PropertyResult("lmh", True)
    for e, table in local.items():
        for key, val in table.items():
            prev = seen.get(key)
            if prev is None:
                seen[key] = (val, e)
            elif prev[0] != val:
                v, f = key
                lmh = PropertyResult("lmh", False, (v, f, e, prev[1]), "local maps disagree on a shared face")
                break
        if not lmh.passed:
            break
    return lmh, local


def check_mh(c, maps=None):
    maps = maps or HemisphereMaps(c)
    qmh, add = _qmh(c, maps)
    lmh, local = _lmh(c)
    if not qmh.passed or not lmh.passed:
        mh = PropertyResult("mh", False, None, "requires qmh and lmh")
    else:
        mh = PropertyResult("mh", True)
        for e, table in local.items():
            for (v, f), (ln, lf) in sorted(table.items()):
                if maps.nearest(v, f) != ln or maps.farthest(v, f) != lf:
                    mh = PropertyResult("mh", False, (v, f, e), "global and local maps differ")
                    break
            if not mh.passed:
                break
    return MhReport(qmh=qmh, lmh=lmh, mh=mh, additive_identity=add,
                    formulations_agree=(qmh.passed == add.passed))


@dataclass(frozen=True)
class Involution:
    """Order-two skeleton automorphism sending each vertex to its antipode."""

    phi: dict

    def __call__(self, v):
        return self.phi[v]


def find_involution(c):
    dist = c.dist
    ids = list(c.vertices)
    nv = len(ids)
    phi_rows = np.empty(nv, dtype=np.int64)
    for r in range(nv):
        row = dist[r]
        top = row.max()
        hits = np.flatnonzero(row == top)
        if hits.shape[0] != 1:
            raise NotInvolutive(f"vertex {c.labels[ids[r]]} has {hits.shape[0]} farthest vertices",
                                witness=(ids[r],))
        phi_rows[r] = hits[0]
    if not np.array_equal(phi_rows[phi_rows], np.arange(nv)):
        r = int(np.flatnonzero(phi_rows[phi_rows] != np.arange(nv))[0])
        raise NotInvolutive("antipode map is not of order two", witness=(ids[r],))
    span = dist[np.arange(nv), phi_rows]
    # d(v, phi v) == d(v, w) + d(w, phi v) for every w
    lhs = span[:, None]
    rhs = dist + dist[:, phi_rows].T
    bad = np.argwhere(lhs != rhs)
    if bad.shape[0]:
        r, w = bad[0]
        raise NotInvolutive("distance to the antipode is not additive", witness=(ids[r], ids[w]))
    phi = {ids[r]: ids[int(phi_rows[r])] for r in range(nv)}
    for e in c.edges:
        a, b = sorted(c.verts[e])
        if phi[b] not in c.neighbors(phi[a]):
            raise NotInvolutive("antipode map does not preserve the 1-skeleton", witness=(e,))
    return Involution(phi)
