"""Numeric inner loops.

Every kernel exists twice: a numba ``@njit`` version and a pure-numpy
version with identical outputs.  The numba path is used when numba imports
and ``MHGARSIDE_DISABLE_NUMBA`` is unset (or ``0``); set it to ``1`` to force
the numpy path.  Both implementations stay importable as ``numba_impl`` and
``numpy_impl`` so tests and the benchmark can compare them directly.
"""

import os
from types import SimpleNamespace

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False


def _flag_disabled():
    return os.environ.get("MHGARSIDE_DISABLE_NUMBA", "0").strip().lower() not in ("", "0", "false", "no")


USE_NUMBA = HAVE_NUMBA and not _flag_disabled()


# ---------------------------------------------------------------- numpy ---

def _apsp_numpy(indptr, indices):
    n = indptr.shape[0] - 1
    # float products go through BLAS; boolean matmul does not
    adj = np.zeros((n, n), dtype=np.float32)
    rows = np.repeat(np.arange(n), np.diff(indptr))
    adj[rows, indices] = 1.0
    dist = np.full((n, n), -1, dtype=np.int32)
    frontier = np.eye(n, dtype=bool)
    seen = frontier.copy()
    dist[frontier] = 0
    level = 0
    while frontier.any():
        level += 1
        frontier = ((frontier.astype(np.float32) @ adj) > 0) & ~seen
        dist[frontier] = level
        seen |= frontier
    return dist


def _hemisphere_numpy(dist, cptr, cverts):
    nv = dist.shape[0]
    nc = cptr.shape[0] - 1
    near = np.full((nv, nc), -1, dtype=np.int32)
    far = np.full((nv, nc), -1, dtype=np.int32)
    for c in range(nc):
        verts = cverts[cptr[c]:cptr[c + 1]]
        sub = dist[:, verts]
        lo = sub.min(axis=1)
        hi = sub.max(axis=1)
        lo_unique = (sub == lo[:, None]).sum(axis=1) == 1
        hi_unique = (sub == hi[:, None]).sum(axis=1) == 1
        near[:, c] = np.where(lo_unique, verts[sub.argmin(axis=1)], -1)
        far[:, c] = np.where(hi_unique, verts[sub.argmax(axis=1)], -1)
    return near, far


def _conditions_ab_numpy(near, far, outer, inner):
    """First (v, k) violating (A) or (B) for containment pair k, else (-1, -1).

    ``near``/``far`` must be tie-free.  Pair k says cell ``inner[k]`` is a
    face of cell ``outer[k]``.
    """
    if outer.shape[0] == 0:
        return -1, -1
    n_e = near[:, outer]
    f_e = far[:, outer]
    ref_near = near[:, inner]
    ref_far = far[:, inner]
    cols = inner[None, :]
    bad = (
        (near[n_e, cols] != ref_near)
        | (far[f_e, cols] != ref_near)
        | (near[f_e, cols] != ref_far)
        | (far[n_e, cols] != ref_far)
    )
    hits = np.argwhere(bad)
    if hits.shape[0] == 0:
        return -1, -1
    return int(hits[0, 0]), int(hits[0, 1])


def _additive_numpy(dist, far, cptr, cverts):
    """First (v, c, w) with d(v, far) != d(v, w) + d(w, far), else (-1, -1, -1)."""
    nv = dist.shape[0]
    nc = cptr.shape[0] - 1
    rows = np.arange(nv)
    for c in range(nc):
        verts = cverts[cptr[c]:cptr[c + 1]]
        tgt = far[:, c]
        ok_tgt = tgt >= 0
        safe = np.where(ok_tgt, tgt, 0)
        lhs = dist[rows, safe][:, None]
        rhs = dist[:, verts] + dist[verts][:, safe].T
        bad = (lhs != rhs) | ~ok_tgt[:, None]
        hits = np.argwhere(bad)
        if hits.shape[0]:
            v, k = hits[0]
            return int(v), c, int(verts[k])
    return -1, -1, -1


def _leq_numpy(plus, minus):
    p_out = plus[:, None] & ~plus[None, :]
    m_out = minus[:, None] & ~minus[None, :]
    return (p_out == 0) & (m_out == 0)


numpy_impl = SimpleNamespace(
    all_pairs_distances=_apsp_numpy,
    hemisphere_maps=_hemisphere_numpy,
    conditions_ab=_conditions_ab_numpy,
    additive_identity=_additive_numpy,
    leq_matrix=_leq_numpy,
)


# ---------------------------------------------------------------- numba ---

if HAVE_NUMBA:

    @njit(cache=True)
    def _apsp_nb(indptr, indices):
        n = indptr.shape[0] - 1
        dist = np.full((n, n), -1, dtype=np.int32)
        queue = np.empty(max(n, 1), dtype=np.int64)
        for s in range(n):
            dist[s, s] = 0
            queue[0] = s
            head = 0
            tail = 1
            while head < tail:
                u = queue[head]
                head += 1
                du = dist[s, u]
                for k in range(indptr[u], indptr[u + 1]):
                    w = indices[k]
                    if dist[s, w] < 0:
                        dist[s, w] = du + 1
                        queue[tail] = w
                        tail += 1
        return dist

    @njit(cache=True)
    def _hemisphere_nb(dist, cptr, cverts):
        nv = dist.shape[0]
        nc = cptr.shape[0] - 1
        near = np.full((nv, nc), -1, dtype=np.int32)
        far = np.full((nv, nc), -1, dtype=np.int32)
        for c in range(nc):
            for v in range(nv):
                lo = 1 << 30
                hi = -1
                lo_arg = -1
                hi_arg = -1
                lo_count = 0
                hi_count = 0
                for k in range(cptr[c], cptr[c + 1]):
                    w = cverts[k]
                    d = dist[v, w]
                    if d < lo:
                        lo = d
                        lo_arg = w
                        lo_count = 1
                    elif d == lo:
                        lo_count += 1
                    if d > hi:
                        hi = d
                        hi_arg = w
                        hi_count = 1
                    elif d == hi:
                        hi_count += 1
                if lo_count == 1:
                    near[v, c] = lo_arg
                if hi_count == 1:
                    far[v, c] = hi_arg
        return near, far

    @njit(cache=True)
    def _conditions_ab_nb(near, far, outer, inner):
        nv = near.shape[0]
        for v in range(nv):
            for k in range(outer.shape[0]):
                e = outer[k]
                f = inner[k]
                a = near[v, f]
                b = far[v, f]
                ne = near[v, e]
                fe = far[v, e]
                if near[ne, f] != a or far[fe, f] != a:
                    return v, k
                if near[fe, f] != b or far[ne, f] != b:
                    return v, k
        return -1, -1

    @njit(cache=True)
    def _additive_nb(dist, far, cptr, cverts):
        nv = dist.shape[0]
        nc = cptr.shape[0] - 1
        for c in range(nc):
            for v in range(nv):
                t = far[v, c]
                for k in range(cptr[c], cptr[c + 1]):
                    w = cverts[k]
                    if t < 0 or dist[v, t] != dist[v, w] + dist[w, t]:
                        return v, c, w
        return -1, -1, -1

    @njit(cache=True)
    def _leq_nb(plus, minus):
        n = plus.shape[0]
        out = np.zeros((n, n), dtype=np.bool_)
        for i in range(n):
            pi = plus[i]
            mi = minus[i]
            for j in range(n):
                if (pi & ~plus[j]) == 0 and (mi & ~minus[j]) == 0:
                    out[i, j] = True
        return out

    numba_impl = SimpleNamespace(
        all_pairs_distances=_apsp_nb,
        hemisphere_maps=_hemisphere_nb,
        conditions_ab=_conditions_ab_nb,
        additive_identity=_additive_nb,
        leq_matrix=_leq_nb,
    )
else:  # pragma: no cover
    numba_impl = None


def backend():
    return numba_impl if USE_NUMBA else numpy_impl


def backend_name():
    return "numba" if USE_NUMBA else "numpy"


def all_pairs_distances(indptr, indices):
    """Unit-weight BFS distances between all vertex rows; -1 if unreachable."""
    return backend().all_pairs_distances(
        np.ascontiguousarray(indptr, dtype=np.int64), np.ascontiguousarray(indices, dtype=np.int64)
    )


def hemisphere_maps(dist, cptr, cverts):
    """Per (vertex row, cell) unique nearest / farthest vertex rows, -1 on a tie."""
    return backend().hemisphere_maps(
        np.ascontiguousarray(dist, dtype=np.int32),
        np.ascontiguousarray(cptr, dtype=np.int64),
        np.ascontiguousarray(cverts, dtype=np.int64),
    )


def conditions_ab(near, far, outer, inner):
    v, k = backend().conditions_ab(
        np.ascontiguousarray(near, dtype=np.int32),
        np.ascontiguousarray(far, dtype=np.int32),
        np.ascontiguousarray(outer, dtype=np.int64),
        np.ascontiguousarray(inner, dtype=np.int64),
    )
    return int(v), int(k)


def additive_identity(dist, far, cptr, cverts):
    v, c, w = backend().additive_identity(
        np.ascontiguousarray(dist, dtype=np.int32),
        np.ascontiguousarray(far, dtype=np.int32),
        np.ascontiguousarray(cptr, dtype=np.int64),
        np.ascontiguousarray(cverts, dtype=np.int64),
    )
    return int(v), int(c), int(w)


def leq_matrix(plus, minus):
    return backend().leq_matrix(
        np.ascontiguousarray(plus, dtype=np.int64), np.ascontiguousarray(minus, dtype=np.int64)
    )
