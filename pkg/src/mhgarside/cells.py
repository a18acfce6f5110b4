"""Finite regular cell complexes stored as graded face posets.

Cells carry dense integer ids (declaration order) plus a printable label.
Only the poset data is kept: dimension, proper faces (transitively closed),
and the vertex set of each cell.  The 1-skeleton is the graph whose edges
are the 1-cells; skeleton distances are unit-weight BFS lengths computed
once, on first use, for all vertices.
"""

from functools import cached_property

import numpy as np

from . import _kernels
from .errors import ComplexFormatError, Disconnected, NonRegular, UnknownCell


class CellComplex:
    """Immutable graded face poset with vertex incidence.

    Build instances with :func:`build_complex` or :func:`read_complex`; the
    constructor assumes already validated data.
    """

    covector = None  # sign vectors per cell, set for dual complexes

    def __init__(self, dims, faces, verts, labels):
        self.dims = tuple(dims)
        self.faces = tuple(faces)  # proper faces, transitively closed
        self.verts = tuple(verts)
        self.labels = tuple(labels)
        self.label_index = {lab: i for i, lab in enumerate(self.labels)}
        self.vertices = tuple(i for i, d in enumerate(self.dims) if d == 0)
        self.edges = tuple(i for i, d in enumerate(self.dims) if d == 1)
        vrow = np.full(len(self.dims), -1, dtype=np.int64)
        vrow[list(self.vertices)] = np.arange(len(self.vertices))
        self.vrow = vrow
        adj = {v: set() for v in self.vertices}
        for e in self.edges:
            a, b = sorted(self.verts[e])
            adj[a].add(b)
            adj[b].add(a)
        self._adj = {v: tuple(sorted(ws)) for v, ws in adj.items()}

    def __len__(self):
        return len(self.dims)

    def __repr__(self):
        counts = self.cell_counts()
        return f"CellComplex(dims={dict(enumerate(counts))})"

    @property
    def dimension(self):
        return max(self.dims) if self.dims else -1

    def cell_counts(self):
        out = [0] * (self.dimension + 1)
        for d in self.dims:
            out[d] += 1
        return out

    def euler_characteristic(self):
        return sum((-1) ** d for d in self.dims)

    def cells_of_dim(self, d):
        return tuple(i for i, k in enumerate(self.dims) if k == d)

    def _check(self, e):
        if not isinstance(e, (int, np.integer)) or not 0 <= e < len(self.dims):
            raise UnknownCell(f"unknown cell {e!r}")

    def vertices_of(self, e):
        self._check(e)
        return self.verts[e]

    def faces_of(self, e):
        """Closed cell: every face of ``e`` including ``e`` itself."""
        self._check(e)
        return self.faces[e] | {e}

    @cached_property
    def facets(self):
        out = []
        for e, fs in enumerate(self.faces):
            covered = set()
            for f in fs:
                covered |= self.faces[f]
            out.append(frozenset(fs - covered))
        return tuple(out)

    @cached_property
    def cofaces(self):
        up = [set() for _ in self.dims]
        for e, fs in enumerate(self.faces):
            for f in fs:
                up[f].add(e)
        return tuple(frozenset(s) for s in up)

    def cells_containing(self, v):
        """Cells ``e`` with ``v`` in V(e), ``v`` included."""
        return self.cofaces[v] | {v}

    def neighbors(self, v):
        return self._adj[v]

    def edge_between(self, a, b):
        """The 1-cells joining vertices ``a`` and ``b`` (sorted ids)."""
        return tuple(e for e in self.cofaces[a] if self.dims[e] == 1 and b in self.verts[e])

    @cached_property
    def dist(self):
        """All-pairs skeleton distances indexed by vertex row (see ``vrow``)."""
        nv = len(self.vertices)
        indptr = np.zeros(nv + 1, dtype=np.int64)
        nbrs = []
        for i, v in enumerate(self.vertices):
            row = [int(self.vrow[w]) for w in self._adj[v]]
            nbrs.extend(row)
            indptr[i + 1] = indptr[i] + len(row)
        d = _kernels.all_pairs_distances(indptr, np.asarray(nbrs, dtype=np.int64))
        d.setflags(write=False)
        return d

    def distance(self, v, w):
        rv, rw = self.vrow[v], self.vrow[w]
        if rv < 0 or rw < 0:
            raise UnknownCell(f"not a pair of 0-cells: {v!r}, {w!r}")
        return int(self.dist[rv, rw])

    @cached_property
    def diameter(self):
        return int(self.dist.max()) if len(self.vertices) else 0

    def closure(self, e):
        """Closed cell ``e`` as a complex of its own.

        Returns ``(sub, old_ids)`` where ``old_ids[i]`` is the id in ``self``
        of cell ``i`` of ``sub``; labels are preserved.
        """
        old_ids = sorted(self.faces_of(e), key=lambda c: (self.dims[c], c))
        new = {c: i for i, c in enumerate(old_ids)}
        sub = CellComplex(
            [self.dims[c] for c in old_ids],
            [frozenset(new[f] for f in self.faces[c]) for c in old_ids],
            [frozenset(new[v] for v in self.verts[c]) for c in old_ids],
            [self.labels[c] for c in old_ids],
        )
        return sub, tuple(old_ids)


def skeleton_distance(c, v, w):
    return c.distance(v, w)


def vertices_of(c, e):
    return c.vertices_of(e)


def faces_of(c, e):
    return c.faces_of(e)


def build_complex(cells, labels=None, check_connected=True):
    """Validate cell descriptors and return a :class:`CellComplex`.

    ``cells`` is a sequence of ``(dim, faces, verts)``; ``faces`` and ``verts``
    refer to positions of earlier descriptors.  ``verts`` may be empty for
    cells of positive dimension, in which case it is the union of the face
    vertex sets.  Faces are closed transitively.
    """
    dims, faces, verts = [], [], []
    for i, (dim, fs, vs) in enumerate(cells):
        dim = int(dim)
        if dim < 0:
            raise ComplexFormatError(f"cell {i}: negative dimension")
        fs = [int(f) for f in fs]
        vs_list = [int(v) for v in vs]
        closed = set()
        for f in fs:
            if not 0 <= f < i:
                raise ComplexFormatError(f"cell {i}: face {f} is not a previously declared cell")
            if dims[f] >= dim:
                raise ComplexFormatError(f"cell {i}: face {f} has dimension {dims[f]} >= {dim}")
            closed.add(f)
            closed |= faces[f]
        if dim == 0:
            if any(v != i for v in vs_list):
                raise NonRegular(f"0-cell {i} must have vertex set {{{i}}}", witness=(i,))
            vset = frozenset([i])
        else:
            for v in vs_list:
                if not 0 <= v < i or dims[v] != 0:
                    raise ComplexFormatError(f"cell {i}: vertex {v} is not a previously declared 0-cell")
            if dim == 1:
                if len(vs_list) != 2 or vs_list[0] == vs_list[1]:
                    ends = vs_list or sorted({v for f in fs for v in verts[f]})
                    if len(set(ends)) != 2 or len(ends) != 2:
                        raise NonRegular(f"1-cell {i} needs two distinct endpoints, got {vs_list}", witness=(i,))
                    vs_list = ends
            vset = frozenset(vs_list) if vs_list else frozenset(v for f in closed for v in verts[f])
            for f in closed:
                if not verts[f] <= vset:
                    raise NonRegular(f"V({f}) is not contained in V({i})", witness=(f, i))
            if dim == 1:
                for v in vset:
                    closed.add(v)
        dims.append(dim)
        faces.append(frozenset(closed))
        verts.append(vset)
    if labels is None:
        labels = [str(i) for i in range(len(dims))]
    if len(labels) != len(dims) or len(set(labels)) != len(labels):
        raise ComplexFormatError("labels must be unique, one per cell")
    cx = CellComplex(dims, faces, verts, labels)
    if check_connected and cx.vertices:
        seen = {cx.vertices[0]}
        stack = [cx.vertices[0]]
        while stack:
            v = stack.pop()
            for w in cx.neighbors(v):
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) != len(cx.vertices):
            missing = min(set(cx.vertices) - seen)
            raise Disconnected(f"1-skeleton is disconnected (vertex {cx.labels[missing]} unreachable)",
                               witness=(missing,))
    return cx


def polygon(n):
    """The n-cycle as a 1-dimensional complex (vertices 0..n-1 first)."""
    cells = [(0, [], [i]) for i in range(n)]
    cells += [(1, [i, (i + 1) % n], [i, (i + 1) % n]) for i in range(n)]
    return build_complex(cells)


def add_top_cell(c):
    """``c`` plus one cell of dimension ``dim(c) + 1`` whose faces are all cells."""
    cells = [(c.dims[i], sorted(c.faces[i]), sorted(c.verts[i]) if c.dims[i] else [i]) for i in range(len(c))]
    cells.append((c.dimension + 1, list(range(len(c))), list(c.vertices)))
    labels = list(c.labels)
    top = str(len(c))
    while top in c.label_index:
        top = "top" + top
    labels.append(top)
    return build_complex(cells, labels=labels)


# ----------------------------------------------------------------- I/O ---

def _split_list(token, key):
    if not token.startswith(key + "="):
        raise ComplexFormatError(f"expected {key}=..., got {token!r}")
    body = token[len(key) + 1:]
    return [t for t in body.split(",") if t]


def parse_complex(text):
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise ComplexFormatError("empty complex file")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "cells":
        raise ComplexFormatError(f"bad header {lines[0]!r}; expected 'cells <n>'")
    try:
        n = int(head[1])
    except ValueError:
        raise ComplexFormatError(f"bad cell count {head[1]!r}") from None
    body = lines[1:]
    if len(body) != n:
        raise ComplexFormatError(f"header announces {n} cells, found {len(body)}")
    index, labels, cells = {}, [], []
    for line in body:
        parts = line.split()
        if len(parts) != 4:
            raise ComplexFormatError(f"bad cell line {line!r}")
        lab, dim_s, faces_s, verts_s = parts
        if lab in index:
            raise ComplexFormatError(f"duplicate cell id {lab!r}")
        try:
            dim = int(dim_s)
        except ValueError:
            raise ComplexFormatError(f"bad dimension in {line!r}") from None
        try:
            fs = [index[t] for t in _split_list(faces_s, "faces")]
            vs = [index[t] if t != lab else len(labels) for t in _split_list(verts_s, "verts")]
        except KeyError as exc:
            raise ComplexFormatError(f"cell {lab!r} references undeclared cell {exc.args[0]!r}") from None
        index[lab] = len(labels)
        labels.append(lab)
        cells.append((dim, fs, vs))
    return build_complex(cells, labels=labels)


def read_complex(path):
    with open(path, encoding="utf-8") as fh:
        return parse_complex(fh.read())


def format_complex(c, comment=None):
    out = []
    if comment:
        out.extend(f"# {line}" for line in comment.splitlines())
    out.append(f"cells {len(c)}")
    for i in range(len(c)):
        fs = ",".join(c.labels[f] for f in sorted(c.facets[i]))
        vs = ",".join(c.labels[v] for v in sorted(c.verts[i]))
        out.append(f"{c.labels[i]} {c.dims[i]} faces={fs} verts={vs}")
    return "\n".join(out) + "\n"


def write_complex(c, path, comment=None):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_complex(c, comment))
