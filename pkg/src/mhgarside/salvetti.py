"""Salvetti complex of a QMH complex.

One cell ``<e;v>`` per cell ``e`` of Q and vertex ``v`` of ``e``; the
boundary of ``<e;v>`` is ``{<f; nearest(v, f)> : f a proper face of e}``.
Positive paths of the oriented 1-skeleton are identified with vertex
sequences of Q: an edge ``<e;v>`` of Sal(Q) is the unique lift of the step
from ``v`` to the other endpoint of ``e``.
"""

from .cells import build_complex
from .errors import NotPositive, NotQmh, UnknownCell
from .hemisphere import HemisphereMaps


class SalvettiComplex:
    """Sal(Q) together with the projection to Q and edge orientations."""

    def __init__(self, q, complex_, cells, index):
        self.q = q
        self.complex = complex_
        self.cells = tuple(cells)  # sal id -> (base cell of Q, apex vertex of Q)
        self.index = index  # (base, apex) -> sal id

    def __repr__(self):
        return f"SalvettiComplex({self.complex.cell_counts()})"

    def project(self, cell):
        """psi: a Sal cell (id or ``(base, apex)``) to its base cell of Q."""
        if isinstance(cell, tuple):
            if cell not in self.index:
                raise UnknownCell(f"no Salvetti cell {cell!r}")
            return cell[0]
        if not 0 <= cell < len(self.cells):
            raise UnknownCell(f"no Salvetti cell {cell!r}")
        return self.cells[cell][0]

    def fiber(self, e):
        return tuple(self.index[(e, v)] for v in sorted(self.q.verts[e]))

    def edge(self, source, target):
        """The directed 1-cell from ``source`` to adjacent ``target``: ``(base edge, source)``."""
        es = self.q.edge_between(source, target)
        if not es:
            raise NotPositive(f"{source} and {target} are not adjacent")
        return (min(es), source)

    def orientation(self, sal_id):
        """(source, target) vertices of Q for a Sal 1-cell."""
        base, apex = self.cells[sal_id]
        if self.q.dims[base] != 1:
            raise UnknownCell(f"Salvetti cell {sal_id} is not a 1-cell")
        (other,) = self.q.verts[base] - {apex}
        return apex, other

    def directed_edges(self):
        return [(self.cells[i], self.orientation(i)) for i in range(len(self.cells)) if self.complex.dims[i] == 1]

    def boundary(self, sal_id):
        return self.complex.facets[sal_id]

    def path_edges(self, path):
        """Vertex sequence of Q -> list of (base edge, apex) letters."""
        check_positive(self.q, path)
        return [self.edge(a, b) for a, b in zip(path, path[1:])]

    def edges_path(self, letters, start=None):
        """Inverse of :meth:`path_edges` for a chain of positive letters."""
        path = [] if start is None else [start]
        for base, apex in letters:
            if (base, apex) not in self.index or self.q.dims[base] != 1:
                raise NotPositive(f"unknown edge letter {(base, apex)!r}")
            if path and path[-1] != apex:
                raise NotPositive(f"letter {(base, apex)} does not start at {path[-1]}")
            if not path:
                path.append(apex)
            (other,) = self.q.verts[base] - {apex}
            path.append(other)
        return tuple(path)


def check_positive(q, path):
    if not path:
        raise NotPositive("empty path has no base vertex")
    for v in path:
        if q.vrow[v] < 0:
            raise NotPositive(f"{v!r} is not a vertex")
    for a, b in zip(path, path[1:]):
        if b not in q.neighbors(a):
            raise NotPositive(f"{a} -> {b} is not an edge", witness=(a, b))


def build_salvetti(q, maps=None):
    maps = maps or HemisphereMaps(q)
    if not maps.total:
        raise NotQmh("nearest/farthest vertex maps are not unique", witness=maps.first_tie)
    order = sorted(range(len(q)), key=lambda e: (q.dims[e], e))
    cells, index, descriptors = [], {}, []
    for e in order:
        for v in sorted(q.verts[e]):
            sid = len(cells)
            if q.dims[e] == 0:
                descriptors.append((0, [], [sid]))
            else:
                faces = [index[(f, maps.nearest(v, f))] for f in sorted(q.faces[e])]
                verts = [index[(w, w)] for w in sorted(q.verts[e])]
                descriptors.append((q.dims[e], faces, verts))
            cells.append((e, v))
            index[(e, v)] = sid
    labels = [f"{q.labels[e]}@{q.labels[v]}" for e, v in cells]
    cx = build_complex(descriptors, labels=labels)
    return SalvettiComplex(q, cx, cells, index)


def project(sal, cell):
    return sal.project(cell)


def opposite_path(sal_or_q, path):
    """gamma -> gamma°: the reversed vertex sequence, again a positive path.

    Each step ``<v_i, e_i>`` (from ``v_i`` to ``v_{i+1}``) becomes
    ``<v_{i+1}, e_i>`` and the order of steps is reversed.
    """
    q = getattr(sal_or_q, "q", sal_or_q)
    check_positive(q, path)
    return tuple(reversed(path))
