"""Brute-force ground truth for path equivalence.

Positive paths are tuples of vertex ids of Q.  Classes are obtained by
closing a path under elementary moves (swap a geodesic from ``u`` to
``farthest(u, e)`` for another geodesic between the same endpoints, ``e``
ranging over the cells containing ``u``).  Everything here works on explicit
path sets and is meant for small instances only.
"""

from collections import deque
from dataclasses import dataclass
from itertools import combinations

from .errors import ExplosionGuard, NotPositive, NotUniqueExtremum
from .hemisphere import HemisphereMaps
from .salvetti import check_positive

DEFAULT_CAP = 100_000


@dataclass(frozen=True)
class PathClass:
    representative: tuple  # lexicographically least member
    members: frozenset

    @property
    def source(self):
        return self.representative[0]

    @property
    def target(self):
        return self.representative[-1]

    @property
    def length(self):
        return len(self.representative) - 1

    def __contains__(self, path):
        return tuple(path) in self.members

    def __repr__(self):
        return f"PathClass({self.representative}, size={len(self.members)})"


class PathOracle:
    """Caches minimal paths and classes for one complex."""

    def __init__(self, q, maps=None, cap=DEFAULT_CAP, confine_to_cell=False):
        self.q = q
        self.maps = maps or HemisphereMaps(q)
        self.cap = cap
        self.confine = confine_to_cell
        self._minimal = {}
        self._classes = {}
        # for each vertex u: (t, span, cells) with t = farthest(u, e) for the cells e listed
        self._targets = {}
        for u in q.vertices:
            table = {}
            for e in sorted(q.cells_containing(u)):
                if q.dims[e] == 0:
                    continue
                t = self.maps.farthest(u, e)
                if q.distance(u, t) >= 2:
                    table.setdefault(t, []).append(e)
            self._targets[u] = [(t, q.distance(u, t), tuple(cells)) for t, cells in sorted(table.items())]
        self._two_cells = {}
        for e in q.cells_of_dim(2):
            vs = q.verts[e]
            for y in vs:
                near = [w for w in q.neighbors(y) if w in vs]
                for y1, y2 in combinations(near, 2):
                    self._two_cells.setdefault((y, y1, y2), []).append(e)

    # -- paths ---------------------------------------------------------

    def minimal_paths(self, v, w):
        key = (v, w)
        if key not in self._minimal:
            q = self.q
            out = []

            def walk(path):
                u = path[-1]
                if u == w:
                    out.append(tuple(path))
                    return
                left = q.distance(u, w)
                for x in q.neighbors(u):
                    if q.distance(x, w) == left - 1:
                        path.append(x)
                        walk(path)
                        path.pop()

            walk([v])
            self._minimal[key] = tuple(sorted(out))
        return self._minimal[key]

    def geodesic(self, v, w):
        return self.minimal_paths(v, w)[0]

    def moves(self, path):
        path = tuple(path)
        if self.confine:
            return self._confined_moves(path)
        n = len(path)
        out = set()
        targets, minimal = self._targets, self.minimal_paths
        for i, u in enumerate(path):
            for t, span, _ in targets[u]:
                j = i + span
                if j < n and path[j] == t:
                    head, tail, sub = path[:i], path[j + 1:], path[i:j + 1]
                    for alt in minimal(u, t):
                        if alt != sub:
                            out.add(head + alt + tail)
        return out

    def _confined_moves(self, path):
        q = self.q
        n = len(path)
        out = set()
        for i, u in enumerate(path):
            for t, span, cells in self._targets[u]:
                j = i + span
                if j >= n or path[j] != t:
                    continue
                sub = path[i:j + 1]
                allowed = [q.verts[e] for e in cells if set(sub) <= q.verts[e]]
                for alt in self.minimal_paths(u, t):
                    if alt != sub and any(set(alt) <= vs for vs in allowed):
                        out.add(path[:i] + alt + path[j + 1:])
        return out

    def class_of(self, path):
        path = tuple(path)
        hit = self._classes.get(path)
        if hit is not None:
            return hit
        check_positive(self.q, path)
        seen = {path}
        queue = deque([path])
        moves, cap = self.moves, self.cap
        while queue:
            fresh = moves(queue.popleft()) - seen
            if fresh:
                seen |= fresh
                if len(seen) > cap:
                    raise ExplosionGuard(f"class of {path} exceeds {cap} paths")
                queue.extend(fresh)
        cls = PathClass(min(seen), frozenset(seen))
        for p in seen:
            self._classes[p] = cls
        return cls

    def equivalent(self, p1, p2):
        p1, p2 = tuple(p1), tuple(p2)
        if len(p1) != len(p2) or p1[0] != p2[0] or p1[-1] != p2[-1]:
            return False
        return p2 in self.class_of(p1)

    # -- structure -----------------------------------------------------

    def check_flat(self):
        for v in self.q.vertices:
            for w in self.q.vertices:
                paths = self.minimal_paths(v, w)
                cls = self.class_of(paths[0])
                for p in paths[1:]:
                    if p not in cls:
                        return False, (v, w, paths[0], p)
        return True, None

    def _as_class(self, f):
        return f if isinstance(f, PathClass) else self.class_of(f)

    def divisors(self, f):
        cls = self._as_class(f)
        out = set()
        for m in cls.members:
            for k in range(1, len(m) + 1):
                out.add(self.class_of(m[:k]))
        return frozenset(out)

    def right_divisors(self, f):
        cls = self._as_class(f)
        out = set()
        for m in cls.members:
            for k in range(len(m)):
                out.add(self.class_of(m[k:]))
        return frozenset(out)

    def left_divides(self, f, g):
        return self._as_class(f) in self.divisors(g)

    def right_divides(self, f, g):
        """``g`` has ``f`` as a right factor (g = h f)."""
        return self._as_class(f) in self.right_divisors(g)

    def _top(self, pool, what):
        longest = max(c.length for c in pool)
        tops = [c for c in pool if c.length == longest]
        if len(tops) != 1:
            raise NotUniqueExtremum(f"{what}: {len(tops)} maximal candidates",
                                    witness=tuple(sorted(c.representative for c in tops)))
        top = tops[0]
        if not pool <= self.divisors(top):
            raise NotUniqueExtremum(f"{what}: longest candidate does not dominate the set",
                                    witness=(top.representative,))
        return top

    def meet(self, f, g):
        f, g = self._as_class(f), self._as_class(g)
        if f.source != g.source:
            raise NotPositive("meet needs a common source")
        return self._top(self.divisors(f) & self.divisors(g), "meet")

    def join(self, f, g, bound=None):
        """Least upper bound via the square-completion closure of the divisor sets.

        ``bound`` caps the length of elements in the closure; by default it
        is ``max(len f, len g) * diam``, the length of the Garside power that
        dominates both arguments.
        """
        f, g = self._as_class(f), self._as_class(g)
        if f.source != g.source:
            raise NotPositive("join needs a common source")
        if bound is None:
            bound = max(f.length, g.length, 1) * max(self.q.diameter, 1)
        pool = set(self.divisors(f) | self.divisors(g))
        changed = True
        while changed:
            changed = False
            for c in sorted(pool, key=lambda k: (k.length, k.representative)):
                y = c.target
                ext = [y1 for y1 in self.q.neighbors(y) if self.class_of(c.representative + (y1,)) in pool]
                for y1, y2 in combinations(ext, 2):
                    cells = self._two_cells.get((y, y1, y2), [])
                    if len(cells) != 1:
                        raise NotUniqueExtremum(f"{len(cells)} 2-cells contain {y}, {y1}, {y2}",
                                                witness=(y, y1, y2))
                    z = self.maps.farthest(y, cells[0])
                    grown = self.class_of(c.representative + self.geodesic(y, z)[1:])
                    if grown in pool:
                        continue
                    if grown.length > bound:
                        raise NotUniqueExtremum(f"closure exceeds length bound {bound}")
                    pool |= self.divisors(grown)
                    changed = True
        return self._top(pool, "join")

    # -- words ---------------------------------------------------------

    def delta_path(self, x, phi, power):
        path = (x,)
        for _ in range(power):
            path = path + self.geodesic(path[-1], phi(path[-1]))[1:]
        return path

    def push(self, state, step, phi, reduce=True):
        """Extend a cleared word ``(k, path)`` by one traversal step ``(u, v, inverse)``.

        The step walks the Salvetti edge from ``u`` to ``v``, against its
        orientation when ``inverse``.  Only path surgery is used:
        ``p a^-1 = Delta^-1 phi(p) u(phi(v), a_source)``.  With ``reduce``
        two exact shortcuts keep paths short: ``p a^-1 = p'`` whenever some
        member of the class of ``p`` is ``p' a``, and a leading minimal path
        ``x -> phi(x)`` (a Delta by flatness) cancels one denominator factor.
        """
        k, path = state
        u, v, inverse = step
        if path[-1] != u:
            raise NotPositive(f"step {u}->{v} does not start at {path[-1]}")
        if not inverse:
            return k, path + (v,)
        if reduce and len(path) > 1:
            ending = sorted(m for m in self.class_of(path).members if m[-2] == v)
            if ending:
                return k, ending[0][:-1]
        twisted = tuple(phi(x) for x in path)
        path = twisted + self.geodesic(twisted[-1], v)[1:]
        if reduce:
            return self._strip_delta(k + 1, path, phi)
        return k + 1, path

    def clear_word(self, steps, base, phi, reduce=True):
        """Rewrite a signed word as ``Delta^-k`` times a positive path.

        Returns ``(k, path)`` with ``path`` starting at ``phi^k(base)``.
        """
        state = (0, (base,))
        for step in steps:
            state = self.push(state, step, phi, reduce)
        return state

    def _strip_delta(self, k, path, phi):
        while k > 0:
            x = path[0]
            span = self.q.distance(x, phi(x))
            if len(path) - 1 < span:
                break
            hits = sorted(m for m in self.class_of(path).members if m[span] == phi(x))
            if not hits:
                break
            path = hits[0][span:]
            k -= 1
        return k, path

    def states_equal(self, s1, s2, phi):
        """Do two cleared words from the same base denote the same element?"""
        (k1, p1), (k2, p2) = s1, s2
        if k1 > k2:
            k1, p1, k2, p2 = k2, p2, k1, p1
        p1 = self.delta_path(p2[0], phi, k2 - k1) + p1[1:]
        return self.equivalent(p1, p2)

    def words_equal(self, steps1, steps2, base, phi):
        return self.states_equal(self.clear_word(steps1, base, phi), self.clear_word(steps2, base, phi), phi)


def enumerate_minimal_paths(q, v, w):
    return set(PathOracle(q).minimal_paths(v, w))


def elementary_moves(q, maps, path, confine_to_cell=False):
    return PathOracle(q, maps, confine_to_cell=confine_to_cell).moves(path)


def oracle_class(q, maps, path, cap=DEFAULT_CAP, confine_to_cell=False):
    return PathOracle(q, maps, cap=cap, confine_to_cell=confine_to_cell).class_of(path)


def check_flat(q, maps=None, confine_to_cell=False):
    return PathOracle(q, maps, confine_to_cell=confine_to_cell).check_flat()


def oracle_divisors(q, maps, path):
    return PathOracle(q, maps).divisors(path)


def oracle_meet(q, maps, f, g):
    return PathOracle(q, maps).meet(f, g)


def oracle_join(q, maps, f, g):
    return PathOracle(q, maps).join(f, g)
