"""Garside structure on the path category of a flat, involutive, simplicial MH complex.

A simple morphism is determined by its endpoints, so a morphism is stored
as a source vertex plus the chain of factor endpoints ``(y1, ..., yk)``
meaning ``u(x, y1) u(y1, y2) ... u(y_{k-1}, yk)``.  Every computation
reduces to the betweenness test ``d(x, y) + d(y, z) == d(x, z)``.
"""

import re
from dataclasses import dataclass
from itertools import combinations

from .errors import (
    NotComposable,
    NotFlat,
    NotMh,
    NotSimplicial,
    NotUniqueExtremum,
    SourceMismatch,
    WordFormatError,
)
from .hemisphere import HemisphereMaps, check_mh, find_involution
from .oracle import PathOracle


@dataclass(frozen=True)
class Morphism:
    source: int
    ends: tuple = ()  # left-weighted factor endpoints

    @property
    def target(self):
        return self.ends[-1] if self.ends else self.source

    @property
    def factors(self):
        pts = (self.source,) + self.ends
        return tuple(zip(pts, pts[1:]))

    def __len__(self):
        return len(self.ends)


@dataclass(frozen=True)
class GroupoidElement:
    """``Delta^-p`` (read from ``source``) followed by the positive morphism."""

    source: int
    p: int
    positive: Morphism

    @property
    def target(self):
        return self.positive.target


def star_is_boolean(q):
    """Local simpliciality test on Q itself.

    At every vertex ``y`` the cells containing ``y`` must correspond
    bijectively to subsets of the edges at ``y`` (the full set may be
    missing when no top cell was added), with dimension equal to subset size.
    """
    for y in q.vertices:
        at_y = {e for e in q.cofaces[y] if q.dims[e] == 1}
        seen = set()
        for e in q.cofaces[y]:
            own = frozenset(f for f in q.faces_of(e) if f in at_y)
            if len(own) != q.dims[e] or own in seen:
                return False, (y, e)
            seen.add(own)
        seen.add(frozenset())
        if len(seen) < 2 ** len(at_y) - 1 or (len(seen) == 2 ** len(at_y) - 1 and frozenset(at_y) in seen):
            return False, (y,)
    return True, None


class GarsideContext:
    def __init__(self, q, maps, phi, oracle):
        self.q = q
        self.maps = maps
        self.phi = phi
        self.oracle = oracle
        rows = {v: i for i, v in enumerate(q.vertices)}
        d = q.dist.tolist()
        self._d = {v: {w: d[rows[v]][rows[w]] for w in q.vertices} for v in q.vertices}
        self._pairs = {}
        self.delta_length = max(self._d[v][phi(v)] for v in q.vertices) if q.vertices else 0

    def d(self, x, y):
        return self._d[x][y]

    def between(self, x, y, z):
        dx = self._d[x]
        return dx[y] + self._d[y][z] == dx[z]

    def geodesic(self, x, y):
        """Lexicographically least minimal path from ``x`` to ``y``."""
        path = [x]
        while path[-1] != y:
            here = path[-1]
            left = self._d[here][y]
            path.append(min(w for w in self.q.neighbors(here) if self._d[w][y] == left - 1))
        return tuple(path)


def make_context(q, maps=None, confine_to_cell=False):
    maps = maps or HemisphereMaps(q)
    report = check_mh(q, maps)
    if not report.mh.passed:
        failed = next(r for r in (report.qmh, report.lmh, report.mh) if not r.passed)
        raise NotMh(f"complex is not MH ({failed.name} fails)", witness=failed.witness)
    phi = find_involution(q)
    oracle = PathOracle(q, maps, confine_to_cell=confine_to_cell)
    flat, witness = oracle.check_flat()
    if not flat:
        raise NotFlat("minimal paths with common endpoints are not all equivalent", witness=witness)
    ok, witness = star_is_boolean(q)
    if not ok:
        raise NotSimplicial("vertex star is not Boolean", witness=witness)
    return GarsideContext(q, maps, phi, oracle)


def between(ctx, x, y, z):
    return ctx.between(x, y, z)


# ------------------------------------------------------------ morphisms ---

def identity(ctx, x):
    return Morphism(x)


def simple(ctx, x, y):
    return Morphism(x, (y,) if x != y else ())


def delta(ctx, x):
    return simple(ctx, x, ctx.phi(x))


def delta_power(ctx, x, n):
    ends, y = [], x
    for _ in range(n):
        y = ctx.phi(y)
        ends.append(y)
    return Morphism(x, tuple(ends))


def apply_phi(ctx, f):
    return Morphism(ctx.phi(f.source), tuple(ctx.phi(y) for y in f.ends))


def _fix_pair(ctx, x, y, z):
    """Middle vertex of the left-weighted form of ``u(x, y) u(y, z)``.

    Atoms of the right factor move left while the left factor stays simple:
    a neighbor ``w`` of ``y`` qualifies when ``d(x, w) = d(x, y) + 1`` and
    ``w`` lies between ``y`` and ``z``.
    """
    key = (x, y, z)
    hit = ctx._pairs.get(key)
    if hit is not None:
        return hit
    dxy = ctx.d(x, y)
    while y != z:
        for w in ctx.q.neighbors(y):
            if ctx.d(x, w) == dxy + 1 and ctx.between(y, w, z):
                y, dxy = w, dxy + 1
                break
        else:
            break
    ctx._pairs[key] = y
    return y


def _append(ctx, chain, y):
    """Right-multiply the left-weighted chain (in place) by ``u(chain[-1], y)``."""
    if y == chain[-1]:
        return
    chain.append(y)
    i = len(chain) - 2
    while i >= 1:
        m = _fix_pair(ctx, chain[i - 1], chain[i], chain[i + 1])
        if m == chain[i]:
            break
        chain[i] = m
        if m == chain[i + 1]:
            del chain[i + 1]
        i -= 1


def _normalize(ctx, source, pts):
    """Left-weighted form of the chain ``source -> pts[0] -> pts[1] ...``."""
    chain = [source]
    for y in pts:
        _append(ctx, chain, y)
    return Morphism(chain[0], tuple(chain[1:]))


def normalize(ctx, source, pts):
    return _normalize(ctx, source, pts)


def from_path(ctx, path):
    """Morphism of a positive vertex path."""
    path = tuple(path)
    for a, b in zip(path, path[1:]):
        if b not in ctx.q.neighbors(a):
            raise NotComposable(f"{a} -> {b} is not an edge", witness=(a, b))
    return _normalize(ctx, path[0], path[1:])


def to_path(ctx, f):
    path = (f.source,)
    for a, b in f.factors:
        path = path + ctx.geodesic(a, b)[1:]
    return path


def length(ctx, f):
    return sum(ctx.d(a, b) for a, b in f.factors)


def compose(ctx, f, g):
    if f.target != g.source:
        raise SourceMismatch(f"cannot compose: target {f.target} != source {g.source}")
    chain = [f.source, *f.ends]
    for y in g.ends:
        _append(ctx, chain, y)
    return Morphism(chain[0], tuple(chain[1:]))


def simple_meet(ctx, x, y1, y2):
    cands = [m for m in ctx.q.vertices if ctx.between(x, m, y1) and ctx.between(x, m, y2)]
    top = max(ctx.d(x, m) for m in cands)
    best = [m for m in cands if ctx.d(x, m) == top]
    if len(best) != 1:
        raise NotUniqueExtremum(f"simple meet at {x} of {y1}, {y2} is not unique", witness=tuple(best))
    return best[0]


def simple_join(ctx, x, y1, y2):
    cands = [j for j in ctx.q.vertices if ctx.between(x, y1, j) and ctx.between(x, y2, j)]
    low = min(ctx.d(x, j) for j in cands)
    best = [j for j in cands if ctx.d(x, j) == low]
    if len(best) != 1:
        raise NotUniqueExtremum(f"simple join at {x} of {y1}, {y2} is not unique", witness=tuple(best))
    return best[0]


def _cancel_simple(ctx, f, t):
    """``u(x, t) \\ f`` where ``u(x, t)`` left-divides the head of ``f``."""
    if t == f.source:
        return f
    head = f.ends[0]
    return _normalize(ctx, t, f.ends if head != t else f.ends[1:])


def _atoms_of(ctx, f):
    """Targets of the atoms left-dividing ``f`` (atom-head law)."""
    if not f.ends:
        return []
    x, y = f.source, f.ends[0]
    return [w for w in ctx.q.neighbors(x) if ctx.between(x, w, y)]


def meet(ctx, f, g):
    if f.source != g.source:
        raise SourceMismatch("meet needs a common source")
    source = x = f.source
    acc = []
    while f.ends and g.ends:
        t = simple_meet(ctx, x, f.ends[0], g.ends[0])
        if t == x:
            break
        acc.append(t)
        f, g = _cancel_simple(ctx, f, t), _cancel_simple(ctx, g, t)
        x = t
    return _normalize(ctx, source, acc)


def left_divides(ctx, f, g):
    if f.source != g.source:
        return False
    return meet(ctx, f, g) == f


def left_quotient(ctx, f, g):
    """``h`` with ``f h = g``; requires ``f`` to left-divide ``g``."""
    if not left_divides(ctx, f, g):
        raise NotUniqueExtremum("left_quotient: first argument does not divide the second", witness=(f, g))
    for y in f.ends:
        # a simple divides g iff it divides the head of g
        g = _cancel_simple(ctx, g, y)
    return g


def divisors(ctx, f):
    """All left divisors of ``f``, grown atom by atom."""
    start = Morphism(f.source)
    seen = {start: f}
    queue = [start]
    while queue:
        h = queue.pop()
        rest = seen[h]
        for w in _atoms_of(ctx, rest):
            h2 = compose(ctx, h, simple(ctx, h.target, w))
            if h2 not in seen:
                seen[h2] = _cancel_simple(ctx, rest, w)
                queue.append(h2)
    return frozenset(seen)


def join(ctx, f, g):
    """Least common right multiple by the square-completion closure.

    The divisor sets of ``f`` and ``g`` are closed under: if ``c u(y, y1)``
    and ``c u(y, y2)`` are in the set then so is ``c u(y, j)`` with ``j``
    the simple join; everything stays below ``Delta^n``.
    """
    if f.source != g.source:
        raise SourceMismatch("join needs a common source")
    x = f.source
    ceiling = delta_power(ctx, x, max(len(f), len(g)))
    pool = set(divisors(ctx, f) | divisors(ctx, g))
    changed = True
    while changed:
        changed = False
        for c in sorted(pool, key=lambda m: (length(ctx, m), m.ends)):
            y = c.target
            ext = [w for w in ctx.q.neighbors(y) if compose(ctx, c, simple(ctx, y, w)) in pool]
            for y1, y2 in combinations(ext, 2):
                grown = compose(ctx, c, simple(ctx, y, simple_join(ctx, y, y1, y2)))
                if grown in pool:
                    continue
                if not left_divides(ctx, grown, ceiling):
                    raise NotUniqueExtremum("join closure escapes the Delta-power bound", witness=(grown,))
                pool |= divisors(ctx, grown)
                changed = True
    longest = max(length(ctx, m) for m in pool)
    tops = [m for m in pool if length(ctx, m) == longest]
    if len(tops) != 1:
        raise NotUniqueExtremum(f"join: {len(tops)} maximal candidates", witness=tuple(tops))
    top = tops[0]
    if not (left_divides(ctx, f, top) and left_divides(ctx, g, top)):
        raise NotUniqueExtremum("join candidate is not a common multiple", witness=(top,))
    return top


# ------------------------------------------------------------ groupoid ---

def element(ctx, x):
    return GroupoidElement(x, 0, Morphism(x))


def _canonical(ctx, el):
    p, pos = el.p, el.positive
    while p > 0 and pos.ends and pos.ends[0] == ctx.phi(pos.source):
        pos = Morphism(pos.ends[0], pos.ends[1:])
        p -= 1
    return GroupoidElement(el.source, p, pos)


def multiply_step(ctx, el, u, v, inverse=False):
    """Append the traversal ``u -> v`` of a Salvetti edge.

    When ``inverse`` the edge is oriented ``v -> u`` and is walked backwards;
    ``a^-1 = Delta(phi v)^-1 u(phi v, u)`` and ``P Delta(phi t)^-1 = Delta^-1 phi(P)``.
    """
    pos = el.positive
    if pos.target != u:
        raise NotComposable(f"step from {u} does not start at {pos.target}", witness=(u, v))
    if v not in ctx.q.neighbors(u):
        raise NotComposable(f"{u} and {v} are not adjacent", witness=(u, v))
    if not inverse:
        pos = compose(ctx, pos, simple(ctx, u, v))
        return _canonical(ctx, GroupoidElement(el.source, el.p, pos))
    twisted = apply_phi(ctx, pos)
    pos = compose(ctx, twisted, simple(ctx, twisted.target, v))
    return _canonical(ctx, GroupoidElement(el.source, el.p + 1, pos))


def multiply(ctx, a, b):
    """Product of groupoid elements, ``a`` then ``b``."""
    if a.target != b.source:
        raise NotComposable(f"target {a.target} != source {b.source}")
    # a = D^-p P, b = D^-r R  ->  D^-(p+r) phi^r(P) R
    pos = a.positive
    for _ in range(b.p % 2):
        pos = apply_phi(ctx, pos)
    return _canonical(ctx, GroupoidElement(a.source, a.p + b.p, compose(ctx, pos, b.positive)))


def inverse_element(ctx, el):
    """``(D^-p P)^-1 = P^-1 D^p``, computed letter by letter."""
    out = element(ctx, el.target)
    for a, b in reversed(to_path_pairs(ctx, el.positive)):
        out = multiply_step(ctx, out, b, a, inverse=True)
    # D^p from the source of P
    y = out.target
    for _ in range(el.p):
        out = multiply(ctx, out, GroupoidElement(y, 0, delta(ctx, y)))
        y = ctx.phi(y)
    return out


def to_path_pairs(ctx, f):
    path = to_path(ctx, f)
    return list(zip(path, path[1:]))


def word_steps(sal, word):
    """Signed letters ``(base edge, apex, inverse)`` -> ``(u, v, inverse)`` traversal steps."""
    steps = []
    for base, apex, inverse in word:
        if (base, apex) not in sal.index or sal.q.dims[base] != 1:
            raise WordFormatError(f"({base}, {apex}) is not a Salvetti edge")
        (other,) = sal.q.verts[base] - {apex}
        steps.append((other, apex, True) if inverse else (apex, other, False))
    return steps


def free_reduce_word(word):
    """Cancel adjacent ``a a^-1`` / ``a^-1 a`` pairs of Salvetti letters."""
    out = []
    for base, apex, inverse in word:
        if out and out[-1] == (base, apex, not inverse):
            out.pop()
        else:
            out.append((base, apex, inverse))
    return out


def word_source(sal, word):
    return word_steps(sal, word)[0][0] if word else None


def word_to_element(ctx, sal, word, source=None):
    steps = word_steps(sal, word)
    if source is None:
        if not steps:
            raise WordFormatError("empty word needs an explicit source vertex")
        source = steps[0][0]
    el = element(ctx, source)
    for u, v, inverse in steps:
        el = multiply_step(ctx, el, u, v, inverse)
    return el


def equal(ctx, sal, w1, w2, source=None):
    e1 = word_to_element(ctx, sal, w1, source if not w1 else None)
    e2 = word_to_element(ctx, sal, w2, source if not w2 else None)
    return e1 == e2


def is_trivial(ctx, sal, w, source=None):
    el = word_to_element(ctx, sal, w, source)
    return el.target == el.source and el.p == 0 and not el.positive.ends


_LETTER = re.compile(r"^e?([^@\s^]+)@([^@\s^]+)(\^-1)?$")


def parse_word(sal, text):
    """``e<id>@<vertex>[^-1] ...`` -> list of ``(base, apex, inverse)``.

    A lone token ``id@<vertex>`` denotes the empty word at that vertex and
    yields ``([], vertex)``; otherwise the second item is None.
    """
    q = sal.q
    letters, source = [], None
    for tok in text.split():
        if tok.startswith("id@"):
            lab = tok[3:]
            if lab not in q.label_index:
                raise WordFormatError(f"unknown vertex {lab!r}")
            source = q.label_index[lab]
            continue
        m = _LETTER.match(tok)
        if not m:
            raise WordFormatError(f"bad letter {tok!r}")
        try:
            base, apex = q.label_index[m.group(1)], q.label_index[m.group(2)]
        except KeyError as exc:
            raise WordFormatError(f"unknown cell {exc.args[0]!r} in {tok!r}") from None
        if (base, apex) not in sal.index or q.dims[base] != 1:
            raise WordFormatError(f"{tok!r} is not a Salvetti edge")
        letters.append((base, apex, m.group(3) is not None))
    return letters, source


def format_letter(sal, letter):
    base, apex, inverse = letter
    lab = sal.q.labels
    return f"e{lab[base]}@{lab[apex]}" + ("^-1" if inverse else "")


def format_word(sal, word):
    return " ".join(format_letter(sal, a) for a in word)


def format_element(ctx, el):
    lab = ctx.q.labels
    pts = " ".join(f"u({lab[a]},{lab[b]})" for a, b in el.positive.factors) or f"id({lab[el.positive.source]})"
    return f"source={lab[el.source]} delta^-{el.p} {pts}"


def format_morphism(ctx, f):
    lab = ctx.q.labels
    return " ".join(f"u({lab[a]},{lab[b]})" for a, b in f.factors) or f"id({lab[f.source]})"
