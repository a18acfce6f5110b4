"""Group presentations read off the Salvetti complex.

Generators are the directed 1-cells of Sal(Q), named ``e<edge>@<apex>``;
each 2-cell ``<e;v>`` equates the two boundary paths of ``e`` from ``v`` to
its farthest vertex.  :func:`reduce_presentation` turns this groupoid
presentation into one of the fundamental group at a base vertex.
"""

from collections import Counter, deque
from dataclasses import dataclass, field

import sympy
from sympy.matrices.normalforms import smith_normal_form
from sympy.polys.domains import ZZ

from .hemisphere import HemisphereMaps


@dataclass
class Presentation:
    generators: list
    relations: list  # pairs (lhs, rhs) of words; a word is a list of (generator, +1 | -1)
    base: int = None
    sources: dict = field(default_factory=dict)  # generator -> (base edge, apex)
    loops: dict = field(default_factory=dict)  # generator -> Salvetti edge word based at ``base``

    def relators(self):
        return [free_reduce(lhs + invert(rhs)) for lhs, rhs in self.relations]


def invert(word):
    return [(g, -s) for g, s in reversed(word)]


def free_reduce(word):
    out = []
    for g, s in word:
        if out and out[-1] == (g, -s):
            out.pop()
        else:
            out.append((g, s))
    return out


def cyclic_reduce(word):
    word = free_reduce(word)
    while len(word) >= 2 and word[0] == (word[-1][0], -word[-1][1]):
        word = word[1:-1]
    return word


def _boundary_paths(q, e, v, z):
    """The two paths from ``v`` to ``z`` around the boundary cycle of 2-cell ``e``."""
    adj = {}
    for f in q.faces[e]:
        if q.dims[f] == 1:
            a, b = sorted(q.verts[f])
            adj.setdefault(a, []).append(b)
            adj.setdefault(b, []).append(a)
    out = []
    for first in sorted(adj[v]):
        path, prev = [v, first], v
        while path[-1] != z:
            here = path[-1]
            (nxt,) = [w for w in adj[here] if w != prev]
            prev = here
            path.append(nxt)
        out.append(tuple(path))
    return out


def presentation(sal, maps=None):
    q = sal.q
    lab = q.labels
    name = {}
    gens, sources = [], {}
    for sid in range(len(sal.cells)):
        base, apex = sal.cells[sid]
        if q.dims[base] == 1:
            g = f"e{lab[base]}@{lab[apex]}"
            name[(base, apex)] = g
            gens.append(g)
            sources[g] = (base, apex)

    def word(path):
        return [(name[sal.edge(a, b)], 1) for a, b in zip(path, path[1:])]

    rels = []
    maps = maps or HemisphereMaps(q)
    for sid in range(len(sal.cells)):
        e, v = sal.cells[sid]
        if q.dims[e] != 2:
            continue
        z = maps.farthest(v, e)
        left, right = _boundary_paths(q, e, v, z)
        rels.append((word(left), word(right)))
    return Presentation(gens, rels, sources=sources)


def _spanning_tree(pres, q, base):
    """BFS spanning tree of the 1-skeleton.

    Returns the tree generators and, per vertex, the tree word from ``base``
    as Salvetti letters ``(base edge, apex, inverse)``.
    """
    by_vertex = {}
    for g in pres.generators:
        e, apex = pres.sources[g]
        (other,) = q.verts[e] - {apex}
        by_vertex.setdefault(apex, []).append((other, g, False))
        by_vertex.setdefault(other, []).append((apex, g, True))
    tree = set()
    reach = {base: []}
    queue = deque([base])
    while queue:
        v = queue.popleft()
        for w, g, inverse in sorted(by_vertex.get(v, [])):
            if w not in reach:
                tree.add(g)
                reach[w] = reach[v] + [pres.sources[g] + (inverse,)]
                queue.append(w)
    return tree, reach


def _inverse_letters(word):
    return [(e, a, not inv) for e, a, inv in reversed(word)]


def reduce_presentation(pres, q, base=None):
    """Presentation of pi_1 at ``base``: tree collapse, then Tietze eliminations.

    A generator occurring exactly once in some relator is solved for and
    substituted away together with that relator; repeated until none is left.
    """
    if base is None:
        base = min(q.vertices)
    tree, reach = _spanning_tree(pres, q, base)
    gens = [g for g in pres.generators if g not in tree]
    loops = {}
    for g in gens:
        e, apex = pres.sources[g]
        (other,) = q.verts[e] - {apex}
        loops[g] = reach[apex] + [(e, apex, False)] + _inverse_letters(reach[other])
    rels = []
    for r in pres.relators():
        r = cyclic_reduce([x for x in r if x[0] not in tree])
        if r:
            rels.append(r)
    while True:
        rels = _dedupe(rels)
        pick = None
        for i, r in sorted(enumerate(rels), key=lambda t: (len(t[1]), t[0])):
            counts = Counter(g for g, _ in r)
            once = [g for g in gens if counts.get(g) == 1]
            if once:
                pick = (i, once[0])
                break
        if pick is None:
            break
        i, g = pick
        r = rels.pop(i)
        k = next(j for j, (h, _) in enumerate(r) if h == g)
        s = r[k][1]
        # r = A g^s B = 1  ->  g^s = A^-1 B^-1 -> g = (B A)^-s
        rest = r[k + 1:] + r[:k]
        value = invert(rest) if s == 1 else rest
        gens.remove(g)
        new = []
        for other in rels:
            sub = []
            for h, t in other:
                if h == g:
                    sub.extend(value if t == 1 else invert(value))
                else:
                    sub.append((h, t))
            sub = cyclic_reduce(sub)
            if sub:
                new.append(sub)
        rels = new
    relations = []
    for r in rels:
        half = (len(r) + 1) // 2
        relations.append((r[:half], invert(r[half:])))
    return Presentation(gens, relations, base=base, sources={g: pres.sources[g] for g in gens},
                        loops={g: loops[g] for g in gens})


def _canonical_cyclic(r):
    variants = []
    for w in (r, invert(r)):
        for k in range(len(w)):
            variants.append(tuple(w[k:] + w[:k]))
    return min(variants) if variants else ()


def _dedupe(rels):
    seen, out = set(), []
    for r in rels:
        key = _canonical_cyclic(r)
        if key not in seen:
            seen.add(key)
            out.append(r)
    return out


def abelianization(pres):
    """``(free rank, torsion coefficients)`` of the abelianized group."""
    n = len(pres.generators)
    col = {g: i for i, g in enumerate(pres.generators)}
    rows = []
    for r in pres.relators():
        row = [0] * n
        for g, s in r:
            row[col[g]] += s
        if any(row):
            rows.append(row)
    if not rows or n == 0:
        return n, []
    m = sympy.Matrix(rows)
    snf = smith_normal_form(m, domain=ZZ)
    diag = [abs(int(snf[i, i])) for i in range(min(snf.shape))]
    nonzero = [d for d in diag if d != 0]
    return n - len(nonzero), [d for d in nonzero if d > 1]


def is_braid_relation(pres):
    """Two generators and one relator of the shape ``xyx = yxy``.

    Generators may be swapped or inverted (both are isomorphisms).
    """
    if len(pres.generators) != 2 or len(pres.relations) != 1:
        return False
    (r,) = pres.relators()
    key = _canonical_cyclic(cyclic_reduce(r))
    a, b = pres.generators
    for x, y in ((a, b), (b, a)):
        for sx in (1, -1):
            for sy in (1, -1):
                X, Y = (x, sx), (y, sy)
                pattern = [X, Y, X] + invert([Y, X, Y])
                if _canonical_cyclic(pattern) == key:
                    return True
    return False


def expand_word(pres, word):
    """A word in the reduced generators as a Salvetti edge word at the base vertex."""
    out = []
    for g, s in word:
        loop = pres.loops[g]
        out.extend(loop if s == 1 else _inverse_letters(loop))
    return out


def format_word(word):
    if not word:
        return "1"
    return " ".join(g if s == 1 else f"{g}^-1" for g, s in word)


def format_presentation(pres):
    out = [f"gen {g}" for g in pres.generators]
    out.extend(f"rel {format_word(lhs)} = {format_word(rhs)}" for lhs, rhs in pres.relations)
    return "\n".join(out) + "\n"


def parse_presentation(text):
    gens, rels = [], []

    def word(s):
        out = []
        for tok in s.split():
            if tok == "1":
                continue
            if tok.endswith("^-1"):
                out.append((tok[:-3], -1))
            else:
                out.append((tok, 1))
        return out

    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        kind, _, body = line.partition(" ")
        if kind == "gen":
            gens.append(body.strip())
        elif kind == "rel":
            lhs, _, rhs = body.partition("=")
            rels.append((word(lhs), word(rhs)))
        else:
            raise ValueError(f"bad presentation line {line!r}")
    return Presentation(gens, rels)
