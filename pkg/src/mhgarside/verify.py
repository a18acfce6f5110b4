"""Exhaustive bounded-length checks of the Garside axioms.

Every engine answer is compared with the brute-force path oracle held by
the context, so a pass here means the two independent implementations
agree on all morphisms up to the length bound.
"""

from dataclasses import dataclass, field
from itertools import product

from . import garside as G
from .errors import MhGarsideError
from .hemisphere import PropertyResult


@dataclass
class GarsideReport:
    results: list = field(default_factory=list)
    counts: dict = field(default_factory=dict)

    @property
    def passed(self):
        return all(r.passed for r in self.results)

    def __getitem__(self, name):
        return next(r for r in self.results if r.name == name)

    def lines(self):
        out = [r.line() for r in self.results]
        out.append("ALL PASS" if self.passed else "SOME FAIL")
        return out


def positive_paths(q, x, max_len):
    out, frontier = [(x,)], [(x,)]
    for _ in range(max_len):
        frontier = [p + (w,) for p in frontier for w in q.neighbors(p[-1])]
        out.extend(frontier)
    return out


def morphism_classes(ctx, x, max_len):
    """Distinct oracle classes of positive paths of length <= max_len from x."""
    seen = {}
    for p in positive_paths(ctx.q, x, max_len):
        cls = ctx.oracle.class_of(p)
        seen.setdefault(cls.representative, cls)
    return sorted(seen.values(), key=lambda c: (c.length, c.representative))


class _Check:
    def __init__(self, name):
        self.name = name
        self.witness = None
        self.detail = ""
        self.count = 0

    def fail(self, witness, detail=""):
        if self.witness is None:
            self.witness = witness
            self.detail = detail

    def result(self):
        return PropertyResult(self.name, self.witness is None, self.witness, self.detail)


def verify_garside(ctx, max_len, cancel_len=2):
    q, o = ctx.q, ctx.oracle
    checks = {name: _Check(name) for name in (
        "normal_form", "homogeneity", "cancellativity", "naturality", "atoms_simple", "meet", "join")}
    classes = {x: morphism_classes(ctx, x, max_len) for x in q.vertices}
    engine = {}
    for x in q.vertices:
        for c in classes[x]:
            engine[c] = G.from_path(ctx, c.representative)

    # normal forms separate exactly the oracle classes
    nf = checks["normal_form"]
    for x in q.vertices:
        owner = {}
        for c in classes[x]:
            nf.count += 1
            m = engine[c]
            if G.length(ctx, m) != c.length or o.class_of(G.to_path(ctx, m)) != c:
                nf.fail((c.representative,), "normal form leaves the oracle class")
            if m in owner and owner[m] != c:
                nf.fail((c.representative, owner[m].representative), "two classes share a normal form")
            owner[m] = c
            for p in sorted(c.members)[:8]:
                if G.from_path(ctx, p) != m:
                    nf.fail((p, c.representative), "members normalize differently")

    # composition is additive in length and matches concatenation
    hom = checks["homogeneity"]
    for x in q.vertices:
        for f in classes[x]:
            for g in classes[f.target]:
                if f.length + g.length > max_len:
                    continue
                hom.count += 1
                fg = G.compose(ctx, engine[f], engine[g])
                cat = o.class_of(f.representative + g.representative[1:])
                if G.length(ctx, fg) != f.length + g.length:
                    hom.fail((f.representative, g.representative), "length not additive")
                elif o.class_of(G.to_path(ctx, fg)) != cat:
                    hom.fail((f.representative, g.representative), "composite differs from concatenation")

    # afb ~ agb implies f ~ g
    can = checks["cancellativity"]
    short = {x: [c for c in classes[x] if c.length <= cancel_len] for x in q.vertices}
    into = {}
    for x in q.vertices:
        for c in short[x]:
            into.setdefault(c.target, []).append(c)
    for y in q.vertices:
        by_end = {}
        for c in short[y]:
            by_end.setdefault((c.target, c.length), []).append(c)
        for (z, _), group in by_end.items():
            for f, g in product(group, repeat=2):
                if f.representative >= g.representative:
                    continue
                for a, b in product(into.get(y, []), short[z]):
                    can.count += 1
                    left = o.class_of(a.representative + f.representative[1:] + b.representative[1:])
                    right = a.representative + g.representative[1:] + b.representative[1:]
                    if right in left:
                        can.fail((a.representative, f.representative, g.representative, b.representative))

    # f Delta(y) = Delta(x) phi(f)
    nat = checks["naturality"]
    for x in q.vertices:
        dx = o.geodesic(x, ctx.phi(x))
        for f in classes[x]:
            nat.count += 1
            m = engine[f]
            y = f.target
            lhs = G.compose(ctx, m, G.delta(ctx, y))
            rhs = G.compose(ctx, G.delta(ctx, x), G.apply_phi(ctx, m))
            if lhs != rhs:
                nat.fail((f.representative,), "engine")
            if f.length <= 1:
                p1 = f.representative + o.geodesic(y, ctx.phi(y))[1:]
                p2 = dx + tuple(ctx.phi(v) for v in f.representative)[1:]
                if not o.equivalent(p1, p2):
                    nat.fail((f.representative,), "oracle")

    # every atom a has a complement a* with a a* = Delta
    atoms = checks["atoms_simple"]
    for x in q.vertices:
        dx = o.class_of(o.geodesic(x, ctx.phi(x)))
        for y in q.neighbors(x):
            atoms.count += 1
            star = G.simple(ctx, y, ctx.phi(x))
            if G.compose(ctx, G.simple(ctx, x, y), star) != G.delta(ctx, x):
                atoms.fail((x, y), "engine")
            if not ctx.between(x, y, ctx.phi(x)) or (x,) + o.geodesic(y, ctx.phi(x)) not in dx:
                atoms.fail((x, y), "oracle")

    # meets and joins exist, are unique and agree with the oracle
    for name, eng, orc in (("meet", G.meet, o.meet), ("join", G.join, o.join)):
        chk = checks[name]
        for x in q.vertices:
            for f, g in product(classes[x], repeat=2):
                chk.count += 1
                try:
                    ours = eng(ctx, engine[f], engine[g])
                    theirs = orc(f, g)
                except MhGarsideError as exc:
                    chk.fail((f.representative, g.representative), type(exc).__name__)
                    continue
                if o.class_of(G.to_path(ctx, ours)) != theirs:
                    chk.fail((f.representative, g.representative), "engine and oracle disagree")
                if name == "meet" and G.left_divides(ctx, engine[f], engine[g]) != (theirs == f):
                    chk.fail((f.representative, g.representative), "left_divides disagrees")

    report = GarsideReport()
    for chk in checks.values():
        report.results.append(chk.result())
        report.counts[chk.name] = chk.count
    return report


@dataclass
class SweepResult:
    words: int = 0
    disagreements: int = 0
    exploded: int = 0
    witness: tuple = None
    elapsed: float = 0.0
    finished: bool = True

    @property
    def passed(self):
        return self.finished and not self.disagreements and not self.exploded


def word_problem_sweep(ctx, sal, pres, max_len, deadline=None):
    """Compare engine and oracle triviality verdicts on every word of length
    <= ``max_len`` over the generators of a reduced presentation (and their
    inverses).  Words are walked depth-first so each prefix is processed once.
    """
    import time

    from .errors import ExplosionGuard
    from .presentation import expand_word

    start = time.perf_counter()
    o, phi, base = ctx.oracle, ctx.phi, pres.base
    letters = [(g, s) for g in pres.generators for s in (1, -1)]
    steps = {a: G.word_steps(sal, expand_word(pres, [a])) for a in letters}
    identity = (0, (base,))
    res = SweepResult()

    def visit(word, el, st):
        if deadline is not None and time.perf_counter() - start > deadline:
            res.finished = False
            return
        res.words += 1
        ours = el.p == 0 and not el.positive.ends and el.target == base
        try:
            theirs = st is not None and st[1][-1] == base and o.states_equal(st, identity, phi)
        except ExplosionGuard:
            res.exploded += 1
            theirs = None
        if theirs is not None and ours != theirs:
            res.disagreements += 1
            if res.witness is None:
                res.witness = tuple(word)
        if len(word) == max_len:
            return
        for a in letters:
            e2, s2 = el, st
            for u, v, inverse in steps[a]:
                e2 = G.multiply_step(ctx, e2, u, v, inverse)
                if s2 is not None:
                    try:
                        s2 = o.push(s2, (u, v, inverse), phi)
                    except ExplosionGuard:
                        s2 = None
            if s2 is None:
                res.exploded += 1
            visit(word + [a], e2, s2)
            if not res.finished:
                return

    visit([], G.element(ctx, base), identity)
    res.elapsed = time.perf_counter() - start
    return res
