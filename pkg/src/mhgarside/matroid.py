"""Oriented-matroid circuits read off a covector lattice.

A signed element is ``(i, s)`` with ``s`` in ``{1, -1}``: the open halfspace
of element ``i`` on side ``s``; ``*`` flips the sign.  A signed set covers
the sphere iff no tope lies strictly on the opposite side of every member.
"""

from dataclasses import dataclass
from itertools import combinations, product

from .errors import NoCircuits


def star(x):
    return (x[0], -x[1])


def star_set(c):
    return frozenset(star(x) for x in c)


@dataclass(frozen=True)
class CircuitSet:
    n: int
    circuits: frozenset

    def __len__(self):
        return len(self.circuits)

    def __iter__(self):
        return iter(sorted(self.circuits, key=_circuit_key))

    def as_sign_vectors(self):
        out = []
        for c in self:
            v = [0] * self.n
            for i, s in c:
                v[i] = s
            out.append(tuple(v))
        return out


def _circuit_key(c):
    return (len(c), sorted(c))


def _masks(c):
    plus = minus = 0
    for i, s in c:
        if s > 0:
            plus |= 1 << i
        else:
            minus |= 1 << i
    return plus, minus


def circuits_from_topes(fl):
    """Minimal covering signed sets with at most one halfspace per element."""
    topes = []
    for t in fl.topes:
        plus = minus = 0
        for i, s in enumerate(t):
            if s > 0:
                plus |= 1 << i
            else:
                minus |= 1 << i
        topes.append((plus, minus))
    found = []
    for k in range(1, fl.n + 1):
        for support in combinations(range(fl.n), k):
            for signs in product((1, -1), repeat=k):
                c = frozenset(zip(support, signs))
                cp, cm = _masks(c)
                if any((fp & ~cp) == 0 and (fm & ~cm) == 0 for fp, fm in found):
                    continue
                # covered unless some tope sits strictly opposite to all of c
                if any((cp & ~tm) == 0 and (cm & ~tp) == 0 for tp, tm in topes):
                    continue
                found.append((cp, cm))
    circuits = set()
    for cp, cm in found:
        circuits.add(frozenset([(i, 1) for i in range(fl.n) if cp >> i & 1] +
                               [(i, -1) for i in range(fl.n) if cm >> i & 1]))
    return CircuitSet(fl.n, frozenset(circuits))


@dataclass
class AxiomReport:
    incomparable: tuple  # (passed, witness)
    star_closed: tuple
    elimination: tuple

    @property
    def passed(self):
        return self.incomparable[0] and self.star_closed[0] and self.elimination[0]

    def lines(self):
        out = []
        for name, (ok, wit) in (("om-incomparable", self.incomparable), ("om-star-closed", self.star_closed),
                                ("om-elimination", self.elimination)):
            out.append(f"{name} {'PASS' if ok else 'FAIL'}" + ("" if ok else f" witness={wit}"))
        return out


def check_om_circuit_axioms(cs):
    circ = sorted(cs.circuits, key=_circuit_key)
    members = set(circ)
    incomparable = (True, None)
    for a in circ:
        for b in circ:
            if a != b and a <= b:
                incomparable = (False, (sorted(a), sorted(b)))
                break
        if not incomparable[0]:
            break
    star_closed = (True, None)
    for s in circ:
        if star_set(s) not in members or s & star_set(s):
            star_closed = (False, (sorted(s),))
            break
    elimination = (True, None)
    for s in circ:
        for t in circ:
            ts = star_set(t)
            if s == ts:
                continue
            for x in sorted(s & ts):
                pool = (s | t) - {x, star(x)}
                if not any(c <= pool for c in circ):
                    elimination = (False, (sorted(s), sorted(t), x))
                    break
            if not elimination[0]:
                break
        if not elimination[0]:
            break
    return AxiomReport(incomparable, star_closed, elimination)


def om_rank(cs):
    """Rank of the underlying matroid: size of a maximal circuit-free support.

    Greedy growth is exact because independent sets of a matroid form a
    matroid (all maximal ones have equal size).
    """
    if not cs.circuits:
        raise NoCircuits("rank is undefined without circuits")
    supports = [frozenset(i for i, _ in c) for c in cs.circuits]
    basis = set()
    for i in range(cs.n):
        trial = basis | {i}
        if not any(s <= trial for s in supports):
            basis = trial
    return len(basis)
