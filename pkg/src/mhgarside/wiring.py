"""Wiring diagrams of pseudoline arrangements and their covectors.

A diagram on ``n`` wires starts with wire ``i`` at height ``i`` (bottom is
0) and is a sequence of crossings, each reversing a contiguous block of
wires.  Sweeping left to right visits every face of the affine picture;
its covectors, their negations and the zero vector form the face lattice of
the rank-3 oriented matroid on the projective closure.

File format::

    wires <n>
    cross <position> <size>
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .arrangement import FaceLattice, negate
from .errors import WiringError


@dataclass(frozen=True)
class WiringDiagram:
    n: int
    crossings: tuple  # (position, size) block reversals, bottom position 0

    def orders(self):
        """Wire order before the first crossing and after each one."""
        order = list(range(self.n))
        yield tuple(order)
        for p, k in self.crossings:
            order[p:p + k] = reversed(order[p:p + k])
            yield tuple(order)

    def validate(self):
        """Every pair of wires must cross exactly once."""
        seen = {}
        order = list(range(self.n))
        for p, k in self.crossings:
            if k < 2 or p < 0 or p + k > self.n:
                raise WiringError(f"bad crossing ({p}, {k}) on {self.n} wires")
            for a, b in combinations(order[p:p + k], 2):
                key = (min(a, b), max(a, b))
                seen[key] = seen.get(key, 0) + 1
            order[p:p + k] = reversed(order[p:p + k])
        for pair in combinations(range(self.n), 2):
            if seen.get(pair, 0) != 1:
                raise WiringError(f"wires {pair} cross {seen.get(pair, 0)} times", witness=pair)
        return self


def _covector(n, order, below, zeros):
    """Signs for a point with ``order[:below]`` under it and ``zeros`` through it."""
    x = [0] * n
    for i, w in enumerate(order):
        if w in zeros:
            continue
        x[w] = 1 if i < below else -1
    return tuple(x)


def sweep_covectors(wd):
    wd.validate()
    n = wd.n
    found = set()
    orders = list(wd.orders())
    for order in orders:
        for g in range(n + 1):
            found.add(_covector(n, order, g, ()))
        for i, w in enumerate(order):
            found.add(_covector(n, order, i, (w,)))
    for order, (p, k) in zip(orders, wd.crossings):
        found.add(_covector(n, order, p, set(order[p:p + k])))
    found |= {negate(x) for x in found}
    found.add((0,) * n)
    return FaceLattice(found, n=n)


def line_diagram(lines):
    """Wiring diagram of affine lines ``y = a x - b`` given as ``(a, b)``.

    Slopes must be distinct.  Wires are labelled by their bottom-to-top
    order far to the left (steepest slope at the bottom); the returned
    ``labels[i]`` is the index into ``lines`` of wire ``i``.
    """
    lines = [(Fraction(a), Fraction(b)) for a, b in lines]
    if len({a for a, _ in lines}) != len(lines):
        raise WiringError("slopes must be distinct")
    labels = sorted(range(len(lines)), key=lambda i: -lines[i][0])
    wires = [lines[i] for i in labels]
    points = {}
    for i, j in combinations(range(len(wires)), 2):
        (a1, b1), (a2, b2) = wires[i], wires[j]
        x = (b1 - b2) / (a1 - a2)
        y = a1 * x - b1
        points.setdefault((x, y), set()).update((i, j))
    order = list(range(len(wires)))
    crossings = []
    for pt in sorted(points):
        block = points[pt]
        pos = sorted(order.index(w) for w in block)
        p, k = pos[0], len(pos)
        if pos != list(range(p, p + k)):
            raise WiringError(f"wires through {pt} are not adjacent")
        order[p:p + k] = reversed(order[p:p + k])
        crossings.append((p, k))
    return WiringDiagram(len(wires), tuple(crossings)), labels, sorted(points)


def resolve_crossing(wd, index):
    """Replace a triple crossing by three simple ones: ``s_p s_(p+1) s_p``."""
    p, k = wd.crossings[index]
    if k != 3:
        raise WiringError(f"crossing {index} has {k} wires, expected 3")
    new = wd.crossings[:index] + ((p, 2), (p + 1, 2), (p, 2)) + wd.crossings[index + 1:]
    return WiringDiagram(wd.n, new)


def collinear_triples(points):
    out = []
    for a, b, c in combinations(range(len(points)), 3):
        (x1, y1), (x2, y2), (x3, y3) = points[a], points[b], points[c]
        if (x2 - x1) * (y3 - y1) == (x3 - x1) * (y2 - y1):
            out.append((a, b, c))
    return out


def pappus_points(shear=Fraction(1, 7)):
    """Nine rational points forming a Pappus configuration.

    ``A1..A3`` on ``y = 0``, ``B1..B3`` on ``y = 1`` and the three cross
    joins ``C_k = A_i B_j ^ A_j B_i``; the ``C`` points are collinear by
    Pappus' theorem.  A shear makes all x-coordinates distinct.  Returns the
    points and the index triple of the ``C`` line.
    """
    A = [(Fraction(0), Fraction(0)), (Fraction(2), Fraction(0)), (Fraction(5), Fraction(0))]
    B = [(Fraction(0), Fraction(1)), (Fraction(3), Fraction(1)), (Fraction(7), Fraction(1))]

    def meet(p1, p2, p3, p4):
        (x1, y1), (x2, y2), (x3, y3), (x4, y4) = p1, p2, p3, p4
        den = (x1 - x2) * (y3 - y4) - (y1 - y2) * (x3 - x4)
        det12 = x1 * y2 - y1 * x2
        det34 = x3 * y4 - y3 * x4
        return ((det12 * (x3 - x4) - (x1 - x2) * det34) / den,
                (det12 * (y3 - y4) - (y1 - y2) * det34) / den)

    C = [meet(A[i], B[j], A[j], B[i]) for i, j in ((1, 2), (0, 2), (0, 1))]
    pts = [(x + shear * y, y) for x, y in A + B + C]
    return pts, (6, 7, 8)


def non_pappus():
    """The non-Pappus wiring diagram and its realizable Pappus parent.

    Returns ``(broken, parent, normals)`` where ``parent`` is the wiring
    diagram of the lines dual to the Pappus points, ``normals`` are their
    homogeneous normals ``(-a, 1, b)`` in wire order, and ``broken`` splits
    the triple point of the Pappus line into three simple crossings.
    """
    pts, pappus_line = pappus_points()
    triples = collinear_triples(pts)
    if len(triples) != 9 or pappus_line not in triples:
        raise WiringError(f"point set has {len(triples)} collinear triples, expected 9")
    if len({x for x, _ in pts}) != len(pts):
        raise WiringError("x-coordinates must be distinct")
    parent, labels, points = line_diagram(pts)
    parent.validate()
    wire_of = {lab: w for w, lab in enumerate(labels)}
    target = {wire_of[i] for i in pappus_line}
    order = list(range(parent.n))
    index = None
    for i, (p, k) in enumerate(parent.crossings):
        if set(order[p:p + k]) == target:
            index = i
        order[p:p + k] = reversed(order[p:p + k])
    if index is None:
        raise WiringError("Pappus-line triple point not found")
    broken = resolve_crossing(parent, index).validate()
    normals = [(-pts[i][0], Fraction(1), pts[i][1]) for i in labels]
    return broken, parent, normals


def parse_wiring(text):
    n, crossings = None, []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            if parts[0] == "wires" and len(parts) == 2 and n is None:
                n = int(parts[1])
            elif parts[0] == "cross" and len(parts) == 3:
                crossings.append((int(parts[1]), int(parts[2])))
            else:
                raise ValueError
        except ValueError:
            raise WiringError(f"bad wiring line {line!r}") from None
    if n is None:
        raise WiringError("missing 'wires <n>' header")
    return WiringDiagram(n, tuple(crossings)).validate()


def format_wiring(wd, comment=None):
    out = [f"# {line}" for line in comment.splitlines()] if comment else []
    out.append(f"wires {wd.n}")
    out.extend(f"cross {p} {k}" for p, k in wd.crossings)
    return "\n".join(out) + "\n"


def load_wiring(path):
    with open(path, encoding="utf-8") as fh:
        return parse_wiring(fh.read())
