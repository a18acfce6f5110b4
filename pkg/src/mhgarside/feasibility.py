"""Exact feasibility of homogeneous sign conditions.

Decides whether some ``x`` satisfies ``sign(<n_i, x>) = s_i`` for every
row, using Fourier-Motzkin elimination on integer rows.  No floating point
is involved anywhere.
"""

from fractions import Fraction
from functools import reduce
from math import gcd


def integer_row(vec):
    """Positive rational multiple of ``vec`` with coprime integer entries."""
    fr = [Fraction(x) for x in vec]
    den = reduce(lambda a, b: a * b // gcd(a, b), (f.denominator for f in fr), 1)
    ints = [int(f * den) for f in fr]
    g = reduce(gcd, (abs(i) for i in ints), 0)
    if g > 1:
        ints = [i // g for i in ints]
    return tuple(ints)


def _normalize(row):
    coeffs, strict = row
    g = reduce(gcd, (abs(c) for c in coeffs), 0)
    if g > 1:
        coeffs = tuple(c // g for c in coeffs)
    return coeffs, strict


def fm_feasible(rows, dim):
    """Is ``{x : <a, x> > 0 (strict) or >= 0 (non-strict) for (a, strict) in rows}`` nonempty?

    The system is homogeneous, so only the strict rows can make it infeasible.
    """
    current = set()
    for coeffs, strict in rows:
        coeffs, strict = _normalize((tuple(coeffs), bool(strict)))
        if not any(coeffs):
            if strict:
                return False
            continue
        current.add((coeffs, strict))
    # a strict row dominates an identical non-strict one
    current = {r for r in current if not (not r[1] and (r[0], True) in current)}
    live = list(range(dim))
    while current:
        if not any(s for _, s in current):
            return True
        # eliminate the variable producing the fewest new rows
        best = None
        for k in live:
            pos = sum(1 for c, _ in current if c[k] > 0)
            neg = sum(1 for c, _ in current if c[k] < 0)
            cost = pos * neg - pos - neg
            if best is None or cost < best[0]:
                best = (cost, k)
        k = best[1]
        live.remove(k)
        pos = [r for r in current if r[0][k] > 0]
        neg = [r for r in current if r[0][k] < 0]
        nxt = {r for r in current if r[0][k] == 0}
        for pc, ps in pos:
            for nc, ns in neg:
                a, b = pc[k], -nc[k]
                coeffs = tuple(b * x + a * y for x, y in zip(pc, nc))
                coeffs, strict = _normalize((coeffs, ps or ns))
                if not any(coeffs):
                    if strict:
                        return False
                    continue
                nxt.add((coeffs, strict))
        current = {r for r in nxt if not (not r[1] and (r[0], True) in nxt)}
        if not live and current:
            return not any(s for _, s in current)
    return True


def sign_rows(normals, signs):
    rows = []
    for n, s in zip(normals, signs):
        if s > 0:
            rows.append((n, True))
        elif s < 0:
            rows.append((tuple(-c for c in n), True))
        else:
            rows.append((n, False))
            rows.append((tuple(-c for c in n), False))
    return rows


def sign_feasible(normals, signs):
    """Exact test: does a point realize the sign vector ``signs``?"""
    normals = [integer_row(n) for n in normals]
    dim = len(normals[0]) if normals else 0
    return fm_feasible(sign_rows(normals, signs), dim)
