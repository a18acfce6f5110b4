"""Time the numba kernels against the numpy fallback on bundled complexes.

    python benchmarks/bench_kernels.py [--repeat N] [fixture ...]

Inputs are built once; each kernel is then timed on identical arrays with
both backends and the outputs are compared.  The numba column excludes the
first (compiling) call.
"""

import argparse
import time

import numpy as np

from mhgarside import _kernels as K
from mhgarside.cells import add_top_cell, polygon
from mhgarside.fixtures import load_fixture
from mhgarside.hemisphere import HemisphereMaps, _containment_pairs


def inputs(c):
    nv = len(c.vertices)
    indptr = np.zeros(nv + 1, dtype=np.int64)
    nbrs = []
    for i, v in enumerate(c.vertices):
        nbrs.extend(int(c.vrow[w]) for w in c.neighbors(v))
        indptr[i + 1] = len(nbrs)
    maps = HemisphereMaps(c)
    outer, inner = _containment_pairs(c)
    dist = c.dist.astype(np.int32)
    return {
        "all_pairs_distances": (indptr, np.asarray(nbrs, dtype=np.int64)),
        "hemisphere_maps": (dist, maps._cptr, maps._cverts),
        "conditions_ab": (maps.near, maps.far, outer, inner),
        "additive_identity": (dist, maps.far, maps._cptr, maps._cverts),
    }


def best_of(fn, args, repeat):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - t)
    return best, out


def same(a, b):
    if isinstance(a, tuple):
        return all(same(x, y) for x, y in zip(a, b))
    return np.array_equal(np.asarray(a), np.asarray(b))


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("fixtures", nargs="*", default=["S4", "NONPAP", "I28"])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--polygon", type=int, default=400, help="also time a filled polygon with this many sides")
    args = ap.parse_args(argv)
    if K.numba_impl is None:
        raise SystemExit("numba is not importable; nothing to compare")
    cases = [(name, load_fixture(name).completed) for name in args.fixtures]
    if args.polygon:
        cases.append((f"disk{args.polygon}", add_top_cell(polygon(args.polygon))))
    print(f"{'input':<10} {'kernel':<22} {'numpy ms':>10} {'numba ms':>10} {'speedup':>8}  equal")
    for name, c in cases:
        for kernel, kargs in inputs(c).items():
            np_fn, nb_fn = getattr(K.numpy_impl, kernel), getattr(K.numba_impl, kernel)
            nb_fn(*kargs)  # compile
            t_np, out_np = best_of(np_fn, kargs, args.repeat)
            t_nb, out_nb = best_of(nb_fn, kargs, args.repeat)
            print(f"{name:<10} {kernel:<22} {t_np * 1e3:>10.3f} {t_nb * 1e3:>10.3f} "
                  f"{t_np / max(t_nb, 1e-9):>7.1f}x  {same(out_np, out_nb)}")


if __name__ == "__main__":
    main()
