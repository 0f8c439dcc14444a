"""Compare the compiled kernels against the pure-Python fallback.

Run with ``python benchmarks/bench_kernels.py [--repeat N]``.
"""

import argparse
import timeit

from actlab import _pykernels, kernels
from actlab.acts import enumerate_acts, generator_levels, _generator_candidates
from actlab.fileio import catalog_monoid


def workloads():
    rz4 = catalog_monoid("rz4")
    z4 = catalog_monoid("z4")
    big = enumerate_acts(rz4, 5)[-1]
    tgt = enumerate_acts(rz4, 6)[-1]
    n_s = rz4.size

    def homs(k):
        start = [-1] * big.size
        return lambda: k.hom_search(big.flat, big.size, tgt.flat, tgt.size, n_s, start, False, -1)

    def canon(k):
        return lambda: k.canonical_table(tgt.flat, n_s, tgt.size)

    def enum(k, M, m):
        gens, levels = generator_levels(M)
        cands = _generator_candidates(M, m)
        lv = [list(x) for x in levels]
        return lambda: k.transformation_homs(M.flat, M.size, m, list(gens), lv, cands)

    return {
        "hom_search rz4 5->6": homs,
        "canonical_table rz4 size 6": canon,
        "transformation_homs rz4 m=4": lambda k: enum(k, rz4, 4),
        "transformation_homs z4 m=5": lambda k: enum(k, z4, 5),
    }


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if kernels.BACKEND != "cython":
        print("compiled extension not available; only the fallback will run")
    print(f"{'workload':<32} {'python ms':>10} {'cython ms':>10} {'speedup':>8}")
    for name, make in workloads().items():
        py = min(timeit.repeat(make(_pykernels), number=1, repeat=args.repeat)) * 1e3
        if kernels.BACKEND == "cython":
            cy = min(timeit.repeat(make(kernels), number=1, repeat=args.repeat)) * 1e3
            print(f"{name:<32} {py:>10.2f} {cy:>10.2f} {py / cy:>7.1f}x")
        else:
            print(f"{name:<32} {py:>10.2f} {'-':>10} {'-':>8}")


if __name__ == "__main__":
    main()
