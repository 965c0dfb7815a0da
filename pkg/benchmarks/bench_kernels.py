"""Compiled vs pure-Python SCC kernels on random digraphs.

    python benchmarks/bench_kernels.py [--sizes 200 1000 5000] [--repeat 5]
"""
from __future__ import annotations

import argparse
import random
import timeit

from decconn import kernels
from decconn.generators import random_digraph
from decconn.graph import csr


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--sizes", type=int, nargs="+", default=[200, 1000, 5000])
    ap.add_argument("--density", type=int, default=4)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if kernels.compiled_impl is None:
        print("compiled kernels not built; run: pip install -e . --no-build-isolation")
        return
    impls = {"python": kernels.py_impl, "cython": kernels.compiled_impl}
    print(f"{'n':>6} {'m':>7} {'kernel':<16} {'python ms':>10} {'cython ms':>10} {'speedup':>8}")
    for n in args.sizes:
        g = random_digraph(n, args.density * n, random.Random(n))
        offs, tgts = csr(g)
        for kernel, call in (
            ("scc_labels", lambda k: k.scc_labels(n, offs, tgts, 1)),
            ("count_reachable", lambda k: k.count_reachable(n, offs, tgts, 1, 2)),
        ):
            assert call(impls["python"]) == call(impls["cython"])
            ms = {name: min(timeit.repeat(lambda: call(k), number=1, repeat=args.repeat)) * 1e3
                  for name, k in impls.items()}
            print(f"{n:>6} {g.m:>7} {kernel:<16} {ms['python']:>10.3f} {ms['cython']:>10.3f} "
                  f"{ms['python'] / ms['cython']:>7.1f}x")


if __name__ == "__main__":
    main()
