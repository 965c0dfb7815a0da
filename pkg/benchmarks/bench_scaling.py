"""Work counters over full deletion sequences as n doubles at fixed density.

Joint columns should grow like m*n*log n, the reducible algorithm like m*n,
and the joint counter should stay below the naive one from n = 256 on.
The fitted log-log slope is compared with the slope of the prediction over
the same sizes; a gap above the tolerance is flagged, not failed.

    python benchmarks/bench_scaling.py [--sizes 64 128 256 512] [--density 4]
"""
from __future__ import annotations

import argparse
import math
import random
import statistics
import time

from decconn.generators import reducible_flowgraph, strongly_connected
from decconn.joint import JointColumns, NaiveColumns
from decconn.reducible import ReducibleDominators

TOL = 0.35


def run_columns(cls, g, edges) -> tuple[int, float]:
    h = g.copy()
    t0 = time.perf_counter()
    cols = cls(h)
    for e in edges:
        h.remove_edge(*e)
        cols.delete(*e)
    return cols.stats()["scans"], time.perf_counter() - t0


def run_reducible(g, edges) -> tuple[int, float]:
    t0 = time.perf_counter()
    rd = ReducibleDominators(g, 1)
    for e in edges:
        rd.delete(*e)
    return rd.stats.scans, time.perf_counter() - t0


def slope(xs, ys) -> float:
    return statistics.linear_regression([math.log(x) for x in xs], [math.log(y) for y in ys]).slope


def measure(sizes, density: int, naive_upto: int, seed: int) -> dict[str, list]:
    rows: dict[str, list] = {"n": [], "m": [], "joint": [], "naive": [], "reducible": [], "rm": []}
    for n in sizes:
        rng = random.Random(seed + n)
        g = strongly_connected(n, density * n, rng)
        edges = list(g.edges())
        rng.shuffle(edges)
        joint, tj = run_columns(lambda h: JointColumns(h, check_build=False), g, edges)
        naive, tn = run_columns(NaiveColumns, g, edges) if n <= naive_upto else (None, float("nan"))
        f = reducible_flowgraph(n, density * n, rng)
        fe = list(f.edges())
        rng.shuffle(fe)
        red, tr = run_reducible(f, fe)
        for k, v in (("n", n), ("m", g.m), ("joint", joint), ("naive", naive), ("reducible", red), ("rm", f.m)):
            rows[k].append(v)
        print(f"n={n:<5} m={g.m:<6} joint={joint:<11} ({tj:6.2f}s)  naive={naive!s:<11} ({tn:6.2f}s)  "
              f"reducible={red:<9} ({tr:5.2f}s)", flush=True)
    return rows


def report(rows) -> list[tuple[str, bool, str]]:
    ns = rows["n"]
    out = []
    want = slope(ns, [m * n * math.log2(n) for n, m in zip(ns, rows["m"])])
    got = slope(ns, rows["joint"])
    out.append(("joint ~ m n log n", abs(got - want) <= TOL, f"slope {got:.2f} vs {want:.2f}"))
    want = slope(ns, [m * n for n, m in zip(ns, rows["rm"])])
    got = slope(ns, rows["reducible"])
    out.append(("reducible ~ m n", abs(got - want) <= TOL, f"slope {got:.2f} vs {want:.2f}"))
    for n, j, nv in zip(ns, rows["joint"], rows["naive"]):
        if n >= 256 and nv is not None:
            out.append((f"joint <= naive at n={n}", j <= nv, f"{j} vs {nv}"))
    return out


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--sizes", type=int, nargs="+", default=[64, 128, 256, 512])
    ap.add_argument("--density", type=int, default=4)
    ap.add_argument("--naive-upto", type=int, default=512)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rows = measure(args.sizes, args.density, args.naive_upto, args.seed)
    for name, ok, detail in report(rows):
        print(f"{'ok  ' if ok else 'FLAG'} {name}: {detail}")


if __name__ == "__main__":
    main()
