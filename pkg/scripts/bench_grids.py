"""Time degeneracy ordering plus domination on square grids of growing side."""

from __future__ import annotations

import argparse
import gc
import time

from sparsedom.domination import dominating_set
from sparsedom.generators import grid_graph
from sparsedom.orderings import degeneracy_ordering


def best_time(side: int, k: int, m: int, repeats: int) -> tuple[float, int]:
    g = grid_graph(side, side)
    best = float("inf")
    decreases = 0
    gc.collect()
    gc.disable()
    try:
        for _ in range(repeats):
            t = time.perf_counter()
            ordering, _ = degeneracy_ordering(g)
            cert = dominating_set(g, ordering, k, m)
            best = min(best, time.perf_counter() - t)
            decreases = cert.label_decreases
    finally:
        gc.enable()
    return best, decreases


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sides", type=int, nargs="+", default=[50, 100, 200, 400])
    ap.add_argument("--k", type=int, default=1)
    ap.add_argument("--m", type=int, default=2)
    ap.add_argument("--repeats", type=int, default=5)
    args = ap.parse_args()
    print(f"{'side':>6} {'n':>8} {'seconds':>9} {'ratio':>6} {'decreases':>10} {'(k+1)n':>8}")
    prev = None
    for side in args.sides:
        secs, dec = best_time(side, args.k, args.m, args.repeats)
        n = side * side
        ratio = f"{secs / prev:.2f}" if prev else "-"
        print(f"{side:>6} {n:>8} {secs:>9.4f} {ratio:>6} {dec:>10} {(args.k + 1) * n:>8}")
        prev = secs


if __name__ == "__main__":
    main()
