"""Exact parameters of the apex lower-bound graphs and of subdivided stars."""

from __future__ import annotations

import argparse
from dataclasses import replace

from sparsedom import oracles
from sparsedom.generators import lower_bound_gn, subdivided_star
from sparsedom.orderings import ordering_stats


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=6, help="largest K_n for the apex family")
    ap.add_argument("--max-leaves", type=int, default=8)
    args = ap.parse_args()

    print("apex family, k = 1")
    print(f"{'n':>3} {'|V|':>5} {'alpha_2':>8} {'dom_1':>6} {'n/2':>5} {'wcol_1':>7}")
    for n in range(3, args.max_n + 1):
        inst = lower_bound_gn(n, 1)
        g = inst.graph
        budget = replace(oracles.SET_BUDGET, max_n=max(g.n, oracles.SET_BUDGET.max_n))
        alpha, _ = oracles.exact_alpha_m(g, 2, budget)
        dom, _ = oracles.exact_dom_k(g, 1, budget)
        wcol = ordering_stats(g, inst.prescribed_ordering, 1).wcol
        print(f"{n:>3} {g.n:>5} {alpha:>8} {dom:>6} {n / 2:>5} {wcol:>7}")

    print()
    print("sd_1(K_{1,n})")
    print(f"{'n':>3} {'|V|':>5} {'dom_1':>6} {'alpha_4':>8}")
    for n in range(2, args.max_leaves + 1):
        g = subdivided_star(n, 1)
        dom, _ = oracles.exact_dom_k(g, 1)
        alpha, _ = oracles.exact_alpha_m(g, 4)
        print(f"{n:>3} {g.n:>5} {dom:>6} {alpha:>8}")


if __name__ == "__main__":
    main()
