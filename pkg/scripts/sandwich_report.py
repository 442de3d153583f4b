"""Compare certificate sizes against exact dom_k on the small corpus graphs."""

from __future__ import annotations

import argparse

from sparsedom import oracles
from sparsedom.domination import dominating_set
from sparsedom.generators import standard_corpus
from sparsedom.orderings import degeneracy_ordering


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=14)
    ap.add_argument("--k", type=int, nargs="+", default=[1, 2])
    args = ap.parse_args()
    print(f"{'graph':<28} {'k':>2} {'m':>2} {'|A|':>4} {'dom':>4} {'|D|':>4} {'c':>3} {'|D|/dom':>8}  A<=dom")
    for name, g in standard_corpus(max_n=args.max_n):
        ordering, _ = degeneracy_ordering(g)
        for k in args.k:
            dom, _ = oracles.exact_dom_k(g, k)
            for m in sorted({2, 2 * k, 2 * k + 1}):
                cert = dominating_set(g, ordering, k, m)
                a, d = len(cert.A), len(cert.D)
                flag = "yes" if a <= dom else "NO"
                print(f"{name:<28} {k:>2} {m:>2} {a:>4} {dom:>4} {d:>4} {cert.c:>3} {d / dom:>8.2f}  {flag}")


if __name__ == "__main__":
    main()
