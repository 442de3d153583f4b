"""Deterministic graph families, the lower-bound construction and a test corpus."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from itertools import combinations

from .graph import Graph, build_graph, subdivide
from .orderings import VertexOrdering


def complete_graph(n: int) -> Graph:
    _check_size(n)
    return build_graph(n, combinations(range(n), 2))


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves}: center 0, leaves 1..leaves."""
    _check_size(leaves)
    return build_graph(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def path_graph(n: int) -> Graph:
    _check_size(n)
    return build_graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"a cycle needs at least 3 vertices, got {n}")
    return build_graph(n, ((i, (i + 1) % n) for i in range(n)))


def grid_graph(rows: int, cols: int) -> Graph:
    """Vertex ``r * cols + c`` sits at row r, column c."""
    _check_size(rows)
    _check_size(cols)
    edges = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                edges.append((v, v + 1))
            if r + 1 < rows:
                edges.append((v, v + cols))
    return build_graph(rows * cols, edges)


def binary_tree(n: int) -> Graph:
    """Heap-numbered binary tree on n vertices (parent of i is (i - 1) // 2)."""
    _check_size(n)
    return build_graph(n, ((i, (i - 1) // 2) for i in range(1, n)))


def random_tree(n: int, seed: int) -> Graph:
    _check_size(n)
    rng = random.Random(seed)
    return build_graph(n, ((i, rng.randrange(i)) for i in range(1, n)))


def subdivided_star(leaves: int, t: int) -> Graph:
    """sd_t(K_{1,leaves})."""
    return subdivide(star_graph(leaves), t)


def random_sparse(n: int, m_edges: int, seed: int) -> Graph:
    """Uniformly random simple graph with exactly ``m_edges`` edges."""
    _check_size(n)
    total = n * (n - 1) // 2
    if not 0 <= m_edges <= total:
        raise ValueError(f"cannot place {m_edges} edges on {n} vertices (max {total})")
    rng = random.Random(seed)
    picks = sorted(rng.sample(range(total), m_edges))
    return build_graph(n, (_pair_from_index(i) for i in picks))


def _pair_from_index(i: int) -> tuple[int, int]:
    # colex: pair (u, v) with u < v has index v(v-1)/2 + u
    v = (1 + math.isqrt(1 + 8 * i)) // 2
    while v * (v - 1) // 2 > i:
        v -= 1
    return i - v * (v - 1) // 2, v


def _check_size(n: int) -> None:
    if n < 1:
        raise ValueError(f"size must be >= 1, got {n}")


def standard_family(kind: str, *params: int) -> Graph:
    builders = {
        "complete": complete_graph,
        "star": star_graph,
        "path": path_graph,
        "cycle": cycle_graph,
        "grid": grid_graph,
        "binary_tree": binary_tree,
    }
    try:
        builder = builders[kind]
    except KeyError:
        raise ValueError(f"unknown family {kind!r}; choose from {sorted(builders)}") from None
    return builder(*params)


@dataclass(frozen=True)
class LowerBoundInstance:
    graph: Graph
    apex: int
    X: tuple[int, ...]
    Y: tuple[int, ...]
    prescribed_ordering: VertexOrdering
    n: int
    k: int


def lower_bound_gn(n: int, k: int) -> LowerBoundInstance:
    """sd_{2k-1}(K_n) plus an apex joined to the middle vertex of every
    subdivided edge.

    Numbering: branch vertices 0..n-1, then the 2k-1 internal vertices of each
    edge of K_n in lexicographic edge order, apex last. The prescribed ordering
    is the apex, then the branch vertices, then everything else by id.
    """
    if n < 3:
        raise ValueError(f"n must be >= 3, got {n}")
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    t = 2 * k - 1
    base = subdivide(complete_graph(n), t)
    n_edges = n * (n - 1) // 2
    middles = tuple(n + e * t + (k - 1) for e in range(n_edges))
    apex = base.n
    edges = list(base.edges()) + [(apex, x) for x in middles]
    g = build_graph(base.n + 1, edges)
    branch = tuple(range(n))
    rest = [v for v in range(n, apex)]
    ordering = VertexOrdering.from_sequence([apex, *branch, *rest])
    return LowerBoundInstance(g, apex, middles, branch, ordering, n, k)


def parse_family_spec(spec: str, seed: int = 0) -> Graph:
    """Build a graph from ``kind:args``, e.g. ``grid:3x4``, ``random:100,150``,
    ``lower_bound:5,1`` or ``subdivided_star:6,1``."""
    kind, _, arg = spec.partition(":")
    nums = [int(x) for x in arg.replace("x", ",").split(",") if x.strip()] if arg else []
    if kind == "random":
        return random_sparse(*nums, seed=seed)
    if kind == "random_tree":
        return random_tree(*nums, seed=seed)
    if kind == "lower_bound":
        return lower_bound_gn(*nums).graph
    if kind == "subdivided_star":
        return subdivided_star(*nums)
    return standard_family(kind, *nums)


def standard_corpus(max_n: int = 10_000, seed: int = 0) -> list[tuple[str, Graph]]:
    """Named graphs from every family, up to ``max_n`` vertices."""
    out: list[tuple[str, Graph]] = []

    def add(name: str, g: Graph) -> None:
        if g.n <= max_n:
            out.append((name, g))

    for n in (1, 2, 5, 12, 40):
        add(f"path:{n}", path_graph(n))
        add(f"star:{n}", star_graph(n))
        add(f"binary_tree:{n}", binary_tree(n))
    for n in (1, 2, 4, 7, 12):
        add(f"complete:{n}", complete_graph(n))
    for n in (3, 6, 11, 50):
        add(f"cycle:{n}", cycle_graph(n))
    for r, c in ((2, 2), (3, 3), (4, 7), (10, 10), (30, 30), (100, 100)):
        add(f"grid:{r}x{c}", grid_graph(r, c))
    for n, k in ((3, 1), (4, 1), (5, 1), (6, 2), (8, 1), (5, 3)):
        add(f"lower_bound:{n},{k}", lower_bound_gn(n, k).graph)
    for leaves, t in ((3, 1), (6, 2), (20, 3)):
        add(f"subdivided_star:{leaves},{t}", subdivided_star(leaves, t))
    rng = random.Random(seed)
    for n, mult in ((10, 1.0), (30, 1.5), (200, 1.2), (1000, 1.0), (10_000, 0.8)):
        s = rng.randrange(2**31)
        add(f"random:{n},{int(mult * n)}@{s}", random_sparse(n, int(mult * n), s))
    for n in (15, 300, 10_000):
        s = rng.randrange(2**31)
        add(f"random_tree:{n}@{s}", random_tree(n, s))
    return out
