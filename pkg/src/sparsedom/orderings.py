"""Vertex orderings and the generalized coloring statistics measured against them.

Covers the degeneracy ordering, weak reachability sets, the realized weak/strong
coloring numbers of an ordering, backconnectivity (exact and greedy), and the
back-to-front ordering that minimizes m-admissibility.
"""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass
from typing import Collection, Iterable, TextIO

from .graph import Graph, bfs_capped


class AdmissibilityCeilingError(RuntimeError):
    """Every remaining vertex exceeds the requested backconnectivity ceiling."""


@dataclass(frozen=True)
class VertexOrdering:
    order: tuple[int, ...]
    position: tuple[int, ...]

    @classmethod
    def from_sequence(cls, seq: Iterable[int]) -> VertexOrdering:
        order = tuple(seq)
        n = len(order)
        position = [-1] * n
        for i, v in enumerate(order):
            if not 0 <= v < n or position[v] != -1:
                raise ValueError(f"not a permutation of 0..{n - 1}: {order!r}")
            position[v] = i
        return cls(order, tuple(position))

    @classmethod
    def identity(cls, n: int) -> VertexOrdering:
        return cls(tuple(range(n)), tuple(range(n)))

    def __len__(self) -> int:
        return len(self.order)

    def precedes(self, u: int, v: int) -> bool:
        return self.position[u] < self.position[v]


def read_ordering(stream: TextIO) -> VertexOrdering:
    tokens = [ln.strip() for ln in stream if ln.strip() and not ln.lstrip().startswith("#")]
    if not tokens:
        raise ValueError("empty ordering file")
    n = int(tokens[0])
    if len(tokens) - 1 != n:
        raise ValueError(f"ordering file announces {n} vertices but lists {len(tokens) - 1}")
    return VertexOrdering.from_sequence(int(t) for t in tokens[1:])


def write_ordering(ordering: VertexOrdering, stream: TextIO) -> None:
    stream.write(f"{len(ordering)}\n")
    for v in ordering.order:
        stream.write(f"{v}\n")


def load_ordering(path: str) -> VertexOrdering:
    with open(path) as fh:
        return read_ordering(fh)


def save_ordering(ordering: VertexOrdering, path: str) -> None:
    with open(path, "w") as fh:
        write_ordering(ordering, fh)


# -- degeneracy -------------------------------------------------------------


def degeneracy_ordering(g: Graph) -> tuple[VertexOrdering, int]:
    """Min-degree peeling with a bucket queue, reversed.

    In the returned ordering every vertex has at most ``degeneracy`` earlier
    neighbors.
    """
    n = g.n
    deg = [len(a) for a in g.adjacency]
    max_deg = max(deg, default=0)
    buckets: list[list[int]] = [[] for _ in range(max_deg + 1)]
    # reversed so that pop() yields the smallest id first within a bucket
    for v in range(n - 1, -1, -1):
        buckets[deg[v]].append(v)
    removed = [False] * n
    peeled = []
    degeneracy = 0
    d = 0
    while len(peeled) < n:
        while not buckets[d]:
            d += 1
        v = buckets[d].pop()
        if removed[v] or deg[v] != d:
            continue  # stale entry
        removed[v] = True
        peeled.append(v)
        degeneracy = max(degeneracy, d)
        for w in g.adjacency[v]:
            if not removed[w]:
                deg[w] -= 1
                buckets[deg[w]].append(w)
        d = max(d - 1, 0)
    peeled.reverse()
    return VertexOrdering.from_sequence(peeled), degeneracy


# -- weak reachability ------------------------------------------------------


@dataclass(frozen=True)
class WeakReachFamily:
    """``levels[i - 1][v]`` is Q_i(v), the vertices weakly i-reachable from v."""

    m: int
    levels: tuple[tuple[frozenset[int], ...], ...]

    def Q(self, i: int, v: int) -> frozenset[int]:
        return self.levels[i - 1][v]

    def q(self, v: int) -> int:
        return len(self.levels[-1][v])

    @property
    def max_q(self) -> int:
        return max((len(s) for s in self.levels[-1]), default=0)


def weak_reach_sets(g: Graph, ordering: VertexOrdering, m: int) -> WeakReachFamily:
    """Compute Q_1..Q_m level by level.

    Q_1(v) is the set of earlier neighbors; Q_i(v) keeps the members of
    Q_1(v) and of Q_{i-1}(u) over neighbors u that precede v.
    """
    if m < 1:
        raise ValueError(f"radius m must be >= 1, got {m}")
    pos = ordering.position
    adj = g.adjacency
    first = tuple(frozenset(u for u in adj[v] if pos[u] < pos[v]) for v in range(g.n))
    levels = [first]
    prev = first
    for _ in range(2, m + 1):
        cur = []
        for v in range(g.n):
            pv = pos[v]
            acc = set(first[v])
            for u in adj[v]:
                for w in prev[u]:
                    if pos[w] < pv:
                        acc.add(w)
            cur.append(frozenset(acc))
        prev = tuple(cur)
        levels.append(prev)
    return WeakReachFamily(m, tuple(levels))


def strong_reach_set(g: Graph, ordering: VertexOrdering, m: int, v: int) -> set[int]:
    """R_m(v): earlier vertices reachable by a path of length <= m whose
    vertices other than the target all sit at or after v."""
    pos = ordering.position
    pv = pos[v]
    found: set[int] = set()
    dist = {v: 0}
    queue = deque([v])
    while queue:
        x = queue.popleft()
        dx = dist[x]
        for y in g.adjacency[x]:
            if pos[y] < pv:
                found.add(y)
            elif dx + 1 < m and y not in dist:
                dist[y] = dx + 1
                queue.append(y)
    return found


@dataclass(frozen=True)
class OrderingStats:
    m: int
    q_values: tuple[int, ...]
    r_values: tuple[int, ...]

    @property
    def max_q(self) -> int:
        return max(self.q_values, default=0)

    @property
    def max_r(self) -> int:
        return max(self.r_values, default=0)

    @property
    def wcol(self) -> int:
        return 1 + self.max_q

    @property
    def col(self) -> int:
        return 1 + self.max_r


def ordering_stats(
    g: Graph, ordering: VertexOrdering, m: int, family: WeakReachFamily | None = None
) -> OrderingStats:
    if m < 1:
        raise ValueError(f"radius m must be >= 1, got {m}")
    if family is None or family.m != m:
        family = weak_reach_sets(g, ordering, m)
    q = tuple(family.q(v) for v in range(g.n))
    r = tuple(len(strong_reach_set(g, ordering, m, v)) for v in range(g.n))
    return OrderingStats(m, q, r)


# -- backconnectivity -------------------------------------------------------


def greedy_disjoint_paths(
    g: Graph, S: Collection[int], v: int, m: int
) -> tuple[int, list[list[int]]]:
    """Repeatedly take a shortest admissible path from v and burn its vertices.

    An admissible path has length <= m, internal vertices outside S and its far
    endpoint in S - {v}. The packing found has size >= ceil(b_m(S, v) / m).
    """
    if v not in S:
        raise ValueError(f"vertex {v} is not in S")
    used = {v}
    paths = []
    while True:
        path = _shortest_admissible_path(g, S, v, m, used)
        if path is None:
            break
        used.update(path[1:])
        paths.append(path)
    return len(paths), paths


def _shortest_admissible_path(g, S, v, m, used) -> list[int] | None:
    parent = {v: -1}
    frontier = [v]
    for _depth in range(m):
        nxt = []
        for x in frontier:
            for y in g.adjacency[x]:
                if y in used or y in parent:
                    continue
                parent[y] = x
                if y in S:
                    path = [y]
                    while path[-1] != v:
                        path.append(parent[path[-1]])
                    path.reverse()
                    return path
                nxt.append(y)
        frontier = nxt
    return None


def _packing_exists(g: Graph, S: Collection[int], v: int, m: int, target: int) -> bool:
    """Is there a set of ``target`` admissible paths from v meeting only in v?

    Paths leave v through pairwise distinct neighbors, so the search walks the
    neighbor list and either skips a neighbor or routes one path through it.
    Neighbors inside S are always taken as one-edge paths: any packing can be
    rerouted to do so without losing a path.
    """
    if target <= 0:
        return True
    adj = g.adjacency
    direct = [x for x in adj[v] if x in S]
    if len(direct) >= target:
        return True
    used = {v, *direct}
    need = target - len(direct)
    firsts = [x for x in adj[v] if x not in S]
    if len(firsts) < need or m < 2:
        return False

    def routes(x: int):
        # admissible paths v, x, ..., e with x outside S, avoiding `used`
        stack = [x]
        on_path = {x}

        def extend(y: int):
            if len(stack) < m:
                for z in adj[y]:
                    if z in used or z in on_path:
                        continue
                    if z in S:
                        yield stack + [z]
                    elif len(stack) + 1 < m:
                        stack.append(z)
                        on_path.add(z)
                        yield from extend(z)
                        on_path.discard(z)
                        stack.pop()

        yield from extend(x)

    def search(i: int, found: int) -> bool:
        if found >= need:
            return True
        if found + len(firsts) - i < need:
            return False
        x = firsts[i]
        if x not in used:
            for path in list(routes(x)):
                used.update(path)
                ok = search(i + 1, found + 1)
                used.difference_update(path)
                if ok:
                    return True
        return search(i + 1, found)

    return search(0, 0)


def bm_at_most(g: Graph, S: Collection[int], v: int, m: int, p: int) -> bool:
    """Exact test of b_m(S, v) <= p by searching for p + 1 disjoint paths."""
    if v not in S:
        raise ValueError(f"vertex {v} is not in S")
    if p < 0:
        raise ValueError(f"p must be non-negative, got {p}")
    return not _packing_exists(g, S, v, m, p + 1)


def backconnectivity(
    g: Graph, S: Collection[int], v: int, m: int, cap: int | None = None, hint: int = 0
) -> int:
    """Exact b_m(S, v), or ``cap`` if the value is at least ``cap``.

    The scan starts at ``hint`` and moves down or up from there.
    """
    if cap is None:
        cap = g.degree(v) + 1
    p = max(0, min(hint, cap - 1))
    if bm_at_most(g, S, v, m, p):
        while p > 0 and bm_at_most(g, S, v, m, p - 1):
            p -= 1
        return p
    p += 1
    while p < cap and not bm_at_most(g, S, v, m, p):
        p += 1
    return p


def ordering_admissibility(g: Graph, ordering: VertexOrdering, m: int) -> list[int]:
    """Exact backconnectivity of every position: b_m(prefix_i, v_i)."""
    values = []
    prefix: set[int] = set()
    for v in ordering.order:
        prefix.add(v)
        values.append(backconnectivity(g, prefix, v, m))
    return values


@dataclass(frozen=True)
class AdmissibilityResult:
    ordering: VertexOrdering
    step_values: tuple[int, ...]
    adm: int
    mode: str


def admissibility_ordering(
    g: Graph, m: int, mode: str = "exact", p_max: int | None = None
) -> AdmissibilityResult:
    """Build an ordering back to front, each time removing the vertex of S
    with the smallest backconnectivity into S (ties: smallest id).

    ``mode="exact"`` uses the exhaustive packing test and aborts with
    :class:`AdmissibilityCeilingError` once every candidate exceeds ``p_max``.
    ``mode="approx"`` scores vertices by the greedy packing size, which is at
    most the exact value and at least a ``1/m`` fraction of it.

    step_values are indexed by position in the final ordering.
    """
    if m < 1:
        raise ValueError(f"radius m must be >= 1, got {m}")
    if mode not in ("exact", "approx"):
        raise ValueError(f"unknown mode {mode!r}")
    if mode == "exact":
        if p_max is None:
            p_max = max(1, g.n)
        if p_max < 1:
            raise ValueError(f"p_max must be >= 1, got {p_max}")

    S = set(range(g.n))
    # exact mode keeps lower bounds and raises one at a time, so a vertex's
    # full value is only pinned down once it is the cheapest candidate
    key: dict[int, int] = {}
    exact: dict[int, bool] = {}

    def rescore(u: int) -> None:
        key[u] = greedy_disjoint_paths(g, S, u, m)[0]
        exact[u] = mode == "approx"
        heapq.heappush(heap, (key[u], u))

    heap: list[tuple[int, int]] = []
    for u in range(g.n):
        rescore(u)

    order = [0] * g.n
    steps = [0] * g.n
    for i in range(g.n - 1, -1, -1):
        while True:
            val, u = heapq.heappop(heap)
            if u not in S or key[u] != val:
                continue
            if exact[u]:
                break
            if mode == "exact" and val > p_max:
                break
            if _packing_exists(g, S, u, m, val + 1):
                key[u] = val + 1
            else:
                exact[u] = True
            heapq.heappush(heap, (key[u], u))
        if mode == "exact" and val > p_max:
            raise AdmissibilityCeilingError(
                f"all {len(S)} remaining vertices have b_{m} > {p_max}"
            )
        order[i] = u
        steps[i] = val
        S.discard(u)
        # only vertices within distance m of u can see the change in S
        ball = bfs_capped(g, [u], m)
        for w in ball.reached():
            if w in S:
                rescore(w)
    return AdmissibilityResult(
        VertexOrdering.from_sequence(order), tuple(steps), max(steps, default=0), mode
    )


def col_bound(c: int, m: int) -> int:
    return c * (c - 1) ** (m - 1) + 1


def col_bound_check(c: int, m: int, measured_col: int) -> bool:
    """Does an ordering of admissibility ``c`` respect col_m <= c(c-1)^(m-1) + 1?"""
    if c < 2:
        raise ValueError(f"the coloring-number bound is only checked for c >= 2, got {c}")
    if m < 1:
        raise ValueError(f"radius m must be >= 1, got {m}")
    return measured_col <= col_bound(c, m)
