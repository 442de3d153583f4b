"""Exponential-time exact references for small graphs.

Nothing here calls into :mod:`sparsedom.orderings` or
:mod:`sparsedom.domination`; these functions are the ground truth the fast
code is checked against. Each oracle refuses inputs larger than its budget.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Collection, Iterable, Iterator

from .graph import Graph, bfs_capped


class BudgetExceeded(RuntimeError):
    """The instance is larger (or slower) than the oracle is allowed to handle."""


@dataclass(frozen=True)
class OracleBudget:
    max_n: int
    time_cap: float | None = 600.0  # seconds


SET_BUDGET = OracleBudget(max_n=20)
BM_BUDGET = OracleBudget(max_n=16)
ORDERING_BUDGET = OracleBudget(max_n=9)


class _Clock:
    def __init__(self, budget: OracleBudget, what: str):
        self.what = what
        self.deadline = None if budget.time_cap is None else time.monotonic() + budget.time_cap
        self.ticks = 0

    def tick(self) -> None:
        self.ticks += 1
        if self.deadline is not None and self.ticks % 1024 == 0 and time.monotonic() > self.deadline:
            raise BudgetExceeded(f"{self.what}: time cap exceeded")


def _admit(g: Graph, budget: OracleBudget, what: str) -> _Clock:
    if g.n > budget.max_n:
        raise BudgetExceeded(f"{what}: n={g.n} exceeds the oracle ceiling of {budget.max_n}")
    return _Clock(budget, what)


def _ball_masks(g: Graph, r: int) -> list[int]:
    masks = []
    for v in range(g.n):
        mask = 0
        for u in bfs_capped(g, [v], r).reached():
            mask |= 1 << u
        masks.append(mask)
    return masks


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# -- verification predicates -------------------------------------------------


def verify_dominating(g: Graph, D: Iterable[int], k: int) -> bool:
    D = set(D)
    if not D:
        return g.n == 0
    dm = bfs_capped(g, D, k)
    return all(d is not None for d in dm.dist)


def verify_independent(g: Graph, A: Iterable[int], m: int) -> bool:
    A = set(A)
    for a in A:
        dm = bfs_capped(g, [a], m)
        if any(b != a and dm[b] is not None for b in A):
            return False
    return True


# -- dom_k and alpha_m -------------------------------------------------------


def exact_dom_k(g: Graph, k: int, budget: OracleBudget = SET_BUDGET) -> tuple[int, list[int]]:
    """Minimum k-dominating set by branch and bound over covering balls."""
    clock = _admit(g, budget, "exact_dom_k")
    if g.n == 0:
        return 0, []
    balls = _ball_masks(g, k)
    full = (1 << g.n) - 1
    max_ball = max(b.bit_count() for b in balls)
    best = [list(range(g.n))]
    chosen: list[int] = []

    def solve(uncovered: int) -> None:
        clock.tick()
        if not uncovered:
            if len(chosen) < len(best[0]):
                best[0] = chosen.copy()
            return
        lower = -(-uncovered.bit_count() // max_ball)
        if len(chosen) + lower >= len(best[0]):
            return
        # branch on the uncovered vertex with fewest covering balls
        pivot = min(_bits(uncovered), key=lambda v: balls[v].bit_count())
        options = sorted(_bits(balls[pivot]), key=lambda u: -(balls[u] & uncovered).bit_count())
        for u in options:
            chosen.append(u)
            solve(uncovered & ~balls[u])
            chosen.pop()

    solve(full)
    return len(best[0]), sorted(best[0])


def exact_alpha_m(g: Graph, m: int, budget: OracleBudget = SET_BUDGET) -> tuple[int, list[int]]:
    """Maximum set with pairwise distance > m (independent set of G^m)."""
    clock = _admit(g, budget, "exact_alpha_m")
    if g.n == 0:
        return 0, []
    conflict = [ball & ~(1 << v) for v, ball in enumerate(_ball_masks(g, m))]
    best: list[list[int]] = [[]]
    chosen: list[int] = []

    def solve(cand: int) -> None:
        clock.tick()
        if len(chosen) + cand.bit_count() <= len(best[0]):
            return
        if not cand:
            best[0] = chosen.copy()
            return
        v = max(_bits(cand), key=lambda u: (conflict[u] & cand).bit_count())
        if not conflict[v] & cand:
            # nothing left conflicts: take everything
            members = list(_bits(cand))
            chosen.extend(members)
            solve(0)
            del chosen[-len(members):]
            return
        chosen.append(v)
        solve(cand & ~conflict[v] & ~(1 << v))
        chosen.pop()
        solve(cand & ~(1 << v))

    solve((1 << g.n) - 1)
    return len(best[0]), sorted(best[0])


# -- backconnectivity --------------------------------------------------------


def qualifying_paths(g: Graph, S: Collection[int], v: int, m: int) -> list[tuple[int, ...]]:
    """Every simple path from v of length <= m with internal vertices outside S
    and last vertex in S - {v}."""
    out: list[tuple[int, ...]] = []
    path = [v]

    def walk() -> None:
        if len(path) - 1 == m:
            return
        for y in g.adjacency[path[-1]]:
            if y in path:
                continue
            if y in S:
                out.append(tuple(path + [y]))
            else:
                path.append(y)
                walk()
                path.pop()

    walk()
    return out


def _max_packing(sets: list[int], clock: _Clock) -> int:
    """Largest number of pairwise disjoint masks.

    Any mask containing another mask is dropped first (swapping it for the
    smaller one never hurts); the rest is a memoized include/exclude search
    over bitmasks of still-available sets.
    """
    uniq = sorted(set(sets), key=lambda s: s.bit_count())
    kept: list[int] = []
    for s in uniq:
        if not any(t & s == t for t in kept):
            kept.append(s)
    n = len(kept)
    clash = []
    for i, s in enumerate(kept):
        mask = 0
        for j, t in enumerate(kept):
            if s & t:
                mask |= 1 << j
        clash.append(mask)
    memo: dict[int, int] = {}

    def solve(avail: int) -> int:
        if not avail:
            return 0
        hit = memo.get(avail)
        if hit is not None:
            return hit
        clock.tick()
        low = avail & -avail
        i = low.bit_length() - 1
        best = 1 + solve(avail & ~clash[i])
        if best < avail.bit_count() - 1:
            best = max(best, solve(avail & ~low))
        memo[avail] = best
        return best

    return solve((1 << n) - 1)


def exact_bm(
    g: Graph, S: Collection[int], v: int, m: int, budget: OracleBudget = BM_BUDGET
) -> int:
    """b_m(S, v) by enumerating all qualifying paths and packing them exactly."""
    clock = _admit(g, budget, "exact_bm")
    if v not in S:
        raise ValueError(f"vertex {v} is not in S")
    return _bm_with_clock(g, set(S), v, m, clock)


def _bm_with_clock(g: Graph, S: set[int], v: int, m: int, clock: _Clock) -> int:
    mask = 0
    for u in S:
        mask |= 1 << u
    return _packing_value(_path_rows(g, v, m), mask, clock)


def _path_rows(g: Graph, v: int, m: int) -> list[tuple[int, int]]:
    """Every simple path from v of length 1..m as
    (mask of internal vertices, bit of the last vertex)."""
    rows = []
    for p in _simple_paths(g, v, m):
        if len(p) < 2:
            continue
        internal = 0
        for x in p[1:-1]:
            internal |= 1 << x
        rows.append((internal, 1 << p[-1]))
    return rows


def _path_table(g: Graph, m: int) -> list[list[tuple[int, int]]]:
    return [_path_rows(g, v, m) for v in range(g.n)]


def _qualifying(rows: list[tuple[int, int]], s_mask: int) -> list[tuple[int, int]]:
    return [(im, eb) for im, eb in rows if not im & s_mask and eb & s_mask]


def _packing_value(rows: list[tuple[int, int]], s_mask: int, clock: _Clock) -> int:
    return _max_packing([im | eb for im, eb in _qualifying(rows, s_mask)], clock)


def _min_over_orderings(g: Graph, value, clock: _Clock) -> int:
    """min over orderings of max_i value(prefix_mask, v_i), by DP over prefix sets."""
    n = g.n
    f = [0] * (1 << n)
    for mask in range(1, 1 << n):
        best = n + 1
        for v in _bits(mask):
            clock.tick()
            rest = f[mask & ~(1 << v)]
            if rest >= best:
                continue
            cand = max(value(mask, v), rest)
            if cand < best:
                best = cand
        f[mask] = best
    return f[(1 << n) - 1]


def exact_adm(g: Graph, m: int, budget: OracleBudget = ORDERING_BUDGET) -> int:
    clock = _admit(g, budget, "exact_adm")
    if g.n == 0:
        return 0
    table = _path_table(g, m)
    seen: dict[frozenset[int], int] = {}

    def value(mask: int, v: int) -> int:
        family = frozenset(im | eb for im, eb in _qualifying(table[v], mask))
        hit = seen.get(family)
        if hit is None:
            hit = seen[family] = _max_packing(list(family), clock)
        return hit

    return _min_over_orderings(g, value, clock)


def exact_col(g: Graph, m: int, budget: OracleBudget = ORDERING_BUDGET) -> int:
    clock = _admit(g, budget, "exact_col")
    if g.n == 0:
        return 1
    table = _path_table(g, m)

    def strong(mask: int, v: int) -> int:
        ends = 0
        for _, eb in _qualifying(table[v], mask):
            ends |= eb
        return ends.bit_count()

    return 1 + _min_over_orderings(g, strong, clock)


def exact_wcol(g: Graph, m: int, budget: OracleBudget = ORDERING_BUDGET) -> int:
    """Branch and bound over orderings built front to back.

    Placing u after the prefix P makes u weakly reachable from exactly the
    vertices within distance m of u in G - P.
    """
    clock = _admit(g, budget, "exact_wcol")
    n = g.n
    if n == 0:
        return 1
    adj = g.adjacency
    q = [0] * n
    best = [n]  # 1 + max q never exceeds n

    def reach(u: int, placed: int) -> list[int]:
        seen = {u}
        frontier = [u]
        for _ in range(m):
            nxt = []
            for x in frontier:
                for y in adj[x]:
                    if y not in seen and not placed >> y & 1:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        seen.discard(u)
        return list(seen)

    def solve(placed: int, count: int, worst: int) -> None:
        clock.tick()
        if worst >= best[0]:
            return
        if count == n:
            best[0] = worst
            return
        options = [u for u in range(n) if not placed >> u & 1]
        options.sort(key=lambda u: q[u])
        for u in options:
            hit = reach(u, placed)
            for w in hit:
                q[w] += 1
            new_worst = max(worst, 1 + max((q[w] for w in hit), default=0))
            solve(placed | 1 << u, count + 1, new_worst)
            for w in hit:
                q[w] -= 1

    solve(0, 0, 1)
    return best[0]


# -- per-ordering brute force -------------------------------------------------


def _simple_paths(g: Graph, v: int, m: int) -> Iterator[list[int]]:
    path = [v]

    def walk() -> Iterator[list[int]]:
        yield path
        if len(path) - 1 == m:
            return
        for y in g.adjacency[path[-1]]:
            if y not in path:
                path.append(y)
                yield from walk()
                path.pop()

    yield from walk()


def weak_reach_bruteforce(g: Graph, position: list[int] | tuple[int, ...], m: int) -> list[set[int]]:
    """Q_m(v) straight from the definition, by enumerating simple paths."""
    out = []
    for v in range(g.n):
        found = set()
        for p in _simple_paths(g, v, m):
            u = p[-1]
            if position[u] < position[v] and min(position[x] for x in p) == position[u]:
                found.add(u)
        out.append(found)
    return out


def strong_reach_bruteforce(g: Graph, position: list[int] | tuple[int, ...], m: int) -> list[set[int]]:
    out = []
    for v in range(g.n):
        pv = position[v]
        found = set()
        for p in _simple_paths(g, v, m):
            u = p[-1]
            if position[u] < pv and all(position[x] >= pv for x in p[:-1]):
                found.add(u)
        out.append(found)
    return out


def realized_adm_bruteforce(g: Graph, order: list[int] | tuple[int, ...], m: int) -> int:
    """max over positions of exact b_m(prefix, v), via path enumeration."""
    clock = _Clock(OracleBudget(max_n=g.n), "realized_adm")
    prefix: set[int] = set()
    worst = 0
    for v in order:
        prefix.add(v)
        worst = max(worst, _bm_with_clock(g, prefix, v, m, clock))
    return worst
