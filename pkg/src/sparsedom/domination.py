"""Distance-k domination with an independent-set certificate.

Given an ordering whose weak m-reachability sets have size below ``c``, the
greedy pass below yields a k-dominating set ``D`` and a set of picked centers
``A'`` with ``|D| <= c |A'|``. The centers are then sorted into a sparse
conflict graph whose first-fit coloring uses at most ``c`` colors; the largest
color class ``A`` is m-independent, so ``|D| <= c^2 |A|``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable

from .graph import Graph
from .orderings import VertexOrdering, WeakReachFamily, weak_reach_sets


class InvariantViolation(RuntimeError):
    """An internal guarantee of the construction failed to hold."""


@dataclass
class LabelState:
    """p[v] = min(k + 1, dist(v, D)); the undominated vertices carry k + 1."""

    g: Graph
    k: int
    p: list[int]
    decreases: int = 0

    @classmethod
    def fresh(cls, g: Graph, k: int) -> LabelState:
        return cls(g, k, [k + 1] * g.n)

    def undominated(self, v: int) -> bool:
        return self.p[v] == self.k + 1

    def in_dominating_set(self, v: int) -> bool:
        return self.p[v] == 0


def propagate_labels(state: LabelState, newly_dominated: Iterable[int]) -> LabelState:
    """Zero the labels of new dominators and relax the decrease outwards.

    Labels only ever go down, and each vertex can go down at most k + 1
    times over a whole run; ``state.decreases`` counts every decrease.
    """
    p = state.p
    adj = state.g.adjacency
    queue = deque()
    for v in newly_dominated:
        if p[v] > 0:
            p[v] = 0
            state.decreases += 1
            queue.append(v)
    while queue:
        w = queue.popleft()
        pw1 = p[w] + 1
        for u in adj[w]:
            if p[u] > pw1:
                p[u] = pw1
                state.decreases += 1
                queue.append(u)
    return state


@dataclass(frozen=True)
class ConflictGraph:
    """Picked centers in ordering order; ``back_edges[i]`` holds earlier ones."""

    vertices: tuple[int, ...]
    back_edges: tuple[frozenset[int], ...]

    def edges(self) -> list[tuple[int, int]]:
        return [(a, b) for a, back in zip(self.vertices, self.back_edges) for b in sorted(back)]

    @property
    def max_back_degree(self) -> int:
        return max((len(b) for b in self.back_edges), default=0)


def build_conflict_graph(
    g: Graph,
    ordering: VertexOrdering,
    a_prime: list[int],
    family: WeakReachFamily,
    k: int,
    m: int,
) -> ConflictGraph:
    """Join each center a to the earlier owners of the vertices in Q_m(a).

    The owner of w is the unique center a_t with w in {a_t} + Q_k(a_t). Two
    centers within distance m of each other are always joined. For m <= k the
    centers are already pairwise farther than m apart and no edge is needed.
    """
    if m <= k:
        return ConflictGraph(tuple(a_prime), tuple(frozenset() for _ in a_prime))
    owner: dict[int, int] = {}
    for a in a_prime:
        for w in (a, *family.Q(k, a)):
            prev = owner.setdefault(w, a)
            if prev != a:
                raise InvariantViolation(
                    f"vertex {w} is claimed by centers {prev} and {a}"
                )
    pos = ordering.position
    back = []
    for a in a_prime:
        pa = pos[a]
        joined = set()
        for w in family.Q(m, a):
            t = owner.get(w)
            if t is not None and pos[t] < pa:
                joined.add(t)
        back.append(frozenset(joined))
    return ConflictGraph(tuple(a_prime), tuple(back))


def greedy_color(cg: ConflictGraph) -> tuple[dict[int, int], list[int]]:
    """First-fit coloring in center order; returns the coloring and the
    largest color class (lowest color wins ties)."""
    coloring: dict[int, int] = {}
    for a, back in zip(cg.vertices, cg.back_edges):
        taken = {coloring[b] for b in back}
        color = 0
        while color in taken:
            color += 1
        coloring[a] = color
    if not coloring:
        return coloring, []
    n_colors = max(coloring.values()) + 1
    sizes = [0] * n_colors
    for color in coloring.values():
        sizes[color] += 1
    best = max(range(n_colors), key=lambda c: (sizes[c], -c))
    return coloring, [a for a in cg.vertices if coloring[a] == best]


@dataclass(frozen=True)
class DominationCertificate:
    k: int
    m: int
    c: int
    D: tuple[int, ...]
    A_prime: tuple[int, ...]
    A: tuple[int, ...]
    colors_used: int
    label_decreases: int = field(default=0, compare=False)

    @property
    def ratio_bound_holds(self) -> bool:
        return len(self.D) <= self.c**2 * len(self.A)

    def inequality_chain(self) -> dict[str, bool]:
        c, d, ap, a = self.c, len(self.D), len(self.A_prime), len(self.A)
        return {
            "D<=c*A'": d <= c * ap,
            "A'<=colors*A": ap <= self.colors_used * a,
            "colors<=c": self.colors_used <= c,
            "D<=c^2*A": d <= c * c * a,
        }

    def to_record(self) -> dict:
        """Plain dict with a fixed key order for line-delimited output."""
        return {
            "k": self.k,
            "m": self.m,
            "c": self.c,
            "size_D": len(self.D),
            "size_A_prime": len(self.A_prime),
            "size_A": len(self.A),
            "colors_used": self.colors_used,
            "label_decreases": self.label_decreases,
            "D": list(self.D),
            "A_prime": list(self.A_prime),
            "A": list(self.A),
            "chain": self.inequality_chain(),
        }

    @classmethod
    def from_record(cls, rec: dict) -> DominationCertificate:
        return cls(
            k=rec["k"],
            m=rec["m"],
            c=rec["c"],
            D=tuple(rec["D"]),
            A_prime=tuple(rec["A_prime"]),
            A=tuple(rec["A"]),
            colors_used=rec["colors_used"],
            label_decreases=rec.get("label_decreases", 0),
        )

    def format_text(self) -> str:
        lines = [
            f"k: {self.k}",
            f"m: {self.m}",
            f"c: {self.c}",
            f"|D|: {len(self.D)}",
            f"|A'|: {len(self.A_prime)}",
            f"|A|: {len(self.A)}",
            f"colors_used: {self.colors_used}",
            f"D: {' '.join(map(str, self.D))}",
            f"A': {' '.join(map(str, self.A_prime))}",
            f"A: {' '.join(map(str, self.A))}",
            (
                f"chain: |A|={len(self.A)} <= dom_k <= |D|={len(self.D)}"
                f" <= c^2|A|={self.c**2 * len(self.A)}"
            ),
        ]
        for name, ok in self.inequality_chain().items():
            lines.append(f"  {name}: {'ok' if ok else 'FAILED'}")
        return "\n".join(lines)


def check_radii(k: int, m: int) -> None:
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if not 1 <= m <= 2 * k + 1:
        raise ValueError(f"m must lie in [1, 2k+1] = [1, {2 * k + 1}], got {m}")


def dominating_set(
    g: Graph,
    ordering: VertexOrdering,
    k: int,
    m: int,
    family: WeakReachFamily | None = None,
) -> DominationCertificate:
    """Run the greedy center selection and extract the certificate.

    ``family`` may carry precomputed weak reachability sets; it must reach at
    least radius ``m``.

    >>> from sparsedom.generators import path_graph
    >>> cert = dominating_set(path_graph(5), VertexOrdering.identity(5), k=1, m=2)
    >>> cert.A_prime, cert.A, cert.c
    ((0, 2, 4), (0, 4), 3)
    """
    check_radii(k, m)
    if len(ordering) != g.n:
        raise ValueError(f"ordering has {len(ordering)} vertices, graph has {g.n}")
    if family is None:
        family = weak_reach_sets(g, ordering, m)
    elif family.m < m:
        raise ValueError(f"reachability family only reaches radius {family.m} < m={m}")

    state = LabelState.fresh(g, k)
    a_prime: list[int] = []
    in_d = [False] * g.n
    d_list: list[int] = []
    for v in ordering.order:
        if not state.undominated(v):
            continue
        a_prime.append(v)
        new = [u for u in (v, *family.Q(m, v)) if not in_d[u]]
        for u in new:
            in_d[u] = True
        d_list.extend(new)
        propagate_labels(state, new)

    cg = build_conflict_graph(g, ordering, a_prime, family, k, m)
    coloring, largest = greedy_color(cg)
    c = 1 + max((len(family.Q(m, v)) for v in range(g.n)), default=0)
    colors_used = max(coloring.values()) + 1 if coloring else 0
    return DominationCertificate(
        k=k,
        m=m,
        c=c,
        D=tuple(sorted(d_list)),
        A_prime=tuple(a_prime),
        A=tuple(sorted(largest)),
        colors_used=colors_used,
        label_decreases=state.decreases,
    )
