"""Immutable simple undirected graphs, capped BFS, subdivision and edge-list I/O.

Vertices are the integers ``0..n-1``. Any external labelling lives in the
I/O layer only.
"""

from __future__ import annotations

from bisect import bisect_left
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, TextIO


class GraphError(ValueError):
    """Raised for malformed graph input (self-loops, bad ids, bad files)."""


@dataclass(frozen=True)
class Graph:
    n: int
    adjacency: tuple[tuple[int, ...], ...]
    m_edges: int

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @property
    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield every edge once as ``(u, v)`` with ``u < v``, sorted."""
        for u, nbrs in enumerate(self.adjacency):
            for v in nbrs:
                if u < v:
                    yield u, v

    def has_edge(self, u: int, v: int) -> bool:
        nbrs = self.adjacency[u]
        i = bisect_left(nbrs, v)
        return i < len(nbrs) and nbrs[i] == v

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m_edges={self.m_edges})"


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a simple graph; parallel edges collapse, self-loops are rejected."""
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has a vertex id outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        nbrs[u].add(v)
        nbrs[v].add(u)
    adjacency = tuple(tuple(sorted(s)) for s in nbrs)
    m_edges = sum(len(a) for a in adjacency) // 2
    return Graph(n, adjacency, m_edges)


@dataclass(frozen=True)
class DistanceMap:
    """Multi-source distances truncated at ``cap``; ``None`` means beyond the cap."""

    sources: frozenset[int]
    dist: tuple[int | None, ...]
    cap: int

    def __getitem__(self, v: int) -> int | None:
        return self.dist[v]

    def within(self, v: int, r: int) -> bool:
        d = self.dist[v]
        return d is not None and d <= r

    def reached(self) -> list[int]:
        return [v for v, d in enumerate(self.dist) if d is not None]


def bfs_capped(g: Graph, sources: Iterable[int], cap: int) -> DistanceMap:
    src = frozenset(sources)
    if not src:
        raise ValueError("bfs_capped needs at least one source vertex")
    if cap < 0:
        raise ValueError(f"cap must be non-negative, got {cap}")
    dist: list[int | None] = [None] * g.n
    queue = deque()
    for s in src:
        dist[s] = 0
        queue.append(s)
    while queue:
        u = queue.popleft()
        du = dist[u]
        if du == cap:
            continue
        for w in g.adjacency[u]:
            if dist[w] is None:
                dist[w] = du + 1
                queue.append(w)
    return DistanceMap(src, tuple(dist), cap)


def subdivide(g: Graph, t: int) -> Graph:
    """Replace every edge by a path with ``t`` new internal vertices.

    Edges are processed in sorted order; the internal vertices of edge ``uv``
    (``u < v``) are numbered consecutively from ``u`` towards ``v``.
    """
    if t < 0:
        raise ValueError(f"t must be non-negative, got {t}")
    if t == 0:
        return g
    edges = []
    nxt = g.n
    for u, v in g.edges():
        path = [u, *range(nxt, nxt + t), v]
        nxt += t
        edges.extend(zip(path, path[1:]))
    return build_graph(nxt, edges)


# -- text formats -----------------------------------------------------------


def _content_lines(stream: TextIO) -> Iterator[tuple[int, str]]:
    for lineno, raw in enumerate(stream, 1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield lineno, line


def read_edge_list(stream: TextIO) -> Graph:
    """Parse ``n m`` followed by ``m`` lines of ``u v`` (0-based)."""
    lines = _content_lines(stream)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise GraphError("empty edge-list input: missing 'n m' header") from None
    try:
        n, m = (int(tok) for tok in header.split())
    except ValueError:
        raise GraphError(f"line {lineno}: expected 'n m', got {header!r}") from None
    edges = []
    for lineno, line in lines:
        parts = line.split()
        if len(parts) != 2:
            raise GraphError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise GraphError(f"line {lineno}: non-integer vertex id in {line!r}") from None
    if len(edges) != m:
        raise GraphError(f"header announces {m} edges but {len(edges)} were given")
    return build_graph(n, edges)


def write_edge_list(g: Graph, stream: TextIO) -> None:
    stream.write(f"{g.n} {g.m_edges}\n")
    for u, v in g.edges():
        stream.write(f"{u} {v}\n")


def load_graph(path: str) -> Graph:
    with open(path) as fh:
        return read_edge_list(fh)


def save_graph(g: Graph, path: str) -> None:
    with open(path, "w") as fh:
        write_edge_list(g, fh)
