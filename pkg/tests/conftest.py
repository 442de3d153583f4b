import sys
from itertools import combinations

import networkx as nx
from hypothesis import strategies as st

from sparsedom.graph import Graph, build_graph
from sparsedom.orderings import VertexOrdering


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 10, connected: bool = False) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    if connected:
        # a random spanning tree keeps the drawn graph connected
        parents = [draw(st.integers(0, i - 1)) for i in range(1, n)]
        chosen = chosen + [(p, i) for i, p in enumerate(parents, 1)]
    return build_graph(n, chosen)


@st.composite
def graphs_with_ordering(draw, **kw) -> tuple[Graph, VertexOrdering]:
    g = draw(graphs(**kw))
    perm = draw(st.permutations(range(g.n)))
    return g, VertexOrdering.from_sequence(perm)


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def pytest_terminal_summary(terminalreporter):
    # importlib mode may register the module under a package-qualified name
    mods = [m for name, m in list(sys.modules.items()) if name.endswith("test_acceptance")]
    results = next((m.RESULTS for m in mods if getattr(m, "RESULTS", None)), None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(results):
        terminalreporter.write_line(results[name])
