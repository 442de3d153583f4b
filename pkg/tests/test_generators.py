from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import to_nx
from sparsedom import oracles
from sparsedom.generators import (
    binary_tree,
    cycle_graph,
    grid_graph,
    lower_bound_gn,
    parse_family_spec,
    random_sparse,
    random_tree,
    standard_corpus,
    standard_family,
    star_graph,
    subdivided_star,
)
from sparsedom.graph import bfs_capped
from sparsedom.oracles import OracleBudget
from sparsedom.orderings import ordering_stats


def test_standard_families():
    s = star_graph(3)
    assert s.degree(0) == 3 and s.n == 4
    g = grid_graph(3, 3)
    assert (g.n, g.m_edges) == (9, 12)
    assert all(cycle_graph(6).degree(v) == 2 for v in range(6))
    assert nx.is_tree(to_nx(binary_tree(10)))
    assert standard_family("complete", 5).m_edges == 10
    with pytest.raises(ValueError):
        standard_family("petersen", 10)


def test_random_sparse():
    assert random_sparse(10, 0, 3).m_edges == 0
    assert random_sparse(5, 10, 3) == standard_family("complete", 5)
    assert random_sparse(50, 80, 7) == random_sparse(50, 80, 7)
    assert random_sparse(50, 80, 7) != random_sparse(50, 80, 8)
    with pytest.raises(ValueError):
        random_sparse(4, 7, 0)


@given(st.integers(1, 30), st.data())
def test_random_sparse_counts(n, data):
    m = data.draw(st.integers(0, n * (n - 1) // 2))
    assert random_sparse(n, m, data.draw(st.integers(0, 99))).m_edges == m


@given(st.integers(1, 60), st.integers(0, 100))
def test_random_tree(n, seed):
    assert nx.is_tree(to_nx(random_tree(n, seed)))


def test_lower_bound_small_cases():
    g3 = lower_bound_gn(3, 1)
    assert g3.graph.n == 7  # the hexagon sd_1(K_3) plus the apex
    g4 = lower_bound_gn(4, 1)
    assert g4.graph.n == 11 and g4.graph.degree(g4.apex) == 6


@pytest.mark.parametrize("n, k", [(3, 1), (4, 1), (4, 2), (5, 2), (3, 3)])
def test_lower_bound_structure(n, k):
    inst = lower_bound_gn(n, k)
    g = inst.graph
    assert g.n == n + (2 * k - 1) * n * (n - 1) // 2 + 1
    assert set(g.neighbors(inst.apex)) == set(inst.X)
    assert len(inst.Y) == n and len(inst.X) == n * (n - 1) // 2
    assert all(g.degree(y) == n - 1 for y in inst.Y)
    for a, b in combinations(inst.Y, 2):
        assert bfs_capped(g, [a], 4 * k)[b] == 2 * k
    # each middle vertex sits at distance exactly k from both of its branch ends
    for x in inst.X:
        dm = bfs_capped(g, [x], k)
        assert sum(dm[y] == k for y in inst.Y) == 2
    # everything off Y is within k of the apex
    dm = bfs_capped(g, [inst.apex], k)
    assert all(dm.within(v, k) for v in range(g.n) if v not in inst.Y)
    order = inst.prescribed_ordering.order
    assert order[0] == inst.apex and set(order[1 : n + 1]) == set(inst.Y)


@pytest.mark.parametrize("n", [4, 5, 6])
def test_lower_bound_oracle_claims(n):
    g = lower_bound_gn(n, 1).graph
    budget = OracleBudget(max_n=g.n)
    assert oracles.exact_alpha_m(g, 2, budget)[0] <= 2
    assert oracles.exact_dom_k(g, 1, budget)[0] >= n / 2


@pytest.mark.parametrize("k", [1, 2])
@pytest.mark.parametrize("n", range(3, 9))
def test_prescribed_ordering_wcol(n, k):
    inst = lower_bound_gn(n, k)
    assert ordering_stats(inst.graph, inst.prescribed_ordering, 2 * k - 1).wcol <= 2 * k + 2


@pytest.mark.parametrize("leaves", range(2, 9))
def test_subdivided_star_separation(leaves):
    g = subdivided_star(leaves, 1)
    assert oracles.exact_alpha_m(g, 4)[0] <= 2
    assert oracles.exact_dom_k(g, 1)[0] == leaves


def test_parse_family_spec():
    assert parse_family_spec("grid:3x4") == grid_graph(3, 4)
    assert parse_family_spec("random:20,30", seed=5) == random_sparse(20, 30, 5)
    assert parse_family_spec("lower_bound:4,1") == lower_bound_gn(4, 1).graph
    assert parse_family_spec("subdivided_star:3,2") == subdivided_star(3, 2)


def test_corpus_is_deterministic_and_bounded():
    a = standard_corpus(max_n=500, seed=1)
    b = standard_corpus(max_n=500, seed=1)
    assert [name for name, _ in a] == [name for name, _ in b]
    assert all(g1 == g2 for (_, g1), (_, g2) in zip(a, b))
    assert all(g.n <= 500 for _, g in a)
    assert max(g.n for _, g in standard_corpus()) == 10_000
