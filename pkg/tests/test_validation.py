import itertools
import random

from hypothesis import given, settings, strategies as st

from conftest import tree_from_parents
from streamdfs.graph import AdjacencyGraph, DfsTree
from streamdfs.validation import brute_force_is_dfs, check_dfs, check_edges, oracle_dfs


def build(n, pairs):
    """DfsTree from (parent, child) pairs given top-down."""
    t = DfsTree(n)
    for p, c in pairs:
        t.attach(c, p)
    return t


def test_triangle_back_edge_is_fine():
    # a=0, b=1, c=2; r=3
    t = build(3, [(3, 0), (0, 1), (1, 2)])
    rep = check_edges(3, [(0, 1), (1, 2), (0, 2)], t)
    assert rep.ok and rep.offending_edge is None


def test_four_cycle_cross_edge_is_reported():
    # a=0, b=1, c=2, d=3; tree a->b, a->d, b->c; (c, d) joins sibling subtrees
    t = build(4, [(4, 0), (0, 1), (0, 3), (1, 2)])
    rep = check_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)], t)
    assert rep.is_spanning and not rep.is_dfs
    assert rep.offending_edge == (2, 3)


def test_missing_vertex_is_not_spanning():
    t = build(3, [(3, 0), (0, 1)])
    rep = check_edges(3, [(0, 1)], t)
    assert not rep.is_spanning and not rep.ok


def test_tree_edge_must_exist_in_graph():
    t = build(3, [(3, 0), (0, 1), (1, 2)])
    rep = check_edges(3, [(0, 1)], t)
    assert rep.offending_edge == (1, 2)


def test_root_edges_are_free():
    t = build(3, [(3, v) for v in range(3)])
    assert check_edges(3, [], t).ok


def test_oracle_examples():
    chain = AdjacencyGraph.from_edges(5, [(i, i + 1) for i in range(4)])
    t = oracle_dfs(chain)
    assert [t.parent[v] for v in range(5)] == [5, 0, 1, 2, 3]
    k4 = AdjacencyGraph.from_edges(4, itertools.combinations(range(4), 2))
    t = oracle_dfs(k4)
    assert t.height() == 4  # a Hamiltonian path below r
    assert check_dfs(k4, t).ok


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 12), st.floats(0, 1), st.integers(0, 10**6))
def test_oracle_is_valid(n, density, seed):
    rng = random.Random(seed)
    edges = [e for e in itertools.combinations(range(n), 2) if rng.random() < density]
    g = AdjacencyGraph.from_edges(n, edges)
    t = oracle_dfs(g)
    assert check_dfs(g, t).ok and brute_force_is_dfs(g, t)
    assert 1 <= t.height() <= n


def _all_parent_maps(n):
    """Every parent choice over 0..n (n is r); cyclic ones leave vertices unreachable."""
    for parents in itertools.product(range(n + 1), repeat=n):
        if all(p != v for v, p in enumerate(parents)):
            yield dict(enumerate(parents))


def test_checker_agrees_with_brute_force_exhaustively():
    agree = checked = 0
    for n in range(1, 5):
        pairs = list(itertools.combinations(range(n), 2))
        maps = list(_all_parent_maps(n))
        for mask in range(1 << len(pairs)):
            g = AdjacencyGraph.from_edges(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])
            for pm in maps:
                t = tree_from_parents(n, pm)
                checked += 1
                agree += check_dfs(g, t).ok == brute_force_is_dfs(g, t)
    assert agree == checked > 10000


@settings(max_examples=300, deadline=None)
@given(st.integers(5, 10), st.integers(0, 10**6))
def test_checker_agrees_with_brute_force_on_perturbed_trees(n, seed):
    rng = random.Random(seed)
    edges = [e for e in itertools.combinations(range(n), 2) if rng.random() < 0.4]
    g = AdjacencyGraph.from_edges(n, edges)
    base = oracle_dfs(g)
    pm = {v: base.parent[v] for v in range(n)}
    for _ in range(rng.randint(0, 2)):
        v = rng.randrange(n)
        pm[v] = rng.choice([p for p in range(n + 1) if p != v])
    t = tree_from_parents(n, pm)
    assert check_dfs(g, t).ok == brute_force_is_dfs(g, t)
