import random

import pytest
from hypothesis import given, strategies as st

from streamdfs.graph import AdjacencyGraph, DfsTree, artificial_root, is_ancestor, lca, tree_height


def chain(n_real):
    t = DfsTree(n_real)
    prev = t.root
    for v in range(n_real):
        t.attach(v, prev)
        prev = v
    return t


def test_artificial_root_is_n():
    assert artificial_root(7) == 7
    assert DfsTree(7).root == 7


def test_is_ancestor_examples():
    t = chain(2)  # r -> 0 -> 1
    assert is_ancestor(t, t.root, 1)
    assert not is_ancestor(t, 1, 0)
    for v in (t.root, 0, 1):
        assert is_ancestor(t, v, v)


def test_unknown_vertex_raises():
    t = chain(2)
    with pytest.raises(KeyError, match="vertex not in tree"):
        is_ancestor(t, 5, 0)
    t2 = DfsTree(3)
    t2.attach(0, t2.root)
    with pytest.raises(KeyError):
        lca(t2, 0, 1)


def test_lca_examples():
    t = DfsTree(2)
    t.attach(0, t.root)
    t.attach(1, t.root)
    assert lca(t, 0, 1) == t.root
    c = chain(2)
    assert lca(c, 0, 1) == 0
    assert lca(c, 1, 1) == 1


def test_height_examples():
    assert tree_height(DfsTree(0)) == 0
    assert tree_height(chain(3)) == 3  # r plus three vertices is a chain of four
    star = DfsTree(5)
    for v in range(5):
        star.attach(v, star.root)
    assert tree_height(star) == 1


def test_attach_rejects_bad_input():
    t = DfsTree(3)
    with pytest.raises(KeyError):
        t.attach(1, 0)
    t.attach(0, t.root)
    with pytest.raises(ValueError):
        t.attach(0, t.root)


def test_consistency_detects_tampering():
    t = chain(3)
    assert t.consistency_errors() == []
    t.level[2] = 7
    assert t.consistency_errors()


def _random_tree(rng, n):
    t = DfsTree(n)
    placed = [t.root]
    for v in rng.sample(range(n), n):
        t.attach(v, rng.choice(placed))
        placed.append(v)
    return t


def _naive_ancestors(t, v):
    out = []
    while v != -1:
        out.append(v)
        v = t.parent[v]
    return out


@given(st.integers(1, 40), st.integers(0, 10**6))
def test_lca_and_ancestry_match_naive_walk(n, seed):
    rng = random.Random(seed)
    t = _random_tree(rng, n)
    verts = list(t.vertices())
    for _ in range(20):
        x, y = rng.choice(verts), rng.choice(verts)
        ax, ay = _naive_ancestors(t, x), set(_naive_ancestors(t, y))
        assert lca(t, x, y) == next(a for a in ax if a in ay)
        assert is_ancestor(t, x, y) == (x in ay)


def test_adjacency_graph_drops_loops_and_checks_range():
    g = AdjacencyGraph.from_edges(3, [(0, 1), (1, 1), (1, 2)])
    assert g.m == 2
    assert sorted(g.edges()) == [(0, 1), (1, 2)]
    with pytest.raises(ValueError):
        AdjacencyGraph.from_edges(2, [(0, 2)])
