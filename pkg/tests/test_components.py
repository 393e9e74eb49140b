import random
from collections import deque

import pytest
from hypothesis import given, settings, strategies as st

from streamdfs.components import (VISITED, Component, DisconnectedFromPath, UnionFind, local_dfs,
                                  orient_tree, route_edge, spanning_tree_of_merges, split_after_path)


def test_route_edge():
    comp_of = [3, 3, VISITED, 4]
    assert route_edge(comp_of, (0, 1)) == 3
    assert route_edge(comp_of, (0, 2)) == VISITED
    assert route_edge(comp_of, (2, 2)) == VISITED
    with pytest.raises(AssertionError):
        route_edge(comp_of, (1, 3))


def test_spanning_tree_of_merges():
    uf = UnionFind(3)
    assert spanning_tree_of_merges(uf, [(0, 1), (1, 2), (0, 2)]) == [(0, 1), (1, 2)]
    assert spanning_tree_of_merges(UnionFind(1), []) == []


def test_spanning_tree_of_random_component():
    rng = random.Random(3)
    edges = [(i, rng.randrange(i)) for i in range(1, 8)]  # connected
    edges += [tuple(rng.sample(range(8), 2)) for _ in range(10)]
    rng.shuffle(edges)
    tree = spanning_tree_of_merges(UnionFind(8), edges)
    assert len(tree) == 7
    uf = UnionFind(8)
    for a, b in tree:
        assert uf.union(a, b)
    assert len(uf.classes()) == 1


def test_orient_tree_and_local_dfs():
    assert orient_tree(2, [(0, 1), (1, 2)]) == [(2, 1), (1, 0)]
    parent, level, order = local_dfs(0, [(0, 1), (0, 2), (1, 2)])
    assert order == [0, 1, 2]
    assert parent == {0: -1, 1: 0, 2: 1}
    assert level[2] == 2


def test_split_whole_path_leaves_nothing():
    c = Component([0, 1, 2, 3], 0, [(0, 1), (1, 2), (2, 3)])
    assert split_after_path(c, [0, 1, 2, 3], [(0, 1), (1, 2), (2, 3)]) == []


def test_split_picks_deepest_path_neighbour():
    # path 0-1-2, residual {3,4} joined by (3,4), touching the path at 0 and 2
    c = Component(list(range(5)), 0, [(0, 1), (1, 2), (0, 3), (3, 4)])
    edges = [(0, 1), (1, 2), (0, 3), (3, 4), (4, 2)]
    [(comp, low)] = split_after_path(c, [0, 1, 2], edges)
    assert sorted(comp.vertices) == [3, 4]
    assert low == (2, 4)
    assert comp.root == 4 and comp.attach == 2
    assert comp.tree == [(4, 3)]


def test_split_without_link_to_path_faults():
    c = Component([0, 1, 2], 0, [(0, 1)])
    with pytest.raises(DisconnectedFromPath):
        split_after_path(c, [0, 1], [(0, 1)])


def _components_without(n, edges, removed):
    adj = {v: [] for v in range(n) if v not in removed}
    for a, b in edges:
        if a in adj and b in adj:
            adj[a].append(b)
            adj[b].append(a)
    seen, out = set(), []
    for s in adj:
        if s in seen:
            continue
        seen.add(s)
        comp, todo = [s], deque([s])
        while todo:
            for w in adj[todo.popleft()]:
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
                    todo.append(w)
        out.append(sorted(comp))
    return sorted(out)


@settings(max_examples=150, deadline=None)
@given(st.integers(2, 14), st.integers(0, 10**6))
def test_split_matches_bfs_oracle(n, seed):
    rng = random.Random(seed)
    edges = [(i, rng.randrange(i)) for i in range(1, n)]
    edges += [tuple(rng.sample(range(n), 2)) for _ in range(rng.randint(0, 2 * n))]
    rng.shuffle(edges)
    parent, level, order = local_dfs(0, edges)
    deepest = max(order, key=lambda v: level[v])
    path = []
    v = deepest
    while v != -1:
        path.append(v)
        v = parent[v]
    path.reverse()
    c = Component(list(range(n)), 0, [(parent[v], v) for v in order[1:]])
    result = split_after_path(c, path, edges)
    assert sorted(sorted(comp.vertices) for comp, _ in result) == \
        _components_without(n, edges, set(path))
    pos = {v: i for i, v in enumerate(path)}
    for comp, (x, y) in result:
        members = set(comp.vertices)
        best = max(pos[a if b in members else b] for a, b in edges
                   if (a in pos and b in members) or (b in pos and a in members))
        assert x in pos and y in members and pos[x] == best
        assert comp.root == y
        # the tree spans the component
        assert len(comp.tree) == len(members) - 1
        assert {c for _, c in comp.tree} | {y} == members
