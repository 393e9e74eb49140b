"""Ground truth: a DFS-tree checker and an in-memory reference DFS."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import NONE, AdjacencyGraph, DfsTree, Edge, artificial_root, edge_key


@dataclass(frozen=True)
class ValidityReport:
    is_spanning: bool
    is_dfs: bool
    offending_edge: Edge | None = None

    @property
    def ok(self) -> bool:
        return self.is_spanning and self.is_dfs


def _intervals(tree: DfsTree) -> tuple[list[int], list[int]]:
    size = len(tree.level)
    tin = [-1] * size
    tout = [-1] * size
    clock = 0
    stack = [(tree.root, 0)]
    while stack:
        u, i = stack.pop()
        if i == 0:
            tin[u] = clock
            clock += 1
        kids = tree.children[u]
        if i < len(kids):
            stack.append((u, i + 1))
            stack.append((kids[i], 0))
        else:
            tout[u] = clock
    return tin, tout


def check_dfs(graph: AdjacencyGraph, tree: DfsTree) -> ValidityReport:
    """Is ``tree`` a spanning DFS tree of ``graph`` plus the artificial-root edges?

    Every tree edge must be a graph edge or hang from the artificial root,
    and every other graph edge must join an ancestor to a descendant.  The
    first violation found is reported as ``offending_edge``.
    """
    n = graph.n
    r = artificial_root(n)
    spanning = tree.root == r and len(tree.level) == n + 1 and all(
        tree.level[v] >= 0 for v in range(n + 1)) and not tree.consistency_errors()
    if not spanning:
        return ValidityReport(False, False, None)
    keys = set()
    for u, nbrs in enumerate(graph.adjacency):
        for v in nbrs:
            if u < v:
                keys.add((u, v))
    parent = tree.parent
    for v in range(n):
        p = parent[v]
        if p != r and edge_key(p, v) not in keys:
            return ValidityReport(True, False, (p, v))
    tin, tout = _intervals(tree)
    for u, v in sorted(keys):
        if parent[u] == v or parent[v] == u:
            continue
        if tin[u] <= tin[v] < tout[u] or tin[v] <= tin[u] < tout[v]:
            continue
        return ValidityReport(True, False, (u, v))
    return ValidityReport(True, True, None)


def check_edges(n: int, edges: Iterable[Sequence[int]], tree: DfsTree) -> ValidityReport:
    return check_dfs(AdjacencyGraph.from_edges(n, edges), tree)


def oracle_dfs(graph: AdjacencyGraph) -> DfsTree:
    """Stack DFS from the artificial root; neighbours in adjacency order, roots by id."""
    n = graph.n
    tree = DfsTree(n)
    for s in range(n):
        if s in tree:
            continue
        tree.attach(s, tree.root)
        stack = [(s, iter(graph.adjacency[s]))]
        while stack:
            u, it = stack[-1]
            for w in it:
                if w not in tree:
                    tree.attach(w, u)
                    stack.append((w, iter(graph.adjacency[w])))
                    break
            else:
                stack.pop()
    return tree


def brute_force_is_dfs(graph: AdjacencyGraph, tree: DfsTree) -> bool:
    """Slow cross-check: ancestor sets by walking parent pointers."""
    def ancestors(v):
        out = set()
        while v != NONE:
            out.add(v)
            v = tree.parent[v]
        return out

    for u, v in graph.edges():
        if u not in tree or v not in tree:
            return False
        if u not in ancestors(v) and v not in ancestors(u):
            return False
    for v in range(graph.n):
        if v not in tree:
            return False
        p = tree.parent[v]
        if p != tree.root and v not in graph.adjacency[p]:
            return False
    return True
