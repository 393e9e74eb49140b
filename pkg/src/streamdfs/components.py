"""Unvisited components, their spanning trees, and splitting after a path."""

from __future__ import annotations

from array import array
from dataclasses import dataclass, field
from itertools import count
from typing import Iterable, Mapping, Sequence

from . import kernels
from .budget import BudgetLedger
from .graph import NONE, Edge

VISITED = -1

_ids = count()


class DisconnectedFromPath(RuntimeError):
    """A residual component had no edge back to the path it was cut from."""


class UnionFind:
    """Union by size with path compression over ids ``0..n-1``."""

    def __init__(self, n: int):
        self.parent = array("q", range(n))
        self.size = array("q", [1]) * n

    def find(self, x: int) -> int:
        return kernels.uf_find(self.parent, x)

    def union(self, a: int, b: int) -> bool:
        return kernels.uf_union(self.parent, self.size, a, b) >= 0

    def classes(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {}
        for v in range(len(self.parent)):
            out.setdefault(self.find(v), []).append(v)
        return out


def spanning_tree_of_merges(uf: UnionFind, merges: Iterable[Edge]) -> list[Edge]:
    """Edges of ``merges`` that joined two classes, in processing order."""
    return [(a, b) for a, b in merges if uf.union(a, b)]


def orient_tree(root: int, edges: Iterable[Edge]) -> list[tuple[int, int]]:
    """Direct undirected tree edges away from ``root``; returns (parent, child) in BFS order."""
    adj: dict[int, list[int]] = {}
    for a, b in edges:
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    out = []
    seen = {root}
    frontier = [root]
    for u in frontier:
        for w in adj.get(u, ()):
            if w not in seen:
                seen.add(w)
                out.append((u, w))
                frontier.append(w)
    return out


def local_dfs(root: int, edges: Iterable[Edge]) -> tuple[dict[int, int], dict[int, int], list[int]]:
    """Stack DFS over a stored edge set, children in adjacency insertion order.

    Returns ``(parent, level, preorder)``; ``parent[root]`` is ``NONE``.
    """
    adj: dict[int, list[int]] = {root: []}
    for a, b in edges:
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    parent = {root: NONE}
    level = {root: 0}
    order = [root]
    stack = [(root, iter(adj[root]))]
    while stack:
        u, it = stack[-1]
        for w in it:
            if w not in parent:
                parent[w] = u
                level[w] = level[u] + 1
                order.append(w)
                stack.append((w, iter(adj[w])))
                break
        else:
            stack.pop()
    return parent, level, order


@dataclass
class Component:
    """A connected piece of the unvisited graph.

    ``tree`` holds T_C as (parent, child) pairs directed away from ``root``.
    ``attach`` is the vertex of the global tree the root will hang from;
    ``NONE`` only for a component rooted at the artificial root.
    ``size`` counts graph vertices, so the artificial root is excluded.
    """

    vertices: list[int]
    root: int
    tree: list[tuple[int, int]]
    attach: int = NONE
    size: int = 0
    buffered: list[Edge] = field(default_factory=list)
    id: int = field(default_factory=lambda: next(_ids))

    def __post_init__(self) -> None:
        if not self.size:
            self.size = len(self.vertices)


def route_edge(comp_of: Sequence[int], e: Edge) -> int:
    """Component id holding both endpoints, or ``VISITED`` if either is in T."""
    cu = comp_of[e[0]]
    cv = comp_of[e[1]]
    if cu == VISITED or cv == VISITED:
        return VISITED
    assert cu == cv, f"edge {e} joins components {cu} and {cv}"
    return cu


class PathSplit:
    """Residual components of C minus a path P, computed from an edge feed.

    Feed every edge of C (T_C first, then buffered edges, then the rest of
    the pass).  Edges between residual vertices drive a union-find whose
    union edges become the residual spanning trees; edges from a residual
    vertex to P compete for the class's lowest edge, i.e. the one whose P
    endpoint is deepest, ties to the earliest fed.  Union edges and the
    current lowest edges are charged to ``ledger``.
    """

    def __init__(self, residual: Sequence[int], path_level: Mapping[int, int],
                 ledger: BudgetLedger | None = None):
        self.residual = list(residual)
        self.index = {v: i for i, v in enumerate(self.residual)}
        self.path_level = path_level
        self.ledger = ledger
        r = len(self.residual)
        self.uf = UnionFind(r)
        self.tree: list[list[Edge] | None] = [[] for _ in range(r)]
        # per class root: (level, -seq, x, y) or None; larger tuple wins
        self.low: list[tuple[int, int, int, int] | None] = [None] * r
        self.seq = 0

    def _charge(self, c: int) -> None:
        if self.ledger is not None:
            self.ledger.charge(c)

    def _release(self, c: int) -> None:
        if self.ledger is not None:
            self.ledger.release(c)

    def feed(self, a: int, b: int) -> None:
        self.seq += 1
        ia = self.index.get(a)
        ib = self.index.get(b)
        if ia is not None and ib is not None:
            ra = self.uf.find(ia)
            rb = self.uf.find(ib)
            if ra == rb:
                return
            la, lb = self.low[ra], self.low[rb]
            if la is None or lb is None:
                # with two lowest edges the merge drops one, so the count is unchanged
                self._charge(1)
            root = kernels.uf_union(self.uf.parent, self.uf.size, ra, rb)
            other = rb if root == ra else ra
            ta, tb = self.tree[root], self.tree[other]
            if len(ta) < len(tb):
                ta, tb = tb, ta
            ta.extend(tb)
            ta.append((a, b))
            self.tree[root] = ta
            self.tree[other] = None
            la, lb = self.low[root], self.low[other]
            if la is not None and lb is not None:
                self.low[root] = max(la, lb)
            elif lb is not None:
                self.low[root] = lb
            self.low[other] = None
            return
        if ia is None and ib is None:
            return
        if ia is None:
            a, b = b, a
            ia = ib
        # a is residual, b should be on the path
        lvl = self.path_level.get(b)
        if lvl is None:
            return
        root = self.uf.find(ia)
        cand = (lvl, -self.seq, b, a)
        cur = self.low[root]
        if cur is None:
            self._charge(1)
            self.low[root] = cand
        elif cand > cur:
            self.low[root] = cand

    def feed_all(self, edges: Iterable[Edge]) -> None:
        for a, b in edges:
            self.feed(a, b)

    def finish(self) -> list[tuple[Component, Edge]]:
        """Residual components with their lowest edges ``(x, y)``, x on P, y the new root.

        The caller owns the returned spanning-tree edges in the ledger; the
        lowest edges are released here since they become edges of T.
        """
        groups: dict[int, list[int]] = {}
        for v in self.residual:
            groups.setdefault(self.uf.find(self.index[v]), []).append(v)
        out = []
        for root, verts in groups.items():
            low = self.low[root]
            if low is None:
                raise DisconnectedFromPath(f"component of {verts[0]} has no edge to the path")
            _, negseq, x, y = low
            self._release(1)
            comp = Component(verts, y, orient_tree(y, self.tree[root] or ()), attach=x)
            out.append((-negseq, comp, (x, y)))
        out.sort(key=lambda t: t[0])
        return [(c, e) for _, c, e in out]


def split_after_path(c: Component, path: Sequence[int], edges: Iterable[Edge],
                     path_level: Mapping[int, int] | None = None,
                     ledger: BudgetLedger | None = None) -> list[tuple[Component, Edge]]:
    """Components of ``c`` minus ``path`` and each one's lowest edge to the path.

    ``path_level`` defaults to the position along ``path``; pass the real
    levels in T when the path hangs below other vertices.
    """
    if path_level is None:
        path_level = {v: i for i, v in enumerate(path)}
    on_path = set(path)
    split = PathSplit([v for v in c.vertices if v not in on_path], path_level, ledger)
    split.feed_all(edges)
    return split.finish()
