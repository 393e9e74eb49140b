"""Core graph and DFS-tree types.

Vertex ids of an input graph are dense in ``[0, n)``.  The artificial root
that turns a DFS forest into a single tree always gets id ``n``.
"""

from __future__ import annotations

from array import array
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from . import kernels

Edge = tuple[int, int]

NONE = -1


def artificial_root(n: int) -> int:
    return n


def edge_key(u: int, v: int) -> Edge:
    """Canonical (min, max) form of an undirected edge."""
    return (u, v) if u < v else (v, u)


class DfsTree:
    """A rooted tree over vertex ids ``0..n`` (``n`` is the artificial root).

    Vertices are added top-down with :meth:`attach`; levels are stored, not
    recomputed.  ``children[v]`` keeps insertion order.
    """

    def __init__(self, n: int, root: int | None = None):
        self.n = n
        self.root = artificial_root(n) if root is None else root
        slots = n + 1
        self.parent = array("q", [NONE]) * slots
        self.level = array("q", [NONE]) * slots
        self.children: list[list[int]] = [[] for _ in range(slots)]
        self.size = 1
        self.level[self.root] = 0

    def __contains__(self, v: int) -> bool:
        return 0 <= v < len(self.level) and self.level[v] >= 0

    def __len__(self) -> int:
        return self.size

    def attach(self, v: int, p: int) -> None:
        if self.level[p] < 0:
            raise KeyError(f"parent {p} not in tree")
        if self.level[v] >= 0:
            raise ValueError(f"vertex {v} already in tree")
        self.parent[v] = p
        self.level[v] = self.level[p] + 1
        self.children[p].append(v)
        self.size += 1

    def vertices(self) -> Iterator[int]:
        level = self.level
        return (v for v in range(len(level)) if level[v] >= 0)

    def edges(self) -> Iterator[Edge]:
        for v in self.vertices():
            p = self.parent[v]
            if p != NONE:
                yield (p, v)

    def _check(self, *vs: int) -> None:
        for v in vs:
            if v not in self:
                raise KeyError(f"vertex not in tree: {v}")

    def is_ancestor(self, a: int, d: int) -> bool:
        self._check(a, d)
        return bool(kernels.is_ancestor(self.parent, self.level, a, d))

    def lca(self, x: int, y: int) -> int:
        self._check(x, y)
        return int(kernels.lca(self.parent, self.level, x, y))

    def height(self) -> int:
        return max(self.level)

    def recomputed_levels(self) -> dict[int, int]:
        """Levels derived from parent pointers alone, by a walk from the root."""
        out = {self.root: 0}
        stack = [self.root]
        while stack:
            u = stack.pop()
            for c in self.children[u]:
                out[c] = out[u] + 1
                stack.append(c)
        return out

    def consistency_errors(self) -> list[str]:
        """Empty iff parent/children/level agree and every vertex hangs off the root."""
        errs = []
        derived = self.recomputed_levels()
        stored = {v: self.level[v] for v in self.vertices()}
        if derived != stored:
            errs.append("levels disagree with parent pointers or tree is disconnected")
        for v in self.vertices():
            p = self.parent[v]
            if v == self.root:
                if p != NONE:
                    errs.append("root has a parent")
            elif v not in self.children[p]:
                errs.append(f"{v} missing from children of {p}")
        n_child = sum(len(c) for c in self.children)
        if n_child != self.size - 1:
            errs.append("children lists and parent map differ in size")
        return errs


def is_ancestor(tree: DfsTree, a: int, d: int) -> bool:
    return tree.is_ancestor(a, d)


def lca(tree: DfsTree, x: int, y: int) -> int:
    return tree.lca(x, y)


def tree_height(tree: DfsTree) -> int:
    return tree.height()


@dataclass
class AdjacencyGraph:
    """In-memory undirected graph used by the oracle and the checker."""

    n: int
    adjacency: list[list[int]] = field(default_factory=list)
    m: int = 0

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "AdjacencyGraph":
        adj: list[list[int]] = [[] for _ in range(n)]
        m = 0
        for u, v in edges:
            if u == v:
                continue
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) outside [0, {n})")
            adj[u].append(v)
            adj[v].append(u)
            m += 1
        return cls(n, adj, m)

    def edges(self) -> Iterator[Edge]:
        for u, nbrs in enumerate(self.adjacency):
            for v in nbrs:
                if u < v:
                    yield (u, v)
