"""Incremental DFS-tree repair under edge insertion.

:class:`RetainedEdgeSet` keeps a rooted tree T_C together with a set of
retained non-tree edges; T_C plus those edges is H_C.  Inserting an edge
that is a cross edge re-hangs part of the tree below the deeper endpoint
(path reversal), then re-examines every retained edge that the move turned
into a cross edge, until T_C is a DFS tree of H_C again.  Moved vertices
only ever get deeper, which bounds the work.
"""

from __future__ import annotations

from array import array
from typing import Callable, Iterable, Sequence

from . import kernels
from .graph import NONE, Edge, edge_key

# on_displaced(w, v, entering_new) -> keep (w, v) in H_C?
DisplacedHook = Callable[[int, int, bool], bool]


def _keep_all(w: int, v: int, entering_new: bool) -> bool:
    return True


class RetainedEdgeSet:
    """Tree T_C and retained back edges of one component.

    The tree lives in ``parent``/``level``/``children``, which may be arrays
    shared with other components of the same run (vertex sets are
    disjoint).  ``changed`` collects every vertex whose level moved since
    the last :meth:`reset_changes`.
    """

    def __init__(self, root: int, tree_edges: Iterable[tuple[int, int]],
                 parent=None, level=None, children: list[list[int]] | None = None,
                 n_slots: int | None = None):
        tree_edges = list(tree_edges)
        if parent is None:
            top = max([root] + [max(p, c) for p, c in tree_edges])
            n_slots = max(n_slots or 0, top + 1)
            parent = array("q", [NONE]) * n_slots
            level = array("q", [NONE]) * n_slots
            children = [[] for _ in range(n_slots)]
        self.parent = parent
        self.level = level
        self.children = children
        self.root = root
        self.parent[root] = NONE
        self.level[root] = 0
        self.children[root] = []
        self.vertices = [root]
        self.members = {root}
        for p, c in tree_edges:
            self.parent[c] = p
            self.children[c] = []
        for p, c in tree_edges:
            self.children[p].append(c)
            self.vertices.append(c)
            self.members.add(c)
        self._relevel(root)
        self.nontree: dict[int, set[int]] = {}
        self.n_nontree = 0
        self.pending: list[Edge] = []
        self._pending_set: set[Edge] = set()
        self.changed: set[int] = set()
        self.restructures = 0
        # when a list, every restructure appends the vertices it moved
        self.moved_log: list[int] | None = None

    # -- structure queries -------------------------------------------------

    def __contains__(self, v: int) -> bool:
        return v in self.members

    def is_tree_edge(self, a: int, b: int) -> bool:
        return self.parent[a] == b or self.parent[b] == a

    def has_nontree(self, a: int, b: int) -> bool:
        s = self.nontree.get(a)
        return s is not None and b in s

    def is_back(self, a: int, b: int) -> bool:
        w = kernels.lca(self.parent, self.level, a, b)
        return w == a or w == b

    def upper(self, a: int, b: int) -> int:
        """The shallower endpoint of a back edge."""
        return a if self.level[a] <= self.level[b] else b

    def nontree_edges(self) -> list[Edge]:
        return [(a, b) for a, s in self.nontree.items() for b in s if a < b]

    def tree_edges(self) -> list[tuple[int, int]]:
        return [(self.parent[v], v) for v in self.vertices if v != self.root]

    def subtree(self, v: int) -> list[int]:
        out = [v]
        for u in out:
            out.extend(self.children[u])
        return out

    # -- retained-edge bookkeeping -----------------------------------------

    def add_nontree(self, a: int, b: int) -> None:
        self.nontree.setdefault(a, set()).add(b)
        self.nontree.setdefault(b, set()).add(a)
        self.n_nontree += 1

    def discard_nontree(self, a: int, b: int) -> None:
        self.nontree[a].discard(b)
        self.nontree[b].discard(a)
        self.n_nontree -= 1

    def is_pending(self, a: int, b: int) -> bool:
        return edge_key(a, b) in self._pending_set

    def reset_changes(self) -> None:
        self.changed = set()

    # -- the repair loop ---------------------------------------------------

    def _relevel(self, top: int) -> list[int]:
        """Recompute levels in the subtree of ``top``; returns its vertices."""
        level, children = self.level, self.children
        out = [top]
        for u in out:
            lu = level[u] + 1
            for c in children[u]:
                level[c] = lu
                out.append(c)
        return out

    def _restructure(self, x: int, y: int, w: int, v: int) -> list[int]:
        parent, level, children = self.parent, self.level, self.children
        children[w].remove(v)
        # reverse parent pointers along y .. v
        prev = NONE
        u = y
        while True:
            nxt = parent[u]
            if prev != NONE:
                children[u].remove(prev)
                children[prev].append(u)
            parent[u] = prev
            if u == v:
                break
            prev, u = u, nxt
        parent[y] = x
        children[x].append(y)
        level[y] = level[x] + 1
        moved = self._relevel(y)
        self.changed.update(moved)
        self.restructures += 1
        if self.moved_log is not None:
            self.moved_log.extend(moved)
        return moved

    def collect_new_cross_edges(self, moved: Sequence[int]) -> list[Edge]:
        """Retained edges touching ``moved`` that are now cross edges and not queued."""
        out = []
        seen = set()
        for a in moved:
            for b in self.nontree.get(a, ()):
                key = edge_key(a, b)
                if key in seen or key in self._pending_set:
                    continue
                seen.add(key)
                if not self.is_back(a, b):
                    out.append(key)
        return out

    def insert_edge(self, a: int, b: int, on_displaced: DisplacedHook = _keep_all) -> bool:
        """Add (a, b) to H_C and restore DFS validity of T_C.

        Returns False when the edge was already a back edge (no change to
        the tree).  A new back edge is *not* stored; the caller decides
        whether to keep it via :meth:`add_nontree`.  Tree edges displaced
        during repair are offered to ``on_displaced``; the hook returns
        whether the edge stays in H_C.
        """
        if a not in self or b not in self:
            raise KeyError(f"edge ({a}, {b}) has an endpoint outside the component")
        if self.is_back(a, b):
            return False
        key = edge_key(a, b)
        work = self.pending
        work.append(key)
        self._pending_set.add(key)
        new_edge = key
        budget = 4 * (self.n_nontree + len(self.vertices) + 1) ** 2
        steps = 0
        while work:
            e = work.pop()
            self._pending_set.discard(e)
            x, y = e
            if self.level[x] < self.level[y]:
                x, y = y, x
            w = kernels.lca(self.parent, self.level, x, y)
            if w == x or w == y:
                continue
            steps += 1
            if steps > budget:
                raise RuntimeError("incremental DFS failed to converge")
            entering_new = e == new_edge and not self.has_nontree(x, y)
            if not entering_new:
                self.discard_nontree(x, y)
            v = kernels.walk_up(self.parent, self.level, y, self.level[w] + 1)
            moved = self._restructure(x, y, w, v)
            for f in self.collect_new_cross_edges(moved):
                work.append(f)
                self._pending_set.add(f)
            # (w, v) is a back edge now; the hook may evict settled back edges
            if on_displaced(w, v, entering_new):
                self.add_nontree(w, v)
        return True

    def validity_errors(self) -> list[Edge]:
        """Retained edges that are not back edges (empty when T_C is a DFS tree of H_C)."""
        return [e for e in self.nontree_edges() if not self.is_back(*e)]


def insert_edge(state: RetainedEdgeSet, e: Edge, on_displaced: DisplacedHook = _keep_all) -> bool:
    """Insert ``e`` into H_C, storing it as a back edge when no repair was needed."""
    a, b = e
    if state.insert_edge(a, b, on_displaced):
        return True
    if not state.is_tree_edge(a, b) and not state.has_nontree(a, b):
        state.add_nontree(a, b)
    return False


def collect_new_cross_edges(state: RetainedEdgeSet, moved: Sequence[int] | None = None) -> list[Edge]:
    if moved is None:
        moved = state.vertices
    return state.collect_new_cross_edges(moved)
