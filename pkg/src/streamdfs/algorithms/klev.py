"""The kLev family: commit the top levels of each component tree per pass.

Every component keeps its spanning tree T_C plus retained back edges (H_C)
and repairs T_C with incremental DFS as edges stream in.  Edges whose
upper endpoint sits at or below the safe level ``L`` are dropped; this is
harmless because such an edge lies inside one subtree hanging at level
``L``, and those subtrees are recomputed in later passes.  At the end of
the pass the levels above ``L`` are appended to the output tree.

Variants O and 1 fix ``L = k`` and skip edges inside a hanging subtree
outright.  Variants 2 and N start with ``L`` unbounded and lower it only
when the per-component quota forces an eviction.  N also tracks the end
of the broomstick (the branch-free top path) and ignores every edge
touching it.
"""

from __future__ import annotations

import heapq
from array import array

from .. import kernels
from ..budget import BudgetLedger
from ..components import VISITED
from ..graph import NONE, DfsTree, artificial_root
from ..incremental import RetainedEdgeSet
from ..stream import EdgeStream
from .common import finish_report, spanning_pass
from .config import H1, H2, H3, MARKS, AlgoConfig

UNBOUNDED = 1 << 62


def advance_broomstick(tree, current: int) -> int:
    """Walk down from ``current`` while the vertex has exactly one child."""
    children = tree.children
    v = current
    while len(children[v]) == 1:
        v = children[v][0]
    return v


class LevComponent:
    """One unvisited component during a single kLev pass."""

    def __init__(self, run: "KLevRun", state: RetainedEdgeSet, size: int, attach: int,
                 tree_count: int):
        self.run = run
        self.state = state
        self.root = state.root
        self.size = size
        self.attach = attach
        self.tree_count = tree_count
        self.id = run.next_id()
        self.cap = size * run.k - tree_count
        cfg = run.config
        self.adaptive = cfg.has(H2)
        self.skip = not self.adaptive
        self.use_broom = cfg.has(H3)
        self.L = UNBOUNDED if self.adaptive else run.k
        self.end = self.root
        self.charged = 0
        self.heap: list[tuple[int, int, int]] = []
        self.evictions = 0
        state.moved_log = []
        state.reset_changes()
        if self.use_broom:
            self._advance()

    # -- retained-edge policy --------------------------------------------------

    def _sync(self) -> None:
        diff = self.state.n_nontree - self.charged
        if diff > 0:
            self.run.ledger.charge(diff)
        elif diff < 0:
            self.run.ledger.release(-diff)
        self.charged = self.state.n_nontree

    def _flush_moved(self) -> None:
        st = self.state
        log = st.moved_log
        if not log:
            return
        level, nontree, heap = st.level, st.nontree, self.heap
        for x in set(log):
            for b in nontree.get(x, ()):
                u = x if level[x] <= level[b] else b
                heapq.heappush(heap, (-level[u], x, b))
        log.clear()

    def _pop_deepest(self):
        """Deepest-upper-endpoint retained edge that is settled (not queued for repair)."""
        self._flush_moved()
        st = self.state
        level, heap = st.level, self.heap
        parked = []
        found = None
        while heap:
            neg, a, b = heapq.heappop(heap)
            if not st.has_nontree(a, b):
                continue
            u = a if level[a] <= level[b] else b
            if level[u] != -neg:
                continue
            if st.is_pending(a, b):
                parked.append((neg, a, b))
                continue
            found = (-neg, a, b)
            break
        for item in parked:
            heapq.heappush(heap, item)
        return found

    def admit(self, a: int, b: int) -> bool:
        """May the back edge (a, b) join H_C?  Evicts a deeper edge if the quota is full."""
        st = self.state
        level = st.level
        u = a if level[a] <= level[b] else b
        lu = level[u]
        if u == self.root or lu >= self.L:
            return False
        if self.use_broom and lu <= level[self.end]:
            return False
        while st.n_nontree >= self.cap:
            victim = self._pop_deepest()
            if victim is None or victim[0] <= lu:
                if victim is not None:
                    heapq.heappush(self.heap, (-victim[0], victim[1], victim[2]))
                self._lower(lu)
                return False
            lv, x, y = victim
            st.discard_nontree(x, y)
            self.evictions += 1
            self._lower(lv)
        return True

    def offer(self, a: int, b: int) -> bool:
        """Store the back edge (a, b) if :meth:`admit` allows; True if stored."""
        if not self.admit(a, b):
            self._sync()
            return False
        st = self.state
        level = st.level
        st.add_nontree(a, b)
        heapq.heappush(self.heap, (-min(level[a], level[b]), a, b))
        self._sync()
        return True

    def _lower(self, lev: int) -> None:
        if lev < self.L:
            self.L = max(1, lev)

    def _hook(self, w: int, v: int, entering_new: bool) -> bool:
        # the repair loop stores (w, v) itself; v has moved, so the heap
        # learns about the edge on the next flush
        return self.admit(w, v)

    def _advance(self) -> None:
        st = self.state
        old = self.end
        new = advance_broomstick(st, old)
        if new == old:
            return
        v = old
        while True:
            for b in list(st.nontree.get(v, ())):
                st.discard_nontree(v, b)
            if v == new:
                break
            v = st.children[v][0]
        self.end = new
        self._sync()

    # -- edge processing -------------------------------------------------------

    def process(self, a: int, b: int) -> None:
        st = self.state
        level = st.level
        if self.use_broom:
            le = level[self.end]
            if level[a] <= le or level[b] <= le:
                return
        if self.skip:
            L = self.L
            if level[a] >= L and level[b] >= L:
                parent = st.parent
                if kernels.walk_up(parent, level, a, L) == kernels.walk_up(parent, level, b, L):
                    return
        if st.parent[a] == b or st.parent[b] == a or st.has_nontree(a, b):
            return
        if st.insert_edge(a, b, self._hook):
            self._sync()
            self._flush_moved()
            if self.use_broom:
                self._advance()
        else:
            self.offer(a, b)

    # -- end of pass -----------------------------------------------------------

    def _unchanged(self, t: int) -> bool:
        changed = self.state.changed
        return not any(v in changed for v in self.state.subtree(t))

    def close(self) -> list[tuple[int, int]]:
        """Append the safe part to the output tree; returns the hanging subtree roots."""
        run = self.run
        st = self.state
        T = run.tree
        level, children = st.level, st.children
        L = self.L
        marks = run.config.has(MARKS)
        if self.root not in T:
            T.attach(self.root, self.attach)
        hanging = []
        queue = [self.root]
        for u in queue:
            for c in children[u]:
                if level[c] < L or (marks and self._unchanged(c)):
                    T.attach(c, u)
                    queue.append(c)
                else:
                    hanging.append((c, u))
        for v in queue:
            run.comp_of[v] = VISITED
        run.ledger.release(self.charged)
        self.charged = 0
        return hanging


class KLevRun:
    def __init__(self, config: AlgoConfig, stream: EdgeStream, n: int,
                 ledger: BudgetLedger | None = None):
        if config.family != "klev":
            raise ValueError(f"not a kLev config: {config.name}")
        self.config = config
        self.stream = stream
        self.n = n
        self.k = config.k
        self.ledger = ledger if ledger is not None else BudgetLedger(n * config.k)
        self.tree = DfsTree(n)
        self.root = artificial_root(n)
        self.comp_of = array("q", [VISITED]) * (n + 1)
        slots = n + 1
        self.parent = array("q", [NONE]) * slots
        self.level = array("q", [NONE]) * slots
        self.children: list[list[int]] = [[] for _ in range(slots)]
        self.comps: list[LevComponent] = []
        self._ids = 0
        self.levels_committed: list[int] = []

    def next_id(self) -> int:
        self._ids += 1
        return self._ids

    def _state(self, root: int, tree_edges) -> RetainedEdgeSet:
        return RetainedEdgeSet(root, tree_edges, self.parent, self.level, self.children)

    def _register(self, root: int, tree_edges: list[tuple[int, int]], size: int,
                  attach: int, tree_count: int) -> None:
        if size == 1 and root != self.root:
            self.tree.attach(root, attach)
            return
        comp = LevComponent(self, self._state(root, tree_edges), size, attach, tree_count)
        for v in comp.state.vertices:
            self.comp_of[v] = comp.id
        self.comps.append(comp)

    def start(self) -> None:
        n, r = self.n, self.root
        if self.config.has(H1):
            self.ledger.charge(n)
            self._register(r, [(r, v) for v in range(n)], n, NONE, n)
        else:
            for root, verts, tree in spanning_pass(self.stream, n, self.ledger):
                self._register(root, tree, len(verts), r, len(tree))

    def run_pass(self) -> None:
        by_id = {c.id: c for c in self.comps}
        comp_of = self.comp_of
        for a, b in self.stream.read_pass():
            cid = comp_of[a]
            if cid == VISITED or comp_of[b] != cid:
                continue
            by_id[cid].process(a, b)
        old = self.comps
        self.comps = []
        for comp in old:
            self.levels_committed.append(comp.L)
            hanging = comp.close()
            kept = 0
            for t, _ in hanging:
                verts = comp.state.subtree(t)
                edges = [(self.parent[v], v) for v in verts[1:]]
                kept += len(edges)
                self._register(t, edges, len(verts), self.parent[t], len(edges))
            self.ledger.release(comp.tree_count - kept)

    def execute(self):
        self.start()
        while self.comps:
            self.run_pass()
        if self.stream.passes_used() == 0:
            for _ in self.stream.read_pass():
                break
        return self.tree, finish_report(self.config.name, self.k, self.n, self.stream,
                                        self.ledger, self.tree)


def klev_pass(run: KLevRun) -> None:
    """Advance every live component of ``run`` by one pass."""
    run.run_pass()


def run_klev(config: AlgoConfig, stream: EdgeStream, n: int,
             ledger: BudgetLedger | None = None):
    return KLevRun(config, stream, n, ledger).execute()
