"""The kPath family: grow the DFS tree by one long path per component per pass.

Each pass buffers up to ``|V_C|(k_eff - 1)`` edges of every component.  A
component whose edges all fit is finished from its buffer.  Otherwise the
root-to-deepest path of a local DFS is appended to the tree and the rest
of the pass is spent splitting the component along that path.
"""

from __future__ import annotations

from array import array

from ..budget import BudgetLedger
from ..components import VISITED, Component, PathSplit, local_dfs
from ..graph import NONE, DfsTree, artificial_root, edge_key
from ..stream import EdgeStream
from .common import finish_report, spanning_pass
from .config import H1, H2, H3, AlgoConfig

BUFFER, SPLIT, DONE = 0, 1, 2


def k_opt(n: int, k: int, n_star: int) -> int:
    """Per-pass budget factor ``floor(n k / n*)``; ``k`` when nothing is unvisited."""
    if n_star <= 0:
        return k
    return (n * k) // n_star


class _CompPass:
    __slots__ = ("comp", "quota", "buf", "mode", "split", "path", "tree_keys")

    def __init__(self, comp: Component, quota: int, skip_tree: bool):
        self.comp = comp
        self.quota = quota
        self.buf: list = []
        self.mode = BUFFER
        self.split: PathSplit | None = None
        self.path: list[int] = []
        self.tree_keys = {edge_key(p, c) for p, c in comp.tree} if skip_tree else None


class KPathRun:
    """State of one kPath execution over a stream."""

    def __init__(self, config: AlgoConfig, stream: EdgeStream, n: int,
                 ledger: BudgetLedger | None = None):
        if config.family != "kpath":
            raise ValueError(f"not a kPath config: {config.name}")
        self.config = config
        self.stream = stream
        self.n = n
        self.k = config.k
        self.ledger = ledger if ledger is not None else BudgetLedger(n * config.k)
        self.tree = DfsTree(n)
        self.root = artificial_root(n)
        self.comp_of = array("q", [VISITED]) * (n + 1)
        self.comps: list[Component] = []
        self.k_history: list[int] = []

    # -- setup ---------------------------------------------------------------

    def start(self) -> None:
        n, r = self.n, self.root
        if self.config.has(H1):
            self.ledger.charge(n)
            star = [(r, v) for v in range(n)]
            self._register(Component([r, *range(n)], r, star, attach=NONE, size=n))
        else:
            for root, verts, tree in spanning_pass(self.stream, n, self.ledger):
                self._register(Component(verts, root, tree, attach=r))

    def _register(self, c: Component) -> None:
        if c.size == 1 and c.root != self.root:
            # a lone vertex has no edges left to wait for
            self.tree.attach(c.root, c.attach)
            return
        for v in c.vertices:
            self.comp_of[v] = c.id
        self.comps.append(c)

    # -- one pass --------------------------------------------------------------

    def run_pass(self) -> None:
        n_star = sum(c.size for c in self.comps)
        k_eff = k_opt(self.n, self.k, n_star) if self.config.has(H3) else self.k
        self.k_history.append(k_eff)
        skip_tree = self.config.has(H2)
        states = {c.id: _CompPass(c, c.size * (k_eff - 1), skip_tree) for c in self.comps}
        live = len(states)
        comp_of = self.comp_of
        ledger = self.ledger
        for a, b in self.stream.read_pass():
            cid = comp_of[a]
            if cid == VISITED or comp_of[b] != cid:
                continue
            st = states[cid]
            if st.mode == SPLIT:
                st.split.feed(a, b)
            elif st.mode == BUFFER:
                if st.tree_keys is not None and edge_key(a, b) in st.tree_keys:
                    continue
                if len(st.buf) < st.quota:
                    ledger.charge(1)
                    st.buf.append((a, b))
                    continue
                self._overflow(st, a, b)
                if st.mode == DONE:
                    live -= 1
                    if live == 0:
                        break
        self.comps = []
        for st in states.values():
            self._close(st)

    def _overflow(self, st: _CompPass, a: int, b: int) -> None:
        c = st.comp
        parent, level, order = local_dfs(c.root, c.tree + st.buf)
        deepest = c.root
        for v in order:
            if level[v] > level[deepest]:
                deepest = v
        path = []
        v = deepest
        while v != NONE:
            path.append(v)
            v = parent[v]
        path.reverse()
        T = self.tree
        if c.root not in T:
            T.attach(c.root, c.attach)
        for v in path[1:]:
            T.attach(v, parent[v])
        st.path = path
        on_path = set(path)
        residual = [v for v in c.vertices if v not in on_path]
        if not residual:
            self.ledger.release(len(c.tree) + len(st.buf))
            st.buf = []
            st.mode = DONE
            return
        split = PathSplit(residual, {v: T.level[v] for v in path}, self.ledger)
        release = self.ledger.release
        for p, q in c.tree:
            release(1)
            split.feed(p, q)
        for x, y in st.buf:
            release(1)
            split.feed(x, y)
        st.buf = []
        split.feed(a, b)
        st.split = split
        st.mode = SPLIT

    def _close(self, st: _CompPass) -> None:
        c = st.comp
        comp_of = self.comp_of
        if st.mode == BUFFER:
            parent, _, order = local_dfs(c.root, c.tree + st.buf)
            T = self.tree
            if c.root not in T:
                T.attach(c.root, c.attach)
            for v in order[1:]:
                T.attach(v, parent[v])
            self.ledger.release(len(c.tree) + len(st.buf))
            for v in c.vertices:
                comp_of[v] = VISITED
            return
        for v in st.path:
            comp_of[v] = VISITED
        if st.mode == SPLIT:
            for child, _ in st.split.finish():
                child.size = len(child.vertices)
                self._register(child)

    # -- driver ------------------------------------------------------------------

    def execute(self):
        self.start()
        while self.comps:
            self.run_pass()
        if self.stream.passes_used() == 0:
            # nothing to wait for, but reading the input is one pass
            for _ in self.stream.read_pass():
                break
        return self.tree, finish_report(self.config.name, self.k, self.n, self.stream,
                                        self.ledger, self.tree)


def kpath_pass(run: KPathRun) -> None:
    """Advance every live component of ``run`` by one pass."""
    run.run_pass()


def run_kpath(config: AlgoConfig, stream: EdgeStream, n: int,
              ledger: BudgetLedger | None = None):
    return KPathRun(config, stream, n, ledger).execute()
