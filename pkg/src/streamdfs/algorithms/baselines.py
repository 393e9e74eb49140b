"""Baseline semi-streaming DFS algorithms.

``Simp`` adds, per pass, the unvisited vertex hanging lowest on the tree
and then follows a chain of remembered neighbours from it.  ``Imprv`` adds
one vertex to every unvisited component per pass, so each pass adds a
level.  Both keep O(n) edges.
"""

from __future__ import annotations

from array import array

from .. import kernels
from ..budget import BudgetLedger
from ..graph import NONE, DfsTree, artificial_root
from ..stream import EdgeStream
from .common import finish_report


def _ledger(n: int, k: int, ledger: BudgetLedger | None) -> BudgetLedger:
    return ledger if ledger is not None else BudgetLedger(n * k)


def run_simp(stream: EdgeStream, n: int, k: int = 1, ledger: BudgetLedger | None = None):
    """Simple DFS with the path heuristic; at most ``n`` passes."""
    ledger = _ledger(n, k, ledger)
    tree = DfsTree(n)
    r = artificial_root(n)
    level = tree.level
    unvisited = n
    nbr = [NONE] * n
    # vertices met in the first pass; the others have no edges at all
    touched = bytearray(n)
    first = True
    while True:
        best_x, best_y, best_lvl = NONE, NONE, -1
        held = 0
        for a, b in stream.read_pass():
            if first:
                touched[a] = touched[b] = 1
            la, lb = level[a], level[b]
            if la < 0 and lb < 0:
                # keep the latest unvisited neighbour; one slot per vertex
                if nbr[a] == NONE:
                    ledger.charge(1)
                    held += 1
                nbr[a] = b
                if nbr[b] == NONE:
                    ledger.charge(1)
                    held += 1
                nbr[b] = a
            elif la < 0 or lb < 0:
                x, y, lx = (a, b, la) if lb < 0 else (b, a, lb)
                if lx > best_lvl:
                    if best_y == NONE:
                        ledger.charge(1)
                        held += 1
                    best_x, best_y, best_lvl = x, y, lx
        if best_y == NONE:
            # no tree vertex other than r has an unvisited neighbour
            best_x = r
            best_y = next(v for v in range(n) if level[v] < 0) if unvisited else NONE
        if best_y != NONE:
            tree.attach(best_y, best_x)
            unvisited -= 1
            cur = best_y
            while nbr[cur] != NONE and level[nbr[cur]] < 0:
                nxt = nbr[cur]
                tree.attach(nxt, cur)
                unvisited -= 1
                cur = nxt
        if first:
            for v in range(n):
                if not touched[v] and level[v] < 0:
                    tree.attach(v, r)
                    unvisited -= 1
            first = False
        ledger.release(held)
        for v in range(n):
            nbr[v] = NONE
        if unvisited == 0:
            break
    return tree, finish_report("simp", k, n, stream, ledger, tree)


def run_imprv(stream: EdgeStream, n: int, k: int = 1, ledger: BudgetLedger | None = None):
    """One new vertex per unvisited component per pass, attached by its lowest edge.

    Per pass a union-find over unvisited vertices tracks components, and
    each class keeps its lowest edge to the tree: deepest tree endpoint,
    ties to the earliest edge.  The synthesized root edge (r, v) counts as
    arriving just before v first shows up in the pass, so a class with no
    other tree neighbour hangs from r the member streamed first (the
    smallest id if none appears).  Only those lowest edges are stored.
    """
    ledger = _ledger(n, k, ledger)
    tree = DfsTree(n)
    r = artificial_root(n)
    level = tree.level
    find, union = kernels.uf_find, kernels.uf_union
    remaining = list(range(n))
    stream_len = len(stream)
    while remaining:
        parent = array("q", range(n))
        size = array("q", [1]) * n
        # per class root: lowest edge as (level, -seq, x, y)
        low: dict[int, tuple[int, int, int, int]] = {}
        late = len(remaining) + stream_len
        for i, v in enumerate(remaining):
            low[v] = (0, -(late + i), r, v)
        ledger.charge(len(remaining))
        held = len(remaining)
        seen = bytearray(n)
        seq = 0
        for a, b in stream.read_pass():
            seq += 1
            la, lb = level[a], level[b]
            if la < 0 and not seen[a]:
                seen[a] = 1
                ra = find(parent, a)
                if low[ra][0] == 0 and low[ra][1] < -seq:
                    low[ra] = (0, -seq, r, a)
            if lb < 0 and not seen[b]:
                seen[b] = 1
                rb = find(parent, b)
                if low[rb][0] == 0 and low[rb][1] < -seq:
                    low[rb] = (0, -seq, r, b)
            if la < 0 and lb < 0:
                ra, rb = find(parent, a), find(parent, b)
                if ra == rb:
                    continue
                keep = union(parent, size, ra, rb)
                gone = rb if keep == ra else ra
                low[keep] = max(low[keep], low.pop(gone))
                ledger.release(1)
                held -= 1
            elif la < 0 or lb < 0:
                x, y, lx = (a, b, la) if lb < 0 else (b, a, lb)
                ry = find(parent, y)
                cand = (lx, -seq, x, y)
                if cand > low[ry]:
                    low[ry] = cand
        for _, _, x, y in sorted(low.values(), key=lambda t: -t[1]):
            tree.attach(y, x)
        ledger.release(held)
        remaining = [v for v in remaining if level[v] < 0]
    if stream.passes_used() == 0:
        for _ in stream.read_pass():
            break
    return tree, finish_report("imprv", k, n, stream, ledger, tree)
