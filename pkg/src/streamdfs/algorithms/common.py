"""Plumbing shared by the streaming algorithms."""

from __future__ import annotations

from ..budget import BudgetLedger
from ..components import UnionFind, orient_tree
from ..graph import DfsTree
from ..report import RunReport
from ..stream import EdgeStream


def spanning_pass(stream: EdgeStream, n: int, ledger: BudgetLedger) -> list[tuple[int, list[int], list[tuple[int, int]]]]:
    """One pass of union-find over the stream.

    Returns ``(root, vertices, tree)`` per connected component, roots being
    the smallest vertex of each class.  Union edges are charged.
    """
    uf = UnionFind(n)
    merges = []
    for a, b in stream.read_pass():
        if uf.union(a, b):
            ledger.charge(1)
            merges.append((a, b))
    by_class: dict[int, list[tuple[int, int]]] = {}
    for a, b in merges:
        by_class.setdefault(uf.find(a), []).append((a, b))
    out = []
    for rep, verts in sorted(uf.classes().items(), key=lambda kv: kv[1][0]):
        root = verts[0]
        out.append((root, verts, orient_tree(root, by_class.get(rep, ()))))
    return out


def finish_report(name: str, k: int, n: int, stream: EdgeStream, ledger: BudgetLedger,
                  tree: DfsTree) -> RunReport:
    return RunReport(algo=name, k=k, n=n, m=len(stream), passes=stream.passes_used(),
                     peak_stored_edges=ledger.peak_usage(), height=tree.height())

