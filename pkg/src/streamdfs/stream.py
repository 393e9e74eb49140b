"""Rewindable edge streams with pass accounting.

A stream delivers the same edge sequence on every pass.  A pass is counted
when reading starts at position 0, whether or not it is read to the end.
"""

from __future__ import annotations

import os
from operator import length_hint
from typing import Iterable, Iterator, Sequence

from .graph import Edge

END_OF_PASS = None


class StreamFormatError(ValueError):
    pass


def parse_edge_lines(lines: Iterable[str], source: str = "<edges>") -> tuple[int, list[Edge]]:
    """Parse whitespace-separated integer pairs, KONECT style.

    Lines starting with ``%`` or ``#`` and blank lines are skipped, tokens
    past the first two are ignored, and ids are shifted to 0-based when the
    smallest id seen is 1 or more.  Self-loops are dropped; parallel edges
    are kept.  Returns ``(n, edges)`` with ``n = max id + 1`` after shifting.
    """
    raw: list[tuple[int, int]] = []
    lo = None
    hi = -1
    for lineno, line in enumerate(lines, 1):
        s = line.strip()
        if not s or s[0] in "%#":
            continue
        tok = s.split()
        if len(tok) < 2:
            raise StreamFormatError(f"{source}:{lineno}: expected two vertex ids, got {s!r}")
        try:
            u, v = int(tok[0]), int(tok[1])
        except ValueError:
            raise StreamFormatError(f"{source}:{lineno}: non-integer vertex id in {s!r}") from None
        if u < 0 or v < 0:
            raise StreamFormatError(f"{source}:{lineno}: negative vertex id in {s!r}")
        raw.append((u, v))
        m = min(u, v)
        lo = m if lo is None else min(lo, m)
        hi = max(hi, u, v)
    shift = 1 if lo is not None and lo >= 1 else 0
    edges = [(u - shift, v - shift) for u, v in raw if u != v]
    return hi + 1 - shift if hi >= 0 else 0, edges


def read_edge_file(path: str | os.PathLike) -> tuple[int, list[Edge]]:
    with open(path) as fh:
        return parse_edge_lines(fh, str(path))


def write_edge_file(path: str | os.PathLike, n: int, edges: Iterable[Edge], one_based: bool = True) -> None:
    off = 1 if one_based else 0
    with open(path, "w") as fh:
        fh.write(f"% n={n}\n")
        for u, v in edges:
            fh.write(f"{u + off} {v + off}\n")


class EdgeStream:
    """Sequential, rewindable source of undirected edges.

    Use :meth:`next_edge` for edge-at-a-time access or :meth:`read_pass`
    for a whole pass.  Either way :attr:`passes_started` counts reads that
    begin at position 0.
    """

    def __init__(self, n: int, edges: Sequence[Edge], name: str = "memory"):
        self.n = n
        self.name = name
        self._edges = [e for e in edges if e[0] != e[1]]
        self._it = iter(self._edges)
        self._fresh = True
        self.passes_started = 0

    @classmethod
    def from_file(cls, path: str | os.PathLike, n: int | None = None) -> "EdgeStream":
        found, edges = read_edge_file(path)
        return cls(max(found, n or 0), edges, name=os.fspath(path))

    def __len__(self) -> int:
        return len(self._edges)

    @property
    def cursor(self) -> int:
        """Edges delivered so far in the current pass."""
        return len(self._edges) - length_hint(self._it)

    def _start_if_fresh(self) -> None:
        if self._fresh:
            self._fresh = False
            self.passes_started += 1

    def next_edge(self) -> Edge | None:
        """Next edge of the current pass, or ``END_OF_PASS`` once exhausted."""
        self._start_if_fresh()
        return next(self._it, END_OF_PASS)

    def rewind(self) -> None:
        self._it = iter(self._edges)
        self._fresh = True

    def read_pass(self) -> Iterator[Edge]:
        """Rewind and start a pass; the returned iterator yields its edges.

        The pass is counted on the call, so abandoning the iterator early
        still costs a pass.
        """
        self.rewind()
        self._start_if_fresh()
        return self._it

    def passes_used(self) -> int:
        return self.passes_started


def passes_used(stream: EdgeStream) -> int:
    return stream.passes_used()


def next_edge(stream: EdgeStream) -> Edge | None:
    return stream.next_edge()


def rewind(stream: EdgeStream) -> None:
    stream.rewind()
