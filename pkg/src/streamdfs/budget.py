"""Accounting of stored graph edges against the ``n * k`` cap."""

from __future__ import annotations

import csv
import os


class BudgetFault(RuntimeError):
    """A ledger invariant was broken.  Always an algorithm bug, never recoverable."""


class BudgetExceeded(BudgetFault):
    pass


class DoubleRelease(BudgetFault):
    pass


class BudgetLedger:
    """Counts graph edges currently held by an algorithm.

    Spanning-tree edges of components, buffered edges, retained back edges
    and artificial-root edges are all charged.  Auxiliary arrays (levels,
    marks, union-find parents) are not.

    With ``trace=True`` every charge/release appends ``(event, current)``
    to :attr:`events`; :meth:`write_trace` dumps them as CSV.
    """

    def __init__(self, capacity: int, trace: bool = False):
        if capacity < 0:
            raise ValueError("capacity must be non-negative")
        self.capacity = capacity
        self.current = 0
        self.peak = 0
        self.trace = trace
        self.events: list[tuple[int, int]] = []
        self._n_events = 0

    def charge(self, count: int = 1) -> None:
        if count < 0:
            raise ValueError("charge count must be non-negative")
        if self.current + count > self.capacity:
            raise BudgetExceeded(
                f"budget exceeded: {self.current} + {count} > {self.capacity}"
            )
        self.current += count
        if self.current > self.peak:
            self.peak = self.current
        if self.trace:
            self._log()

    def release(self, count: int = 1) -> None:
        if count < 0:
            raise ValueError("release count must be non-negative")
        if count > self.current:
            raise DoubleRelease(f"double release: {count} > {self.current}")
        self.current -= count
        if self.trace:
            self._log()

    def room(self) -> int:
        return self.capacity - self.current

    def peak_usage(self) -> int:
        return self.peak

    def _log(self) -> None:
        self.events.append((self._n_events, self.current))
        self._n_events += 1

    def write_trace(self, path: str | os.PathLike) -> None:
        with open(path, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["event", "current"])
            w.writerows(self.events)


def charge(ledger: BudgetLedger, count: int) -> None:
    ledger.charge(count)


def release(ledger: BudgetLedger, count: int) -> None:
    ledger.release(count)


def peak_usage(ledger: BudgetLedger) -> int:
    return ledger.peak_usage()
