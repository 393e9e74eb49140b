"""Experiment matrices: run algorithms over inputs, validate, and emit CSV rows."""

from __future__ import annotations

import csv
import io
import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from itertools import product
from typing import Iterable, Sequence

from .algorithms import AlgoConfig, run
from .budget import BudgetLedger
from .generators import GenSpec
from .graph import AdjacencyGraph
from .report import CSV_FIELDS, RunReport
from .stream import EdgeStream, read_edge_file
from .validation import check_dfs

log = logging.getLogger(__name__)


class InvalidRun(RuntimeError):
    """An algorithm produced a tree that is not a spanning DFS tree."""

    def __init__(self, report: RunReport, detail: str):
        super().__init__(f"{report.algo} k={report.k} on {report.dataset}: {detail}")
        self.report = report


class NondeterministicRun(RuntimeError):
    pass


@dataclass
class ExperimentSpec:
    inputs: list
    algorithms: list[str]
    ks: list[int]
    seeds: list[int] = field(default_factory=lambda: [0])
    repetitions: int = 1
    output: str | None = None
    trace_budget: str | None = None
    workers: int = 1

    def cells(self) -> list[tuple[object, str, int, int]]:
        for a in self.algorithms:
            AlgoConfig.from_name(a)
        if any(k < 1 for k in self.ks):
            raise ValueError("k values must be positive")
        if self.repetitions < 1:
            raise ValueError("repetitions must be at least 1")
        return list(product(self.inputs, self.algorithms, self.ks, self.seeds))


def load_input(item, seed: int) -> tuple[str, int, list]:
    """``(dataset label, n, edges)`` for a file path or a generator spec."""
    if isinstance(item, GenSpec):
        spec = replace(item, seed=seed)
        return spec.label, spec.n, spec.generate()
    path = os.fspath(item)
    if not os.path.exists(path):
        raise FileNotFoundError(path)
    n, edges = read_edge_file(path)
    return os.path.basename(path), n, edges


def run_cell(item, algo: str, k: int, seed: int, repetitions: int = 1,
             trace_path: str | None = None) -> RunReport:
    dataset, n, edges = load_input(item, seed)
    config = AlgoConfig.from_name(algo, k)
    graph = AdjacencyGraph.from_edges(n, edges)
    first = None
    for _ in range(repetitions):
        ledger = BudgetLedger(n * k, trace=trace_path is not None)
        tree, report = run(config, EdgeStream(n, edges, name=dataset), n, ledger)
        report.dataset = dataset
        report.seed = seed
        verdict = check_dfs(graph, tree)
        report.valid = verdict.ok
        if not verdict.ok:
            raise InvalidRun(report, f"spanning={verdict.is_spanning} offending={verdict.offending_edge}")
        if report.peak_stored_edges > n * k:
            raise InvalidRun(report, "peak stored edges above n*k")
        if first is None:
            first = report
            if trace_path is not None:
                ledger.write_trace(trace_path)
        elif (report.passes, report.height, report.peak_stored_edges) != (
                first.passes, first.height, first.peak_stored_edges):
            raise NondeterministicRun(f"{algo} k={k} on {dataset} differs between repetitions")
    return first


def _trace_name(base: str, index: int) -> str:
    root, ext = os.path.splitext(base)
    return f"{root}.{index}{ext or '.csv'}"


def _run_indexed(args):
    index, cell, repetitions, trace = args
    item, algo, k, seed = cell
    return index, run_cell(item, algo, k, seed, repetitions, trace)


def run_experiment(spec: ExperimentSpec) -> list[RunReport]:
    """Run every cell of ``spec``; rows come back in matrix order.

    Any invalid tree aborts the whole experiment with :class:`InvalidRun`.
    When ``spec.output`` is set the rows are also written there as CSV.
    """
    cells = spec.cells()
    jobs = []
    for i, cell in enumerate(cells):
        trace = _trace_name(spec.trace_budget, i) if spec.trace_budget else None
        jobs.append((i, cell, spec.repetitions, trace))
    results: list[RunReport | None] = [None] * len(cells)
    if spec.workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=spec.workers) as pool:
            for i, rep in pool.map(_run_indexed, jobs):
                results[i] = rep
    else:
        for job in jobs:
            i, rep = _run_indexed(job)
            results[i] = rep
    rows = [r for r in results if r is not None]
    if spec.output:
        write_csv(rows, spec.output)
    return rows


def csv_text(rows: Iterable[RunReport]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=CSV_FIELDS, lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow(r.row())
    return buf.getvalue()


def write_csv(rows: Sequence[RunReport], path: str | os.PathLike) -> None:
    with open(path, "w", newline="") as fh:
        fh.write(csv_text(rows))


def read_csv(path: str | os.PathLike) -> list[dict]:
    with open(path, newline="") as fh:
        return list(csv.DictReader(fh))


def reduction_percent(passes_old: int, passes_new: int) -> int:
    """Integer-floored percentage of passes saved."""
    if passes_old <= 0:
        raise ValueError("baseline pass count must be positive")
    return 100 * (passes_old - passes_new) // passes_old


@dataclass(frozen=True)
class Reduction:
    dataset: str
    family: str
    k: int
    seed: object
    passes_o: int
    passes_n: int
    percent: int


def _get(row, key):
    return row[key] if isinstance(row, dict) else getattr(row, key)


def improvement_summary(rows: Iterable) -> tuple[list[Reduction], dict[tuple[str, int], int]]:
    """Pair O and N variants on identical (dataset, k, seed) and compute reductions.

    Returns the per-pair reductions and, per ``(family, k)``, the floor of
    the mean of the per-pair integer percentages.  Rows missing their
    partner are skipped with a warning.  Accepts RunReports or CSV dicts.
    """
    table: dict[tuple, dict[str, int]] = {}
    for row in rows:
        algo = str(_get(row, "algo"))
        fam, var = algo[:-1].lower(), algo[-1].upper()
        if fam not in ("kpath", "klev") or var not in ("O", "N"):
            continue
        key = (str(_get(row, "dataset")), fam, int(_get(row, "k")), str(_get(row, "seed")))
        table.setdefault(key, {})[var] = int(_get(row, "passes"))
    pairs = []
    for (dataset, fam, k, seed), got in table.items():
        if "O" not in got or "N" not in got:
            log.warning("no O/N pair for %s %s k=%d seed=%s", dataset, fam, k, seed)
            continue
        pairs.append(Reduction(dataset, fam, k, seed, got["O"], got["N"],
                               reduction_percent(got["O"], got["N"])))
    by_k: dict[tuple[str, int], list[int]] = {}
    for p in pairs:
        by_k.setdefault((p.family, p.k), []).append(p.percent)
    averages = {key: sum(v) // len(v) for key, v in sorted(by_k.items())}
    return pairs, averages
