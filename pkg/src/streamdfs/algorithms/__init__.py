"""Streaming DFS algorithms and the single entry point :func:`run`."""

from __future__ import annotations

from ..budget import BudgetLedger
from ..stream import EdgeStream
from .baselines import run_imprv, run_simp
from .config import ALL_ALGOS, H1, H2, H3, MARKS, AlgoConfig, ConfigError, parse_algo_list
from .klev import KLevRun, advance_broomstick, klev_pass, run_klev
from .kpath import KPathRun, k_opt, kpath_pass, run_kpath


def run(config: AlgoConfig, stream: EdgeStream, n: int | None = None,
        ledger: BudgetLedger | None = None):
    """Execute ``config`` over ``stream``; returns ``(DfsTree, RunReport)``."""
    if n is None:
        n = stream.n
    if ledger is None:
        ledger = BudgetLedger(n * config.k)
    if config.family == "kpath":
        return run_kpath(config, stream, n, ledger)
    if config.family == "klev":
        return run_klev(config, stream, n, ledger)
    if config.family == "simp":
        return run_simp(stream, n, config.k, ledger)
    return run_imprv(stream, n, config.k, ledger)


__all__ = [
    "ALL_ALGOS", "AlgoConfig", "ConfigError", "H1", "H2", "H3", "KLevRun", "KPathRun",
    "MARKS", "advance_broomstick", "k_opt", "klev_pass", "kpath_pass", "parse_algo_list",
    "run", "run_imprv", "run_klev", "run_kpath", "run_simp",
]
