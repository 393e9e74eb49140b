"""Semi-streaming depth-first search under a hard stored-edge budget.

The algorithms read an edge stream in passes and never hold more than
``n * k`` graph edges.  Start with :func:`streamdfs.algorithms.run`.
"""

from .algorithms import ALL_ALGOS, AlgoConfig, run
from .budget import BudgetExceeded, BudgetFault, BudgetLedger, DoubleRelease
from .generators import GenSpec, gen_gnm, gen_powerlaw
from .graph import AdjacencyGraph, DfsTree, artificial_root, is_ancestor, lca, tree_height
from .kernels import BACKEND
from .report import RunReport
from .stream import EdgeStream, StreamFormatError
from .validation import ValidityReport, check_dfs, check_edges, oracle_dfs

__version__ = "0.1.0"

__all__ = [
    "ALL_ALGOS", "AdjacencyGraph", "AlgoConfig", "BACKEND", "BudgetExceeded", "BudgetFault",
    "BudgetLedger", "DfsTree", "DoubleRelease", "EdgeStream", "GenSpec", "RunReport",
    "StreamFormatError", "ValidityReport", "artificial_root", "check_dfs", "check_edges", "gen_gnm",
    "gen_powerlaw", "is_ancestor", "lca", "oracle_dfs", "run", "tree_height",
]
