import itertools
import random

import pytest

from streamdfs.graph import DfsTree

# criterion number -> (passed, detail); filled by test_acceptance.py
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def random_graph(seed: int, n_lo: int = 2, n_hi: int = 64):
    rng = random.Random(seed)
    n = rng.randint(n_lo, n_hi)
    pairs = list(itertools.combinations(range(n), 2))
    m = rng.randint(0, len(pairs))
    edges = rng.sample(pairs, m)
    # random orientation so no algorithm can rely on u < v in the stream
    edges = [(b, a) if rng.random() < 0.5 else (a, b) for a, b in edges]
    return n, edges


def tree_from_parents(n: int, parent_of: dict[int, int]) -> DfsTree:
    """DfsTree over 0..n from a child -> parent map rooted at n."""
    tree = DfsTree(n)
    kids: dict[int, list[int]] = {}
    for c, p in parent_of.items():
        kids.setdefault(p, []).append(c)
    stack = [tree.root]
    while stack:
        u = stack.pop()
        for c in sorted(kids.get(u, ())):
            tree.attach(c, u)
            stack.append(c)
    return tree


@pytest.fixture
def rng():
    return random.Random(12345)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[num]
        terminalreporter.write_line(f"criterion {num}: {'PASS' if ok else 'FAIL'}  {detail}")
