"""Compare the compiled kernels with the pure-Python fallback.

Each backend runs in its own interpreter because the choice is made at
import time.  Usage::

    python3 benchmarks/bench_kernels.py [--n 2000] [--repeat 3]
"""

from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys

_WORKER = r"""
import json, random, sys, timeit
from array import array
import streamdfs
from streamdfs import kernels
from streamdfs.algorithms import AlgoConfig, run
from streamdfs.generators import gen_gnm
from streamdfs.stream import EdgeStream

n, repeat = int(sys.argv[1]), int(sys.argv[2])
rng = random.Random(7)
parent = array("q", [-1] + [rng.randrange(i) for i in range(1, n)])
level = array("q", [0] * n)
for v in range(1, n):
    level[v] = level[parent[v]] + 1
pairs = [(rng.randrange(n), rng.randrange(n)) for _ in range(20000)]

def lca_loop():
    for a, b in pairs:
        kernels.lca(parent, level, a, b)

def uf_loop():
    uf, size = array("q", range(n)), array("q", [1] * n)
    for a, b in pairs:
        kernels.uf_union(uf, size, a, b)

edges = gen_gnm(n, 5 * n, 3)
def algo(name, k):
    return lambda: run(AlgoConfig.from_name(name, k), EdgeStream(n, edges), n)

cases = {"lca x20000": lca_loop, "union-find x20000": uf_loop,
         "imprv k=1": algo("imprv", 1), "kpathN k=2": algo("kpathN", 2),
         "klevN k=2": algo("klevN", 2)}
out = {"backend": kernels.BACKEND}
for name, fn in cases.items():
    out[name] = min(timeit.repeat(fn, number=1, repeat=repeat))
print(json.dumps(out))
"""


def measure(pure: bool, n: int, repeat: int) -> dict:
    env = dict(os.environ)
    env.pop("STREAMDFS_PURE", None)
    if pure:
        env["STREAMDFS_PURE"] = "1"
    proc = subprocess.run([sys.executable, "-c", _WORKER, str(n), str(repeat)],
                          env=env, capture_output=True, text=True, check=True)
    return json.loads(proc.stdout)


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=2000)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    fast = measure(False, args.n, args.repeat)
    slow = measure(True, args.n, args.repeat)
    if fast["backend"] != "cython":
        print("compiled extension not built; both columns use pure Python", file=sys.stderr)
    print(f"{'case':<20}{fast['backend']:>10}{'python':>10}{'speedup':>9}")
    for key in fast:
        if key == "backend":
            continue
        print(f"{key:<20}{fast[key]:>9.3f}s{slow[key]:>9.3f}s{slow[key] / fast[key]:>8.2f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
