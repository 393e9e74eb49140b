"""Seeded random graph generators.  The returned edge order is the stream order."""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import isqrt, log2

from .graph import Edge

MODELS = ("erdos-renyi-gnm", "power-law")


@dataclass(frozen=True)
class GenSpec:
    model: str
    n: int
    m: int
    seed: int = 0
    exponent: float = 3.0

    def __post_init__(self):
        if self.model not in MODELS:
            raise ValueError(f"unknown model {self.model!r}")
        if self.n < 0 or self.m < 0:
            raise ValueError("n and m must be non-negative")
        if self.m > self.n * (self.n - 1) // 2:
            raise ValueError(f"m={self.m} exceeds n(n-1)/2 for n={self.n}")

    @property
    def label(self) -> str:
        tag = "er" if self.model == "erdos-renyi-gnm" else "plaw"
        extra = f",exp={self.exponent:g}" if tag == "plaw" else ""
        return f"{tag}:n={self.n},m={self.m}{extra},seed={self.seed}"

    def generate(self) -> list[Edge]:
        if self.model == "erdos-renyi-gnm":
            return gen_gnm(self.n, self.m, self.seed)
        return gen_powerlaw(self.n, self.m, self.exponent, self.seed)


def _pair(i: int) -> Edge:
    # pairs enumerated as b = 1, 2, ...; a = 0 .. b-1
    b = (1 + isqrt(1 + 8 * i)) // 2
    while b * (b - 1) // 2 > i:
        b -= 1
    while (b + 1) * b // 2 <= i:
        b += 1
    return (i - b * (b - 1) // 2, b)


def gen_gnm(n: int, m: int, seed: int) -> list[Edge]:
    """``m`` distinct edges of G(n, m) in uniformly random order.

    Floyd's sampling draws the edge set without materializing all pairs,
    then a shuffle fixes the stream order.
    """
    total = n * (n - 1) // 2
    if m > total or m < 0:
        raise ValueError(f"m={m} not in [0, {total}] for n={n}")
    rng = random.Random(seed)
    chosen: set[int] = set()
    for j in range(total - m, total):
        t = rng.randint(0, j)
        chosen.add(j if t in chosen else t)
    edges = [_pair(i) for i in sorted(chosen)]
    rng.shuffle(edges)
    return edges


# (smoothing, CCDF tail exponent) measured at n = 1000, m = 5000, alpha = 1
_CALIBRATION = ((0.25, 2.31), (0.5, 2.71), (1.0, 3.15), (2.0, 3.91), (4.0, 4.70), (8.0, 5.82))


def smoothing_for(exponent: float) -> float:
    """Additive smoothing whose realized CCDF tail exponent is ``exponent`` at n = 1000.

    Interpolates the calibration table linearly in ``log2(smoothing)``,
    extrapolating from the end segments.
    """
    if exponent <= 0:
        raise ValueError("exponent must be positive")
    pts = [(log2(s), e) for s, e in _CALIBRATION]
    if exponent <= pts[0][1]:
        (x0, y0), (x1, y1) = pts[0], pts[1]
    elif exponent >= pts[-1][1]:
        (x0, y0), (x1, y1) = pts[-2], pts[-1]
    else:
        i = next(i for i in range(1, len(pts)) if pts[i][1] >= exponent)
        (x0, y0), (x1, y1) = pts[i - 1], pts[i]
    return 2.0 ** (x0 + (exponent - y0) * (x1 - x0) / (y1 - y0))


class _WeightTree:
    """Sampling proportional to mutable non-negative weights (a sum tree)."""

    def __init__(self, weights: list[float]):
        size = 1
        while size < max(1, len(weights)):
            size <<= 1
        self.size = size
        t = [0.0] * (2 * size)
        t[size:size + len(weights)] = weights
        for i in range(size - 1, 0, -1):
            t[i] = t[2 * i] + t[2 * i + 1]
        self.t = t

    def set(self, i: int, w: float) -> None:
        t = self.t
        j = self.size + i
        t[j] = w
        j >>= 1
        while j:
            t[j] = t[2 * j] + t[2 * j + 1]
            j >>= 1

    def sample(self, rng: random.Random) -> int:
        t = self.t
        x = rng.random() * t[1]
        j = 1
        while j < self.size:
            left = t[2 * j]
            if x < left:
                j = 2 * j
            else:
                x -= left
                j = 2 * j + 1
        return j - self.size


def gen_powerlaw(n: int, m: int, exponent: float = 3.0, seed: int = 0) -> list[Edge]:
    """``m`` distinct edges added one at a time between preferentially chosen vertices.

    Both endpoints of each new edge are drawn with probability proportional
    to ``degree + s``; draws that give a loop or a repeated edge are
    discarded.  The smoothing ``s`` comes from :func:`smoothing_for`, so the
    degree CCDF falls off with slope close to ``-exponent``.  Edges are
    returned in the order they were added.
    """
    if m > n * (n - 1) // 2:
        raise ValueError(f"m={m} exceeds n(n-1)/2 for n={n}")
    s = smoothing_for(exponent)
    rng = random.Random(seed)
    deg = [0] * n
    sampler = _WeightTree([s] * n)
    seen: set[Edge] = set()
    edges: list[Edge] = []
    stall = 0
    while len(edges) < m:
        a = sampler.sample(rng)
        b = sampler.sample(rng)
        key = (a, b) if a < b else (b, a)
        if a == b or key in seen:
            stall += 1
            if stall > 1000 + 20 * m:
                raise RuntimeError("power-law sampling stalled; graph too dense")
            continue
        seen.add(key)
        edges.append(key)
        for x in key:
            deg[x] += 1
            sampler.set(x, deg[x] + s)
    return edges
