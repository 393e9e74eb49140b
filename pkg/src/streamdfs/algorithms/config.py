"""Algorithm identities and heuristic toggles."""

from __future__ import annotations

import re
from dataclasses import dataclass

H1 = "H1"        # artificial root gives the initial spanning tree
H2 = "H2"        # first level of budget optimization
H3 = "H3"        # second level of budget optimization
MARKS = "marks"  # commit unchanged subtrees below the safe level (kLev)

FAMILIES = ("simp", "imprv", "kpath", "klev")

VARIANTS = {
    "O": frozenset(),
    "1": frozenset({H1}),
    "2": frozenset({H1, H2}),
    "N": frozenset({H1, H2, H3}),
}

ALL_ALGOS = ("simp", "imprv",
             "kpathO", "kpath1", "kpath2", "kpathN",
             "klevO", "klev1", "klev2", "klevN")

_NAME = re.compile(r"^(kpath|klev)([O12N])$", re.IGNORECASE)


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class AlgoConfig:
    family: str
    k: int = 1
    heuristics: frozenset = frozenset()

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ConfigError(f"unknown family {self.family!r}")
        if not isinstance(self.k, int) or self.k < 1:
            raise ConfigError(f"k must be a positive integer, got {self.k!r}")
        unknown = set(self.heuristics) - {H1, H2, H3, MARKS}
        if unknown:
            raise ConfigError(f"unknown heuristics {sorted(unknown)}")

    @classmethod
    def from_name(cls, name: str, k: int = 1) -> "AlgoConfig":
        """Parse ``simp``, ``imprv``, ``kpathO`` ... ``klevN`` (case of the family ignored)."""
        low = name.strip()
        if low.lower() in ("simp", "imprv"):
            return cls(low.lower(), k)
        m = _NAME.match(low)
        if not m:
            raise ConfigError(f"unknown algorithm {name!r}")
        family = m.group(1).lower()
        variant = m.group(2).upper()
        hs = set(VARIANTS[variant])
        if family == "klev" and variant in ("2", "N"):
            hs.add(MARKS)
        return cls(family, k, frozenset(hs))

    def has(self, h: str) -> bool:
        return h in self.heuristics

    @property
    def variant(self) -> str:
        base = self.heuristics - {MARKS}
        for tag, hs in VARIANTS.items():
            if hs == base:
                return tag
        return "+".join(sorted(self.heuristics)) or "O"

    @property
    def name(self) -> str:
        if self.family in ("simp", "imprv"):
            return self.family
        return f"{self.family}{self.variant}"


def parse_algo_list(spec: str) -> list[str]:
    if spec.strip().lower() == "all":
        return list(ALL_ALGOS)
    names = [s.strip() for s in spec.split(",") if s.strip()]
    for s in names:
        AlgoConfig.from_name(s)
    return names
