"""Per-run result record shared by the algorithms and the harness."""

from __future__ import annotations

from dataclasses import asdict, dataclass, fields

CSV_FIELDS = ("dataset", "n", "m", "algo", "k", "seed", "passes",
              "peak_stored_edges", "height", "valid")


@dataclass
class RunReport:
    algo: str
    k: int
    n: int
    m: int
    passes: int
    peak_stored_edges: int
    height: int
    valid: bool | None = None
    dataset: str = ""
    seed: int | None = None

    def row(self) -> dict:
        d = asdict(self)
        return {f: ("" if d[f] is None else d[f]) for f in CSV_FIELDS}


def report_fields() -> list[str]:
    return [f.name for f in fields(RunReport)]
