"""Записи бенчмарка раундов."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

PHASES = ("quadrangulate", "stnumber", "layout")


@dataclass(frozen=True)
class BenchRecord:
    """
    Один прогон конвейера: раунды по фазам, работа, время.

    rounds содержит все фазы отчёта (в т.ч. graph/verify), total_rounds —
    их сумма.
    """

    n: int
    m: int
    rounds: Dict[str, int]
    total_rounds: int
    total_work: int
    seconds: float
    processor_bound: float
    seed: int = 0
    ok: bool = True

    def phase_rounds(self, phase: str) -> int:
        return self.rounds.get(phase, 0)


@dataclass(frozen=True)
class ScalingFit:
    """rounds ≈ a·f(n) + b; f — log2 n или log2² n."""

    kind: str
    a: float
    b: float
    r2: float

    def predict(self, n: int) -> float:
        x = math.log2(n)
        return self.a * (x * x if self.kind == "log2sq" else x) + self.b


@dataclass
class BenchSummary:
    records: List[BenchRecord]
    fits: Dict[str, ScalingFit] = field(default_factory=dict)
    increments: List[Tuple[int, int]] = field(default_factory=list)
    work_ratios: List[Tuple[int, float]] = field(default_factory=list)

    @property
    def max_increment(self) -> int:
        return max((d for _, d in self.increments), default=0)

    def to_table(self) -> str:
        head = ["n", "m"] + list(PHASES) + ["rounds", "work", "work/nlogn", "bound", "seconds"]
        rows = [" ".join(f"{h:>12}" for h in head)]
        ratios = dict(self.work_ratios)
        for r in self.records:
            cells = [r.n, r.m] + [r.phase_rounds(p) for p in PHASES] + [r.total_rounds, r.total_work]
            line = " ".join(f"{c:>12}" for c in cells)
            line += f" {ratios.get(r.n, 0.0):>12.3f} {r.processor_bound:>12.1f} {r.seconds:>12.3f}"
            rows.append(line)
        for fit in self.fits.values():
            rows.append(f"fit {fit.kind}: rounds = {fit.a:.3f}*f(n) + {fit.b:.3f}  R^2={fit.r2:.4f}")
        if self.increments:
            rows.append("per-doubling increments: " + " ".join(f"{n}:{d}" for n, d in self.increments))
        return "\n".join(rows) + "\n"

    def to_csv(self) -> str:
        head = ["n", "m", "seed"] + [f"rounds_{p}" for p in PHASES] + [
            "total_rounds",
            "total_work",
            "seconds",
            "processor_bound",
            "ok",
        ]
        lines = [",".join(head)]
        for r in self.records:
            cells = [r.n, r.m, r.seed] + [r.phase_rounds(p) for p in PHASES] + [
                r.total_rounds,
                r.total_work,
                f"{r.seconds:.6f}",
                f"{r.processor_bound:.3f}",
                int(r.ok),
            ]
            lines.append(",".join(str(c) for c in cells))
        return "\n".join(lines) + "\n"
