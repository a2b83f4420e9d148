"""
Анализ масштабирования раундов (numpy).

Две модели: rounds ≈ a·log2 n + b и rounds ≈ a·log2² n + b, обе
методом наименьших квадратов с R².
"""

from __future__ import annotations

from typing import Dict, List, Sequence, Tuple

import numpy as np

from modules.bench.model import BenchRecord, BenchSummary, ScalingFit

FIT_KINDS = ("log2", "log2sq")


def fit_scaling(ns: Sequence[int], rounds: Sequence[int], kind: str) -> ScalingFit:
    """
    Raises:
        ValueError: неизвестная модель или меньше двух точек
    """
    if kind not in FIT_KINDS:
        raise ValueError(f"kind must be one of {FIT_KINDS}, got: {kind!r}")
    if len(ns) < 2:
        raise ValueError(f"fit needs at least 2 points, got: {len(ns)}")
    x = np.log2(np.asarray(ns, dtype=float))
    if kind == "log2sq":
        x = x * x
    y = np.asarray(rounds, dtype=float)
    a, b = np.polyfit(x, y, 1)
    residual = float(np.sum((y - (a * x + b)) ** 2))
    total = float(np.sum((y - y.mean()) ** 2))
    r2 = 1.0 - residual / total if total > 0 else 1.0
    return ScalingFit(kind=kind, a=float(a), b=float(b), r2=r2)


def per_doubling(records: Sequence[BenchRecord]) -> List[Tuple[int, int]]:
    """Прирост total_rounds между соседними n, где n удваивается: [(n, rounds(n) − rounds(n/2))]."""
    by_n = {r.n: r.total_rounds for r in records}
    return [(n, by_n[n] - by_n[n // 2]) for n in sorted(by_n) if n % 2 == 0 and n // 2 in by_n]


def work_ratios(records: Sequence[BenchRecord]) -> List[Tuple[int, float]]:
    """total_work / (n·log2 n)."""
    return [(r.n, r.total_work / (r.n * float(np.log2(r.n)))) for r in records]


def summarize(records: Sequence[BenchRecord]) -> BenchSummary:
    ordered = sorted(records, key=lambda r: r.n)
    fits: Dict[str, ScalingFit] = {}
    if len({r.n for r in ordered}) >= 2:
        ns = [r.n for r in ordered]
        total = [r.total_rounds for r in ordered]
        fits = {kind: fit_scaling(ns, total, kind) for kind in FIT_KINDS}
    return BenchSummary(
        records=list(ordered),
        fits=fits,
        increments=per_doubling(ordered),
        work_ratios=work_ratios(ordered),
    )
