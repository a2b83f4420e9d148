"""
Сервисы бенчмарка: прогон конвейера по n = 2^min … 2^max.

Проверка layout (квадратичная) по умолчанию выключена.
"""

import time
from typing import List, Optional

from core.logger_helper import info
from core.pipeline import run_pipeline
from modules.bench.analysis import summarize
from modules.bench.model import BenchRecord, BenchSummary
from modules.corpus.generator import generate
from modules.corpus.model import InstanceSpec


async def measure(runtime, spec: InstanceSpec, verify: bool = False) -> BenchRecord:
    instance = generate(spec)
    started = time.perf_counter()
    result = await run_pipeline(runtime, instance.graph, verify=verify)
    seconds = time.perf_counter() - started
    report = result.rounds
    return BenchRecord(
        n=instance.graph.n,
        m=instance.graph.m,
        rounds={name: stats.rounds for name, stats in report.phases.items()},
        total_rounds=report.total_rounds,
        total_work=report.total_work,
        seconds=seconds,
        processor_bound=report.reference_processor_bound or 0.0,
        seed=spec.seed,
        ok=result.ok,
    )


async def sweep(
    runtime,
    min_exp: Optional[int] = None,
    max_exp: Optional[int] = None,
    rate: Optional[float] = None,
    seed: Optional[int] = None,
    verify: bool = False,
) -> BenchSummary:
    """
    Раунды и работа по размерам 2^min_exp … 2^max_exp.

    Значения по умолчанию берутся из runtime.config.

    Raises:
        ValueError: min_exp > max_exp или экспоненты вне [2, 20]
    """
    config = runtime.config
    lo = config.bench_min_exp if min_exp is None else min_exp
    hi = config.bench_max_exp if max_exp is None else max_exp
    if not 2 <= lo <= hi <= 20:
        raise ValueError(f"bench exponents must satisfy 2 <= min <= max <= 20, got: {lo}, {hi}")
    chosen_rate = config.bench_rate if rate is None else rate
    chosen_seed = config.seed if seed is None else seed

    records: List[BenchRecord] = []
    for exp in range(lo, hi + 1):
        record = await measure(runtime, InstanceSpec(seed=chosen_seed, n=2**exp, rate=chosen_rate), verify=verify)
        await info(
            runtime,
            "Bench point measured",
            module="bench",
            n=record.n,
            rounds=record.total_rounds,
            work=record.total_work,
            seconds=round(record.seconds, 3),
        )
        records.append(record)
    return summarize(records)
