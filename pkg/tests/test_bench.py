"""
Тесты бенчмарка: подгонка масштабирования и прогон по размерам.
"""

import math

import pytest

from modules.bench.analysis import fit_scaling, per_doubling, summarize, work_ratios
from modules.bench.model import BenchRecord


def _record(n, total_rounds, total_work=0):
    return BenchRecord(
        n=n,
        m=2 * n - 4,
        rounds={"quadrangulate": total_rounds},
        total_rounds=total_rounds,
        total_work=total_work,
        seconds=0.0,
        processor_bound=0.0,
    )


def test_fit_log2_recovers_line():
    ns = [16, 32, 64, 128, 256]
    rounds = [3 * math.log2(n) + 5 for n in ns]
    fit = fit_scaling(ns, rounds, "log2")
    assert fit.a == pytest.approx(3.0)
    assert fit.b == pytest.approx(5.0)
    assert fit.r2 == pytest.approx(1.0)
    assert fit.predict(1024) == pytest.approx(35.0)


def test_fit_log2sq():
    ns = [8, 16, 32, 64]
    rounds = [2 * math.log2(n) ** 2 + 1 for n in ns]
    fit = fit_scaling(ns, rounds, "log2sq")
    assert fit.a == pytest.approx(2.0)
    assert fit.predict(256) == pytest.approx(129.0)


def test_fit_rejects_bad_input():
    with pytest.raises(ValueError, match="kind"):
        fit_scaling([4, 8], [1, 2], "linear")
    with pytest.raises(ValueError, match="at least 2"):
        fit_scaling([4], [1], "log2")


def test_per_doubling_and_work_ratio():
    records = [_record(16, 40, 64), _record(32, 46, 160), _record(64, 53, 384), _record(100, 60, 1)]
    assert per_doubling(records) == [(32, 6), (64, 7)]
    ratios = dict(work_ratios(records))
    assert ratios[16] == pytest.approx(1.0)
    assert ratios[32] == pytest.approx(1.0)


def test_summarize_orders_and_renders():
    summary = summarize([_record(64, 53), _record(16, 40), _record(32, 46)])
    assert [r.n for r in summary.records] == [16, 32, 64]
    assert set(summary.fits) == {"log2", "log2sq"}
    assert summary.max_increment == 7
    table = summary.to_table()
    assert "per-doubling increments: 32:6 64:7" in table
    csv_lines = summary.to_csv().splitlines()
    assert csv_lines[0].startswith("n,m,seed,rounds_quadrangulate")
    assert len(csv_lines) == 4


def test_single_point_has_no_fit():
    assert summarize([_record(16, 40)]).fits == {}


async def test_sweep_service(runtime):
    summary = await runtime.call("bench.sweep", min_exp=3, max_exp=4, rate=0.0)
    assert [r.n for r in summary.records] == [8, 16]
    assert all(r.ok for r in summary.records)
    assert all(r.phase_rounds("quadrangulate") > 0 for r in summary.records)
    assert summary.records[0].processor_bound == pytest.approx(8 + 12 / 3)


async def test_sweep_rejects_exponents(runtime):
    with pytest.raises(ValueError, match="bench exponents"):
        await runtime.call("bench.sweep", min_exp=5, max_exp=4)
