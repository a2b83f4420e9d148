"""
Масштабирование раундов и работы на прогоне n = 2^8 … 2^14.

Тесты долгие: `pytest -m "not slow"` их пропускает.
"""

import math

import pytest

pytestmark = pytest.mark.slow

MIN_EXP, MAX_EXP = 8, 14

# прогон один на модуль: раунды детерминированы
_sweeps = {}


@pytest.fixture
async def summary(runtime):
    if "sweep" not in _sweeps:
        _sweeps["sweep"] = await runtime.call("bench.sweep", min_exp=MIN_EXP, max_exp=MAX_EXP, rate=0.1, seed=3)
    return _sweeps["sweep"]


async def test_sweep_covers_every_size(summary):
    assert [r.n for r in summary.records] == [2**k for k in range(MIN_EXP, MAX_EXP + 1)]
    assert all(r.ok for r in summary.records)


async def test_rounds_fit_log_squared(summary):
    fit = summary.fits["log2sq"]
    assert fit.r2 >= 0.98, summary.to_table()
    assert fit.a > 0


async def test_per_doubling_increment_stays_near_fit(summary):
    fit = summary.fits["log2sq"]
    for n, delta in summary.increments:
        # a·(log2² n − log2² (n/2)) = a·(2·log2 n − 1)
        expected = fit.a * (2 * math.log2(n) - 1)
        assert delta <= 1.1 * expected, f"n={n}: +{delta} rounds, fit gives {expected:.1f}\n{summary.to_table()}"


async def test_work_within_n_log_n(summary):
    ratios = dict(summary.work_ratios)
    c = max(ratio for n, ratio in ratios.items() if n <= 2 ** (MAX_EXP - 3))
    assert all(ratio <= 2 * c for ratio in ratios.values()), summary.to_table()
    for record in summary.records:
        assert record.total_work >= record.total_rounds
