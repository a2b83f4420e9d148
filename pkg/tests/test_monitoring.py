import pytest

from core.config import Config
from core.pipeline import run_pipeline
from core.runtime import CoreRuntime
from modules.graph.io import parse_graph
from tests.samples import STAR_TEXT


@pytest.mark.asyncio
async def test_export_after_pipeline(runtime, hexagon):
    await run_pipeline(runtime, hexagon)
    text = await runtime.call("monitoring.export")

    assert 'segrt_pipeline_runs_total{status="pass"} 1.0' in text
    assert 'segrt_rounds_total{phase="stnumber"}' in text
    assert 'segrt_work_total{phase="layout"}' in text
    assert 'segrt_stage_seconds_count{stage="verify"} 1.0' in text


@pytest.mark.asyncio
async def test_rounds_counter_matches_report(runtime, c4):
    result = await run_pipeline(runtime, c4)
    module = runtime.module_manager.get_module("monitoring")

    for phase, stats in result.rounds.phases.items():
        assert module.rounds_total.labels(phase=phase)._value.get() == stats.rounds
        assert module.work_total.labels(phase=phase)._value.get() == stats.work


@pytest.mark.asyncio
async def test_failed_run_counted_as_error(runtime):
    with pytest.raises(Exception):
        await run_pipeline(runtime, parse_graph(STAR_TEXT))
    text = await runtime.call("monitoring.export")
    assert 'segrt_pipeline_runs_total{status="error"} 1.0' in text


@pytest.mark.asyncio
async def test_disabled_metrics_detach():
    async with CoreRuntime(Config(metrics_enabled=False)) as runtime:
        module = runtime.module_manager.get_module("monitoring")
        assert module is not None
        assert module._attached is False
        assert not await runtime.service_registry.has_service("monitoring.export")
