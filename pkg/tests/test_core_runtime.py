import pytest

from core.config import Config
from core.runtime import CoreRuntime


@pytest.mark.asyncio
async def test_core_start_stop_shutdown():
    runtime = CoreRuntime(Config())
    assert runtime.is_running is False

    await runtime.start()
    assert runtime.is_running is True
    assert await runtime.service_registry.has_service("quadrangulate.run")

    await runtime.stop()
    assert runtime.is_running is False

    await runtime.shutdown()
    assert runtime.module_manager.list_modules() == []
    assert await runtime.service_registry.list_services() == []


@pytest.mark.asyncio
async def test_start_is_idempotent():
    async with CoreRuntime(Config()) as runtime:
        modules = runtime.module_manager.list_modules()
        await runtime.start()
        assert runtime.module_manager.list_modules() == modules


def test_invalid_config_rejected():
    with pytest.raises(ValueError, match="workers"):
        CoreRuntime(Config(workers=0))


@pytest.mark.asyncio
async def test_get_metrics(hexagon):
    async with CoreRuntime(Config()) as runtime:
        await runtime.call("quadrangulate.run", hexagon)
        metrics = await runtime.get_metrics()

    assert metrics["uptime"] >= 0
    assert "layout" in metrics["modules"]
    assert metrics["services"] > 10
    assert metrics["rounds"]["phases"]["quadrangulate"]["rounds"] > 0
