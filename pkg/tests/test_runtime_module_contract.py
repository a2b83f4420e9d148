"""
Контрактные тесты RuntimeModule: регистрация сервисов, привязка runtime,
middleware стадий, снятие сервисов при stop().
"""

from types import SimpleNamespace

import pytest

from core.event_bus import STAGE_COMPLETED, EventBus
from core.par_runtime import ParRuntime
from core.runtime import CoreRuntime
from core.runtime_module import RuntimeModule
from core.service_registry import ServiceRegistry, StageMiddleware


async def _echo(runtime, value):
    return (runtime.tag, value)


async def _stage(runtime, width):
    runtime.par.par_map(width, lambda i: i)
    return width


class EchoModule(RuntimeModule):
    stage_services = ("echo.run",)

    @property
    def name(self) -> str:
        return "echo"

    def services(self):
        return [("echo.value", _echo), ("echo.run", _stage)]

    def middleware(self):
        return [StageMiddleware(self.runtime, "echo")]


def _runtime():
    return SimpleNamespace(
        tag="rt", service_registry=ServiceRegistry(), event_bus=EventBus(), par=ParRuntime()
    )


@pytest.mark.asyncio
async def test_register_binds_runtime_first():
    runtime = _runtime()
    module = EchoModule(runtime)
    await module.register()
    assert await runtime.service_registry.call("echo.value", 7) == ("rt", 7)


@pytest.mark.asyncio
async def test_register_twice_is_noop():
    runtime = _runtime()
    module = EchoModule(runtime)
    await module.register()
    await module.register()
    assert sorted(await runtime.service_registry.list_services()) == ["echo.run", "echo.value"]


@pytest.mark.asyncio
async def test_only_stage_services_get_middleware():
    runtime = _runtime()
    completed = []

    async def on_completed(event_type, data):
        completed.append(data["service"])

    await runtime.event_bus.subscribe(STAGE_COMPLETED, on_completed)
    await EchoModule(runtime).register()

    await runtime.service_registry.call("echo.value", 1)
    await runtime.service_registry.call("echo.run", 3)
    assert completed == ["echo.run"]


@pytest.mark.asyncio
async def test_stop_unregisters_services():
    runtime = _runtime()
    module = EchoModule(runtime)
    await module.register()
    await module.stop()
    assert await runtime.service_registry.list_services() == []
    # stop без start безопасен
    await module.stop()


@pytest.mark.asyncio
async def test_runtime_fails_without_required_module(monkeypatch):
    runtime = CoreRuntime()

    original = runtime.module_manager._discover_module

    async def hide_layout(name):
        if name == "layout":
            return None
        return await original(name)

    monkeypatch.setattr(runtime.module_manager, "_discover_module", hide_layout)
    with pytest.raises(RuntimeError, match="layout"):
        await runtime.start()
    assert runtime.is_running is False
