"""
Тесты для ModuleManager.
"""

import pytest

from core.config import Config
from core.module_manager import OPTIONAL_MODULES, REQUIRED_MODULES, ModuleManager
from core.runtime import CoreRuntime
from core.runtime_module import RuntimeModule


class MockModule(RuntimeModule):
    """Модуль-заглушка с флагами жизненного цикла."""

    def __init__(self, runtime, name="probe"):
        super().__init__(runtime)
        self._name = name
        self.registered = False
        self.started = False
        self.stopped = False

    @property
    def name(self) -> str:
        return self._name

    async def register(self) -> None:
        self.registered = True

    async def start(self) -> None:
        self.started = True

    async def stop(self) -> None:
        self.stopped = True


class FailingStart(MockModule):
    async def start(self) -> None:
        raise RuntimeError("start failed")


class FailingStop(MockModule):
    async def stop(self) -> None:
        raise RuntimeError("stop failed")


@pytest.mark.asyncio
async def test_register_module():
    manager = ModuleManager()
    module = MockModule(object(), "probe")

    await manager.register(module)

    assert manager.list_modules() == ["probe"]
    assert manager.get_module("probe") is module
    assert module.registered is True


@pytest.mark.asyncio
async def test_register_duplicate_raises():
    manager = ModuleManager()
    await manager.register(MockModule(object(), "probe"))
    with pytest.raises(ValueError, match="already registered"):
        await manager.register(MockModule(object(), "probe"))


@pytest.mark.asyncio
async def test_register_same_instance_is_ignored():
    manager = ModuleManager()
    module = MockModule(object(), "probe")
    await manager.register(module)
    await manager.register(module)
    assert len(manager.list_modules()) == 1


@pytest.mark.asyncio
async def test_unregister_and_clear():
    manager = ModuleManager()
    await manager.register(MockModule(object(), "a"))
    await manager.register(MockModule(object(), "b"))
    manager.unregister("a")
    assert manager.get_module("a") is None
    manager.clear()
    assert manager.list_modules() == []


@pytest.mark.asyncio
async def test_optional_start_failure_is_reported(capsys):
    manager = ModuleManager()
    first, broken, last = MockModule(object(), "one"), FailingStart(object(), "two"), MockModule(object(), "three")
    for module in (first, broken, last):
        await manager.register(module)

    await manager.start_all()

    assert first.started and last.started
    assert "two" in capsys.readouterr().err


@pytest.mark.asyncio
async def test_required_start_failure_raises():
    manager = ModuleManager()
    await manager.register(FailingStart(object(), "layout"))
    with pytest.raises(RuntimeError, match="layout"):
        await manager.start_all()


@pytest.mark.asyncio
async def test_stop_all_continues_after_error():
    manager = ModuleManager()
    first, broken, last = MockModule(object(), "one"), FailingStop(object(), "two"), MockModule(object(), "three")
    for module in (first, broken, last):
        await manager.register(module)
    await manager.stop_all()
    assert first.stopped and last.stopped


def test_missing_required_modules():
    manager = ModuleManager()
    with pytest.raises(RuntimeError, match="Required modules not registered"):
        manager.check_required_modules_registered()
    assert manager.get_required_modules() == REQUIRED_MODULES


@pytest.mark.asyncio
async def test_register_builtin_modules():
    runtime = CoreRuntime(Config())
    await runtime.start()
    try:
        modules = runtime.module_manager.list_modules()
        assert modules[0] == "logger"
        for name in REQUIRED_MODULES + OPTIONAL_MODULES:
            assert name in modules
        assert runtime.module_manager.get_module("stnumber").name == "stnumber"
    finally:
        await runtime.shutdown()


@pytest.mark.asyncio
async def test_monitoring_skipped_when_metrics_disabled():
    runtime = CoreRuntime(Config(metrics_enabled=False))
    await runtime.start()
    try:
        assert not await runtime.service_registry.has_service("monitoring.export")
        assert await runtime.service_registry.has_service("bench.sweep")
    finally:
        await runtime.shutdown()
