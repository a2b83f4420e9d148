import io
import json
from types import SimpleNamespace

import pytest

from core.logger_helper import warning
from modules.logger.module import LoggerModule


class FakeRegistry:
    def __init__(self):
        self._services = {}

    async def register(self, name, func, version=None):
        self._services[name] = func

    async def unregister(self, name):
        self._services.pop(name, None)

    async def has_service(self, name):
        return name in self._services

    async def call(self, name, *args, **kwargs):
        func = self._services.get(name)
        if func is None:
            raise ValueError("service not found")
        return await func(*args, **kwargs)


def _runtime(level="WARNING", fmt="text"):
    return SimpleNamespace(
        service_registry=FakeRegistry(),
        config=SimpleNamespace(log_level=level, log_format=fmt),
    )


@pytest.mark.asyncio
async def test_register_registers_service():
    runtime = _runtime()
    await LoggerModule(runtime).register()
    assert await runtime.service_registry.has_service("logger.log")


@pytest.mark.asyncio
async def test_level_filter_and_text_format(capsys):
    runtime = _runtime(level="WARNING")
    await LoggerModule(runtime).register()

    await runtime.service_registry.call("logger.log", level="info", message="hidden")
    await runtime.service_registry.call(
        "logger.log", level="warning", message="deferred face", module="quadrangulate", passes=2
    )

    captured = capsys.readouterr()
    assert captured.out == ""
    assert "hidden" not in captured.err
    assert "[WARNING] [quadrangulate] deferred face (passes=2)" in captured.err


@pytest.mark.asyncio
async def test_json_format(capsys):
    runtime = _runtime(level="DEBUG", fmt="json")
    await LoggerModule(runtime).register()

    await runtime.service_registry.call(
        "logger.log", level="error", message="Pipeline finished", component="pipeline", status="fail"
    )

    event = json.loads(capsys.readouterr().err.strip())
    assert event == {
        "level": "ERROR",
        "message": "Pipeline finished",
        "module": "pipeline",
        "context": {"status": "fail"},
    }


@pytest.mark.asyncio
async def test_unknown_level_becomes_info():
    stream = io.StringIO()
    runtime = _runtime(level="INFO")
    await LoggerModule(runtime, stream=stream).register()

    await runtime.service_registry.call("logger.log", level="loud", message="x")
    assert stream.getvalue().startswith("[INFO] x")


@pytest.mark.asyncio
async def test_helper_falls_back_to_stderr(capsys):
    await warning(None, "no runtime", stage="layout")
    assert "[WARNING] no runtime (stage=layout)" in capsys.readouterr().err


@pytest.mark.asyncio
async def test_stop_unregisters():
    runtime = _runtime(level="ERROR")
    module = LoggerModule(runtime)
    await module.register()
    await module.stop()
    assert not await runtime.service_registry.has_service("logger.log")
