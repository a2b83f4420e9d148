import asyncio
from types import SimpleNamespace

import pytest

from core.errors import NotTwoConnected
from core.event_bus import PIPELINE_FAILED, STAGE_COMPLETED, STAGE_STARTED, EventBus
from core.par_runtime import ParRuntime
from core.service_registry import ServiceRegistry, StageMiddleware


@pytest.mark.asyncio
async def test_register_and_call():
    sr = ServiceRegistry()

    async def srv(a, b=0):
        return a + b

    await sr.register("sum", srv)
    assert await sr.has_service("sum")
    assert "sum" in await sr.list_services()
    assert await sr.call("sum", 2, b=3) == 5


@pytest.mark.asyncio
async def test_register_duplicate_raises():
    sr = ServiceRegistry()

    async def f():
        pass

    await sr.register("s", f)
    with pytest.raises(ValueError):
        await sr.register("s", f)


@pytest.mark.asyncio
async def test_call_missing_raises():
    with pytest.raises(ValueError):
        await ServiceRegistry().call("nope")


@pytest.mark.asyncio
async def test_unregister_and_clear():
    sr = ServiceRegistry()

    async def f():
        pass

    await sr.register("t", f)
    await sr.unregister("t")
    assert not await sr.has_service("t")
    await sr.register("a", f)
    await sr.clear()
    assert await sr.list_services() == []


@pytest.mark.asyncio
async def test_default_timeout():
    sr = ServiceRegistry(default_timeout=0.01)

    async def slow():
        await asyncio.sleep(1)

    await sr.register("slow", slow)
    with pytest.raises(asyncio.TimeoutError):
        await sr.call("slow")


def _stage_runtime():
    return SimpleNamespace(event_bus=EventBus(), par=ParRuntime())


async def _record(bus):
    events = []

    async def handler(event_type, data):
        events.append((event_type, data))

    for name in (STAGE_STARTED, STAGE_COMPLETED, PIPELINE_FAILED):
        await bus.subscribe(name, handler)
    return events


@pytest.mark.asyncio
async def test_stage_middleware_reports_rounds():
    runtime = _stage_runtime()
    events = await _record(runtime.event_bus)
    sr = ServiceRegistry()

    async def stage(width):
        runtime.par.par_map(width, lambda i: i)
        runtime.par.par_map(width, lambda i: i)
        return width

    await sr.register_with_middleware("demo.run", stage, [StageMiddleware(runtime, "demo")])
    assert await sr.call("demo.run", 3) == 3

    assert [e for e, _ in events] == [STAGE_STARTED, STAGE_COMPLETED]
    completed = events[1][1]
    assert completed["stage"] == "demo"
    assert completed["rounds"] == 2
    assert completed["work"] == 6
    assert completed["seconds"] >= 0


@pytest.mark.asyncio
async def test_stage_middleware_tags_errors():
    runtime = _stage_runtime()
    events = await _record(runtime.event_bus)
    sr = ServiceRegistry()

    async def failing():
        raise NotTwoConnected("cut vertex 3", cut_vertices=[3])

    await sr.register_with_middleware("demo.run", failing, [StageMiddleware(runtime, "quadrangulate")])
    with pytest.raises(NotTwoConnected) as exc:
        await sr.call("demo.run")

    assert exc.value.stage == "quadrangulate"
    assert str(exc.value) == "[quadrangulate] NotTwoConnected: cut vertex 3"
    failed = events[-1]
    assert failed[0] == PIPELINE_FAILED
    assert failed[1]["kind"] == "NotTwoConnected"


@pytest.mark.asyncio
async def test_stage_already_set_is_kept():
    runtime = _stage_runtime()
    sr = ServiceRegistry()

    async def failing():
        raise NotTwoConnected("tree", stage="stnumber")

    await sr.register_with_middleware("layout.run", failing, [StageMiddleware(runtime, "layout")])
    with pytest.raises(NotTwoConnected) as exc:
        await sr.call("layout.run")
    assert exc.value.stage == "stnumber"
