"""
ServiceRegistry — реестр async-сервисов модулей.

Модули регистрируют операции под именами вида "<module>.<op>";
CLI и другие модули вызывают их по имени через call().
"""

import asyncio
import time
from abc import ABC, abstractmethod
from typing import Any, Awaitable, Callable, Dict, List, Optional, Tuple

from core.errors import SegmentRuntimeError
from core.event_bus import PIPELINE_FAILED, STAGE_COMPLETED, STAGE_STARTED


ServiceFunc = Callable[..., Awaitable[Any]]


class ServiceMiddleware(ABC):
    """
    Базовый класс для middleware сервисов.

    Хуки вызываются вокруг каждого вызова обёрнутого сервиса.
    """

    @abstractmethod
    async def before_call(self, service_name: str, args: tuple, kwargs: dict) -> None:
        """Перед вызовом сервиса."""

    @abstractmethod
    async def after_call(self, service_name: str, result: Any) -> None:
        """После успешного вызова."""

    @abstractmethod
    async def on_error(self, service_name: str, error: Exception) -> None:
        """При исключении; исключение пробрасывается дальше."""


class StageMiddleware(ServiceMiddleware):
    """
    Middleware стадии конвейера.

    - публикует pipeline.stage_started / stage_completed / failed
    - считает раунды и работу стадии по разнице RoundReport runtime.par
    - проставляет имя стадии в SegmentRuntimeError
    """

    def __init__(self, runtime: Any, stage: str):
        self.runtime = runtime
        self.stage = stage
        self._open: List[Tuple[float, int, int]] = []

    def _snapshot(self) -> Tuple[int, int]:
        par = getattr(self.runtime, "par", None)
        if par is None:
            return 0, 0
        return par.report.total_rounds, par.report.total_work

    async def _publish(self, event_type: str, data: Dict[str, Any]) -> None:
        bus = getattr(self.runtime, "event_bus", None)
        if bus is not None:
            await bus.publish(event_type, data)

    async def before_call(self, service_name: str, args: tuple, kwargs: dict) -> None:
        rounds, work = self._snapshot()
        self._open.append((time.perf_counter(), rounds, work))
        await self._publish(STAGE_STARTED, {"stage": self.stage, "service": service_name})

    async def after_call(self, service_name: str, result: Any) -> None:
        started, rounds0, work0 = self._open.pop() if self._open else (time.perf_counter(), 0, 0)
        rounds, work = self._snapshot()
        await self._publish(
            STAGE_COMPLETED,
            {
                "stage": self.stage,
                "service": service_name,
                "rounds": rounds - rounds0,
                "work": work - work0,
                "seconds": time.perf_counter() - started,
            },
        )

    async def on_error(self, service_name: str, error: Exception) -> None:
        if self._open:
            self._open.pop()
        if isinstance(error, SegmentRuntimeError):
            error.with_stage(self.stage)
        await self._publish(
            PIPELINE_FAILED,
            {"stage": self.stage, "service": service_name, "kind": type(error).__name__, "error": str(error)},
        )


class ServiceRegistry:
    """
    Реестр сервисов.

    Все вызовы защищены default_timeout, если он задан.
    """

    def __init__(self, default_timeout: Optional[float] = None):
        """
        Args:
            default_timeout: timeout вызова (секунды); None — без ограничения
        """
        self._services: Dict[str, ServiceFunc] = {}
        self._lock = asyncio.Lock()
        self._default_timeout = default_timeout

    async def register(self, service_name: str, func: ServiceFunc) -> None:
        """
        Зарегистрировать сервис.

        Raises:
            ValueError: имя уже занято
        """
        async with self._lock:
            if service_name in self._services:
                raise ValueError(f"Сервис '{service_name}' уже зарегистрирован")
            self._services[service_name] = func

    async def register_with_middleware(
        self,
        service_name: str,
        func: ServiceFunc,
        middleware: List[ServiceMiddleware],
    ) -> None:
        """Зарегистрировать сервис, обёрнутый цепочкой middleware."""

        async def wrapped(*args: Any, **kwargs: Any) -> Any:
            for m in middleware:
                await m.before_call(service_name, args, kwargs)
            try:
                result = await func(*args, **kwargs)
            except Exception as e:
                for m in middleware:
                    await m.on_error(service_name, e)
                raise
            for m in middleware:
                await m.after_call(service_name, result)
            return result

        await self.register(service_name, wrapped)

    async def unregister(self, service_name: str) -> None:
        async with self._lock:
            self._services.pop(service_name, None)

    async def call(self, service_name: str, *args: Any, **kwargs: Any) -> Any:
        """
        Вызвать сервис.

        Raises:
            ValueError: сервис не найден
            asyncio.TimeoutError: превышен default_timeout
        """
        async with self._lock:
            func = self._services.get(service_name)
        if func is None:
            raise ValueError(f"Сервис '{service_name}' не найден")
        if self._default_timeout is not None:
            return await asyncio.wait_for(func(*args, **kwargs), timeout=self._default_timeout)
        return await func(*args, **kwargs)

    async def has_service(self, service_name: str) -> bool:
        async with self._lock:
            return service_name in self._services

    async def list_services(self) -> List[str]:
        async with self._lock:
            return list(self._services.keys())

    async def clear(self) -> None:
        async with self._lock:
            self._services.clear()
