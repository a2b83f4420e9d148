"""
CoreRuntime — ядро конвейера сегментных представлений.

Объединяет:
- EventBus (события стадий)
- ServiceRegistry (операции модулей)
- ModuleManager (встроенные модули)
- ParRuntime (исполнитель data-parallel шагов с учётом раундов)
"""

import asyncio
import time
from typing import Any, Dict, Optional

from core.config import Config
from core.event_bus import EventBus
from core.logger_helper import debug, warning
from core.module_manager import ModuleManager
from core.par_runtime import ParRuntime
from core.service_registry import ServiceRegistry


class CoreRuntime:
    """
    Главный класс runtime.

    Один экземпляр обслуживает одну сессию CLI; RoundReport копится в
    self.par и сбрасывается вызовом par.reset() между прогонами.
    """

    def __init__(self, config: Optional[Config] = None):
        """
        Args:
            config: конфигурация; по умолчанию Config() с проверкой
        """
        self.config = config if config is not None else Config()
        self.config.validate()

        self.event_bus = EventBus()
        self.service_registry = ServiceRegistry(default_timeout=self.config.service_call_timeout)
        self.module_manager = ModuleManager(self)
        self.par = ParRuntime(
            workers=self.config.workers,
            parallel_threshold=self.config.parallel_threshold,
        )

        self._running = False
        self._start_time: Optional[float] = None

    @property
    def is_running(self) -> bool:
        return self._running

    async def call(self, service_name: str, *args: Any, **kwargs: Any) -> Any:
        """Сокращение для service_registry.call."""
        return await self.service_registry.call(service_name, *args, **kwargs)

    async def start(self) -> None:
        """
        Зарегистрировать и запустить встроенные модули.

        Raises:
            RuntimeError: REQUIRED модуль не зарегистрирован или упал в start()
        """
        if self._running:
            return
        try:
            await self.module_manager.register_builtin_modules(self)
            self.module_manager.check_required_modules_registered()
            await self.module_manager.start_all()
        except Exception:
            try:
                await self.module_manager.stop_all()
            except Exception as stop_error:
                await warning(self, f"Ошибка при остановке модулей после ошибки старта: {stop_error}", component="runtime")
            raise
        self._running = True
        self._start_time = time.time()
        await debug(
            self,
            "Runtime started",
            component="runtime",
            modules=",".join(self.module_manager.list_modules()),
            workers=self.config.workers,
        )

    async def stop(self) -> None:
        """
        Остановить модули с таймаутом shutdown_timeout.

        Raises:
            asyncio.TimeoutError: модули не остановились вовремя
        """
        if not self._running:
            return
        timeout = self.config.shutdown_timeout
        try:
            await asyncio.wait_for(self.module_manager.stop_all(), timeout=timeout)
        except asyncio.TimeoutError:
            await warning(self, f"Timeout ({timeout}s) при остановке runtime", component="runtime")
            raise
        finally:
            self._running = False
            self.par.close()

    async def shutdown(self) -> None:
        await self.stop()
        self.module_manager.clear()
        await self.event_bus.clear()
        await self.service_registry.clear()

    async def __aenter__(self) -> "CoreRuntime":
        await self.start()
        return self

    async def __aexit__(self, *exc: Any) -> None:
        await self.shutdown()

    async def get_metrics(self) -> Dict[str, Any]:
        """Сводка runtime: модули, сервисы, раунды текущего отчёта."""
        return {
            "uptime": time.time() - self._start_time if self._start_time else 0,
            "modules": self.module_manager.list_modules(),
            "services": len(await self.service_registry.list_services()),
            "rounds": self.par.report.as_dict(),
        }
