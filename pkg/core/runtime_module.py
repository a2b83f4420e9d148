"""
Базовый класс для встроенных модулей runtime (RuntimeModule).

Модуль — один домен конвейера (graph, quadrangulate, stnumber, ...):
- регистрируется в CoreRuntime через ModuleManager
- публикует свои операции как async-сервисы ServiceRegistry
- использует только Core API (service_registry, event_bus, par, config)

КОНТРАКТ LIFECYCLE:
- __init__ → register() → start() → stop()
- register() вызывается ровно один раз; ModuleManager защищает от двойной регистрации
- stop() безопасен, даже если start() не вызывался
"""

from abc import ABC, abstractmethod
from typing import Any, Awaitable, Callable, Iterable, List, Sequence, Tuple


ServiceSpec = Tuple[str, Callable[..., Awaitable[Any]]]


class RuntimeModule(ABC):
    """
    Базовый класс модуля runtime.

    Подклассы задают `name` и, как правило, `services()` — пары
    (имя сервиса, async-функция с runtime первым аргументом). Регистрация
    по умолчанию привязывает runtime к каждой функции.
    """

    # Сервисы-стадии конвейера: только они оборачиваются в middleware()
    stage_services: Tuple[str, ...] = ()

    def __init__(self, runtime: Any):
        """
        Args:
            runtime: экземпляр CoreRuntime
        """
        self.runtime = runtime
        self._registered: List[str] = []

    @property
    @abstractmethod
    def name(self) -> str:
        """Уникальное имя модуля (совпадает с именем пакета в modules/)."""

    def services(self) -> Iterable[ServiceSpec]:
        """Сервисы модуля. По умолчанию — нет."""
        return ()

    def middleware(self) -> Sequence[Any]:
        """ServiceMiddleware для сервисов из stage_services."""
        return ()

    async def register(self) -> None:
        """
        Регистрация сервисов модуля в service_registry.

        Повторный вызов ничего не делает.
        """
        if self._registered:
            return
        registry = self.runtime.service_registry
        chain = list(self.middleware())
        for service_name, func in self.services():
            bound = self._bind(func)
            if chain and service_name in self.stage_services:
                await registry.register_with_middleware(service_name, bound, chain)
            else:
                await registry.register(service_name, bound)
            self._registered.append(service_name)

    def _bind(self, func: Callable[..., Awaitable[Any]]) -> Callable[..., Awaitable[Any]]:
        async def _wrapper(*args: Any, **kwargs: Any) -> Any:
            return await func(self.runtime, *args, **kwargs)

        _wrapper.__name__ = getattr(func, "__name__", "service")
        return _wrapper

    async def start(self) -> None:
        """Запуск модуля; вызывается при runtime.start(). По умолчанию — no-op."""

    async def stop(self) -> None:
        """Остановка: отмена регистрации сервисов модуля."""
        registry = self.runtime.service_registry
        for service_name in self._registered:
            try:
                await registry.unregister(service_name)
            except Exception:
                pass
        self._registered.clear()
