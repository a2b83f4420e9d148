"""
ModuleManager — реестр встроенных модулей конвейера.

Модуль ищется как класс `<Name>Module` в пакете `modules.<name>`.
Запуск идёт в порядке BUILTIN_MODULES, остановка — в обратном, так что
logger поднимается первым и гаснет последним.

REQUIRED модули (стадии конвейера, граф, корпус) обязательны: без них runtime
не стартует. OPTIONAL (bench, monitoring) могут отсутствовать или падать.
"""

import importlib
import importlib.util
import sys
from dataclasses import dataclass
from typing import Any, Dict, Iterable, List, Optional, Tuple

from core.logger_helper import error as log_error
from core.runtime_module import RuntimeModule


@dataclass(frozen=True)
class ModuleSpec:
    name: str
    required: bool = True

    @property
    def class_name(self) -> str:
        return "".join(part.capitalize() for part in self.name.split("_")) + "Module"


BUILTIN_MODULES = (
    ModuleSpec("logger"),
    ModuleSpec("graph"),
    ModuleSpec("quadrangulate"),
    ModuleSpec("stnumber"),
    ModuleSpec("layout"),
    ModuleSpec("verifier"),
    ModuleSpec("corpus"),
    ModuleSpec("bench", required=False),
    ModuleSpec("monitoring", required=False),
)

REQUIRED_MODULES = [spec.name for spec in BUILTIN_MODULES if spec.required]
OPTIONAL_MODULES = [spec.name for spec in BUILTIN_MODULES if not spec.required]

Failure = Tuple[str, str]


def _raise_required(action: str, failures: Iterable[Failure]) -> None:
    failures = list(failures)
    if not failures:
        return
    names = [name for name, _ in failures]
    details = "\n".join(f"  - {name}: {reason}" for name, reason in failures)
    raise RuntimeError(f"Failed to {action} required modules: {names}\nErrors:\n{details}")


class ModuleManager:
    """Один экземпляр модуля на имя; порядок регистрации сохраняется."""

    def __init__(self, runtime: Optional[Any] = None):
        self._runtime = runtime
        self._modules: Dict[str, RuntimeModule] = {}

    async def _report(self, message: str, module_name: str) -> None:
        try:
            await log_error(self._runtime, message, component="module_manager", module=module_name)
        except Exception:
            print(f"[ModuleManager] {message}", file=sys.stderr)

    # --- реестр ----------------------------------------------------------

    async def register(self, module: RuntimeModule) -> None:
        """
        Добавить модуль и вызвать его register().

        Повторная регистрация того же экземпляра ничего не делает.

        Raises:
            ValueError: имя занято другим экземпляром
        """
        current = self._modules.get(module.name)
        if current is module:
            return
        if current is not None:
            raise ValueError(f"Module '{module.name}' is already registered; unregister() it first")
        self._modules[module.name] = module
        await module.register()

    def unregister(self, module_name: str) -> None:
        self._modules.pop(module_name, None)

    def get_module(self, module_name: str) -> Optional[RuntimeModule]:
        return self._modules.get(module_name)

    def list_modules(self) -> List[str]:
        return list(self._modules)

    def get_required_modules(self) -> List[str]:
        return list(REQUIRED_MODULES)

    def check_required_modules_registered(self) -> None:
        missing = [name for name in REQUIRED_MODULES if name not in self._modules]
        if missing:
            raise RuntimeError(f"Required modules not registered: {missing}; have {self.list_modules()}")

    def clear(self) -> None:
        self._modules.clear()

    # --- жизненный цикл --------------------------------------------------

    async def start_all(self) -> None:
        """
        Raises:
            RuntimeError: REQUIRED модуль упал в start()
        """
        failures: List[Failure] = []
        for name, module in list(self._modules.items()):
            try:
                await module.start()
            except Exception as e:
                if name in REQUIRED_MODULES:
                    failures.append((name, str(e)))
                else:
                    await self._report(f"Optional module '{name}' failed to start: {e}", name)
        _raise_required("start", failures)

    async def stop_all(self) -> None:
        """Остановка в обратном порядке; ошибка одного модуля не мешает остальным."""
        for name, module in reversed(list(self._modules.items())):
            try:
                await module.stop()
            except Exception as e:
                await self._report(f"Module '{name}' failed to stop: {e}", name)

    # --- встроенные модули -----------------------------------------------

    async def register_builtin_modules(self, runtime: Any) -> None:
        """
        Зарегистрировать BUILTIN_MODULES.

        Уже занятые имена пропускаются: тест может подставить свой модуль
        до start().

        Raises:
            RuntimeError: REQUIRED модуль не найден или не зарегистрировался
        """
        failures: List[Failure] = []
        for spec in BUILTIN_MODULES:
            if spec.name in self._modules:
                continue
            try:
                await self._register_builtin(runtime, spec)
            except Exception as e:
                if spec.required:
                    failures.append((spec.name, str(e)))
                else:
                    await self._report(f"Optional module '{spec.name}' failed to register: {e}", spec.name)
        _raise_required("register", failures)

    async def _discover_module(self, module_name: str) -> Optional[type]:
        """
        Класс модуля или None, если пакета или класса нет.

        Raises:
            RuntimeError: пакет не импортируется или класс не RuntimeModule
        """
        path = f"modules.{module_name}"
        if importlib.util.find_spec(path) is None:
            return None
        try:
            package = importlib.import_module(path)
        except ImportError as e:
            raise RuntimeError(f"Cannot import '{path}': {e}")
        cls = getattr(package, ModuleSpec(module_name).class_name, None)
        if cls is None:
            return None
        if not (isinstance(cls, type) and issubclass(cls, RuntimeModule)):
            raise RuntimeError(f"'{path}.{cls.__name__}' is not a RuntimeModule")
        return cls

    async def _register_builtin(self, runtime: Any, spec: ModuleSpec) -> None:
        cls = await self._discover_module(spec.name)
        if cls is None:
            if spec.required:
                raise RuntimeError(f"module '{spec.name}' not found at 'modules.{spec.name}'")
            return
        try:
            await self.register(cls(runtime))
        except ValueError as e:
            raise RuntimeError(f"module '{spec.name}' registration failed: {e}")
