"""
Logger Helper — обёртка логирования для ядра и модулей.

Пишет через сервис `logger.log` встроенного LoggerModule; до инициализации
runtime (или если сервиса нет) — напрямую в stderr. stdout зарезервирован
за выводом CLI.
"""

import sys
from typing import Any, Optional


_LEVELS = ("debug", "info", "warning", "error")


async def log(runtime: Optional[Any], level: str, message: str, **context: Any) -> None:
    """
    Записать сообщение через LoggerModule.

    Args:
        runtime: CoreRuntime или None (fallback в stderr)
        level: debug, info, warning, error
        message: сообщение
        **context: пары ключ-значение для строки лога
    """
    level = (level or "info").lower()
    if level not in _LEVELS:
        level = "info"

    registry = getattr(runtime, "service_registry", None)
    if registry is not None:
        try:
            await registry.call("logger.log", level=level, message=message, **context)
            return
        except Exception:
            pass

    line = f"[{level.upper()}] {message}"
    if context:
        line += " (" + " ".join(f"{k}={v}" for k, v in context.items()) + ")"
    print(line, file=sys.stderr)


async def debug(runtime: Optional[Any], message: str, **context: Any) -> None:
    await log(runtime, "debug", message, **context)


async def info(runtime: Optional[Any], message: str, **context: Any) -> None:
    await log(runtime, "info", message, **context)


async def warning(runtime: Optional[Any], message: str, **context: Any) -> None:
    await log(runtime, "warning", message, **context)


async def error(runtime: Optional[Any], message: str, **context: Any) -> None:
    await log(runtime, "error", message, **context)
