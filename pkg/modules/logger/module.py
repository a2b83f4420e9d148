"""
LoggerModule — встроенный модуль логирования.

Регистрируется первым; предоставляет сервис `logger.log`.
Вывод — stderr (stdout занят результатами CLI), формат text или json:

    [LEVEL] [module] message (k=v ...)
    {"level": "INFO", "message": "...", "module": "...", "context": {...}}
"""

import json
import logging
import os
import sys
from typing import Any, Dict, Optional, TextIO

from core.runtime_module import RuntimeModule


_LEVEL_MAP = {
    "debug": logging.DEBUG,
    "info": logging.INFO,
    "warning": logging.WARNING,
    "error": logging.ERROR,
}


class LoggerModule(RuntimeModule):
    """
    Модуль логирования.

    Не трогает root logger; уровень и формат берутся из Config runtime,
    затем из LOG_LEVEL / RUNTIME_LOG_FORMAT.
    """

    def __init__(self, runtime: Any, stream: Optional[TextIO] = None):
        super().__init__(runtime)
        self._stream = stream
        self._log_level = logging.INFO
        self._log_format = "text"

    @property
    def name(self) -> str:
        return "logger"

    def services(self):
        return [("logger.log", self._log_service)]

    def _bind(self, func):
        # _log_service уже привязан к экземпляру
        return func

    async def register(self) -> None:
        cfg = getattr(self.runtime, "config", None)
        level_name = (getattr(cfg, "log_level", None) or os.getenv("LOG_LEVEL", "INFO")).upper()
        self._log_level = getattr(logging, level_name, logging.INFO)

        fmt = getattr(cfg, "log_format", None) or os.getenv("RUNTIME_LOG_FORMAT") or "text"
        self._log_format = fmt.lower() if fmt.lower() in ("text", "json") else "text"
        await super().register()

    async def start(self) -> None:
        await self._log_service(level="debug", message="Logger module started", module="logger")

    async def stop(self) -> None:
        await self._log_service(level="debug", message="Logger module stopped", module="logger")
        await super().stop()

    @property
    def stream(self) -> TextIO:
        # sys.stderr читается при каждом вызове, чтобы работал capsys
        return self._stream if self._stream is not None else sys.stderr

    async def _log_service(self, level: str, message: str, **context: Any) -> None:
        """
        Сервис логирования.

        Args:
            level: debug, info, warning, error (иное — info)
            message: сообщение
            **context: module и произвольные поля
        """
        lvl = (level or "").lower()
        if lvl not in _LEVEL_MAP:
            lvl = "info"
        if _LEVEL_MAP[lvl] < self._log_level:
            return

        module = context.pop("module", None) or context.pop("component", None)
        if self._log_format == "json":
            event: Dict[str, Any] = {"level": lvl.upper(), "message": message}
            if module:
                event["module"] = module
            safe_ctx = {
                k: v if isinstance(v, (str, int, float, bool, type(None), dict, list)) else str(v)
                for k, v in context.items()
            }
            if safe_ctx:
                event["context"] = safe_ctx
            print(json.dumps(event, ensure_ascii=False), file=self.stream, flush=True)
            return

        parts = [f"[{lvl.upper()}]"]
        if module:
            parts.append(f"[{module}]")
        parts.append(message)
        shown = {k: v for k, v in context.items() if isinstance(v, (str, int, float, bool, type(None)))}
        if shown:
            parts.append("(" + " ".join(f"{k}={v}" for k, v in shown.items()) + ")")
        print(" ".join(parts), file=self.stream, flush=True)
