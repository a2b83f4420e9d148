"""
EventBus — pub/sub для событий конвейера.

События стадий:
- pipeline.stage_started   {stage}
- pipeline.stage_completed {stage, rounds, work, seconds}
- pipeline.failed          {stage, error, kind}
- pipeline.finished        {status, n} (status: pass | fail)

Подписчики (мониторинг, тесты) не знают о модулях-издателях.
"""

import asyncio
import sys
from collections import defaultdict
from typing import Any, Awaitable, Callable, Dict, List


EventHandler = Callable[[str, Dict[str, Any]], Awaitable[None]]

STAGE_STARTED = "pipeline.stage_started"
STAGE_COMPLETED = "pipeline.stage_completed"
PIPELINE_FAILED = "pipeline.failed"
PIPELINE_FINISHED = "pipeline.finished"


class EventBus:
    """
    Шина событий.

    Обработчики одного события запускаются конкурентно; исключение обработчика
    пишется в stderr и не прерывает публикацию.
    """

    def __init__(self) -> None:
        self._handlers: Dict[str, List[EventHandler]] = defaultdict(list)
        self._lock = asyncio.Lock()

    async def subscribe(self, event_type: str, handler: EventHandler) -> None:
        """
        Подписаться на событие.

        Args:
            event_type: тип события (например, "pipeline.stage_completed")
            handler: async (event_type, data) -> None
        """
        async with self._lock:
            self._handlers[event_type].append(handler)

    async def unsubscribe(self, event_type: str, handler: EventHandler) -> None:
        async with self._lock:
            handlers = self._handlers.get(event_type)
            if handlers and handler in handlers:
                handlers.remove(handler)

    async def publish(self, event_type: str, data: Dict[str, Any]) -> None:
        async with self._lock:
            handlers = list(self._handlers.get(event_type, []))
        if not handlers:
            return
        results = await asyncio.gather(*(h(event_type, data) for h in handlers), return_exceptions=True)
        for result in results:
            if isinstance(result, Exception):
                print(f"[EventBus] handler for '{event_type}' failed: {result}", file=sys.stderr)

    async def get_subscribers_count(self, event_type: str) -> int:
        async with self._lock:
            return len(self._handlers.get(event_type, []))

    async def clear(self) -> None:
        async with self._lock:
            self._handlers.clear()
