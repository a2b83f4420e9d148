"""
MonitoringModule — метрики Prometheus для раундов и стадий конвейера.

Счётчики раундов и работы питаются слушателем ParRuntime, гистограмма
стадий и счётчик прогонов — событиями EventBus. Сервис monitoring.export
отдаёт текстовый формат generate_latest().
"""

from typing import Any, Dict

from prometheus_client import CollectorRegistry, Counter, Histogram, generate_latest

from core.event_bus import PIPELINE_FAILED, PIPELINE_FINISHED, STAGE_COMPLETED
from core.logger_helper import debug
from core.par_runtime import ParStep
from core.runtime_module import RuntimeModule


class MonitoringModule(RuntimeModule):
    """Необязательный модуль; при metrics_enabled=False ничего не регистрирует."""

    def __init__(self, runtime: Any):
        super().__init__(runtime)
        self.registry = CollectorRegistry()
        self.rounds_total = Counter(
            "segrt_rounds_total", "Barrier steps executed", ["phase"], registry=self.registry
        )
        self.work_total = Counter(
            "segrt_work_total", "Processor-steps executed", ["phase"], registry=self.registry
        )
        self.stage_seconds = Histogram(
            "segrt_stage_seconds", "Wall time of pipeline stages", ["stage"], registry=self.registry
        )
        self.pipeline_runs = Counter(
            "segrt_pipeline_runs_total", "Pipeline runs by outcome", ["status"], registry=self.registry
        )
        self._attached = False

    @property
    def name(self) -> str:
        return "monitoring"

    def services(self):
        return [("monitoring.export", self._export)]

    def _bind(self, func):
        return func

    async def register(self) -> None:
        if not getattr(self.runtime.config, "metrics_enabled", True):
            return
        await super().register()

    async def start(self) -> None:
        if self._attached or not self._registered:
            return
        self.runtime.par.add_listener(self._on_step)
        await self.runtime.event_bus.subscribe(STAGE_COMPLETED, self._on_stage)
        await self.runtime.event_bus.subscribe(PIPELINE_FINISHED, self._on_finished)
        await self.runtime.event_bus.subscribe(PIPELINE_FAILED, self._on_failed)
        self._attached = True
        await debug(self.runtime, "Monitoring attached", module="monitoring")

    async def stop(self) -> None:
        if self._attached:
            self.runtime.par.remove_listener(self._on_step)
            await self.runtime.event_bus.unsubscribe(STAGE_COMPLETED, self._on_stage)
            await self.runtime.event_bus.unsubscribe(PIPELINE_FINISHED, self._on_finished)
            await self.runtime.event_bus.unsubscribe(PIPELINE_FAILED, self._on_failed)
            self._attached = False
        await super().stop()

    def _on_step(self, step: ParStep) -> None:
        self.rounds_total.labels(phase=step.phase).inc()
        self.work_total.labels(phase=step.phase).inc(max(step.width, 1))

    async def _on_stage(self, event_type: str, data: Dict[str, Any]) -> None:
        self.stage_seconds.labels(stage=data.get("stage", "unknown")).observe(data.get("seconds", 0.0))

    async def _on_finished(self, event_type: str, data: Dict[str, Any]) -> None:
        self.pipeline_runs.labels(status=data.get("status", "unknown")).inc()

    async def _on_failed(self, event_type: str, data: Dict[str, Any]) -> None:
        self.pipeline_runs.labels(status="error").inc()

    async def _export(self) -> str:
        return generate_latest(self.registry).decode("utf-8")
