"""
Конвейер: квадрангуляция → st-нумерация G_u → сегменты → проверка.

Стадии вызываются через service_registry, поэтому каждая получает
события и тег стадии от своего StageMiddleware.
"""

from dataclasses import dataclass
from typing import Any, Optional

from core.event_bus import PIPELINE_FINISHED
from core.logger_helper import info
from core.par_runtime import RoundReport


@dataclass
class PipelineResult:
    graph: Any
    quadrangulation: Any
    layout: Any
    report: Optional[Any]
    rounds: RoundReport

    @property
    def ok(self) -> bool:
        """Без проверки (verify=False) результат считается успешным."""
        return self.report is None or self.report.ok


async def run_pipeline(
    runtime: Any,
    graph: Any,
    verify: bool = True,
    strategy: Optional[str] = None,
) -> PipelineResult:
    """
    Прогнать граф через все стадии.

    Отчёт раундов runtime.par сбрасывается в начале прогона.

    Raises:
        SegmentRuntimeError: с проставленной стадией
    """
    runtime.par.reset()
    q = await runtime.call("quadrangulate.run", graph)
    g_u, _ = await runtime.call("layout.diagonals", q)
    numbering = await runtime.call("stnumber.run", g_u.graph, g_u.local(g_u.s), g_u.local(g_u.t))
    blue_rank = numbering.relabel(g_u.graph.labels)
    layout = await runtime.call("layout.run", graph, q, strategy=strategy, blue_rank=blue_rank)
    report = await runtime.call("verifier.layout", graph, layout) if verify else None

    rounds = runtime.par.report
    rounds.reference_processor_bound = RoundReport.processor_bound(graph.n, graph.m)
    result = PipelineResult(graph=graph, quadrangulation=q, layout=layout, report=report, rounds=rounds)
    status = "pass" if result.ok else "fail"
    await runtime.event_bus.publish(PIPELINE_FINISHED, {"status": status, "n": graph.n})
    await info(
        runtime,
        "Pipeline finished",
        module="pipeline",
        status=status,
        n=graph.n,
        rounds=rounds.total_rounds,
        work=rounds.total_work,
    )
    return result
