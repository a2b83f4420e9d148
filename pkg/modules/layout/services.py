"""
Сервисы layout.

Стратегия auto пробует direct и оставляет его, только если сервис
`verifier.layout` подтверждает результат; иначе — retract.
"""

from typing import Dict, Optional, Tuple

from core.errors import ResultNotBipolar, RetractionConflict
from core.logger_helper import debug, error, info, warning
from modules.graph.model import EmbeddedBipartiteGraph, VertexId
from modules.layout import algorithm
from modules.layout.io import parse_segments, read_segments, write_segments
from modules.layout.model import DiagonalGraph, Orderings, SegmentLayout
from modules.layout.svg import contact_points, emit_svg
from modules.quadrangulate.model import Quadrangulation


async def run(
    runtime,
    graph: EmbeddedBipartiteGraph,
    quadrangulation: Quadrangulation,
    strategy: Optional[str] = None,
    blue_rank: Optional[Dict[VertexId, int]] = None,
) -> SegmentLayout:
    """
    Представление касаниями в фазе "layout".

    blue_rank — готовая st-нумерация синих (стадия stnumber); без неё
    она считается здесь же.

    Raises:
        ResultNotBipolar, RetractionConflict, ошибки st-нумерации
    """
    chosen = strategy or runtime.config.layout_strategy
    await debug(runtime, "Layout started", module="layout", n=graph.n, strategy=chosen)
    first = "direct" if chosen == "auto" else chosen
    try:
        with runtime.par.phase("layout"):
            orderings = algorithm.compute_orderings(quadrangulation, runtime.par, blue_rank)
            layout = algorithm.assign_segments(graph, quadrangulation, orderings, runtime.par, strategy=first)
    except (ResultNotBipolar, RetractionConflict) as e:
        await error(runtime, e.message, module="layout", kind=type(e).__name__, **e.context)
        raise

    if chosen == "auto":
        certified = False
        if await runtime.service_registry.has_service("verifier.layout"):
            report = await runtime.call("verifier.layout", graph, layout)
            certified = report.ok
        if not certified:
            await warning(runtime, "Direct layout not certified, falling back to retraction", module="layout")
            with runtime.par.phase("layout"):
                layout = algorithm.assign_segments(graph, quadrangulation, orderings, runtime.par, strategy="retract")

    await info(
        runtime,
        "Layout finished",
        module="layout",
        p=layout.p,
        q=layout.q,
        strategy=layout.strategy,
        retracted=layout.retracted,
        rounds=runtime.par.report.rounds("layout"),
    )
    return layout


async def diagonals(runtime, quadrangulation: Quadrangulation) -> Tuple[DiagonalGraph, DiagonalGraph]:
    with runtime.par.phase("layout"):
        return algorithm.build_diagonal_graphs(quadrangulation, runtime.par)


async def orderings(runtime, quadrangulation: Quadrangulation) -> Orderings:
    with runtime.par.phase("layout"):
        return algorithm.compute_orderings(quadrangulation, runtime.par)


async def write(runtime, layout: SegmentLayout) -> str:
    return write_segments(layout)


async def parse(runtime, text: str) -> SegmentLayout:
    return parse_segments(text)


async def read(runtime, path: str) -> SegmentLayout:
    return read_segments(path)


async def svg(runtime, layout: SegmentLayout, graph: Optional[EmbeddedBipartiteGraph] = None) -> str:
    contacts = list(contact_points(graph, layout)) if graph is not None else None
    return emit_svg(layout, contacts)
