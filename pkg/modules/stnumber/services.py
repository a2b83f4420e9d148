"""
Сервисы st-нумерации.

Вход — Multigraph или EmbeddedBipartiteGraph (берётся его мультиграф).
"""

from typing import Any, List

from core.logger_helper import debug, info, warning
from modules.graph.model import Multigraph
from modules.stnumber import algorithm
from modules.stnumber.model import Orientation, StNumbering
from modules.stnumber.orient import longest_path_levels


def _as_multigraph(graph: Any) -> Multigraph:
    if isinstance(graph, Multigraph):
        return graph
    return graph.to_multigraph()


async def run(runtime, graph: Any, s: int, t: int) -> StNumbering:
    """
    Параллельная st-нумерация в фазе "stnumber".

    Raises:
        NotTwoConnected, MissingStEdge, InvalidEarDecomposition, OrientationCycle
    """
    g = _as_multigraph(graph)
    await debug(runtime, "st-numbering started", module="stnumber", n=g.n, m=g.m, s=g.label(s), t=g.label(t))
    with runtime.par.phase("stnumber"):
        result = algorithm.st_pipeline(g, s, t, runtime.par)
    if result.decomposition.method != "tree":
        await warning(
            runtime,
            "Tree ear decomposition produced a closed ear, used DFS chains",
            module="stnumber",
            ears=len(result.decomposition),
        )
    await info(
        runtime,
        "st-numbering finished",
        module="stnumber",
        n=g.n,
        ears=len(result.decomposition),
        rounds=runtime.par.report.rounds("stnumber"),
        work=runtime.par.report.work("stnumber"),
    )
    return result.numbering


async def oracle(runtime, graph: Any, s: int, t: int) -> StNumbering:
    return algorithm.st_number_sequential_oracle(_as_multigraph(graph), s, t)


async def levels(runtime, orientation: Orientation) -> List[int]:
    with runtime.par.phase("stnumber"):
        return longest_path_levels(orientation, runtime.par)


async def check(runtime, graph: Any, numbering: StNumbering) -> bool:
    return algorithm.is_st_numbering(_as_multigraph(graph), numbering.number, numbering.s, numbering.t)
