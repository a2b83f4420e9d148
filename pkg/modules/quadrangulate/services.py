"""
Сервисы квадрангуляции.
"""

from core.errors import NoConflictFreeAnchor, NotTwoConnected
from core.logger_helper import debug, error, info
from modules.graph.io import serialize_graph
from modules.graph.model import EmbeddedBipartiteGraph
from modules.quadrangulate import algorithm
from modules.quadrangulate.model import Quadrangulation


async def run(runtime, graph: EmbeddedBipartiteGraph) -> Quadrangulation:
    """
    Квадрангуляция графа в фазе "quadrangulate".

    Raises:
        NotTwoConnected, NoConflictFreeAnchor, RepeatedBoundaryVertex, GraphInputError
    """
    await debug(runtime, "Quadrangulation started", module="quadrangulate", n=graph.n, m=graph.m)
    try:
        with runtime.par.phase("quadrangulate"):
            q = algorithm.quadrangulate(graph, runtime.par, max_passes=runtime.config.max_quad_passes)
    except NoConflictFreeAnchor as e:
        await error(runtime, "No conflict-free anchor", module="quadrangulate", **e.context)
        raise
    except NotTwoConnected as e:
        await error(runtime, str(e), module="quadrangulate")
        raise
    await info(
        runtime,
        "Quadrangulation finished",
        module="quadrangulate",
        n=q.graph.n,
        m=q.graph.m,
        chords=len(q.added_chords),
        passes=q.passes,
        deferrals=q.deferrals,
        rounds=runtime.par.report.rounds("quadrangulate"),
    )
    return q


async def remove_chords(runtime, q: Quadrangulation) -> EmbeddedBipartiteGraph:
    return algorithm.remove_chords(q)


async def render(runtime, q: Quadrangulation) -> str:
    """Текстовый формат квадрангуляции с блоками `# chords:` и `# poles:`."""
    return serialize_graph(q.graph, chords=q.chord_pairs(), poles=tuple(q.poles))
