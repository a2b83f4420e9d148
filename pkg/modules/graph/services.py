"""
Сервисы graph-core для ServiceRegistry.

Все функции принимают runtime первым аргументом; параллельные шаги идут
через runtime.par и учитываются в фазе "graph".
"""

from typing import Any, Dict, List, Optional, Sequence, Tuple

from core.logger_helper import debug, warning
from modules.graph import embedding, io
from modules.graph.model import Color, EmbeddedBipartiteGraph, FaceRecord, VertexId


async def parse_graph(runtime, text: str) -> EmbeddedBipartiteGraph:
    g = io.parse_graph(text)
    await debug(runtime, "Graph parsed", module="graph", n=g.n, m=g.m)
    return g


async def read_graph(runtime, path: str) -> EmbeddedBipartiteGraph:
    g = io.read_graph(path)
    await debug(runtime, "Graph loaded", module="graph", path=path, n=g.n, m=g.m)
    return g


async def build_graph(
    runtime,
    n: int,
    colors: Sequence[Color],
    rotations: Sequence[Sequence[VertexId]],
    outer_face_hint: Sequence[VertexId],
) -> EmbeddedBipartiteGraph:
    return embedding.build_graph(n, colors, rotations, outer_face_hint)


async def extract_faces(runtime, graph: EmbeddedBipartiteGraph) -> List[FaceRecord]:
    with runtime.par.phase("graph"):
        return embedding.extract_faces(graph, runtime.par)


async def face_incidence_lists(runtime, face: FaceRecord) -> Tuple[List[VertexId], List[VertexId]]:
    with runtime.par.phase("graph"):
        return embedding.face_incidence_lists(face, runtime.par)


async def validate(runtime, graph: EmbeddedBipartiteGraph) -> Dict[str, Any]:
    """
    Валидация графа.

    Returns:
        словарь отчёта (см. ValidationReport.as_dict)
    """
    with runtime.par.phase("graph"):
        report = embedding.validate(graph, runtime.par)
    if report.problems:
        await warning(runtime, "Graph validation found problems", module="graph", problems="; ".join(report.problems))
    return report.as_dict()


async def serialize_graph(
    runtime,
    graph: EmbeddedBipartiteGraph,
    chords: Optional[List[Tuple[VertexId, VertexId]]] = None,
    poles: Optional[Sequence[VertexId]] = None,
) -> str:
    return io.serialize_graph(graph, chords=chords, poles=poles)
