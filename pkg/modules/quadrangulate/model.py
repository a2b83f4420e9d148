"""Типы квадрангуляции."""

from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, List, NamedTuple, Tuple

from modules.graph.model import EmbeddedBipartiteGraph, FaceRecord, VertexId


class Poles(NamedTuple):
    """Вершины внешней грани: красные s_v, t_v и синие s_u, t_u (противоположные углы)."""

    s_v: VertexId
    s_u: VertexId
    t_v: VertexId
    t_u: VertexId


@dataclass(frozen=True)
class AnchorChoice:
    """
    Выбор якоря для одной грани.

    darts — обход грани, начиная с дротика, выходящего из якоря;
    chords — пары (якорь, синяя) в порядке обхода.
    """

    face_id: int
    anchor: VertexId
    chords: Tuple[Tuple[VertexId, VertexId], ...]
    darts: Tuple[int, ...] = ()

    @property
    def is_noop(self) -> bool:
        return not self.chords


@dataclass(frozen=True)
class Quadrangulation:
    """
    Квадрангуляция: все грани — 4-циклы, граф простой, m = 2n − 4.

    Рёбра входа сохраняют свои id; хорды получают id >= input_m.
    """

    graph: EmbeddedBipartiteGraph
    added_chords: FrozenSet[int]
    poles: Poles
    faces: Tuple[FaceRecord, ...]
    input_m: int
    passes: int = 0
    # число отложенных граней (конфликт хорд) за все проходы
    deferrals: int = 0

    @property
    def outer(self) -> FaceRecord:
        for face in self.faces:
            if face.is_outer:
                return face
        raise LookupError("quadrangulation has no outer face")

    def chord_pairs(self) -> List[Tuple[VertexId, VertexId]]:
        """Хорды как пары (красная, синяя) по возрастанию id ребра."""
        out = []
        for e in sorted(self.added_chords):
            u, v = self.graph.endpoints(e)
            out.append((u, v))
        return out
