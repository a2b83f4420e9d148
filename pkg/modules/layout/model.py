"""
Типы layout: диагональные графы, порядки вершин, сегменты.

Координаты сегментов хранятся целыми, умноженными на 2: полуединица
ретракции представима точно.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Iterator, List, Optional, Tuple

from modules.graph.model import Color, Multigraph, VertexId

SCALE = 2


class Axis(str, Enum):
    VERTICAL = "V"
    HORIZONTAL = "H"


@dataclass(frozen=True)
class DiagonalGraph:
    """
    Граф диагоналей одного цвета.

    graph — мультиграф на вершинах цвета color (labels — исходные id);
    face_map[e] — грань квадрангуляции, породившая диагональ e;
    pole_edge — id полюсного ребра (s, t), проведённого через внешнюю грань.
    """

    color: Color
    graph: Multigraph
    face_map: Dict[int, int]
    pole_edge: int
    s: VertexId
    t: VertexId

    def local(self, v: VertexId) -> int:
        return self.graph.local_index()[v]


@dataclass(frozen=True)
class Orderings:
    """blue_rank: синяя -> 1..q, red_rank: красная -> 1..p."""

    blue_rank: Dict[VertexId, int]
    red_rank: Dict[VertexId, int]

    @property
    def p(self) -> int:
        return len(self.red_rank)

    @property
    def q(self) -> int:
        return len(self.blue_rank)


@dataclass(frozen=True)
class Segment:
    """
    Осевой сегмент: fixed — общая координата, [lo, hi] — протяжённость.

    Вертикальные принадлежат красным вершинам, горизонтальные — синим.
    """

    axis: Axis
    owner: VertexId
    fixed: int
    lo: int
    hi: int

    @property
    def length(self) -> int:
        return self.hi - self.lo

    def endpoints(self) -> Tuple[Tuple[int, int], Tuple[int, int]]:
        """Концы как точки (x, y) в единицах ×2."""
        if self.axis is Axis.VERTICAL:
            return (self.fixed, self.lo), (self.fixed, self.hi)
        return (self.lo, self.fixed), (self.hi, self.fixed)

    def is_endpoint(self, point: Tuple[int, int]) -> bool:
        return point in self.endpoints()


@dataclass(frozen=True)
class SegmentLayout:
    """
    Представление касаниями: p вертикалей (x = 1..p) и q горизонталей (y = 1..q).

    retracted — число хорд, контакт которых снят ретракцией.
    """

    p: int
    q: int
    verticals: Tuple[Segment, ...]
    horizontals: Tuple[Segment, ...]
    strategy: str = "retract"
    retracted: int = 0
    meta: Dict[str, object] = field(default_factory=dict, compare=False)

    def segments(self) -> Iterator[Segment]:
        yield from self.verticals
        yield from self.horizontals

    def by_owner(self) -> Dict[VertexId, Segment]:
        return {seg.owner: seg for seg in self.segments()}

    def owners(self) -> List[VertexId]:
        return sorted(seg.owner for seg in self.segments())

    def segment_of(self, v: VertexId) -> Optional[Segment]:
        return self.by_owner().get(v)
