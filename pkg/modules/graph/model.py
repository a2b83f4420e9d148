"""
Типы graph-core: цвета, вложенный двудольный граф на дротиках, записи граней.

Дротики (darts) хранятся массивами:
- дротики 2e и 2e+1 образуют ребро e, twin(d) = d ^ 1
- origin[d] — вершина-начало
- next_cw[d] / prev_cw[d] — двусвязный циклический список вращения вокруг origin[d]

Обход грани: face_next(d) = next_cw[twin(d)]; грань лежит слева от обхода,
поэтому внутренние грани обходятся против часовой стрелки, внешняя — по часовой.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx


VertexId = int


class Color(str, Enum):
    RED = "red"
    BLUE = "blue"

    @classmethod
    def parse(cls, token: str) -> "Color":
        """Разобрать `red`/`blue`/`r`/`b` (без учёта регистра)."""
        value = token.strip().lower()
        if value in ("red", "r"):
            return cls.RED
        if value in ("blue", "b"):
            return cls.BLUE
        raise ValueError(f"color must be 'red' or 'blue', got: {token!r}")

    @property
    def opposite(self) -> "Color":
        return Color.BLUE if self is Color.RED else Color.RED


@dataclass(frozen=True)
class FaceRecord:
    """Грань: циклическая последовательность дротиков в порядке обхода."""

    id: int
    darts: Tuple[int, ...]
    vertices: Tuple[VertexId, ...]
    reds: Tuple[VertexId, ...]
    blues: Tuple[VertexId, ...]
    is_outer: bool = False

    @property
    def length(self) -> int:
        return len(self.darts)

    def has_repeated_vertex(self) -> bool:
        return len(set(self.vertices)) != len(self.vertices)


@dataclass(frozen=True)
class Multigraph:
    """
    Неориентированный мультиграф со списком рёбер.

    Используется для диагональных графов и как вход st-нумерации.
    labels[i] — внешний идентификатор локальной вершины i (если задан).
    """

    n: int
    edges: Tuple[Tuple[int, int], ...]
    labels: Optional[Tuple[int, ...]] = None

    @property
    def m(self) -> int:
        return len(self.edges)

    def edge_pairs(self) -> List[Tuple[int, int]]:
        return list(self.edges)

    @cached_property
    def adjacency(self) -> List[List[Tuple[int, int]]]:
        """adjacency[v] = [(сосед, id ребра), ...] в порядке id рёбер."""
        adj: List[List[Tuple[int, int]]] = [[] for _ in range(self.n)]
        for eid, (u, v) in enumerate(self.edges):
            adj[u].append((v, eid))
            adj[v].append((u, eid))
        return adj

    def label(self, v: int) -> int:
        return self.labels[v] if self.labels is not None else v

    def local_index(self) -> Dict[int, int]:
        """Обратное отображение внешний id -> локальный индекс."""
        if self.labels is None:
            return {v: v for v in range(self.n)}
        return {label: i for i, label in enumerate(self.labels)}

    def to_networkx(self) -> nx.MultiGraph:
        graph = nx.MultiGraph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edges)
        return graph


class EmbeddedBipartiteGraph:
    """
    Вложенный двудольный мультиграф (система вращений).

    Экземпляры неизменяемы: все массивы — кортежи; изменения (хорды)
    порождают новый граф. Безопасно разделяется между потоками-читателями.
    """

    def __init__(
        self,
        n: int,
        colors: Sequence[Color],
        origin: Sequence[int],
        next_cw: Sequence[int],
        prev_cw: Sequence[int],
        outer_dart: int,
    ):
        self.n = n
        self.colors: Tuple[Color, ...] = tuple(colors)
        self.origin: Tuple[int, ...] = tuple(origin)
        self.next_cw: Tuple[int, ...] = tuple(next_cw)
        self.prev_cw: Tuple[int, ...] = tuple(prev_cw)
        self.outer_dart = outer_dart

    # --- базовые отображения --------------------------------------------

    @property
    def m(self) -> int:
        return len(self.origin) // 2

    @property
    def dart_count(self) -> int:
        return len(self.origin)

    @staticmethod
    def twin(d: int) -> int:
        return d ^ 1

    @staticmethod
    def edge_of(d: int) -> int:
        return d >> 1

    def head(self, d: int) -> VertexId:
        return self.origin[d ^ 1]

    def face_next(self, d: int) -> int:
        return self.next_cw[d ^ 1]

    def endpoints(self, e: int) -> Tuple[VertexId, VertexId]:
        return self.origin[2 * e], self.origin[2 * e + 1]

    @cached_property
    def first_dart(self) -> Tuple[int, ...]:
        """Дротик с наименьшим id у каждой вершины (-1 для изолированных)."""
        first = [-1] * self.n
        for d in range(len(self.origin) - 1, -1, -1):
            first[self.origin[d]] = d
        return tuple(first)

    def rotation(self, v: VertexId) -> List[int]:
        """Дротики вокруг v по часовой стрелке, начиная с first_dart[v]."""
        start = self.first_dart[v]
        if start < 0:
            return []
        out = [start]
        d = self.next_cw[start]
        while d != start:
            out.append(d)
            d = self.next_cw[d]
        return out

    def neighbors(self, v: VertexId) -> List[VertexId]:
        return [self.head(d) for d in self.rotation(v)]

    def degree(self, v: VertexId) -> int:
        return len(self.rotation(v))

    def edges(self) -> List[Tuple[VertexId, VertexId]]:
        return [self.endpoints(e) for e in range(self.m)]

    def edge_pairs(self) -> List[Tuple[VertexId, VertexId]]:
        return self.edges()

    @cached_property
    def edge_keys(self) -> frozenset:
        """Множество неупорядоченных пар смежных вершин."""
        return frozenset((min(u, v), max(u, v)) for u, v in self.edges())

    def has_edge(self, u: VertexId, v: VertexId) -> bool:
        return (min(u, v), max(u, v)) in self.edge_keys

    def vertices_of(self, color: Color) -> List[VertexId]:
        return [v for v in range(self.n) if self.colors[v] is color]

    def walk(self, d: int) -> List[int]:
        """Последовательный обход грани, содержащей дротик d."""
        out = [d]
        cur = self.face_next(d)
        while cur != d:
            out.append(cur)
            cur = self.face_next(cur)
        return out

    # --- преобразования -------------------------------------------------

    def to_multigraph(self) -> Multigraph:
        return Multigraph(n=self.n, edges=tuple(self.edges()))

    def to_networkx(self) -> nx.MultiGraph:
        return self.to_multigraph().to_networkx()

    def mirror(self) -> "EmbeddedBipartiteGraph":
        """Зеркальное вложение: все вращения обращены, внешняя грань сохраняется."""
        return EmbeddedBipartiteGraph(
            n=self.n,
            colors=self.colors,
            origin=self.origin,
            next_cw=self.prev_cw,
            prev_cw=self.next_cw,
            outer_dart=self.outer_dart ^ 1,
        )

    def without_edges(self, removed: Sequence[int]) -> "EmbeddedBipartiteGraph":
        """
        Удалить рёбра, перенумеровав оставшиеся по возрастанию старых id.

        Внешний дротик переносится на ближайший сохранившийся дротик внешней грани.
        """
        drop = set(removed)
        keep = [e for e in range(self.m) if e not in drop]
        remap: Dict[int, int] = {}
        for new_e, old_e in enumerate(keep):
            remap[2 * old_e] = 2 * new_e
            remap[2 * old_e + 1] = 2 * new_e + 1

        def survivor(d: int, step: Sequence[int]) -> int:
            cur = step[d]
            while (cur >> 1) in drop:
                cur = step[cur]
            return cur

        origin = [0] * (2 * len(keep))
        next_cw = [0] * (2 * len(keep))
        prev_cw = [0] * (2 * len(keep))
        for old_d, new_d in remap.items():
            origin[new_d] = self.origin[old_d]
            next_cw[new_d] = remap[survivor(old_d, self.next_cw)]
            prev_cw[new_d] = remap[survivor(old_d, self.prev_cw)]

        outer = self.outer_dart
        if (outer >> 1) in drop:
            for d in self.walk(outer):
                if (d >> 1) not in drop:
                    outer = d
                    break
        return EmbeddedBipartiteGraph(
            n=self.n,
            colors=self.colors,
            origin=origin,
            next_cw=next_cw,
            prev_cw=prev_cw,
            outer_dart=remap.get(outer, 0),
        )

    # --- сравнение ------------------------------------------------------

    def _key(self) -> tuple:
        return (self.n, self.colors, self.origin, self.next_cw, self.prev_cw, self.outer_dart)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EmbeddedBipartiteGraph):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        return f"EmbeddedBipartiteGraph(n={self.n}, m={self.m}, outer_dart={self.outer_dart})"


@dataclass
class ValidationReport:
    """Отчёт validate(): структурные проверки графа."""

    bipartite: bool
    connected: bool
    euler: bool
    face_count: int
    simple: bool
    two_connected: bool
    rotation_consistent: bool
    faces_alternate: bool
    problems: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        """Граф пригоден для дальнейшей обработки (простота и 2-связность не требуются)."""
        return self.bipartite and self.connected and self.euler and self.rotation_consistent

    def as_dict(self) -> Dict[str, object]:
        return {
            "bipartite": self.bipartite,
            "connected": self.connected,
            "euler": self.euler,
            "face_count": self.face_count,
            "simple": self.simple,
            "two_connected": self.two_connected,
            "rotation_consistent": self.rotation_consistent,
            "faces_alternate": self.faces_alternate,
            "problems": list(self.problems),
        }
