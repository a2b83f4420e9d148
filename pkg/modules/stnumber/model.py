"""
Типы st-нумерации: уши, ориентация, нумерация.

Вершины — локальные индексы 0..n-1 мультиграфа (Multigraph); внешние id
восстанавливаются через Multigraph.labels.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple


@dataclass(frozen=True)
class Ear:
    """
    Ухо: путь по вершинам и рёбрам.

    edges[i] соединяет vertices[i] и vertices[i+1]. У первого уха путь
    идёт от s к t, а closing_edge — ребро (s, t), замыкающее цикл.
    """

    vertices: Tuple[int, ...]
    edges: Tuple[int, ...]
    closing_edge: Optional[int] = None

    @property
    def endpoints(self) -> Tuple[int, int]:
        return self.vertices[0], self.vertices[-1]

    @property
    def interior(self) -> Tuple[int, ...]:
        return self.vertices[1:-1]

    def all_edges(self) -> Tuple[int, ...]:
        if self.closing_edge is None:
            return self.edges
        return self.edges + (self.closing_edge,)


@dataclass(frozen=True)
class EarDecomposition:
    """
    Открытое разложение на уши P0..Pk.

    method — "tree" (метки по остовному дереву) или "chains" (цепи DFS).
    """

    ears: Tuple[Ear, ...]
    s: int
    t: int
    method: str = "tree"

    def __len__(self) -> int:
        return len(self.ears)


@dataclass(frozen=True)
class Orientation:
    """
    Направление каждого ребра: tails[e] → heads[e].

    sequence — вершины в порядке, где все рёбра идут вперёд, если построение
    его уже знает (порядок вставки ушей, обход плоского st-графа); None —
    порядок не известен.
    """

    n: int
    tails: Tuple[int, ...]
    heads: Tuple[int, ...]
    s: int
    t: int
    sequence: Optional[Tuple[int, ...]] = None

    @property
    def m(self) -> int:
        return len(self.tails)

    def out_edges(self) -> List[List[int]]:
        out: List[List[int]] = [[] for _ in range(self.n)]
        for e, tail in enumerate(self.tails):
            out[tail].append(e)
        return out

    def in_degree(self) -> List[int]:
        deg = [0] * self.n
        for head in self.heads:
            deg[head] += 1
        return deg

    def out_degree(self) -> List[int]:
        deg = [0] * self.n
        for tail in self.tails:
            deg[tail] += 1
        return deg

    def arcs(self) -> List[Tuple[int, int]]:
        return list(zip(self.tails, self.heads))

    def reversed(self) -> "Orientation":
        sequence = tuple(reversed(self.sequence)) if self.sequence is not None else None
        return Orientation(n=self.n, tails=self.heads, heads=self.tails, s=self.t, t=self.s, sequence=sequence)


@dataclass(frozen=True)
class StNumbering:
    """number[v] ∈ 1..n — биекция; number[s] = 1, number[t] = n."""

    number: Tuple[int, ...]
    s: int
    t: int

    @property
    def n(self) -> int:
        return len(self.number)

    def order(self) -> List[int]:
        """Вершины по возрастанию номера."""
        out = [0] * len(self.number)
        for v, k in enumerate(self.number):
            out[k - 1] = v
        return out

    def relabel(self, labels: Optional[Sequence[int]]) -> Dict[int, int]:
        """Словарь внешний id -> номер."""
        if labels is None:
            return {v: k for v, k in enumerate(self.number)}
        return {labels[v]: k for v, k in enumerate(self.number)}
