"""
st-нумерация: параллельный конвейер (уши → ориентация → нумерация)
и последовательный оракул для перекрёстной проверки.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import List, Optional, Sequence

from core.par_runtime import ParRuntime
from modules.graph.model import Multigraph
from modules.stnumber.ears import chain_decomposition, find_st_edge, open_ear_decompose
from modules.stnumber.model import EarDecomposition, Orientation, StNumbering
from modules.stnumber.orient import orient_ears, topo_number


@dataclass(frozen=True)
class StResult:
    """Все промежуточные результаты параллельного конвейера."""

    decomposition: EarDecomposition
    orientation: Orientation
    numbering: StNumbering


def st_pipeline(g: Multigraph, s: int, t: int, par: Optional[ParRuntime] = None) -> StResult:
    runtime = par or ParRuntime()
    dec = open_ear_decompose(g, s, t, runtime)
    orientation = orient_ears(g, dec, runtime)
    numbering = topo_number(g, orientation, runtime)
    return StResult(decomposition=dec, orientation=orientation, numbering=numbering)


def st_number(g: Multigraph, s: int, t: int, par: Optional[ParRuntime] = None) -> StNumbering:
    """
    st-нумерация графа (мультиграф допускается).

    Raises:
        NotTwoConnected, MissingStEdge, InvalidEarDecomposition, OrientationCycle
    """
    return st_pipeline(g, s, t, par).numbering


def st_number_sequential_oracle(g: Multigraph, s: int, t: int) -> StNumbering:
    """
    Последовательная st-нумерация: цепи DFS и вставка уха за нижним концом
    в растущий список.
    """
    find_st_edge(g, s, t)
    dec = chain_decomposition(g, s, t)
    order: List[int] = list(dec.ears[0].vertices)
    for ear in dec.ears[1:]:
        a, b = ear.endpoints
        ia, ib = order.index(a), order.index(b)
        inner = list(ear.interior) if ia < ib else list(reversed(ear.interior))
        low = min(ia, ib)
        order[low + 1 : low + 1] = inner
    number = [0] * g.n
    for k, v in enumerate(order, start=1):
        number[v] = k
    return StNumbering(number=tuple(number), s=s, t=t)


def is_st_numbering(g: Multigraph, number: Sequence[int], s: int, t: int) -> bool:
    """number(s)=1, number(t)=n, у остальных есть сосед ниже и сосед выше."""
    n = g.n
    if sorted(number) != list(range(1, n + 1)):
        return False
    if number[s] != 1 or number[t] != n:
        return False
    lower = [False] * n
    higher = [False] * n
    for u, v in g.edges:
        if number[u] < number[v]:
            higher[u], lower[v] = True, True
        elif number[v] < number[u]:
            higher[v], lower[u] = True, True
    return all(lower[v] and higher[v] for v in range(n) if v not in (s, t))


def enumerate_st_numberings(g: Multigraph, s: int, t: int, limit: int = 9) -> List[StNumbering]:
    """
    Все st-нумерации перебором (для маленьких графов в тестах).

    Raises:
        ValueError: n > limit
    """
    if g.n > limit:
        raise ValueError(f"n must be at most {limit} for enumeration, got: {g.n}")
    out: List[StNumbering] = []
    for perm in itertools.permutations(range(1, g.n + 1)):
        if is_st_numbering(g, perm, s, t):
            out.append(StNumbering(number=tuple(perm), s=s, t=t))
    return out
