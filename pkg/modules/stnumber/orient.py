"""
Ориентация ушей и топологическая нумерация.

orient_ears вставляет уши волнами: волна — уши, оба конца которых уже
размещены. Текущий порядок вершин — двусвязный список; внутренность уха
встаёт сразу за его нижним концом (splice — вставка за один раунд).
Каждая вершина несёт точную позицию (Fraction) между соседями по списку,
поэтому сравнение концов уха стоит один раунд. Все рёбра идут вперёд по
списку: ориентация ациклична, s — единственный источник, t — единственный
сток, а итоговый список (один list_rank) — её линейное продолжение.

topo_number нумерует по известному порядку ориентации за O(log n) раундов
с проверкой, что каждое ребро идёт вперёд. Без порядка — сортировка по
(уровень самого длинного пути, id); уровни снимаются фронтами.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from core.errors import OrientationCycle
from core.par_runtime import TERMINATOR, ParRuntime, WritePolicy
from modules.graph.model import Multigraph
from modules.stnumber.model import EarDecomposition, Orientation, StNumbering


def _ear_waves(dec: EarDecomposition, par: ParRuntime) -> List[List[int]]:
    """Разбить уши на волны по готовности концов."""
    ears = dec.ears
    owner: Dict[int, int] = {}
    for k, ear in enumerate(ears):
        inner = ear.vertices if k == 0 else ear.interior
        for v in inner:
            owner[v] = k

    dependents: List[List[int]] = [[] for _ in ears]
    for k, ear in enumerate(ears[1:], start=1):
        for v in ear.endpoints:
            dependents[owner[v]].append(k)

    pending = [2] * len(ears)
    pending[0] = 0
    waves: List[List[int]] = []
    frontier = [0]
    while frontier:
        waves.append(frontier)
        flat = [k for j in frontier for k in dependents[j]]
        par.par_write(len(flat), lambda i, flat=flat: [(flat[i], -1)], pending, WritePolicy.SUM_COMBINE, name="ear_ready")
        frontier = sorted({k for k in flat if pending[k] == 0})
    return waves


def orient_ears(
    g: Multigraph,
    dec: EarDecomposition,
    par: Optional[ParRuntime] = None,
) -> Orientation:
    """
    Ориентировать рёбра по открытому разложению на уши.

    Первое ухо ориентируется от s к t (и ребро (s, t): s → t); каждое
    следующее — от конца, стоящего раньше в текущем порядке, к другому.
    Волна стоит пять раундов; итоговый порядок кладётся в sequence.
    """
    runtime = par or ParRuntime()
    n = g.n
    tails = [-1] * g.m
    heads = [-1] * g.m
    nxt = [TERMINATOR] * n
    prv = [TERMINATOR] * n
    position: List[Optional[Fraction]] = [None] * n

    first = dec.ears[0]
    path = first.vertices
    for j in range(len(path) - 1):
        nxt[path[j]] = path[j + 1]
        prv[path[j + 1]] = path[j]
    runtime.par_write(len(path), lambda j: [(path[j], Fraction(j))], position, name="ear_position")

    def orient_path(k: int, path: Sequence[int]) -> List[Tuple[int, Tuple[int, int]]]:
        ear = dec.ears[k]
        forward = path[0] == ear.vertices[0]
        edges = ear.edges if forward else tuple(reversed(ear.edges))
        writes = [(edges[j], (path[j], path[j + 1])) for j in range(len(edges))]
        if ear.closing_edge is not None:
            writes.append((ear.closing_edge, (dec.s, dec.t)))
        return writes

    def direct(k: int) -> Tuple[int, ...]:
        ear = dec.ears[k]
        a, b = ear.endpoints
        return ear.vertices if position[a] < position[b] else tuple(reversed(ear.vertices))

    arcs: Dict[int, Tuple[int, int]] = {}
    waves = _ear_waves(dec, runtime)
    runtime.par_write(1, lambda _: orient_path(0, path), arcs, name="orient_ear")

    for wave in waves[1:]:
        oriented = runtime.par_map(wave, direct, name="ear_direction")

        chains: Dict[int, List[int]] = {}
        for vertices in oriented:
            if len(vertices) > 2:
                chains.setdefault(vertices[0], []).extend(vertices[1:-1])
        insertions = sorted(chains.items())
        flat = [(k, j) for k, (_, chain) in enumerate(insertions) for j in range(len(chain))]

        # цепочка делит интервал между концом и его старым соседом поровну
        def place(p: int, insertions=insertions, flat=flat) -> List[Tuple[int, Fraction]]:
            k, j = flat[p]
            after, chain = insertions[k]
            lo, hi = position[after], position[nxt[after]]
            return [(chain[j], lo + (hi - lo) * (j + 1) / (len(chain) + 1))]

        runtime.par_write(len(flat), place, position, name="ear_position")
        runtime.splice(nxt, prv, insertions, name="ear_splice")
        runtime.par_write(
            len(wave),
            lambda i, wave=wave, oriented=oriented: orient_path(wave[i], oriented[i]),
            arcs,
            name="orient_ear",
        )

    rank = runtime.list_rank(nxt, name="order_rank")
    sequence = [0] * n
    runtime.par_write(n, lambda v: [(n - 1 - rank[v], v)], sequence, name="order_place")

    for e, (tail, head) in arcs.items():
        tails[e], heads[e] = tail, head
    return Orientation(
        n=n, tails=tuple(tails), heads=tuple(heads), s=dec.s, t=dec.t, sequence=tuple(sequence)
    )


def longest_path_levels(orientation: Orientation, par: Optional[ParRuntime] = None) -> List[int]:
    """
    Уровень вершины — длина самого длинного пути из источника.

    Фронт — вершины с нулевой входящей степенью; снятие фронта уменьшает
    степени соседей (sum-combine). Раундов — по числу уровней.

    Raises:
        OrientationCycle: после снятия всех фронтов остались вершины
    """
    runtime = par or ParRuntime()
    n = orientation.n
    out_edges = orientation.out_edges()
    indeg = [0] * n
    runtime.par_write(
        orientation.m, lambda e: [(orientation.heads[e], 1)], indeg, WritePolicy.SUM_COMBINE, name="in_degree"
    )
    level = [-1] * n
    frontier = [v for v in range(n) if indeg[v] == 0]
    current = 0
    while frontier:
        for v in frontier:
            level[v] = current
        flat = [e for v in frontier for e in out_edges[v]]
        runtime.par_write(
            len(flat),
            lambda i, flat=flat: [(orientation.heads[flat[i]], -1)],
            indeg,
            WritePolicy.SUM_COMBINE,
            name="peel",
        )
        frontier = sorted({orientation.heads[e] for e in flat if indeg[orientation.heads[e]] == 0})
        current += 1

    stuck = [v for v in range(n) if level[v] < 0]
    if stuck:
        raise OrientationCycle(f"orientation has a cycle through {stuck[:10]}", vertices=len(stuck))
    return level


def backward_edges(orientation: Orientation, number: Sequence[int], par: Optional[ParRuntime] = None) -> int:
    """Число рёбер tail → head с number[tail] >= number[head]; O(log m) раундов."""
    runtime = par or ParRuntime()
    if orientation.m == 0:
        return 0
    tails, heads = orientation.tails, orientation.heads
    backward = runtime.par_map(
        orientation.m, lambda e: 1 if number[tails[e]] >= number[heads[e]] else 0, name="forward_check"
    )
    return runtime.par_reduce(backward, "sum", name="forward_count")


def number_by_sequence(orientation: Orientation, par: Optional[ParRuntime] = None) -> List[int]:
    """
    Номера 1..n по orientation.sequence.

    Raises:
        OrientationCycle: sequence не перестановка или ребро идёт назад
    """
    runtime = par or ParRuntime()
    sequence = orientation.sequence
    n = orientation.n
    if sequence is None or len(sequence) != n or not all(0 <= v < n for v in sequence):
        raise OrientationCycle("vertex sequence is not a permutation of the vertices")
    number = [0] * n
    runtime.par_write(n, lambda i: [(sequence[i], i + 1)], number, WritePolicy.ARBITRARY, name="topo_number")
    if 0 in number:
        raise OrientationCycle("vertex sequence repeats a vertex")
    backward = backward_edges(orientation, number, runtime)
    if backward:
        raise OrientationCycle(f"{backward} edges run against the vertex sequence", edges=backward)
    return number


def topo_number(g: Multigraph, orientation: Orientation, par: Optional[ParRuntime] = None) -> StNumbering:
    """
    Нумерация 1..n, продолжающая ориентацию.

    Если ориентация знает свой порядок (sequence) — номера по нему, иначе
    сортировка по (уровень самого длинного пути, id).

    Raises:
        OrientationCycle
    """
    runtime = par or ParRuntime()
    if orientation.sequence is not None:
        number = number_by_sequence(orientation, runtime)
        return StNumbering(number=tuple(number), s=orientation.s, t=orientation.t)
    level = longest_path_levels(orientation, runtime)
    order = runtime.par_sort([(level[v], v) for v in range(g.n)], name="topo_sort")
    number = [0] * g.n
    runtime.par_write(len(order), lambda i: [(order[i], i + 1)], number, name="topo_number")
    return StNumbering(number=tuple(number), s=orientation.s, t=orientation.t)


def linear_extensions(
    orientation: Orientation, count: int, seed: int = 0, max_attempts: Optional[int] = None
) -> List[StNumbering]:
    """
    До count различных линейных продолжений ориентации (случайный алгоритм Кана).

    Raises:
        OrientationCycle
    """
    rng = random.Random(seed)
    out_edges = orientation.out_edges()
    found: Dict[Tuple[int, ...], StNumbering] = {}
    attempts = max_attempts if max_attempts is not None else 20 * max(count, 1)
    for _ in range(attempts):
        if len(found) >= count:
            break
        indeg = orientation.in_degree()
        ready = [v for v in range(orientation.n) if indeg[v] == 0]
        number = [0] * orientation.n
        k = 0
        while ready:
            v = ready.pop(rng.randrange(len(ready)))
            k += 1
            number[v] = k
            for e in out_edges[v]:
                head = orientation.heads[e]
                indeg[head] -= 1
                if indeg[head] == 0:
                    ready.append(head)
        if k != orientation.n:
            raise OrientationCycle("orientation has a cycle")
        key = tuple(number)
        found.setdefault(key, StNumbering(number=key, s=orientation.s, t=orientation.t))
    return list(found.values())
