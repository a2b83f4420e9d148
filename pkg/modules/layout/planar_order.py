"""
Топологический порядок ориентированного графа красных диагоналей.

Граф G_v с полюсным ребром — плоский st-граф: у каждой вершины входящие
и исходящие рёбра идут двумя непрерывными блоками вращения. Дерево самых
левых входящих рёбер — дерево поиска в глубину, который обходит исходящие
рёбра слева направо; прямой порядок этого дерева с детьми справа налево —
обратный post-order такого поиска, то есть линейное продолжение.

Вращение G_v берётся из квадрангуляции: дротик красной вершины r лежит
в одной грани, грань даёт диагональ (внешняя — полюсное ребро). Какая
сторона «левая», зависит от зеркальности вложения, поэтому пробуются оба
направления вращения; результат проверяется за O(log m) раундов.
"""

from __future__ import annotations

from typing import List, Optional, Sequence, Tuple

from core.errors import ListCycleError, WriteConflict
from core.par_runtime import TERMINATOR, ParRuntime
from modules.graph.model import Color
from modules.layout.model import DiagonalGraph
from modules.quadrangulate.model import Quadrangulation
from modules.stnumber.model import Orientation
from modules.stnumber.orient import backward_edges


def _slot_edges(q: Quadrangulation, g_v: DiagonalGraph, par: ParRuntime) -> Optional[List[int]]:
    """Диагональ G_v у каждого дротика красной вершины (-1 у синих)."""
    g = q.graph
    face_edge = {face_id: e for e, face_id in g_v.face_map.items()}
    faces = list(q.faces)
    face_of = [-1] * g.dart_count
    par.par_write(len(faces), lambda f: [(d, f) for d in faces[f].darts], face_of, name="dart_faces")
    poles = (g_v.s, g_v.t)

    def edge_at(d: int) -> int:
        r = g.origin[d]
        if g.colors[r] is not Color.RED:
            return -1
        face = faces[face_of[d]]
        if not face.is_outer:
            return face_edge[face.id]
        return g_v.pole_edge if r in poles else -2

    slots = par.par_map(g.dart_count, edge_at, name="dart_diagonals")
    if -2 in slots:
        return None
    return slots


def _tour_sequence(
    q: Quadrangulation,
    g_v: DiagonalGraph,
    orientation: Orientation,
    slots: Sequence[int],
    fwd: Sequence[int],
    back: Sequence[int],
    par: ParRuntime,
) -> Optional[Tuple[int, ...]]:
    g = q.graph
    n = orientation.n
    s, t = orientation.s, orientation.t
    tails, heads = orientation.tails, orientation.heads
    local = g_v.graph.local_index()
    D = g.dart_count

    def vertex(d: int) -> int:
        return local[g.origin[d]]

    out = par.par_map(D, lambda d: slots[d] >= 0 and tails[slots[d]] == vertex(d), name="slot_out")
    pole_s = next(d for d in q.outer.darts if g.origin[d] == g_v.s)

    # родитель вершины — самое левое входящее ребро: за ним по вращению идёт исходящее
    parent_edge = [-1] * n
    par.par_write(
        D,
        lambda d: [(vertex(d), slots[d])]
        if slots[d] >= 0 and not out[d] and out[fwd[d]] and vertex(d) != t
        else [],
        parent_edge,
        name="leftmost_in",
    )
    if any(parent_edge[v] < 0 for v in range(n) if v not in (s, t)):
        return None

    tail_slot = [-1] * orientation.m
    par.par_write(D, lambda d: [(slots[d], d)] if out[d] else [], tail_slot, name="tail_slots")

    def starts_block(d: int) -> bool:
        return d == pole_s if vertex(d) == s else not out[fwd[d]]

    first = [-1] * n
    par.par_write(D, lambda d: [(vertex(d), d)] if out[d] and starts_block(d) else [], first, name="block_start")

    def enter(v: int) -> int:
        return v

    def leave(v: int) -> int:
        return n + v

    def slot(d: int) -> int:
        return 2 * n + d

    def after(d: int) -> int:
        u, nb = vertex(d), back[d]
        done = nb == pole_s if u == s else not out[nb]
        return leave(u) if done else slot(nb)

    def links(d: int) -> List[Tuple[int, int]]:
        if not out[d]:
            return []
        w = heads[slots[d]]
        tree = w != t and parent_edge[w] == slots[d]
        return [(slot(d), enter(w) if tree else after(d))]

    def vertex_links(v: int) -> List[Tuple[int, int]]:
        if v == t:
            return []
        writes = [(enter(v), slot(first[v]))]
        if v != s:
            writes.append((leave(v), after(tail_slot[parent_edge[v]])))
        return writes

    if any(first[v] < 0 for v in range(n) if v != t):
        return None
    size = 2 * n + D
    succ = [TERMINATOR] * size
    par.par_write(D, links, succ, name="tour_slots")
    par.par_write(n, vertex_links, succ, name="tour_vertices")
    rank = par.list_rank(succ, name="tour_rank")

    length = 2 * (n - 1) + sum(1 for d in range(D) if out[d])
    flags = [0] * length
    par.par_write(
        n,
        lambda v: [(length - 1 - rank[enter(v)], 1)] if v != t else [],
        flags,
        name="tour_enters",
    )
    before, _ = par.prefix_sum(flags, name="preorder")
    number = par.par_map(n, lambda v: n if v == t else before[length - 1 - rank[enter(v)]] + 1, name="preorder_number")
    if sorted(number) != list(range(1, n + 1)) or backward_edges(orientation, number, par):
        return None

    sequence = [0] * n
    par.par_write(n, lambda v: [(number[v] - 1, v)], sequence, name="preorder_place")
    return tuple(sequence)


def planar_sequence(
    q: Quadrangulation,
    g_v: DiagonalGraph,
    orientation: Orientation,
    par: Optional[ParRuntime] = None,
) -> Optional[Tuple[int, ...]]:
    """
    Вершины G_v (локальные индексы) в порядке, где все рёбра ориентации
    идут вперёд; None, если обход не дал такого порядка (например, при
    цикле в ориентации).
    """
    runtime = par or ParRuntime()
    slots = _slot_edges(q, g_v, runtime)
    if slots is None:
        return None
    g = q.graph
    for fwd, back in ((g.next_cw, g.prev_cw), (g.prev_cw, g.next_cw)):
        try:
            sequence = _tour_sequence(q, g_v, orientation, slots, fwd, back, runtime)
        except (WriteConflict, ListCycleError):
            sequence = None
        if sequence is not None:
            return sequence
    return None
