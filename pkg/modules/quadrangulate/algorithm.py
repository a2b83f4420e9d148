"""
Параллельная квадрангуляция: веер хорд из одного красного якоря на грань.

Проход:
1) грани текущего графа (extract_faces), отсортированные списки инцидентности
2) для каждой грани длины >= 6 — choose_anchor (процессор на грань)
3) одинаковые хорды двух граней разрешаются min-combine по id грани;
   проигравшие грани ждут следующего прохода
4) apply_chords — вставка всех принятых хорд одним splice

Проходы повторяются, пока остаются грани длины > 4.
"""

from __future__ import annotations

from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx

from core.errors import (
    DuplicateEdge,
    GraphInputError,
    NoConflictFreeAnchor,
    NotTwoConnected,
    RepeatedBoundaryVertex,
    SegmentRuntimeError,
)
from core.par_runtime import ParRuntime, WritePolicy
from modules.graph.embedding import extract_faces, face_incidence_lists_batch, outer_face
from modules.graph.model import Color, EmbeddedBipartiteGraph, FaceRecord, VertexId
from modules.quadrangulate.model import AnchorChoice, Poles, Quadrangulation


def choose_anchor(
    face: FaceRecord,
    g: EmbeddedBipartiteGraph,
    reds: Optional[Sequence[VertexId]] = None,
) -> AnchorChoice:
    """
    Выбрать якорь грани: наименьший красный, хорды которого не дублируют рёбер.

    Хорды идут от якоря ко всем синим грани, кроме двух соседей якоря по грани.

    Args:
        face: грань текущего графа
        g: текущий граф (проверка уже существующих рёбер)
        reds: красные грани по возрастанию (по умолчанию sorted(face.reds))

    Raises:
        RepeatedBoundaryVertex: обход грани повторяет вершину
        NoConflictFreeAnchor: каждый красный уже смежен с одной из целей
    """
    if face.has_repeated_vertex():
        raise RepeatedBoundaryVertex(
            f"face {face.id} repeats a boundary vertex: {list(face.vertices)}", face=face.id
        )
    length = face.length
    ordered_reds = list(reds) if reds is not None else sorted(face.reds)
    position = {v: i for i, v in enumerate(face.vertices)}

    if length <= 4:
        anchor = ordered_reds[0] if ordered_reds else face.vertices[0]
        return AnchorChoice(face_id=face.id, anchor=anchor, chords=(), darts=face.darts)

    for red in ordered_reds:
        p = position[red]
        targets = [face.vertices[(p + off) % length] for off in range(3, length - 2, 2)]
        if any(g.has_edge(red, b) for b in targets):
            continue
        darts = face.darts[p:] + face.darts[:p]
        return AnchorChoice(
            face_id=face.id,
            anchor=red,
            chords=tuple((red, b) for b in targets),
            darts=darts,
        )
    raise NoConflictFreeAnchor(
        f"every red of face {face.id} is already adjacent to a target blue",
        face=face.id,
        reds=ordered_reds,
    )


def apply_chords(
    g: EmbeddedBipartiteGraph,
    choices: Sequence[AnchorChoice],
    par: Optional[ParRuntime] = None,
) -> EmbeddedBipartiteGraph:
    """
    Вставить хорды выбранных якорей одним шагом splice.

    Новый дротик у вершины x встаёт сразу после twin(дротика, входящего в x
    по обходу грани), то есть внутрь угла этой грани. У якоря все хорды
    грани образуют одну цепочку в порядке по часовой стрелке.
    Новые рёбра получают id m, m+1, ... в порядке (грань, позиция в обходе).

    Raises:
        DuplicateEdge: хорда уже есть в графе или повторяется в choices
    """
    runtime = par or ParRuntime()
    ordered = sorted((c for c in choices if c.chords), key=lambda c: c.face_id)
    if not ordered:
        return g

    seen = set(g.edge_keys)
    origin = list(g.origin)
    insertions: List[Tuple[int, List[int]]] = []
    e = g.m
    for choice in ordered:
        darts = choice.darts
        length = len(darts)
        anchor_chain: List[int] = []
        for idx, (a, b) in enumerate(choice.chords):
            key = (min(a, b), max(a, b))
            if key in seen:
                raise DuplicateEdge(f"chord ({a},{b}) already exists", u=a, v=b, face=choice.face_id)
            seen.add(key)
            offset = 3 + 2 * idx
            # дротик, входящий в синюю вершину по обходу
            entering = darts[offset - 1]
            origin.extend((a, b))
            insertions.append((entering ^ 1, [2 * e + 1]))
            anchor_chain.append(2 * e)
            e += 1
        anchor_chain.reverse()
        insertions.append((darts[length - 1] ^ 1, anchor_chain))

    added = len(origin) - g.dart_count
    next_cw = list(g.next_cw) + [0] * added
    prev_cw = list(g.prev_cw) + [0] * added
    runtime.splice(next_cw, prev_cw, insertions, name="chord_splice")
    return EmbeddedBipartiteGraph(
        n=g.n,
        colors=g.colors,
        origin=origin,
        next_cw=next_cw,
        prev_cw=prev_cw,
        outer_dart=g.outer_dart,
    )


def _check_input(g: EmbeddedBipartiteGraph) -> None:
    if g.n < 4:
        raise GraphInputError(f"quadrangulation needs n >= 4, got {g.n}")
    if len(g.edge_keys) != g.m:
        raise GraphInputError("input graph has parallel edges", m=g.m)
    graph = g.to_networkx()
    if not nx.is_connected(graph):
        raise NotTwoConnected("input graph is disconnected")
    if not nx.is_biconnected(graph):
        cut = sorted(nx.articulation_points(graph))
        raise NotTwoConnected(f"input graph has cut vertices {cut}", cut_vertices=cut)


def read_poles(g: EmbeddedBipartiteGraph, outer: FaceRecord) -> Poles:
    """
    Полюса по внешней грани из 4 вершин.

    s_u — синяя с наименьшим id, t_u — другая синяя; s_v — красная, идущая
    по обходу внешней грани сразу за s_u, t_v — другая красная.
    """
    walk = list(outer.vertices)
    if len(walk) != 4:
        raise SegmentRuntimeError(f"outer face has {len(walk)} vertices, expected 4")
    blues = [v for v in walk if g.colors[v] is Color.BLUE]
    reds = [v for v in walk if g.colors[v] is Color.RED]
    s_u = min(blues)
    t_u = max(blues)
    s_v = walk[(walk.index(s_u) + 1) % 4]
    t_v = reds[0] if reds[1] == s_v else reds[1]
    return Poles(s_v=s_v, s_u=s_u, t_v=t_v, t_u=t_u)


def _plan_pass(
    g: EmbeddedBipartiteGraph, faces: Sequence[FaceRecord], par: ParRuntime
) -> Tuple[List[AnchorChoice], List[int]]:
    """Выбор якорей всех больших граней и разрешение конфликтов хорд."""
    big = [f for f in faces if f.length > 4]
    incidence = face_incidence_lists_batch(big, par)
    choices: List[AnchorChoice] = par.par_map(
        len(big), lambda i: choose_anchor(big[i], g, incidence[i][0]), name="choose_anchor"
    )

    owner: Dict[Tuple[int, int], int] = {}
    flat = [(choice.face_id, key) for choice in choices for key in
            ((min(a, b), max(a, b)) for a, b in choice.chords)]
    par.par_write(len(flat), lambda i: [(flat[i][1], flat[i][0])], owner, WritePolicy.MIN_COMBINE, name="chord_owner")

    verdict = par.par_map(
        len(choices),
        lambda i: all(owner[(min(a, b), max(a, b))] == choices[i].face_id for a, b in choices[i].chords),
        name="chord_accept",
    )
    accepted = [c for c, ok in zip(choices, verdict) if ok]
    deferred = [c.face_id for c, ok in zip(choices, verdict) if not ok]
    return accepted, deferred


def quadrangulate(
    g: EmbeddedBipartiteGraph,
    par: Optional[ParRuntime] = None,
    max_passes: int = 64,
) -> Quadrangulation:
    """
    Достроить 2-связный двудольный плоский граф до квадрангуляции.

    Raises:
        NotTwoConnected: граф несвязен или имеет точку сочленения
        GraphInputError: n < 4 или кратные рёбра
        NoConflictFreeAnchor, RepeatedBoundaryVertex: из choose_anchor
    """
    runtime = par or ParRuntime()
    _check_input(g)

    current = g
    passes = 0
    deferrals = 0
    faces = extract_faces(current, runtime)
    while any(f.length > 4 for f in faces):
        if passes >= max_passes:
            raise NoConflictFreeAnchor(
                f"quadrangulation did not converge in {max_passes} passes",
                open_faces=sum(1 for f in faces if f.length > 4),
            )
        accepted, deferred = _plan_pass(current, faces, runtime)
        deferrals += len(deferred)
        current = apply_chords(current, accepted, runtime)
        faces = extract_faces(current, runtime)
        passes += 1

    if current.m != 2 * current.n - 4:
        raise SegmentRuntimeError(f"quadrangulation has m={current.m}, expected {2 * current.n - 4}")
    return Quadrangulation(
        graph=current,
        added_chords=frozenset(range(g.m, current.m)),
        poles=read_poles(current, outer_face(faces)),
        faces=tuple(faces),
        input_m=g.m,
        passes=passes,
        deferrals=deferrals,
    )


def remove_chords(q: Quadrangulation) -> EmbeddedBipartiteGraph:
    """Вернуть входной граф: удалить добавленные хорды."""
    return q.graph.without_edges(sorted(q.added_chords))
