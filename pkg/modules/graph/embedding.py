"""
Операции graph-core: построение графа из системы вращений, извлечение граней,
структурная валидация, списки инцидентности граней.

Построение однопоточное; extract_faces и сортировки идут шагами ParRuntime.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx

from core.errors import LoopEdge, NonBipartite, OuterFaceNotFound, RotationMismatch, GraphInputError
from core.par_runtime import TERMINATOR, ParRuntime, ceil_log2
from modules.graph.model import Color, EmbeddedBipartiteGraph, FaceRecord, ValidationReport, VertexId


def build_graph(
    n: int,
    colors: Sequence[Color],
    rotations: Sequence[Sequence[VertexId]],
    outer_face_hint: Sequence[VertexId],
) -> EmbeddedBipartiteGraph:
    """
    Построить вложенный граф из списков соседей по часовой стрелке.

    Кратные рёбра: i-е вхождение v в списке u парится с (k-1-i)-м вхождением u
    в списке v (зеркальный порядок соседних параллельных рёбер).
    Рёбра нумеруются по (u по возрастанию, позиция в списке u) для u < v.

    outer_face_hint — граница внешней грани против часовой стрелки
    (обход внешней грани по дротикам идёт в обратном порядке); допускается
    любой циклический сдвиг, а при отсутствии совпадения — и обратный порядок.

    Raises:
        GraphInputError, LoopEdge, NonBipartite, RotationMismatch, OuterFaceNotFound
    """
    if n < 1:
        raise GraphInputError(f"n must be positive, got: {n}")
    if len(colors) != n:
        raise GraphInputError(f"colors must cover all {n} vertices, got {len(colors)}")
    if len(rotations) != n:
        raise GraphInputError(f"rotations must cover all {n} vertices, got {len(rotations)}")

    occurrences: Dict[Tuple[int, int], List[int]] = defaultdict(list)
    for u, rot in enumerate(rotations):
        for pos, v in enumerate(rot):
            if not 0 <= v < n:
                raise GraphInputError(f"vertex {u} lists unknown neighbor {v}", vertex=u)
            if v == u:
                raise LoopEdge(f"loop edge at vertex {u}", vertex=u)
            if colors[u] is colors[v]:
                raise NonBipartite(
                    f"edge ({u},{v}) joins two {colors[u].value} vertices", u=u, v=v
                )
            occurrences[(u, v)].append(pos)

    for (u, v), positions in occurrences.items():
        back = len(occurrences.get((v, u), ()))
        if len(positions) != back:
            raise RotationMismatch(
                f"vertex {u} lists {v} {len(positions)} times but {v} lists {u} {back} times",
                u=u,
                v=v,
            )

    # дротик для каждой позиции каждого списка
    dart_at: Dict[Tuple[int, int], int] = {}
    origin: List[int] = []
    for u, rot in enumerate(rotations):
        for pos, v in enumerate(rot):
            if u > v:
                continue
            mine = occurrences[(u, v)]
            theirs = occurrences[(v, u)]
            i = mine.index(pos)
            e = len(origin) // 2
            dart_at[(u, pos)] = 2 * e
            dart_at[(v, theirs[len(theirs) - 1 - i])] = 2 * e + 1
            origin.extend((u, v))

    next_cw = [0] * len(origin)
    prev_cw = [0] * len(origin)
    for u, rot in enumerate(rotations):
        k = len(rot)
        for pos in range(k):
            d = dart_at[(u, pos)]
            nxt = dart_at[(u, (pos + 1) % k)]
            next_cw[d] = nxt
            prev_cw[nxt] = d

    draft = EmbeddedBipartiteGraph(n, colors, origin, next_cw, prev_cw, outer_dart=0)
    outer = _resolve_outer_dart(draft, list(outer_face_hint))
    return EmbeddedBipartiteGraph(n, colors, origin, next_cw, prev_cw, outer_dart=outer)


def _rotation_offset(walk: List[int], target: List[int]) -> Optional[int]:
    if len(walk) != len(target):
        return None
    k = len(walk)
    for off in range(k):
        if all(walk[(off + i) % k] == target[i] for i in range(k)):
            return off
    return None


def _resolve_outer_dart(g: EmbeddedBipartiteGraph, hint: List[int]) -> int:
    if not hint:
        raise OuterFaceNotFound("outer face hint is empty")
    if g.dart_count == 0:
        raise OuterFaceNotFound("graph has no edges, outer face undefined")

    seen = [False] * g.dart_count
    walks: List[List[int]] = []
    for d in range(g.dart_count):
        if seen[d]:
            continue
        walk = g.walk(d)
        for x in walk:
            seen[x] = True
        walks.append(walk)

    ccw = hint[:1] + hint[:0:-1]
    for target in (ccw, hint):
        for walk in walks:
            vertices = [g.origin[x] for x in walk]
            off = _rotation_offset(vertices, target)
            if off is not None:
                return walk[off]
    raise OuterFaceNotFound(f"outer face hint {hint} is not a face of the embedding")


def extract_faces(g: EmbeddedBipartiteGraph, par: ParRuntime) -> List[FaceRecord]:
    """
    Грани как циклы перестановки face_next.

    1) лидер цикла — минимальный id дротика: указательный прыжок, ceil(log2 D) раундов
    2) цикл разрывается перед лидером, позиции — list_rank
    3) id граней — префиксная сумма по флагам лидеров; порядок граней — по лидеру

    Returns:
        грани по возрастанию дротика-лидера
    """
    D = g.dart_count
    if D == 0:
        return []
    nxt = par.par_map(D, lambda d: g.next_cw[d ^ 1], name="face_next")

    label = list(range(D))
    jump = list(nxt)
    for _ in range(ceil_log2(D)):
        lab, jp = label, jump
        pairs = par.par_map(D, lambda d: (min(lab[d], lab[jp[d]]), jp[jp[d]]), name="face_leader")
        label = [p[0] for p in pairs]
        jump = [p[1] for p in pairs]

    succ = par.par_map(D, lambda d: TERMINATOR if nxt[d] == label[d] else nxt[d], name="face_break")
    rank = par.list_rank(succ, name="face_rank")

    is_leader = par.par_map(D, lambda d: 1 if label[d] == d else 0, name="face_flags")
    face_index, face_count = par.prefix_sum(is_leader, name="face_ids")
    leaders = [d for d in range(D) if is_leader[d]]
    lengths = [rank[d] + 1 for d in leaders]
    offsets, _ = par.prefix_sum(lengths, name="face_offsets")

    flat = [0] * D

    def place(d: int) -> List[Tuple[int, int]]:
        leader = label[d]
        f = face_index[leader]
        return [(offsets[f] + rank[leader] - rank[d], d)]

    par.par_write(D, place, flat, name="face_place")

    outer_leader = label[g.outer_dart]
    faces: List[FaceRecord] = []
    for f, leader in enumerate(leaders):
        darts = tuple(flat[offsets[f] : offsets[f] + lengths[f]])
        vertices = tuple(g.origin[d] for d in darts)
        faces.append(
            FaceRecord(
                id=f,
                darts=darts,
                vertices=vertices,
                reds=tuple(v for v in vertices if g.colors[v] is Color.RED),
                blues=tuple(v for v in vertices if g.colors[v] is Color.BLUE),
                is_outer=(leader == outer_leader),
            )
        )
    return faces


def outer_face(faces: Sequence[FaceRecord]) -> FaceRecord:
    for face in faces:
        if face.is_outer:
            return face
    raise OuterFaceNotFound("no face carries the outer dart")


def face_incidence_lists_batch(
    faces: Sequence[FaceRecord], par: ParRuntime
) -> List[Tuple[List[VertexId], List[VertexId]]]:
    """
    Отсортированные списки красных и синих вершин для многих граней одной сортировкой.

    Ключ (грань, цвет, вершина); повторы вершины в обходе сворачиваются.
    """
    keys: List[Tuple[int, int, int]] = []
    for i, face in enumerate(faces):
        keys.extend((i, 0, v) for v in set(face.reds))
        keys.extend((i, 1, v) for v in set(face.blues))
    order = par.par_sort(keys, name="incidence_sort")
    out: List[Tuple[List[VertexId], List[VertexId]]] = [([], []) for _ in faces]
    for idx in order:
        face_i, color_flag, v = keys[idx]
        out[face_i][color_flag].append(v)
    return out


def face_incidence_lists(face: FaceRecord, par: ParRuntime) -> Tuple[List[VertexId], List[VertexId]]:
    """(красные по возрастанию, синие по возрастанию) для одной грани."""
    return face_incidence_lists_batch([face], par)[0]


def validate(g: EmbeddedBipartiteGraph, par: Optional[ParRuntime] = None) -> ValidationReport:
    """
    Отчёт о двудольности, связности, формуле Эйлера, простоте и 2-связности.

    Связность и 2-связность считает networkx по мультиграфу рёбер.
    """
    problems: List[str] = []
    runtime = par or ParRuntime()

    rotation_ok = True
    for d in range(g.dart_count):
        if g.prev_cw[g.next_cw[d]] != d or g.origin[g.next_cw[d]] != g.origin[d]:
            rotation_ok = False
            problems.append(f"rotation list broken at dart {d}")
            break

    bipartite = all(g.colors[u] is not g.colors[v] for u, v in g.edges())
    if not bipartite:
        problems.append("edge joins equal colors")

    graph = g.to_networkx()
    connected = g.n > 0 and nx.is_connected(graph)
    if not connected:
        problems.append("graph is not connected")
    two_connected = connected and g.n >= 2 and nx.is_biconnected(graph)
    if connected and not two_connected:
        cut = sorted(nx.articulation_points(graph)) if g.n > 2 else []
        problems.append(f"cut vertices: {cut}")

    multiplicity = Counter((min(u, v), max(u, v)) for u, v in g.edges())
    simple = all(k == 1 for k in multiplicity.values())
    if not simple:
        problems.append("parallel edges present")

    faces = extract_faces(g, runtime) if rotation_ok else []
    euler = rotation_ok and g.n - g.m + len(faces) == 2
    if not euler:
        problems.append(f"euler check failed: n={g.n} m={g.m} f={len(faces)}")
    faces_alternate = all(
        face.length % 2 == 0
        and all(
            g.colors[face.vertices[i]] is not g.colors[face.vertices[(i + 1) % face.length]]
            for i in range(face.length)
        )
        for face in faces
    )

    return ValidationReport(
        bipartite=bipartite,
        connected=connected,
        euler=euler,
        face_count=len(faces),
        simple=simple,
        two_connected=two_connected,
        rotation_consistent=rotation_ok,
        faces_alternate=faces_alternate,
        problems=problems,
    )
