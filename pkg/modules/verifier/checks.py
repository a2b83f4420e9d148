"""
Проверки: представление касаниями, st-нумерация, квадрангуляция.

verify_layout — перебор всех пар сегментов за O(n²); с кодом построения
layout он не делит ничего, кроме типа Segment.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from typing import Any, Dict, FrozenSet, List, Mapping, Optional, Sequence, Set, Tuple, Union

from modules.graph.model import Color, EmbeddedBipartiteGraph, Multigraph, VertexId
from modules.layout.model import SCALE, Axis, Segment, SegmentLayout
from modules.quadrangulate.model import Poles, Quadrangulation
from modules.verifier import model as kinds
from modules.verifier.geometry import OVERLAP, intersect, is_interior
from modules.verifier.model import VerificationReport, Violation


def _grid_violations(layout: SegmentLayout) -> List[Violation]:
    out: List[Violation] = []
    limits = {Axis.VERTICAL: (layout.p, layout.q), Axis.HORIZONTAL: (layout.q, layout.p)}
    for seg in layout.segments():
        fixed_max, span_max = limits[seg.axis]
        if seg.fixed % SCALE or not SCALE <= seg.fixed <= SCALE * fixed_max:
            out.append(Violation(kinds.OUT_OF_GRID, f"fixed coordinate {seg.fixed} off the grid", (seg.owner,)))
        if seg.lo > seg.hi or seg.lo < SCALE or seg.hi > SCALE * span_max:
            out.append(Violation(kinds.OUT_OF_GRID, f"extent [{seg.lo}, {seg.hi}] off the grid", (seg.owner,)))
    for axis in Axis:
        taken = Counter(seg.fixed for seg in layout.segments() if seg.axis is axis)
        for fixed, count in sorted(taken.items()):
            if count > 1:
                owners = tuple(s.owner for s in layout.segments() if s.axis is axis and s.fixed == fixed)
                out.append(Violation(kinds.OUT_OF_GRID, f"{count} {axis.name.lower()} segments share {fixed}", owners))
    return out


def _coverage_violations(g: EmbeddedBipartiteGraph, layout: SegmentLayout) -> List[Violation]:
    out: List[Violation] = []
    owners = Counter(seg.owner for seg in layout.segments())
    expected = set(range(g.n))
    missing = sorted(expected - set(owners))
    extra = sorted(set(owners) - expected)
    repeated = sorted(v for v, c in owners.items() if c > 1)
    if missing:
        out.append(Violation(kinds.COVERAGE_MISMATCH, f"vertices without a segment: {missing[:10]}", tuple(missing)))
    if extra:
        out.append(Violation(kinds.COVERAGE_MISMATCH, f"segments of unknown vertices: {extra[:10]}", tuple(extra)))
    if repeated:
        out.append(Violation(kinds.COVERAGE_MISMATCH, f"vertices with several segments: {repeated[:10]}", tuple(repeated)))
    for seg in layout.segments():
        if seg.owner not in expected:
            continue
        want = Color.RED if seg.axis is Axis.VERTICAL else Color.BLUE
        if g.colors[seg.owner] is not want:
            out.append(
                Violation(
                    kinds.WRONG_ORIENTATION,
                    f"{g.colors[seg.owner].value} vertex drawn as {seg.axis.name.lower()} segment",
                    (seg.owner,),
                )
            )
    return out


def verify_layout(g: EmbeddedBipartiteGraph, layout: SegmentLayout) -> VerificationReport:
    """
    Проверить, что layout — представление касаниями графа g.

    Порядок проверок: покрытие и цвета, сетка, попарная непересекаемость
    параллельных, перпендикулярные пары (касание ⇔ ребро, касание — конец
    хотя бы одного сегмента), точки, общие для трёх и более сегментов.
    """
    violations = _coverage_violations(g, layout) + _grid_violations(layout)
    segments: List[Segment] = list(layout.segments())
    adjacent = g.edge_keys
    contacts: Dict[Tuple[int, int], Set[VertexId]] = defaultdict(set)
    touched: Set[Tuple[VertexId, VertexId]] = set()
    pairs = 0

    for i, a in enumerate(segments):
        for b in segments[i + 1 :]:
            if a.axis is not b.axis:
                continue
            pairs += 1
            hit = intersect(a, b)
            if hit:
                where = hit.point if hit.kind != OVERLAP else None
                violations.append(
                    Violation(kinds.PARALLEL_OVERLAP, "parallel segments share a point", (a.owner, b.owner), where)
                )

    for i, a in enumerate(segments):
        for b in segments[i + 1 :]:
            if a.axis is b.axis:
                continue
            pairs += 1
            key = (min(a.owner, b.owner), max(a.owner, b.owner))
            hit = intersect(a, b)
            if not hit:
                continue
            touched.add(key)
            point = hit.point
            contacts[point].update(key)
            if key not in adjacent:
                violations.append(
                    Violation(kinds.SPURIOUS_INTERSECTION, f"non-adjacent {key} intersect", key, point)
                )
            if is_interior(a, point) and is_interior(b, point):
                violations.append(Violation(kinds.CROSSING_PAIR, f"segments of {key} cross", key, point))

    # ребро без касания, в том числе когда у конца нет сегмента
    for key in sorted(adjacent - touched):
        violations.append(Violation(kinds.MISSING_CONTACT, f"edge {key} has no contact", key))

    for point, owners in sorted(contacts.items()):
        if len(owners) > 2:
            violations.append(
                Violation(kinds.INTERIOR_SHARING, f"{len(owners)} segments meet at one point", tuple(sorted(owners)), point)
            )

    return VerificationReport(
        subject="layout",
        violations=tuple(violations),
        stats={"pairs": pairs, "contacts": len(contacts), "segments": len(segments)},
    )


def intersection_graph(layout: SegmentLayout) -> FrozenSet[Tuple[VertexId, VertexId]]:
    """Пары владельцев перпендикулярных сегментов, имеющих общую точку."""
    verticals, horizontals = layout.verticals, layout.horizontals
    return frozenset(
        (min(v.owner, h.owner), max(v.owner, h.owner)) for v in verticals for h in horizontals if intersect(v, h)
    )


NumberingLike = Union[Sequence[int], Mapping[int, int], Any]


def _as_numbers(numbering: NumberingLike, n: int) -> List[Optional[int]]:
    if hasattr(numbering, "number"):
        numbering = numbering.number
    if isinstance(numbering, Mapping):
        return [numbering.get(v) for v in range(n)]
    values = list(numbering)
    return values + [None] * (n - len(values))


def verify_numbering(
    g: Union[EmbeddedBipartiteGraph, Multigraph], numbering: NumberingLike, s: int, t: int
) -> VerificationReport:
    """
    st-нумерация: биекция на 1..n, number(s) = 1, number(t) = n, у остальных
    вершин есть сосед с меньшим и сосед с большим номером.
    """
    n = g.n
    number = _as_numbers(numbering, n)
    violations: List[Violation] = []
    if len(number) != n or sorted(x for x in number if x is not None) != list(range(1, n + 1)):
        violations.append(Violation(kinds.NOT_BIJECTION, f"numbers must be a permutation of 1..{n}"))
        return VerificationReport(subject="numbering", violations=tuple(violations), stats={"n": n})
    if number[s] != 1:
        violations.append(Violation(kinds.SOURCE_NOT_LOWEST, f"s={s} has number {number[s]}", (s,)))
    if number[t] != n:
        violations.append(Violation(kinds.SINK_NOT_HIGHEST, f"t={t} has number {number[t]}", (t,)))

    lower = [False] * n
    higher = [False] * n
    for u, v in g.edge_pairs():
        if number[u] < number[v]:
            higher[u] = lower[v] = True
        elif number[v] < number[u]:
            higher[v] = lower[u] = True
    for v in range(n):
        if v in (s, t):
            continue
        if not lower[v]:
            violations.append(Violation(kinds.NO_LOWER_NEIGHBOR, f"vertex {v} has no lower neighbor", (v,)))
        if not higher[v]:
            violations.append(Violation(kinds.NO_HIGHER_NEIGHBOR, f"vertex {v} has no higher neighbor", (v,)))
    return VerificationReport(subject="numbering", violations=tuple(violations), stats={"n": n})


def _walk_faces(g: EmbeddedBipartiteGraph) -> List[List[int]]:
    seen = [False] * g.dart_count
    faces: List[List[int]] = []
    for start in range(g.dart_count):
        if seen[start]:
            continue
        face = []
        d = start
        while not seen[d]:
            seen[d] = True
            face.append(d)
            d = g.next_cw[d ^ 1]
        faces.append(face)
    return faces


def verify_quadrangulation(
    q: Union[Quadrangulation, EmbeddedBipartiteGraph], poles: Optional[Poles] = None
) -> VerificationReport:
    """
    Квадрангуляция: все грани длины 4 без повторов вершин, граф простой,
    m = 2n − 4, двудольность, полюса на внешней грани.
    """
    if isinstance(q, Quadrangulation):
        g, poles = q.graph, poles or q.poles
    else:
        g = q
    violations: List[Violation] = []
    faces = _walk_faces(g)
    outer_vertices: Tuple[VertexId, ...] = ()
    for face in faces:
        vertices = tuple(g.origin[d] for d in face)
        if g.outer_dart in face:
            outer_vertices = vertices
        if len(face) != 4 or len(set(vertices)) != 4:
            violations.append(
                Violation(kinds.FACE_NOT_QUADRANGLE, f"face of length {len(face)}: {list(vertices)[:12]}", vertices)
            )

    multiplicity = Counter((min(u, v), max(u, v)) for u, v in g.edges())
    for key, count in sorted(multiplicity.items()):
        if count > 1:
            violations.append(Violation(kinds.NOT_SIMPLE, f"edge {key} appears {count} times", key))
    if g.m != 2 * g.n - 4:
        violations.append(Violation(kinds.EDGE_COUNT, f"m must be 2n-4={2 * g.n - 4}, got {g.m}"))
    for u, v in g.edges():
        if g.colors[u] is g.colors[v]:
            violations.append(Violation(kinds.NOT_BIPARTITE, f"edge ({u}, {v}) joins equal colors", (u, v)))

    if poles is not None:
        expected = {"s_v": Color.RED, "t_v": Color.RED, "s_u": Color.BLUE, "t_u": Color.BLUE}
        for name, vertex in poles._asdict().items():
            if vertex not in outer_vertices:
                violations.append(Violation(kinds.POLE_NOT_ON_OUTER, f"pole {name}={vertex} not on outer face", (vertex,)))
            elif g.colors[vertex] is not expected[name]:
                violations.append(
                    Violation(kinds.POLE_NOT_ON_OUTER, f"pole {name}={vertex} must be {expected[name].value}", (vertex,))
                )

    return VerificationReport(
        subject="quadrangulation",
        violations=tuple(violations),
        stats={"n": g.n, "m": g.m, "faces": len(faces)},
    )
