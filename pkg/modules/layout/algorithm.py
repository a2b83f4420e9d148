"""
Построение представления касаниями по квадрангуляции.

1) диагональные графы G_u (синие) и G_v (красные): по диагонали на
   внутреннюю грань плюс полюсное ребро через внешнюю грань
2) st-нумерация G_u даёт y синих
3) красные диагонали ориентируются слева направо относительно направленной
   синей диагонали; топологическая нумерация даёт x красных
4) протяжённости — min/max по рёбрам квадрангуляции, затем ретракция хорд
"""

from __future__ import annotations

from dataclasses import replace
from typing import Dict, List, Optional, Sequence, Tuple

from core.errors import OrientationCycle, ResultNotBipolar, RetractionConflict
from core.par_runtime import ParRuntime, WritePolicy
from modules.graph.model import Color, EmbeddedBipartiteGraph, Multigraph, VertexId
from modules.layout.model import SCALE, Axis, DiagonalGraph, Orderings, Segment, SegmentLayout
from modules.layout.planar_order import planar_sequence
from modules.quadrangulate.model import Quadrangulation
from modules.stnumber.algorithm import st_number
from modules.stnumber.model import Orientation
from modules.stnumber.orient import longest_path_levels, number_by_sequence, topo_number

STRATEGIES = ("retract", "direct")


def _diagonal_graph(
    q: Quadrangulation, color: Color, s: VertexId, t: VertexId, par: ParRuntime
) -> DiagonalGraph:
    g = q.graph
    labels = tuple(g.vertices_of(color))
    index = {v: i for i, v in enumerate(labels)}
    inner = [face for face in q.faces if not face.is_outer]

    def diagonal(face) -> Tuple[int, int]:
        ends = face.blues if color is Color.BLUE else face.reds
        return index[ends[0]], index[ends[1]]

    edges = par.par_map(inner, diagonal, name="diagonals")
    edges.append((index[s], index[t]))
    face_map = {e: face.id for e, face in enumerate(inner)}
    return DiagonalGraph(
        color=color,
        graph=Multigraph(n=len(labels), edges=tuple(edges), labels=labels),
        face_map=face_map,
        pole_edge=len(inner),
        s=s,
        t=t,
    )


def build_diagonal_graphs(
    q: Quadrangulation, par: Optional[ParRuntime] = None
) -> Tuple[DiagonalGraph, DiagonalGraph]:
    """
    Графы синих и красных диагоналей.

    Returns:
        (G_u, G_v)
    """
    runtime = par or ParRuntime()
    poles = q.poles
    g_u = _diagonal_graph(q, Color.BLUE, poles.s_u, poles.t_u, runtime)
    g_v = _diagonal_graph(q, Color.RED, poles.s_v, poles.t_v, runtime)
    return g_u, g_v


def order_blues(g_u: DiagonalGraph, par: Optional[ParRuntime] = None) -> Dict[VertexId, int]:
    """
    s_u t_u-нумерация синих вершин.

    Raises:
        NotTwoConnected, MissingStEdge, InvalidEarDecomposition, OrientationCycle
    """
    numbering = st_number(g_u.graph, g_u.local(g_u.s), g_u.local(g_u.t), par)
    return numbering.relabel(g_u.graph.labels)


def orient_red_diagonals(
    q: Quadrangulation,
    g_v: DiagonalGraph,
    blue_rank: Dict[VertexId, int],
    par: Optional[ParRuntime] = None,
) -> Orientation:
    """
    Ориентировать красные диагонали.

    Внутренняя грань обходится против часовой стрелки; начиная с синей b
    меньшего ранга, обход [b, x, b', y] кладёт x справа от b → b', y слева.
    Диагональ ориентируется y → x, полюсное ребро s_v → t_v.

    Порядок вершин (sequence) даёт обход плоского st-графа; если обход
    не сработал, ацикличность проверяется уровнями.

    Raises:
        ResultNotBipolar: цикл, лишний источник или сток
    """
    runtime = par or ParRuntime()
    faces = {face.id: face for face in q.faces}
    local = g_v.graph.local_index()

    def arc(e: int) -> Tuple[int, int]:
        if e == g_v.pole_edge:
            return local[g_v.s], local[g_v.t]
        face = faces[g_v.face_map[e]]
        walk = list(face.vertices)
        low = min(face.blues, key=lambda b: blue_rank[b])
        i = walk.index(low)
        seq = walk[i:] + walk[:i]
        return local[seq[3]], local[seq[1]]

    arcs = runtime.par_map(g_v.graph.m, arc, name="orient_diagonals")
    orientation = Orientation(
        n=g_v.graph.n,
        tails=tuple(a for a, _ in arcs),
        heads=tuple(b for _, b in arcs),
        s=local[g_v.s],
        t=local[g_v.t],
    )
    labels = g_v.graph.labels
    _check_poles(orientation, labels)
    sequence = planar_sequence(q, g_v, orientation, runtime)
    if sequence is None:
        check_bipolar(orientation, labels, runtime)
        return orientation
    return replace(orientation, sequence=sequence)


def _check_poles(orientation: Orientation, labels: Optional[Sequence[int]]) -> None:
    name = (lambda v: labels[v]) if labels is not None else (lambda v: v)
    indeg = orientation.in_degree()
    outdeg = orientation.out_degree()
    sources = [name(v) for v in range(orientation.n) if indeg[v] == 0]
    sinks = [name(v) for v in range(orientation.n) if outdeg[v] == 0]
    if sources != [name(orientation.s)] or sinks != [name(orientation.t)]:
        raise ResultNotBipolar(
            f"red orientation must have the single source {name(orientation.s)} "
            f"and single sink {name(orientation.t)}, got sources {sources[:10]} sinks {sinks[:10]}",
        )


def check_bipolar(
    orientation: Orientation,
    labels: Optional[Sequence[int]] = None,
    par: Optional[ParRuntime] = None,
) -> None:
    """
    Ацикличность проверяется по sequence (O(log m) раундов), без него — уровнями.

    Raises:
        ResultNotBipolar: ориентация не ацикличная или источник/сток не единственны
    """
    _check_poles(orientation, labels)
    try:
        if orientation.sequence is not None:
            number_by_sequence(orientation, par)
        else:
            longest_path_levels(orientation, par)
    except OrientationCycle as exc:
        raise ResultNotBipolar(f"red orientation is cyclic: {exc.message}")


def order_reds(
    g_v: DiagonalGraph, orientation: Orientation, par: Optional[ParRuntime] = None
) -> Dict[VertexId, int]:
    """Номера красных: топологическая нумерация ориентированного G_v."""
    return topo_number(g_v.graph, orientation, par).relabel(g_v.graph.labels)


def compute_orderings(
    q: Quadrangulation,
    par: Optional[ParRuntime] = None,
    blue_rank: Optional[Dict[VertexId, int]] = None,
) -> Orderings:
    """
    Порядки синих и красных. Готовая blue_rank (st-нумерация G_u, посчитанная
    отдельной стадией) используется как есть.
    """
    runtime = par or ParRuntime()
    g_u, g_v = build_diagonal_graphs(q, runtime)
    if blue_rank is None:
        blue_rank = order_blues(g_u, runtime)
    orientation = orient_red_diagonals(q, g_v, blue_rank, runtime)
    return Orderings(blue_rank=blue_rank, red_rank=order_reds(g_v, orientation, runtime))


def _extents(
    edges: Sequence[Tuple[VertexId, VertexId]],
    coord: Dict[VertexId, int],
    par: ParRuntime,
) -> Tuple[Dict[VertexId, int], Dict[VertexId, int]]:
    """min/max координаты соседей для каждого первого конца пары."""
    lo: Dict[VertexId, int] = {}
    hi: Dict[VertexId, int] = {}
    par.par_write(len(edges), lambda i: [(edges[i][0], coord[edges[i][1]])], lo, WritePolicy.MIN_COMBINE, name="extent_lo")
    par.par_write(len(edges), lambda i: [(edges[i][0], coord[edges[i][1]])], hi, WritePolicy.MAX_COMBINE, name="extent_hi")
    return lo, hi


def _red_blue(g: EmbeddedBipartiteGraph, e: int) -> Tuple[VertexId, VertexId]:
    u, v = g.endpoints(e)
    return (u, v) if g.colors[u] is Color.RED else (v, u)


def assign_segments(
    original: EmbeddedBipartiteGraph,
    q: Quadrangulation,
    orderings: Orderings,
    par: Optional[ParRuntime] = None,
    strategy: str = "retract",
) -> SegmentLayout:
    """
    Сегменты вершин.

    retract — протяжённости по рёбрам квадрангуляции, затем каждая хорда
    снимается сдвигом конца сегмента на полуединицу за точку контакта
    (если контакт — конец обоих сегментов, сдвигается горизонталь).
    direct — протяжённости сразу по рёбрам исходного графа, без гарантии
    корректности.

    Raises:
        ValueError: неизвестная стратегия
        RetractionConflict: контакт хорды внутренний для обоих сегментов
            или сегмент получил отрицательную длину
    """
    if strategy not in STRATEGIES:
        raise ValueError(f"strategy must be one of {STRATEGIES}, got: {strategy!r}")
    runtime = par or ParRuntime()
    x = {v: SCALE * r for v, r in orderings.red_rank.items()}
    y = {b: SCALE * r for b, r in orderings.blue_rank.items()}

    source = q.graph if strategy == "retract" else original
    pairs = runtime.par_map(source.m, lambda e: _red_blue(source, e), name="edge_colors")
    ylo, yhi = _extents(pairs, y, runtime)
    xlo, xhi = _extents([(b, r) for r, b in pairs], x, runtime)

    retracted = 0
    if strategy == "retract" and q.added_chords:
        chords = [_red_blue(q.graph, e) for e in sorted(q.added_chords)]
        cells: Dict[Tuple[str, VertexId], int] = {}

        def retract(i: int) -> List[Tuple[Tuple[str, VertexId], int]]:
            r, b = chords[i]
            px, py = x[r], y[b]
            if px == xlo[b]:
                return [(("xlo", b), xlo[b] + 1)]
            if px == xhi[b]:
                return [(("xhi", b), xhi[b] - 1)]
            if py == ylo[r]:
                return [(("ylo", r), ylo[r] + 1)]
            if py == yhi[r]:
                return [(("yhi", r), yhi[r] - 1)]
            raise RetractionConflict(
                f"chord ({r}, {b}) contact is interior to both segments", red=r, blue=b
            )

        runtime.par_write(len(chords), retract, cells, name="retract")
        tables = {"xlo": xlo, "xhi": xhi, "ylo": ylo, "yhi": yhi}
        for (table, v), value in cells.items():
            tables[table][v] = value
        retracted = len(chords)

    verticals = []
    for r in sorted(x, key=lambda v: x[v]):
        if ylo[r] > yhi[r]:
            raise RetractionConflict(f"vertical segment of {r} has negative length", vertex=r)
        verticals.append(Segment(Axis.VERTICAL, r, x[r], ylo[r], yhi[r]))
    horizontals = []
    for b in sorted(y, key=lambda v: y[v]):
        if xlo[b] > xhi[b]:
            raise RetractionConflict(f"horizontal segment of {b} has negative length", vertex=b)
        horizontals.append(Segment(Axis.HORIZONTAL, b, y[b], xlo[b], xhi[b]))

    return SegmentLayout(
        p=orderings.p,
        q=orderings.q,
        verticals=tuple(verticals),
        horizontals=tuple(horizontals),
        strategy=strategy,
        retracted=retracted,
    )


def compute_layout(
    original: EmbeddedBipartiteGraph,
    q: Quadrangulation,
    par: Optional[ParRuntime] = None,
    strategy: str = "retract",
    blue_rank: Optional[Dict[VertexId, int]] = None,
) -> SegmentLayout:
    runtime = par or ParRuntime()
    orderings = compute_orderings(q, runtime, blue_rank)
    return assign_segments(original, q, orderings, runtime, strategy=strategy)
