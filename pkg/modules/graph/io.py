"""
Текстовый формат графа.

    # комментарий
    n m
    <id> <red|blue> <соседи по часовой стрелке...>
    ...
    outer: v0 v1 ... vk

Разделители — пробелы, `#` начинает комментарий до конца строки.
Строка `outer:` перечисляет внешнюю границу против часовой стрелки.
Служебные блоки `# chords:` и `# poles:` пишутся как комментарии и при
разборе игнорируются.
"""

from __future__ import annotations

from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from core.errors import GraphInputError, ParseError
from modules.graph.embedding import build_graph
from modules.graph.model import Color, EmbeddedBipartiteGraph, VertexId


def _strip(line: str) -> str:
    return line.split("#", 1)[0].strip()


def parse_graph(text: str) -> EmbeddedBipartiteGraph:
    """
    Разобрать граф из текста.

    Raises:
        ParseError: синтаксическая ошибка (с номером строки)
        GraphInputError: семантические ошибки build_graph
    """
    header: Optional[Tuple[int, int, int]] = None
    rows: Dict[int, Tuple[Color, List[int], int]] = {}
    outer: Optional[List[int]] = None

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip(raw)
        if not line:
            continue
        if header is None:
            parts = line.split()
            if len(parts) != 2:
                raise ParseError("header must be 'n m'", line=lineno)
            try:
                n, m = int(parts[0]), int(parts[1])
            except ValueError:
                raise ParseError(f"header values must be integers: {line!r}", line=lineno)
            if n < 1 or m < 0:
                raise ParseError(f"header must have n >= 1 and m >= 0, got {n} {m}", line=lineno)
            header = (n, m, lineno)
            continue
        if line.lower().startswith("outer:"):
            if outer is not None:
                raise ParseError("duplicate outer: line", line=lineno)
            try:
                outer = [int(tok) for tok in line.split(":", 1)[1].split()]
            except ValueError:
                raise ParseError(f"outer: expects vertex ids: {line!r}", line=lineno)
            if not outer:
                raise ParseError("outer: line is empty", line=lineno)
            continue
        if outer is not None:
            raise ParseError("vertex line after outer: line", line=lineno)
        parts = line.split()
        if len(parts) < 2:
            raise ParseError("vertex line must be 'id color neighbors...'", line=lineno)
        try:
            vid = int(parts[0])
            neighbors = [int(tok) for tok in parts[2:]]
        except ValueError:
            raise ParseError(f"vertex ids must be integers: {line!r}", line=lineno)
        try:
            color = Color.parse(parts[1])
        except ValueError as exc:
            raise ParseError(str(exc), line=lineno)
        if vid in rows:
            raise ParseError(f"vertex {vid} listed twice", line=lineno)
        rows[vid] = (color, neighbors, lineno)

    if header is None:
        raise ParseError("missing header line 'n m'")
    n, m, header_line = header
    if outer is None:
        raise ParseError("missing outer: line")
    for vid, (_, _, lineno) in rows.items():
        if not 0 <= vid < n:
            raise ParseError(f"vertex id {vid} out of range 0..{n - 1}", line=lineno)
    missing = [v for v in range(n) if v not in rows]
    if missing:
        raise ParseError(f"vertices without a line: {missing[:10]}")
    degree_sum = sum(len(rows[v][1]) for v in range(n))
    if degree_sum != 2 * m:
        raise ParseError(
            f"header declares m={m} but rotation lists hold {degree_sum} edge ends",
            line=header_line,
        )
    for v in outer:
        if not 0 <= v < n:
            raise ParseError(f"outer: vertex {v} out of range")

    return build_graph(
        n=n,
        colors=[rows[v][0] for v in range(n)],
        rotations=[rows[v][1] for v in range(n)],
        outer_face_hint=outer,
    )


def outer_hint(g: EmbeddedBipartiteGraph) -> List[VertexId]:
    """Внешняя граница против часовой стрелки, начиная с origin(outer_dart)."""
    walk = [g.origin[d] for d in g.walk(g.outer_dart)]
    return walk[:1] + walk[:0:-1]


def serialize_graph(
    g: EmbeddedBipartiteGraph,
    chords: Optional[Iterable[Tuple[VertexId, VertexId]]] = None,
    poles: Optional[Sequence[VertexId]] = None,
    comment: Optional[str] = None,
) -> str:
    """
    Записать граф в текстовый формат.

    Вращение каждой вершины начинается с соседа с наименьшим id, поэтому
    для простых графов parse(serialize(g)) — нормальная форма g.
    """
    lines: List[str] = []
    if comment:
        lines.extend(f"# {row}" for row in comment.splitlines())
    lines.append(f"{g.n} {g.m}")
    for v in range(g.n):
        ring = g.neighbors(v)
        if ring:
            start = ring.index(min(ring))
            ring = ring[start:] + ring[:start]
        neighbors = " ".join(str(u) for u in ring)
        lines.append(f"{v} {g.colors[v].value} {neighbors}".rstrip())
    lines.append("outer: " + " ".join(str(v) for v in outer_hint(g)))
    if chords is not None:
        chord_list = list(chords)
        lines.append(f"# chords: {len(chord_list)}")
        lines.extend(f"#   {u} {v}" for u, v in chord_list)
    if poles is not None:
        lines.append("# poles: " + " ".join(str(v) for v in poles))
    return "\n".join(lines) + "\n"


def read_graph(path: str) -> EmbeddedBipartiteGraph:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise GraphInputError(f"cannot read graph file {path}: {exc}")
    return parse_graph(text)
