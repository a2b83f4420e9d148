"""
Генератор корпуса: случайные квадрангуляции и их 2-связные подграфы.

Рост начинается с C4 (0 red, 1 blue, 2 red, 3 blue; внешняя грань 0 1 2 3).
Шаг — случайная внутренняя грань (a, b, c, d) и новая вершина w цвета b,
соединённая с a и c; грань распадается на (a, b, c, w) и (c, d, a, w).
Все грани остаются 4-циклами, m = 2n − 4 на каждом шаге.

Затем каждое ребро вне внешнего 4-цикла удаляется с вероятностью rate,
если граф остаётся 2-связным: две грани ребра (u, v) должны пересекаться
ровно по {u, v}, тогда объединённая грань — простой цикл.
"""

from __future__ import annotations

import random
from typing import Dict, Iterable, List, Sequence, Tuple

from core.errors import ParseError
from modules.corpus.model import Instance, InstanceSpec
from modules.graph.embedding import build_graph
from modules.graph.model import Color, EmbeddedBipartiteGraph, VertexId

OUTER = (0, 1, 2, 3)

Face = Sequence[VertexId]


def _insert_after(rotation: List[VertexId], anchor: VertexId, v: VertexId) -> None:
    rotation.insert(rotation.index(anchor) + 1, v)


def _grow(n: int, rng: random.Random) -> Tuple[List[Color], List[List[VertexId]], List[Face]]:
    colors = [Color.RED, Color.BLUE, Color.RED, Color.BLUE]
    rotations: List[List[VertexId]] = [[1, 3], [0, 2], [1, 3], [0, 2]]
    faces: List[Face] = [OUTER]
    while len(colors) < n:
        k = rng.randrange(len(faces))
        a, b, c, d = faces[k]
        if rng.random() < 0.5:
            a, b, c, d = b, c, d, a
        w = len(colors)
        colors.append(colors[b])
        _insert_after(rotations[a], d, w)
        _insert_after(rotations[c], b, w)
        rotations.append([a, c])
        faces[k] = (a, b, c, w)
        faces.append((c, d, a, w))
    return colors, rotations, faces


def _remove_chords(
    rotations: List[List[VertexId]], faces: List[Face], rate: float, rng: random.Random
) -> int:
    """Удалить рёбра с вероятностью rate, сохраняя 2-связность. Возвращает число удалённых."""
    # внешняя грань обходится 0 3 2 1
    cycles: Dict[int, Face] = {i: f for i, f in enumerate(faces)}
    cycles[-1] = (0, 3, 2, 1)
    face_of: Dict[Tuple[VertexId, VertexId], int] = {}
    for i, cycle in cycles.items():
        for j, u in enumerate(cycle):
            face_of[(u, cycle[(j + 1) % len(cycle)])] = i

    outer_edges = {frozenset((OUTER[j], OUTER[(j + 1) % 4])) for j in range(4)}
    candidates = sorted({(min(u, v), max(u, v)) for (u, v) in face_of} - {tuple(sorted(e)) for e in outer_edges})
    rng.shuffle(candidates)

    removed = 0
    for u, v in candidates:
        if rng.random() >= rate:
            continue
        f1, f2 = face_of[(u, v)], face_of[(v, u)]
        c1, c2 = list(cycles[f1]), list(cycles[f2])
        if f1 == f2 or set(c1) & set(c2) != {u, v}:
            continue
        i, j = c1.index(v), c2.index(u)
        first = c1[i:] + c1[:i]
        second = c2[j:] + c2[:j]
        merged = first + second[1:-1]
        del cycles[f2]
        cycles[f1] = merged
        del face_of[(u, v)], face_of[(v, u)]
        for k, x in enumerate(merged):
            face_of[(x, merged[(k + 1) % len(merged)])] = f1
        rotations[u].remove(v)
        rotations[v].remove(u)
        removed += 1
    return removed


def generate(spec: InstanceSpec) -> Instance:
    """
    Экземпляр корпуса по спецификации.

    Raises:
        ValueError: спецификация вне границ
    """
    spec.validate()
    rng = random.Random(spec.seed)
    colors, rotations, faces = _grow(spec.n, rng)
    reference = build_graph(spec.n, colors, rotations, outer_face_hint=list(OUTER))
    if spec.rate > 0:
        _remove_chords(rotations, faces, spec.rate, rng)
    graph = build_graph(spec.n, colors, rotations, outer_face_hint=list(OUTER))
    return Instance(spec=spec, graph=graph, reference=reference)


def generate_quadrangulation(seed: int, n: int) -> EmbeddedBipartiteGraph:
    return generate(InstanceSpec(seed=seed, n=n, rate=0.0)).reference


def parse_spec_file(text: str) -> List[InstanceSpec]:
    """
    Файл корпуса: по строке `seed n rate`, `#` — комментарий.

    Raises:
        ParseError: синтаксис или значения вне границ
    """
    specs: List[InstanceSpec] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 3:
            raise ParseError("corpus line must be 'seed n rate'", line=lineno)
        try:
            spec = InstanceSpec(seed=int(parts[0]), n=int(parts[1]), rate=float(parts[2]))
            spec.validate()
        except ValueError as exc:
            raise ParseError(str(exc), line=lineno)
        specs.append(spec)
    return specs


def format_spec_file(specs: Iterable[InstanceSpec]) -> str:
    return "".join(f"{s.seed} {s.n} {s.rate:g}\n" for s in specs)
