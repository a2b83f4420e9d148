"""
Иерархия исключений runtime.

Все доменные ошибки наследуются от SegmentRuntimeError и несут:
- stage: имя стадии конвейера (проставляется StageMiddleware при пробросе)
- context: словарь с идентификаторами для логов (вершины, грани, рёбра)

Ошибки входных данных (GraphInputError и наследники) CLI превращает в код выхода 2.
"""

from typing import Any, Dict, Optional


class SegmentRuntimeError(Exception):
    """Базовая ошибка runtime."""

    def __init__(self, message: str, stage: Optional[str] = None, **context: Any):
        super().__init__(message)
        self.message = message
        self.stage = stage
        self.context: Dict[str, Any] = dict(context)

    def with_stage(self, stage: str) -> "SegmentRuntimeError":
        """Проставить стадию, если она ещё не указана."""
        if self.stage is None:
            self.stage = stage
        return self

    def __str__(self) -> str:
        prefix = f"[{self.stage}] " if self.stage else ""
        return f"{prefix}{type(self).__name__}: {self.message}"


# --- входные данные -------------------------------------------------------

class GraphInputError(SegmentRuntimeError):
    """Некорректный входной граф (синтаксис или семантика)."""


class ParseError(GraphInputError):
    """Синтаксическая ошибка текстового формата."""

    def __init__(self, message: str, line: Optional[int] = None, **context: Any):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message, line=line, **context)
        self.line = line


class LoopEdge(GraphInputError):
    """Петля в списке вращения."""


class NonBipartite(GraphInputError):
    """Ребро соединяет вершины одного цвета."""


class RotationMismatch(GraphInputError):
    """u перечисляет v k раз, а v перечисляет u k' != k раз."""


class OuterFaceNotFound(GraphInputError):
    """Подсказка outer: не совпадает ни с одной гранью вложения."""


class NotTwoConnected(GraphInputError):
    """Граф не 2-связен (есть точка сочленения или он несвязен)."""


class MissingStEdge(GraphInputError):
    """Ребро (s, t) отсутствует."""


# --- par-runtime ----------------------------------------------------------

class WriteConflict(SegmentRuntimeError):
    """Два процессора пишут в одну ячейку под политикой disjoint."""


class ListCycleError(SegmentRuntimeError):
    """Список для list_rank содержит цикл без терминатора."""


class EmptyReduction(SegmentRuntimeError):
    """par_reduce вызван на пустом входе."""


# --- алгоритмы ------------------------------------------------------------

class RepeatedBoundaryVertex(SegmentRuntimeError):
    """Обход грани повторяет вершину."""


class NoConflictFreeAnchor(SegmentRuntimeError):
    """Ни один красный вершины грани не годится в якорь без дублирования ребра."""


class DuplicateEdge(SegmentRuntimeError):
    """Попытка добавить уже существующее ребро."""


class InvalidEarDecomposition(SegmentRuntimeError):
    """Разложение на уши нарушает инварианты."""


class OrientationCycle(SegmentRuntimeError):
    """Ориентация содержит цикл."""


class ResultNotBipolar(SegmentRuntimeError):
    """Ориентация красных диагоналей не биполярна."""


class RetractionConflict(SegmentRuntimeError):
    """Ретракция хорды даёт сегмент отрицательной длины."""
