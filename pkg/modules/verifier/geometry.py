"""
Точное пересечение осевых сегментов на целых координатах ×2.

Только сравнения целых, без плавающей точки.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple

from modules.layout.model import Axis, Segment

EMPTY = "empty"
POINT = "point"
OVERLAP = "overlap"


@dataclass(frozen=True)
class Intersection:
    """kind: empty | point | overlap; interval — общий отрезок параллельных сегментов."""

    kind: str
    point: Optional[Tuple[int, int]] = None
    interval: Optional[Tuple[int, int]] = None

    def __bool__(self) -> bool:
        return self.kind != EMPTY


_NONE = Intersection(EMPTY)


def intersect(a: Segment, b: Segment) -> Intersection:
    """
    Пересечение двух сегментов.

    Перпендикулярные пересекаются, если a.fixed ∈ [b.lo, b.hi] и
    b.fixed ∈ [a.lo, a.hi]; параллельные — при равных fixed и
    пересекающихся протяжённостях (общая точка даёт point, отрезок — overlap).
    """
    if a.axis is not b.axis:
        if b.lo <= a.fixed <= b.hi and a.lo <= b.fixed <= a.hi:
            if a.axis is Axis.VERTICAL:
                return Intersection(POINT, point=(a.fixed, b.fixed))
            return Intersection(POINT, point=(b.fixed, a.fixed))
        return _NONE

    if a.fixed != b.fixed:
        return _NONE
    lo, hi = max(a.lo, b.lo), min(a.hi, b.hi)
    if lo > hi:
        return _NONE
    if lo == hi:
        point = (a.fixed, lo) if a.axis is Axis.VERTICAL else (lo, a.fixed)
        return Intersection(POINT, point=point)
    return Intersection(OVERLAP, interval=(lo, hi))


def is_interior(seg: Segment, point: Tuple[int, int]) -> bool:
    """Точка лежит на сегменте и не совпадает ни с одним его концом."""
    x, y = point
    along, across = (y, x) if seg.axis is Axis.VERTICAL else (x, y)
    return across == seg.fixed and seg.lo < along < seg.hi
