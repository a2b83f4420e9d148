"""
Файл сегментов.

    p q scale=2
    V <red-id> <x2> <ylo2> <yhi2>
    H <blue-id> <y2> <xlo2> <xhi2>

Все координаты — целые, умноженные на 2. `#` начинает комментарий.
"""

from __future__ import annotations

from typing import List, Optional, Tuple

from core.errors import GraphInputError, ParseError
from modules.layout.model import SCALE, Axis, Segment, SegmentLayout


def write_segments(layout: SegmentLayout) -> str:
    lines = [f"{layout.p} {layout.q} scale={SCALE}"]
    for seg in layout.segments():
        lines.append(f"{seg.axis.value} {seg.owner} {seg.fixed} {seg.lo} {seg.hi}")
    return "\n".join(lines) + "\n"


def parse_segments(text: str) -> SegmentLayout:
    """
    Разобрать файл сегментов.

    Raises:
        ParseError: синтаксис, неверный масштаб, повтор владельца, lo > hi
    """
    header: Optional[Tuple[int, int]] = None
    verticals: List[Segment] = []
    horizontals: List[Segment] = []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if header is None:
            if len(parts) != 3 or not parts[2].startswith("scale="):
                raise ParseError("header must be 'p q scale=2'", line=lineno)
            try:
                p, q, scale = int(parts[0]), int(parts[1]), int(parts[2][len("scale="):])
            except ValueError:
                raise ParseError(f"header values must be integers: {line!r}", line=lineno)
            if scale != SCALE:
                raise ParseError(f"scale must be {SCALE}, got: {scale}", line=lineno)
            header = (p, q)
            continue
        if len(parts) != 5 or parts[0] not in ("V", "H"):
            raise ParseError("segment line must be 'V|H id fixed lo hi'", line=lineno)
        try:
            owner, fixed, lo, hi = (int(tok) for tok in parts[1:])
        except ValueError:
            raise ParseError(f"segment values must be integers: {line!r}", line=lineno)
        if lo > hi:
            raise ParseError(f"segment of {owner} must have lo <= hi, got {lo} > {hi}", line=lineno)
        if owner in seen:
            raise ParseError(f"vertex {owner} has two segments", line=lineno)
        seen.add(owner)
        seg = Segment(Axis(parts[0]), owner, fixed, lo, hi)
        (verticals if seg.axis is Axis.VERTICAL else horizontals).append(seg)

    if header is None:
        raise ParseError("missing header line 'p q scale=2'")
    return SegmentLayout(p=header[0], q=header[1], verticals=tuple(verticals), horizontals=tuple(horizontals))


def read_segments(path: str) -> SegmentLayout:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise GraphInputError(f"cannot read segment file {path}: {exc}")
    return parse_segments(text)


def save_text(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)
