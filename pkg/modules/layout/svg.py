"""SVG-рисунок представления: сегменты и точки касания."""

from __future__ import annotations

import xml.etree.ElementTree as ET
from typing import Iterable, Optional, Tuple

from modules.graph.model import Color, EmbeddedBipartiteGraph
from modules.layout.model import SegmentLayout

UNIT = 40
MARGIN = 30
RED = "#c0392b"
BLUE = "#2457a6"


def contact_points(g: EmbeddedBipartiteGraph, layout: SegmentLayout) -> Iterable[Tuple[int, int]]:
    """Точка (x_red, y_blue) каждого ребра в единицах ×2."""
    owners = layout.by_owner()
    for u, v in g.edges():
        r, b = (u, v) if g.colors[u] is Color.RED else (v, u)
        if r in owners and b in owners:
            yield owners[r].fixed, owners[b].fixed


def emit_svg(
    layout: SegmentLayout,
    contacts: Optional[Iterable[Tuple[int, int]]] = None,
    unit: int = UNIT,
) -> str:
    """
    Нарисовать сегменты; y растёт вверх, поэтому ось переворачивается.

    Args:
        contacts: точки касания в единицах ×2 (рисуются кружками)
    """
    half = unit / 2
    width = (layout.p + 1) * unit + 2 * MARGIN
    height = (layout.q + 1) * unit + 2 * MARGIN

    def px(x2: int) -> float:
        return MARGIN + x2 * half

    def py(y2: int) -> float:
        return height - MARGIN - y2 * half

    svg = ET.Element("svg")
    svg.set("xmlns", "http://www.w3.org/2000/svg")
    svg.set("width", str(width))
    svg.set("height", str(height))
    svg.set("viewBox", f"0 0 {width} {height}")

    for seg in layout.verticals:
        line = ET.SubElement(svg, "line")
        line.set("x1", f"{px(seg.fixed):.1f}")
        line.set("y1", f"{py(seg.lo):.1f}")
        line.set("x2", f"{px(seg.fixed):.1f}")
        line.set("y2", f"{py(seg.hi):.1f}")
        line.set("stroke", RED)
        line.set("stroke-width", "3")
        line.set("data-vertex", str(seg.owner))
    for seg in layout.horizontals:
        line = ET.SubElement(svg, "line")
        line.set("x1", f"{px(seg.lo):.1f}")
        line.set("y1", f"{py(seg.fixed):.1f}")
        line.set("x2", f"{px(seg.hi):.1f}")
        line.set("y2", f"{py(seg.fixed):.1f}")
        line.set("stroke", BLUE)
        line.set("stroke-width", "3")
        line.set("data-vertex", str(seg.owner))

    for x2, y2 in contacts or ():
        dot = ET.SubElement(svg, "circle")
        dot.set("cx", f"{px(x2):.1f}")
        dot.set("cy", f"{py(y2):.1f}")
        dot.set("r", "4")
        dot.set("fill", "black")

    return ET.tostring(svg, encoding="unicode")
