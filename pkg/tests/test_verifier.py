"""
Тесты верификатора: геометрия пересечений, нарушения представления,
st-нумерация, квадрангуляция.
"""

import dataclasses

from modules.graph.io import parse_graph
from modules.graph.model import Multigraph
from modules.layout.model import Axis, Segment, SegmentLayout
from modules.quadrangulate.algorithm import quadrangulate
from modules.quadrangulate.model import Poles
from modules.verifier import model as kinds
from modules.verifier.checks import verify_layout, verify_numbering, verify_quadrangulation
from modules.verifier.geometry import EMPTY, OVERLAP, POINT, intersect, is_interior

from tests.samples import STAR_TEXT


def V(owner, x, lo, hi):
    return Segment(Axis.VERTICAL, owner, x, lo, hi)


def H(owner, y, lo, hi):
    return Segment(Axis.HORIZONTAL, owner, y, lo, hi)


def _c4_layout(**overrides):
    segments = {
        "verticals": (V(0, 2, 2, 4), V(2, 4, 2, 4)),
        "horizontals": (H(1, 2, 2, 4), H(3, 4, 2, 4)),
    }
    segments.update(overrides)
    return SegmentLayout(p=2, q=2, **segments)


class TestIntersect:
    def test_perpendicular_touch(self):
        hit = intersect(V(0, 2, 2, 4), H(1, 4, 2, 6))
        assert hit.kind == POINT
        assert hit.point == (2, 4)

    def test_perpendicular_order_does_not_matter(self):
        assert intersect(H(1, 4, 2, 6), V(0, 2, 2, 4)).point == (2, 4)

    def test_perpendicular_miss(self):
        hit = intersect(V(0, 2, 2, 4), H(1, 6, 2, 6))
        assert hit.kind == EMPTY
        assert not hit

    def test_parallel_overlap(self):
        hit = intersect(V(0, 2, 2, 6), V(2, 2, 4, 8))
        assert hit.kind == OVERLAP
        assert hit.interval == (4, 6)

    def test_parallel_share_endpoint(self):
        hit = intersect(H(1, 2, 2, 4), H(3, 2, 4, 6))
        assert hit.kind == POINT
        assert hit.point == (4, 2)

    def test_parallel_apart(self):
        assert not intersect(V(0, 2, 2, 4), V(2, 4, 2, 4))

    def test_is_interior(self):
        seg = V(0, 2, 2, 6)
        assert is_interior(seg, (2, 4))
        assert not is_interior(seg, (2, 6))
        assert not is_interior(seg, (4, 4))


def test_c4_layout_passes(c4):
    report = verify_layout(c4, _c4_layout())
    assert report.ok
    assert report.stats["contacts"] == 4
    assert "PASS" in report.to_text()


def test_crossing_pair(c4):
    # V0 и H1 пересекаются во внутренней точке (4, 4)
    layout = SegmentLayout(
        p=3,
        q=3,
        verticals=(V(0, 4, 2, 6), V(2, 6, 4, 6)),
        horizontals=(H(1, 4, 2, 6), H(3, 6, 4, 6)),
    )
    report = verify_layout(c4, layout)
    assert report.kinds() == [kinds.CROSSING_PAIR]
    assert report.violations[0].point == (4, 4)


def test_out_of_grid(c4):
    layout = _c4_layout(verticals=(V(0, 3, 2, 4), V(2, 4, 2, 4)))
    report = verify_layout(c4, layout)
    assert kinds.OUT_OF_GRID in report.kinds()


def test_shared_fixed_coordinate_is_off_grid(c4):
    layout = _c4_layout(verticals=(V(0, 2, 2, 4), V(2, 2, 6, 8)))
    assert kinds.OUT_OF_GRID in verify_layout(c4, layout).kinds()


def test_spurious_intersection(c6_chord, hexagon):
    layout = SegmentLayout(
        p=3,
        q=3,
        verticals=(V(0, 2, 2, 6), V(4, 4, 4, 6), V(2, 6, 2, 6)),
        horizontals=(H(1, 2, 2, 6), H(3, 4, 2, 6), H(5, 6, 2, 5)),
    )
    # H3 касается V0, а (0, 3) есть только в c6_chord
    assert verify_layout(c6_chord, layout).ok
    report = verify_layout(hexagon, layout)
    assert report.kinds() == [kinds.SPURIOUS_INTERSECTION]


def test_missing_contact_and_coverage(c4):
    layout = _c4_layout(horizontals=(H(1, 2, 2, 4),))
    report = verify_layout(c4, layout)
    assert kinds.COVERAGE_MISMATCH in report.kinds()
    assert report.count(kinds.MISSING_CONTACT) == 2


def test_missing_contact_names_edges_of_absent_segment(c4):
    layout = _c4_layout(horizontals=(H(1, 2, 2, 4),))
    missing = [v.owners for v in verify_layout(c4, layout).violations if v.kind == kinds.MISSING_CONTACT]
    assert missing == [(0, 3), (2, 3)]

    # оба сегмента есть, но не касаются
    apart = _c4_layout(verticals=(V(0, 2, 2, 3), V(2, 4, 2, 4)))
    missing = [v.owners for v in verify_layout(c4, apart).violations if v.kind == kinds.MISSING_CONTACT]
    assert missing == [(0, 3)]


def test_wrong_orientation(c4):
    layout = _c4_layout(verticals=(V(1, 2, 2, 4), V(2, 4, 2, 4)), horizontals=(H(0, 2, 2, 4), H(3, 4, 2, 4)))
    assert kinds.WRONG_ORIENTATION in verify_layout(c4, layout).kinds()


def test_three_segments_at_one_point():
    star = parse_graph(STAR_TEXT)
    layout = SegmentLayout(
        p=1, q=3, verticals=(V(0, 2, 2, 6),), horizontals=(H(1, 2, 2, 2), H(2, 4, 2, 2), H(3, 6, 2, 2))
    )
    assert verify_layout(star, layout).ok
    squeezed = dataclasses.replace(layout, horizontals=(H(1, 2, 2, 2), H(2, 2, 2, 2), H(3, 6, 2, 2)))
    assert kinds.INTERIOR_SHARING in verify_layout(star, squeezed).kinds()


def test_report_rendering(c4):
    layout = _c4_layout(verticals=(V(0, 3, 2, 4), V(2, 5, 2, 4)))
    report = verify_layout(c4, layout)
    text = report.to_text(limit=1)
    assert text.startswith("layout: FAIL")
    assert "more" in text
    payload = report.as_dict()
    assert payload["ok"] is False
    assert payload["violations"][0]["kind"] == kinds.OUT_OF_GRID


DIAMOND = Multigraph(4, ((0, 1), (0, 2), (1, 3), (2, 3), (0, 3)))


def test_numbering_accepts_valid():
    assert verify_numbering(DIAMOND, (1, 2, 3, 4), 0, 3).ok
    assert verify_numbering(DIAMOND, {0: 1, 1: 3, 2: 2, 3: 4}, 0, 3).ok


def test_numbering_not_bijection():
    report = verify_numbering(DIAMOND, (1, 1, 3, 4), 0, 3)
    assert report.kinds() == [kinds.NOT_BIJECTION]


def test_numbering_wrong_poles():
    report = verify_numbering(DIAMOND, (2, 1, 3, 4), 0, 3)
    assert kinds.SOURCE_NOT_LOWEST in report.kinds()
    # вершина 1 с номером 1 не имеет соседа ниже, но 1 не полюс
    assert kinds.NO_LOWER_NEIGHBOR in report.kinds()


def test_numbering_missing_higher_neighbor():
    path = Multigraph(4, ((0, 1), (0, 2), (2, 3), (0, 3)))
    report = verify_numbering(path, (1, 2, 3, 4), 0, 3)
    assert report.kinds() == [kinds.NO_HIGHER_NEIGHBOR]
    assert report.violations[0].owners == (1,)


def test_quadrangulation_checks(hexagon, c4, par):
    assert verify_quadrangulation(quadrangulate(hexagon, par)).ok
    report = verify_quadrangulation(hexagon)
    assert kinds.FACE_NOT_QUADRANGLE in report.kinds()
    assert kinds.EDGE_COUNT in report.kinds()
    assert verify_quadrangulation(c4, Poles(0, 1, 2, 3)).ok


def test_quadrangulation_pole_colors(c4):
    report = verify_quadrangulation(c4, Poles(s_v=1, s_u=0, t_v=2, t_u=3))
    assert report.count(kinds.POLE_NOT_ON_OUTER) == 2


async def test_verifier_services(runtime, c4):
    report = await runtime.call("verifier.layout", c4, _c4_layout())
    assert report.ok
    links = await runtime.call("verifier.intersections", _c4_layout())
    assert links == c4.edge_keys
