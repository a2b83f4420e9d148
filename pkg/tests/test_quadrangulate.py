"""
Тесты квадрангуляции: веер хорд, разрешение конфликтов, полюса, ошибки входа.
"""

import pytest

from core.errors import DuplicateEdge, GraphInputError, NotTwoConnected, RepeatedBoundaryVertex
from modules.graph.embedding import extract_faces, outer_face, validate
from modules.graph.io import outer_hint, parse_graph
from modules.quadrangulate.algorithm import apply_chords, choose_anchor, quadrangulate, remove_chords
from modules.quadrangulate.model import AnchorChoice, Poles
from modules.verifier.checks import verify_quadrangulation

from tests.samples import BOWTIE_TEXT, DOUBLED_C4_TEXT, STAR_TEXT


def test_c4_is_already_a_quadrangulation(c4, par):
    q = quadrangulate(c4, par)
    assert q.added_chords == frozenset()
    assert q.passes == 0
    assert q.graph is c4
    assert q.poles == Poles(s_v=0, s_u=1, t_v=2, t_u=3)
    assert verify_quadrangulation(q).ok


def test_hexagon_gets_two_chords(hexagon, par):
    q = quadrangulate(hexagon, par)
    assert q.graph.m == 2 * q.graph.n - 4
    assert q.chord_pairs() == [(0, 3), (2, 5)]
    assert all(face.length == 4 for face in q.faces)
    assert len(q.faces) == 4
    assert tuple(q.poles) == (0, 1, 2, 5)


def test_conflicting_chord_is_deferred(hexagon, par):
    # обе шестиугольные грани предлагают хорду (0, 3); внешняя ждёт второго прохода
    q = quadrangulate(hexagon, par)
    assert q.passes == 2
    assert q.deferrals == 1


def test_poles_lie_on_outer_face(grid_2x3, par):
    q = quadrangulate(grid_2x3, par)
    assert len(q.added_chords) == 1
    outer = set(q.outer.vertices)
    assert set(q.poles) == outer
    assert q.graph.colors[q.poles.s_u] is q.graph.colors[q.poles.t_u]
    assert verify_quadrangulation(q).ok


def test_remove_chords_restores_input(hexagon, grid_2x3, par):
    for g in (hexagon, grid_2x3):
        q = quadrangulate(g, par)
        restored = remove_chords(q)
        assert restored == g


def test_quadrangulation_is_simple_and_two_connected(c6_chord, par):
    q = quadrangulate(c6_chord, par)
    report = validate(q.graph, par)
    assert report.simple
    assert report.two_connected
    assert report.faces_alternate


def test_choose_anchor_prefers_smallest_red(hexagon, par):
    inner = [f for f in extract_faces(hexagon, par) if not f.is_outer][0]
    choice = choose_anchor(inner, hexagon)
    assert choice.anchor == 0
    assert choice.chords == ((0, 3),)


def test_choose_anchor_skips_existing_edge(c6_chord, par):
    outer = outer_face(extract_faces(c6_chord, par))
    choice = choose_anchor(outer, c6_chord)
    assert choice.anchor == 2
    assert choice.chords == ((2, 5),)


def test_choose_anchor_rejects_repeated_vertex(par):
    bowtie = parse_graph(BOWTIE_TEXT)
    with pytest.raises(RepeatedBoundaryVertex):
        choose_anchor(outer_face(extract_faces(bowtie, par)), bowtie)


def test_apply_chords_rejects_duplicate(c6_chord, par):
    outer = outer_face(extract_faces(c6_chord, par))
    choice = AnchorChoice(face_id=outer.id, anchor=0, chords=((0, 3),), darts=outer.darts)
    with pytest.raises(DuplicateEdge):
        apply_chords(c6_chord, [choice], par)


def test_star_is_not_two_connected(par):
    with pytest.raises(NotTwoConnected):
        quadrangulate(parse_graph(STAR_TEXT), par)


def test_bowtie_reports_cut_vertex(par):
    with pytest.raises(NotTwoConnected) as exc:
        quadrangulate(parse_graph(BOWTIE_TEXT), par)
    assert exc.value.context["cut_vertices"] == [0]


def test_parallel_edges_rejected(par):
    with pytest.raises(GraphInputError, match="parallel"):
        quadrangulate(parse_graph(DOUBLED_C4_TEXT), par)


def test_too_small_graph_rejected(par):
    with pytest.raises(GraphInputError, match="n >= 4"):
        quadrangulate(parse_graph("2 1\n0 red 1\n1 blue 0\nouter: 0 1\n"), par)


async def test_rounds_recorded_in_phase(runtime, hexagon):
    q = await runtime.call("quadrangulate.run", hexagon)
    assert q.graph.m == 8
    assert runtime.par.report.rounds("quadrangulate") > 0


async def test_service_tags_stage_on_error(runtime):
    with pytest.raises(NotTwoConnected) as exc:
        await runtime.call("quadrangulate.run", parse_graph(STAR_TEXT))
    assert exc.value.stage == "quadrangulate"
    assert str(exc.value).startswith("[quadrangulate] NotTwoConnected")


async def test_render_lists_chords_and_poles(runtime, hexagon):
    q = await runtime.call("quadrangulate.run", hexagon)
    text = await runtime.call("quadrangulate.render", q)
    assert "# chords: 2" in text
    assert "# poles: 0 1 2 5" in text
    restored = parse_graph(text)
    assert restored.edge_keys == q.graph.edge_keys
    assert outer_hint(restored) == outer_hint(q.graph)
