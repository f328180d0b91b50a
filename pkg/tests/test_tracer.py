import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from netlab.surface import BOTTOM, TOP, PolygonSpec, angle_of, build_surface
from netlab.tracer import (NotGeodesic, SingularHit, StartAtCone, classify_isometry, develop,
                           develop_word, holonomy, launch, reverse, solve_closed, trace)


def test_straight_line_inside_one_sheet():
    s = build_surface(PolygonSpec.regular(4))
    p = trace(s, s.point((0.0, 0.0)), 0.0, 0.3)
    assert p.word == [] and p.end.sheet == TOP
    assert p.end.coords == pytest.approx((0.3, 0.0))


def test_perpendicular_bounce_in_the_square():
    # hand oracle: from the centre along the apothem of edge 0, the path meets
    # the edge at its midpoint, crosses to Bottom and comes back to the centre
    s = build_surface(PolygonSpec.regular(4))
    a = s.apothem
    d = math.pi / 4  # normal direction of edge 0
    p = trace(s, s.point((0.0, 0.0)), d, 2 * a)
    assert p.word == [0] and p.perpendicular == [0]
    assert p.crossing_params == pytest.approx([0.5])
    assert p.end.sheet == BOTTOM
    assert np.allclose(p.end.coords, (0.0, 0.0), atol=1e-12)
    assert abs(p.length - 2 * a) < 1e-12


def test_hitting_a_cone_raises():
    s = build_surface(PolygonSpec.regular(4))
    with pytest.raises(SingularHit):
        trace(s, s.point((0.0, 0.0)), 0.0, 5.0)  # straight into vertex 0
    with pytest.raises(StartAtCone):
        trace(s, s.point(s.vertices[1]), 0.0, 1.0)


def test_max_crossings_stops_on_the_edge():
    s = build_surface(PolygonSpec.regular(5))
    p = trace(s, s.point((0.05, 0.02)), 0.3, 50.0, max_crossings=3)
    assert len(p.word) == 3 and p.end.on_edge
    assert p.length < 50.0


def test_launch_from_seam():
    s = build_surface(PolygonSpec.regular(4))
    M = s.edge_midpoint(0)
    inward = angle_of(-s.normals[0])
    outward = angle_of(s.normals[0])
    assert launch(s, M, inward)[0] == TOP
    sheet, d = launch(s, M, outward)
    assert sheet == BOTTOM and np.allclose(d, -s.normals[0])
    # gliding along the seam is allowed
    assert launch(s, M, angle_of(s.tangents[0]))[0] == TOP


def test_negative_length_rejected():
    s = build_surface(PolygonSpec.regular(4))
    with pytest.raises(ValueError):
        trace(s, s.point((0.0, 0.0)), 0.0, -1.0)


def test_development_detects_a_bent_path():
    s = build_surface(PolygonSpec.regular(6))
    p = trace(s, s.point((0.1, 0.0)), 1.0, 4.0)
    dev = develop(s, p)
    assert dev.deviation < 1e-12
    # corrupt one vertex of the polyline
    seg = p.segments[1]
    p.segments[1] = type(seg)(seg.sheet, seg.p0, (seg.p1[0] + 1e-3, seg.p1[1]))
    with pytest.raises(NotGeodesic):
        develop(s, p)


def test_holonomy_composes_reflections():
    s = build_surface(PolygonSpec.regular(5))
    isos = holonomy(s, [0, 2, 4])
    assert len(isos) == 4
    assert np.allclose(isos[3], s.reflection(0) @ s.reflection(2) @ s.reflection(4))
    assert classify_isometry(isos[1]) == "reflection"
    assert classify_isometry(isos[2]) in ("rotation", "translation")
    assert classify_isometry(isos[3]) in ("reflection", "glide")


def test_corridor_contains_traced_direction():
    s = build_surface(PolygonSpec.regular(7))
    start = s.point((0.1, -0.05))
    p = trace(s, start, 0.9, 6.0)
    cor = develop_word(s, p.word)
    assert cor.contains_direction(start, 0.9)
    assert not cor.contains_direction(start, 0.9 + math.pi)


def test_solve_closed_figure_eight_loop_on_the_triangle():
    # oracle: from the midpoint of edge 0 of the equilateral triangle, the
    # perpendicular to edge 1 bounces straight back (word [1])
    s = build_surface(PolygonSpec.regular(3))
    sols = solve_closed(s, [1], 0)
    assert len(sols) == 1
    cp = sols[0]
    assert abs(math.cos(cp.departure_angle - angle_of(s.normals[1])) - 1) < 1e-12
    assert cp.corner_angle == pytest.approx(math.pi / 3)
    M = s.edge_midpoint(0)
    assert cp.path.end.same_point(M, 1e-9)
    assert solve_closed(s, [0], 0) == []  # cannot leave through its own edge
    assert solve_closed(s, [], 0) == []


@settings(max_examples=200, deadline=None)
@given(st.integers(3, 12), st.floats(0.01, 0.95), st.floats(0.0, 2 * math.pi),
       st.floats(0.1, 8.0))
def test_reverse_returns_to_start(n, r, direction, length):
    s = build_surface(PolygonSpec.regular(n))
    start = s.point((r * s.apothem * 0.7, 0.1 * r), TOP)
    try:
        p = trace(s, start, direction, length)
    except SingularHit:
        return
    if p.end.locus.kind != "interior":
        return
    back = reverse(s, p)
    assert math.dist(back.end.coords, start.coords) < 1e-9
