import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from netlab.surface import (BOTTOM, TOP, InvalidSpec, OutsidePolygon, PolygonSpec,
                            build_surface, other_sheet)


@pytest.mark.parametrize("n", range(3, 13))
def test_regular_cones_carry_4pi_over_n(n):
    s = build_surface(PolygonSpec.regular(n))
    assert all(f == Fraction(4, n) for f in s.curvature_over_pi)
    assert all(abs(c.curvature - 4 * math.pi / n) < 1e-12 for c in s.cones)
    # a doubled polygon is a sphere: total curvature 4pi
    assert abs(s.total_curvature - 4 * math.pi) < 1e-12


def test_regular_placement():
    s = build_surface(PolygonSpec.regular(6, 2.0))
    assert np.allclose(s.vertices[0], [2.0, 0.0])
    assert np.allclose(s.edge_lengths, 2.0)
    assert s.apothem == pytest.approx(math.sqrt(3))
    # outward normals: the centre is inside every edge's half-plane
    assert np.all(s.normals @ np.zeros(2) - s.offsets < 0)


@pytest.mark.parametrize("angles", [(30, 30, 120), (70, 70, 40), (90, 45, 45), (20, 60, 100)])
def test_triangle_placement(angles):
    s = build_surface(PolygonSpec.triangle_deg(angles, 3.0))
    interior = [c.interior_angle * 180 / math.pi for c in s.cones]
    assert np.allclose(interior, angles)
    assert max(s.edge_lengths) == pytest.approx(3.0)
    assert sum(s.curvature_over_pi) == 4
    # edge k is opposite... the vertex not on it; law of sines holds
    opp = [s.edge_lengths[(k + 1) % 3] for k in range(3)]
    ratios = [o / math.sin(math.radians(a)) for o, a in zip(opp, angles)]
    assert np.allclose(ratios, ratios[0])


@pytest.mark.parametrize("bad", [
    PolygonSpec.regular(2),
    PolygonSpec.regular(5, 0.0),
    PolygonSpec.triangle((1.0, 1.0, 1.0)),
    PolygonSpec("hexagon", n=6),
])
def test_invalid_specs(bad):
    with pytest.raises(InvalidSpec):
        build_surface(bad)


def test_triangle_deg_rejects_bad_sum():
    with pytest.raises(InvalidSpec):
        build_surface(PolygonSpec.triangle_deg((60, 60, 61)))


def test_classify_and_snap():
    s = build_surface(PolygonSpec.regular(4))
    assert s.classify((0.0, 0.0)).kind == "interior"
    loc = s.classify(s.edge_point(1, 0.25))
    assert (loc.kind, loc.index) == ("edge", 1) and loc.t == pytest.approx(0.25)
    assert s.classify(s.vertices[2] + 1e-14).kind == "cone"
    with pytest.raises(OutsidePolygon):
        s.classify((2.0, 0.0))
    p = s.point(s.edge_point(0, 0.5) + 1e-14, BOTTOM)
    assert p.on_edge and p.identified().sheet == TOP


def test_edge_midpoint():
    s = build_surface(PolygonSpec.regular(5))
    M = s.edge_midpoint(3)
    assert M.locus.kind == "edge" and M.locus.t == 0.5
    assert np.allclose(M.xy, (s.vertices[3] + s.vertices[4]) / 2)
    with pytest.raises(IndexError):
        s.edge_midpoint(5)


def test_same_point_respects_sheets():
    s = build_surface(PolygonSpec.regular(3))
    a, b = s.point((0.1, 0.1), TOP), s.point((0.1, 0.1), BOTTOM)
    assert not a.same_point(b, 1e-9)
    m = s.edge_midpoint(0)
    assert m.same_point(m.identified(), 1e-12)
    assert other_sheet(TOP) == BOTTOM and other_sheet(BOTTOM) == TOP


@given(st.integers(3, 12), st.integers(0, 11), st.floats(-5, 5), st.floats(-5, 5))
def test_reflection_is_an_involution_fixing_the_edge(n, e, x, y):
    s = build_surface(PolygonSpec.regular(n))
    e %= n
    m = s.reflection(e)
    assert np.allclose(m @ m, np.eye(3), atol=1e-12)
    assert np.allclose(s.reflect_point(e, s.reflect_point(e, (x, y))), (x, y), atol=1e-9)
    p = s.edge_point(e, 0.3)
    assert np.allclose(s.reflect_point(e, p), p, atol=1e-12)


def test_spec_json_roundtrip():
    for spec in (PolygonSpec.regular(7, 1.5), PolygonSpec.triangle_deg((30, 30, 120), 2.0),
                 PolygonSpec.triangle_deg(("22.5", "67.5", 90))):
        back = PolygonSpec.from_json(spec.to_json())
        assert back == spec
        assert back.angles_deg == spec.angles_deg


def test_chart_direction():
    s = build_surface(PolygonSpec.regular(4))
    v = np.array([0.6, 0.8])
    assert np.allclose(s.chart_direction(s.point((0.1, 0.2), TOP), TOP, v), v)
    assert np.allclose(s.chart_direction(s.point((0.1, 0.2), BOTTOM), BOTTOM, v), [0.6, -0.8])
    M = s.edge_midpoint(0)
    assert np.allclose(s.chart_direction(M, BOTTOM, v), s.reflect_vector(0, v))


def test_scaled_surface():
    s = build_surface(PolygonSpec.regular(6)).scaled(3.0)
    assert s.scale == 3.0 and np.allclose(s.edge_lengths, 3.0)
