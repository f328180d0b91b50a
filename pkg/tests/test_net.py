import math

import numpy as np
import pytest

from netlab import construct as C
from netlab.net import (BIFOCAL, FIGURE_EIGHT, OTHER, THETA, FewerThanThree, MalformedNet, Net,
                        balancing_defect, classify_partition, face_walk, find_crossings,
                        segment_intersection, verify)
from netlab.surface import TOP, PolygonSpec, build_surface


def test_balancing_defect_examples():
    third = 2 * math.pi / 3
    assert balancing_defect([0.0, third, 2 * third]) < 1e-15
    assert balancing_defect([0.0, math.pi / 2, math.pi, 1.5 * math.pi]) < 1e-15
    # (1,0) + (0,1) + (-1,0) leaves (0,1)
    assert balancing_defect([0.0, math.pi / 2, math.pi]) == pytest.approx(1.0)
    # vectors are normalised first
    assert balancing_defect([np.array([2.0, 0.0]), np.array([-0.5, 0.0]),
                             np.array([0.0, 3.0]), np.array([0.0, -1.0])]) < 1e-15
    with pytest.raises(FewerThanThree):
        balancing_defect([0.0, math.pi])


def test_balancing_defect_perturbation():
    # rotating one of three balanced tangents by d leaves a defect of 2 sin(d/2)
    d = 1e-3
    third = 2 * math.pi / 3
    got = balancing_defect([d, third, 2 * third])
    assert got == pytest.approx(2 * math.sin(d / 2), rel=1e-9)


def test_perturbed_theta_fails_verification():
    net = C.construct_theta_regular(6)
    specs = [(e.a, e.b, e.direction, e.length) for e in net.edges]
    a, b, d, L = specs[0]
    specs[0] = (a, b, d + 1e-3, L)
    bad = Net.build(net.surface, net.vertices, specs, THETA)
    rep = verify(bad)
    assert not rep.passed
    assert rep.balanced[0] == pytest.approx(1e-3, rel=1e-3)
    assert rep.endpoint[0] > 1e-6


def test_segment_intersection():
    p = segment_intersection(np.array([0.0, 0.0]), np.array([2.0, 2.0]),
                             np.array([0.0, 2.0]), np.array([2.0, 0.0]), 1e-12)
    assert np.allclose(p, [1.0, 1.0])
    assert segment_intersection(np.array([0.0, 0.0]), np.array([1.0, 0.0]),
                                np.array([0.0, 1.0]), np.array([1.0, 1.0]), 1e-12) is None
    # collinear overlap reports the middle of the overlap
    p = segment_intersection(np.array([0.0, 0.0]), np.array([2.0, 0.0]),
                             np.array([1.0, 0.0]), np.array([3.0, 0.0]), 1e-12)
    assert np.allclose(p, [1.5, 0.0])


def test_find_crossings_sees_an_x():
    s = build_surface(PolygonSpec.regular(4))
    verts = [s.point(p, TOP) for p in ((-0.3, 0.0), (0.3, 0.0), (0.0, -0.3), (0.0, 0.3))]
    net = Net.build(s, verts, [(0, 1, 0.0, 0.6), (2, 3, math.pi / 2, 0.6)])
    found = find_crossings(net, 1e-9)
    assert len(found) == 1
    assert found[0][4:] == pytest.approx((0.0, 0.0), abs=1e-12)


def test_malformed_nets():
    s = build_surface(PolygonSpec.regular(4))
    with pytest.raises(MalformedNet):
        verify(Net(s, [], [], OTHER))
    with pytest.raises(MalformedNet):
        Net.build(s, [s.point((0.0, 0.0))], [(0, 1, 0.0, 0.1)])
    v = [s.point((0.0, 0.0)), s.point((0.2, 0.0))]
    with pytest.raises(MalformedNet):
        verify(Net.build(s, v, [(0, 1, 0.0, 0.2)]))  # dangling
    with pytest.raises(MalformedNet):
        Net.build(s, v, [(0, 1, 0.0, 5.0)])  # runs into vertex 0


@pytest.mark.parametrize("build,kind,faces", [
    (lambda: C.construct_theta_regular(9), THETA, [(3, 2)] * 3),
    (lambda: C.construct_3regular_4n(8), "3-regular", [(2, 3)] * 4),
    (lambda: C.construct_figure8_odd(5), FIGURE_EIGHT, None),
    (lambda: C.construct_bifocal_30_30_120(), BIFOCAL, None),
])
def test_face_budgets(build, kind, faces):
    net = build()
    rep = verify(net)
    assert rep.passed
    if faces is not None:
        # oracle: n(6 - y) = 12x for every face of a 3-regular net
        n = net.surface.n
        assert sorted((f.x, f.y) for f in rep.faces) == sorted(faces)
        assert all(n * (6 - y) == 12 * x for x, y in faces)
    assert sum(f.x for f in rep.faces) == net.surface.n
    total_turning = sum(sum(f.turning_angles) for f in rep.faces)
    total_curv = sum(f.curvature for f in rep.faces)
    assert total_turning + total_curv == pytest.approx(2 * math.pi * rep.F)


def test_bifocal_faces():
    rep = verify(C.construct_bifocal_30_30_120())
    ys = sorted(f.y for f in rep.faces)
    assert ys == [1, 1, 4]
    loops = [f for f in rep.faces if f.y == 1]
    # each loop face holds one 30-degree cone (curvature 5pi/3) and turns pi/3
    for f in loops:
        assert f.curvature == pytest.approx(5 * math.pi / 3)
        assert f.turning_angles[0] == pytest.approx(math.pi / 3)
    outer = next(f for f in rep.faces if f.y == 4)
    assert outer.curvature == pytest.approx(2 * math.pi / 3)


def test_face_walk_euler():
    for net in (C.construct_theta_regular(3), C.construct_3regular_4n(4),
                C.construct_figure8_odd(3)):
        faces, face_of, corners = face_walk(net)
        assert net.V - net.E + len(faces) == 2
        assert sorted(h for f in faces for h in f) == list(range(2 * net.E))
        assert all(x >= 0 for x in face_of)


def test_classify_partition_counts():
    assert classify_partition((2, [(0, 1)] * 3)) == THETA
    assert classify_partition((1, [(0, 0), (0, 0)])) == FIGURE_EIGHT
    assert classify_partition((2, [(0, 0), (1, 1), (0, 1)])) == BIFOCAL
    assert classify_partition((2, [(0, 0), (0, 0), (0, 1)])) == OTHER
    assert classify_partition((4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])) == OTHER


def test_report_json_shape():
    js = verify(C.construct_theta_regular(3)).to_json()
    assert js["passed"] and (js["V"], js["E"], js["F"]) == (2, 3, 3)
    assert {"faces", "balancing_defects", "crossings", "tol"} <= set(js)
