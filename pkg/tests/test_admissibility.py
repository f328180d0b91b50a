import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from netlab import admissibility as adm


def test_known_face_types():
    assert adm.solve_3regular(3).solutions == [(1, 2)]
    assert adm.solve_3regular(4).solutions == [(1, 3)]
    assert adm.solve_3regular(12).solutions == [(5, 1), (4, 2), (3, 3), (2, 4), (1, 5)]
    assert adm.solve_3regular(5).solutions == []
    assert (1, 2) in adm.solve_3regular(3)


@given(st.integers(3, 500))
def test_face_types_match_the_curvature_budget(n):
    # oracle in floats: y corners turning pi/3 plus x cones of 4pi/n make 2pi
    for x, y in adm.solve_3regular(n).solutions:
        assert y * math.pi / 3 + x * 4 * math.pi / n == pytest.approx(2 * math.pi)


@given(st.integers(3, 500))
def test_loop_angles(n):
    entries = adm.figure8_loop_angles(n).entries
    want = [(x, 2 - Fraction(4 * x, n)) for x in range(n + 1)
            if 0 < 2 - Fraction(4 * x, n) < 1]
    assert entries == want
    for x, a in entries:
        # alpha + curvature of the enclosed cones = 2pi... for a face with one corner
        assert float(a) * math.pi + x * 4 * math.pi / n == pytest.approx(2 * math.pi)


def test_loop_angle_examples():
    assert adm.figure8_loop_angles(6).entries == [(2, Fraction(2, 3))]
    assert adm.figure8_loop_angles(8).alphas == [Fraction(1, 2)]
    assert adm.figure8_loop_angles(12).entries == [(4, Fraction(2, 3)), (5, Fraction(1, 3))]
    assert adm.loop_angle(4, 1) == 1


def test_bad_n():
    for bad in (2, 0, -3, 3.0, True):
        with pytest.raises(ValueError):
            adm.solve_3regular(bad)


def test_classify_triangle_radians():
    r = math.pi / 180
    assert adm.classify_triangle((60 * r, 60 * r, 60 * r)) == {
        "theta": True, "bifocal": False, "figure8": True}
    assert adm.classify_triangle((120 * r, 30 * r, 30 * r))["bifocal"]
    assert not adm.classify_triangle((50 * r, 60 * r, 70 * r))["figure8"]
    with pytest.raises(adm.InvalidTriangle):
        adm.classify_triangle((1.0, 1.0, 1.0))
    with pytest.raises(adm.InvalidTriangle):
        adm.classify_triangle((math.pi, 0.0, 0.0))


def test_classify_triangle_exact():
    assert adm.classify_triangle_deg(("22.5", "22.5", 135))["figure8"]
    assert adm.classify_triangle_deg((Fraction(1, 3), Fraction(1, 3), Fraction(538, 3)))["figure8"]
    with pytest.raises(adm.InvalidTriangle):
        adm.classify_triangle_deg((60, 60, 60.5))
    with pytest.raises(adm.InvalidTriangle):
        adm.classify_triangle_deg(("a", 1, 2))


def test_report():
    r = adm.report(12)
    assert r["theta"] == {"admissible": True, "x": 4}
    assert r["bifocal"] == {"admissible": True, "loop_x": 5, "outer_x": 2}
    assert r["figure8_angles"] == [{"x": 4, "alpha_over_pi": "2/3"},
                                   {"x": 5, "alpha_over_pi": "1/3"}]
    assert list(adm.report(8, "figure8")) == ["n", "figure8_angles"]
    with pytest.raises(ValueError):
        adm.report(8, "tree")
