import json
import math

import pytest

from netlab import construct as C
from netlab.io import NetFormatError, dumps, load_net, net_from_json, net_to_json, save_net
from netlab.net import verify
from netlab.render import render_development, render_sheets
from netlab.surface import PolygonSpec, build_surface

FAMILIES = [
    lambda: C.construct_theta_regular(6),
    lambda: C.construct_3regular_4n(8),
    lambda: C.construct_figure8_odd(5),
    lambda: C.construct_figure8_isosceles((70, 70, 40)),
    lambda: C.construct_bifocal_30_30_120(),
    lambda: C.construct_figure8_hexagon(),
]


@pytest.mark.parametrize("build", FAMILIES)
def test_json_roundtrip(build, tmp_path):
    net = build()
    path = tmp_path / "net.json"
    save_net(net, path)
    back = load_net(path)
    assert net_to_json(back) == net_to_json(net)
    assert dumps(back) == dumps(net)
    assert verify(back).passed


def test_length_from_word():
    net = C.construct_figure8_hexagon()
    data = net_to_json(net)
    for e in data["edges"]:
        del e["length"]
    back = net_from_json(data)
    for a, b in zip(net.edges, back.edges):
        assert b.length == pytest.approx(a.length, abs=1e-12)
    assert verify(back).passed


@pytest.mark.parametrize("mutate", [
    lambda d: d.pop("vertices"),
    lambda d: d["vertices"][0].update(sheet="middle"),
    lambda d: d["vertices"][0].update(x=5.0),
    lambda d: d["edges"][0].update(a=7),
    lambda d: d["edges"][0].update(word=[99]),
    lambda d: d["edges"][0].update(length=-1.0),
    lambda d: d["edges"][0].update(length=None, word=None),
    lambda d: d["surface"].update(kind="blob"),
    lambda d: d["surface"].update(n=2),
])
def test_bad_files(mutate):
    data = net_to_json(C.construct_theta_regular(6))
    mutate(data)
    with pytest.raises(NetFormatError):
        net_from_json(data)


def test_word_mismatch_is_a_verification_problem():
    data = net_to_json(C.construct_theta_regular(6))
    data["edges"][0]["word"] = [1]
    rep = verify(net_from_json(data))
    assert not rep.passed and rep.problems


def test_not_json(tmp_path):
    p = tmp_path / "x.json"
    p.write_text("{nope")
    with pytest.raises(NetFormatError):
        load_net(p)


def test_svg_is_deterministic():
    a = render_sheets(C.construct_figure8_hexagon())
    b = render_sheets(C.construct_figure8_hexagon())
    assert a == b
    assert a.startswith("<svg") and a.rstrip().endswith("</svg>")
    assert a.count("<polygon") == 2
    assert "2π/3" in a  # cone labels on the hexagon
    assert "-0.000000" not in a


def test_svg_of_an_empty_surface():
    svg = render_sheets(surface=build_surface(PolygonSpec.regular(5)))
    assert "<line" not in svg and svg.count("<polygon") == 2
    assert "4π/5" in svg
    with pytest.raises(ValueError):
        render_sheets()


def test_triangle_labels():
    svg = render_sheets(C.construct_bifocal_30_30_120())
    assert "5π/3" in svg and "2π/3" in svg


def test_development_svg():
    net = C.construct_figure8_hexagon()
    svg = render_development(net, 1)
    assert svg.count("<polygon") == len(net.edges[1].path.word) + 1
    assert "word [3, 5]" in svg
    with pytest.raises(IndexError):
        render_development(net, 5)


def test_json_is_sorted_and_stable():
    text = dumps(C.construct_theta_regular(3))
    data = json.loads(text)
    assert list(data) == sorted(data)
    assert math.isclose(data["edges"][0]["length"], 2 * build_surface(
        PolygonSpec.regular(3)).apothem)
