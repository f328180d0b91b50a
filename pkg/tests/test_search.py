import math

import pytest

from netlab.fixtures import main as fixtures_main
from netlab.search import (SearchConfig, brute_force_closed, collect_loops, enumerate_loops,
                           loop_for_word, search_bifocal, search_figure8, swap_sheets)
from netlab.surface import PolygonSpec, build_surface
from netlab.tracer import trace


def wrap(a):
    return (a + math.pi) % (2 * math.pi) - math.pi


@pytest.mark.parametrize("kw", [dict(n=2), dict(n=6, target="tree"), dict(n=6, max_word_length=0),
                                dict(n=6, max_length=-1.0), dict(n=6, threads=0)])
def test_config_validation(kw):
    with pytest.raises(ValueError):
        SearchConfig(**kw)


def test_enumerated_loops_really_close():
    s = build_surface(PolygonSpec.regular(5))
    M = s.edge_midpoint(0)
    loops, nodes = enumerate_loops(s, M, 10, 8.0)
    assert loops and nodes >= len(loops)
    for lp in loops:
        p = trace(s, M, lp.departure, max_length=lp.length)
        assert tuple(p.word) == lp.word
        assert math.dist(p.end.coords, M.coords) < 1e-9
        assert abs(wrap(p.end_direction - lp.arrival)) < 1e-9
        assert abs(lp.alpha - abs(wrap(lp.arrival - lp.departure))) < 1e-15


def test_swap_sheets_is_an_involution():
    s = build_surface(PolygonSpec.regular(6))
    M = s.edge_midpoint(0)
    loops, _ = enumerate_loops(s, M, 6, 6.0)
    for lp in loops:
        back = swap_sheets(s, M, swap_sheets(s, M, lp))
        assert abs(wrap(back.departure - lp.departure)) < 1e-12
        assert back.alpha == lp.alpha


def test_interior_anchor_needs_even_words():
    s = build_surface(PolygonSpec.regular(4))
    loops, _ = enumerate_loops(s, s.point((0.1, 0.05)), 6, 6.0)
    assert loops and all(len(lp.word) % 2 == 0 for lp in loops)


@pytest.mark.parametrize("n", [3, 5, 6])
def test_brute_force_and_enumeration_find_the_same_loops(n):
    s = build_surface(PolygonSpec.regular(n))
    M = s.edge_midpoint(0)
    loops, _ = collect_loops(s, M, 30, 8.0)
    sampled = brute_force_closed(s, M, 20000, 8.0)
    assert sorted(lp.word for lp in loops) == sorted(x.word for x in sampled)
    for lp in loops:
        x = next(x for x in sampled if x.word == lp.word)
        assert abs(wrap(x.direction - lp.departure)) < 1e-7
        assert x.miss <= 1e-6


def test_brute_force_edge_cases():
    s = build_surface(PolygonSpec.regular(4))
    M = s.edge_midpoint(0)
    assert brute_force_closed(s, M, 100, 0.0) == []
    with pytest.raises(ValueError):
        brute_force_closed(s, M, 0, 1.0)


def test_hexagon_search_report():
    r = search_figure8(SearchConfig(6))
    assert r.solution_words == [((1, 3), (3, 5))]
    assert r.exhaustive_up_to == 24 and not r.heuristic
    js = r.to_json()
    assert js["solution_count"] == 1
    assert all(w["reason"] for w in js["rejected"])


def test_search_is_thread_independent():
    a = search_figure8(SearchConfig(6)).to_json()
    b = search_figure8(SearchConfig(6, threads=2)).to_json()
    a.pop("config")
    b.pop("config")
    assert a == b


def test_near_misses_are_reported_within_tolerance():
    r = search_figure8(SearchConfig(6, near_miss_tolerance=3.0))
    assert r.near_misses
    assert all(1e-9 < d < 3.0 for _, d in r.near_misses)
    quiet = search_figure8(SearchConfig(6, near_miss_tolerance=3.0, report_near_misses=False))
    assert quiet.near_misses == []


def test_odd_polygons_find_the_perpendicular_figure_eight():
    for n in (5, 7):
        r = search_figure8(SearchConfig(n, max_word_length=4, max_length=4.0))
        assert r.solutions


def test_loop_for_word():
    s = build_surface(PolygonSpec.regular(6))
    M = s.edge_midpoint(0)
    lp = loop_for_word(s, M, (1, 3))
    assert lp.alpha == pytest.approx(2 * math.pi / 3)
    assert loop_for_word(s, M, (0,)) is None


def test_bifocal_search_needs_12_divides_n():
    r = search_bifocal(SearchConfig(6, target="bifocal"))
    assert not r.solutions and r.candidates_examined == 0
    assert r.heuristic


def test_small_bifocal_search_on_the_12_gon():
    r = search_bifocal(SearchConfig(12, target="bifocal", max_word_length=6, max_length=5.0,
                                    axis_samples=8, axis_word_length=6))
    assert r.heuristic and r.candidates_examined > 0
    assert all(sol.graph_type == "bifocal" for sol in r.solutions)


def test_fixture_is_up_to_date(capsys):
    assert fixtures_main(["--check"]) == 0
    assert "up to date" in capsys.readouterr().out
