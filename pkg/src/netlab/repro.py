"""Re-derive every reproduced result and print a pass/fail table.

Each check is self-contained and cheap enough to run from the command line;
the full test suite (``pytest``) covers the same ground with independent
oracles and the randomized invariant suites.
"""

from __future__ import annotations

import math
import sys
import time
from fractions import Fraction

from . import admissibility as adm
from . import construct as C
from .net import classify_partition, three_face_graphs, verify
from .search import SearchConfig, brute_force_closed, search_figure8
from .surface import PolygonSpec, build_surface


def _three_regular():
    bad = [n for n in range(3, 201)
           if bool(adm.solve_3regular(n).solutions) != (n % 3 == 0 or n % 4 == 0)]
    return not bad, f"mismatches: {bad}" if bad else "n = 3..200"


def _theta_bifocal():
    ok = all(adm.theta_admissible(n)["admissible"] == (n % 3 == 0)
             and adm.bifocal_admissible(n)["admissible"] == (n % 12 == 0)
             for n in range(3, 201))
    b = adm.bifocal_admissible(12)
    ok = ok and b["loop_x"] == 5 and b["outer_x"] == 2
    return ok, f"n=12 loop_x={b['loop_x']} outer_x={b['outer_x']}"


def _triangles():
    bad = []
    for a in range(1, 179):
        for b in range(1, 180 - a):
            c = 180 - a - b
            got = adm.classify_triangle_deg((a, b, c))
            s = sorted((a, b, c))
            want = {"theta": s == [60, 60, 60], "bifocal": s == [30, 30, 120],
                    "figure8": a == b or b == c or a == c}
            if got != want:
                bad.append((a, b, c))
    return not bad, "1-degree grid" if not bad else f"wrong at {bad[:3]}"


def _constructions():
    nets = ([C.construct_theta_regular(n) for n in (3, 6, 9, 12)]
            + [C.construct_3regular_4n(n) for n in (4, 8, 12)]
            + [C.construct_figure8_odd(n) for n in (3, 5, 7, 9)]
            + [C.construct_figure8_isosceles(t) for t in ((60, 60, 60), (30, 30, 120),
                                                          (70, 70, 40))]
            + [C.construct_bifocal_30_30_120(), C.construct_figure8_hexagon()])
    failed = [i for i, net in enumerate(nets) if not verify(net).passed]
    return not failed, f"{len(nets)} nets" if not failed else f"failed: {failed}"


def _square():
    r = search_figure8(SearchConfig(4))
    cands = {2 - Fraction(4 * x, 4) for x in range(3)}
    ok = (not adm.figure8_loop_angles(4).entries and r.candidates_examined == 0
          and cands == {0, 1, 2})
    return ok, "no admissible turning angle"


def _hexagon():
    r = search_figure8(SearchConfig(6))
    ok = bool(r.solutions)
    for net in r.solutions:
        faces = [f for f in verify(net).faces if f.y == 1]
        ok = ok and all(f.x == 2 and abs(f.turning_angles[0] - 2 * math.pi / 3) <= 1e-9
                        for f in faces)
    return ok, f"{len(r.solutions)} solution(s)"


def _octagon(samples):
    r = search_figure8(SearchConfig(8))
    s = build_surface(PolygonSpec.regular(8))
    M = s.edge_midpoint(0)
    bf = brute_force_closed(s, M, samples, 20.0)
    quarter = [x for x in bf if abs(x.alpha - math.pi / 2) < 1e-6]
    ok = (adm.figure8_loop_angles(8).entries == [(3, Fraction(1, 2))]
          and not r.solutions and not quarter)
    return ok, f"0 solutions up to word length 24; {len(bf)} sampled loops, none turning pi/2"


def _oracle(samples):
    worst = 0.0
    for n in (3, 5, 6):
        s = build_surface(PolygonSpec.regular(n))
        M = s.edge_midpoint(0)
        bf = brute_force_closed(s, M, samples, 10.0)
        for net in search_figure8(SearchConfig(n, max_length=10.0)).solutions:
            d = net.edges[0].direction
            gap = min((abs((x.direction - d + math.pi) % (2 * math.pi) - math.pi) for x in bf),
                      default=math.inf)
            worst = max(worst, gap)
    return worst <= 1e-5, f"largest direction gap {worst:.2e} rad"


def _graphs():
    kinds = sorted(classify_partition(g) for g in three_face_graphs(4))
    return kinds == ["bifocal", "figure-eight", "theta"], ", ".join(kinds)


def checks(quick: bool = False):
    samples = 10 ** 5 if quick else 10 ** 6
    return [
        ("3-regular faces exist iff 3|n or 4|n", _three_regular),
        ("theta iff 3|n; bifocal iff 12|n", _theta_bifocal),
        ("doubled-triangle classification", _triangles),
        ("construction suite verifies", _constructions),
        ("square: no figure-eight", _square),
        ("hexagon: figure-eight found", _hexagon),
        ("octagon: bounded search empty", lambda: _octagon(samples)),
        ("brute force agrees with search", lambda: _oracle(samples // 10)),
        ("three-face graphs", _graphs),
    ]


def run(quick: bool = False, stream=sys.stdout) -> int:
    failures = 0
    for name, fn in checks(quick):
        t = time.perf_counter()
        try:
            ok, detail = fn()
        except Exception as exc:  # a crash counts as a failure, not an abort
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        failures += not ok
        print(f"{'PASS' if ok else 'FAIL'}  {name:<40} {time.perf_counter() - t:7.2f}s  {detail}",
              file=stream)
    return 1 if failures else 0
