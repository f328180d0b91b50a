"""Bounded searches for figure-eights and bifocals on doubled regular polygons.

Loops are enumerated by unfolding: a geodesic loop from a point P that
crosses the edges w = (e1, ..., ek) develops to the straight segment from P to
I_w(P).  A depth-first walk over words keeps, for each prefix, the interval
of launch angles whose rays still pass through every crossed edge image, and
stops when the interval closes or the edge images drift out of range.  Every
word whose target image is visible yields one loop.
"""

from __future__ import annotations

import math
from fractions import Fraction
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

import numpy as np

from .admissibility import bifocal_admissible, figure8_loop_angles, loop_angle
from .net import BIFOCAL, FIGURE_EIGHT, Net, verify
from .surface import (BOTTOM, TOP, PolygonSpec, Surface, SurfacePoint, angle_of, build_surface,
                      unit)
from .tracer import CONE_REL, END_SNAP_REL, TraceError, solve_closed, trace

TWO_PI = 2 * math.pi
FIGURE8 = "figure8"
BIFOCAL_TARGET = "bifocal"
MARGIN_REL = 1e-12


def _wrap(a):
    return (a + math.pi) % TWO_PI - math.pi


@dataclass(frozen=True)
class SearchConfig:
    n: int
    target: str = FIGURE8
    max_word_length: int = 24
    max_length: float = 20.0  # in units of the circumradius
    report_near_misses: bool = True
    near_miss_tolerance: float = 1e-3
    angle_tol: float = 1e-9
    scale: float = 1.0
    threads: int = 1
    axis_samples: int = 48
    axis_word_length: int = 12

    def __post_init__(self):
        if self.n < 3:
            raise ValueError("n must be at least 3")
        if self.target not in (FIGURE8, BIFOCAL_TARGET):
            raise ValueError(f"unknown search target {self.target!r}")
        if self.max_word_length < 1:
            raise ValueError("max_word_length must be at least 1")
        if not (self.max_length > 0 and self.near_miss_tolerance > 0 and self.angle_tol > 0
                and self.scale > 0):
            raise ValueError("lengths and tolerances must be positive")
        if self.threads < 1 or self.axis_samples < 2:
            raise ValueError("threads >= 1 and axis_samples >= 2 required")

    def to_json(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class Loop:
    """A geodesic loop at an anchor point, as found by the enumeration.

    ``departure`` and ``arrival`` are travel directions in the local chart at
    the anchor (Top chart extended by reflection for a seam anchor).
    ``alpha`` is the direction change along the loop, which is the turning
    angle of the loop face at its corner.
    """

    word: tuple[int, ...]
    departure: float
    arrival: float
    length: float
    alpha: float


@dataclass
class SearchReport:
    config: SearchConfig
    candidates_examined: int = 0
    loops_examined: int = 0
    solutions: list[Net] = field(default_factory=list)
    solution_words: list[tuple] = field(default_factory=list)
    near_misses: list[tuple[tuple, float]] = field(default_factory=list)
    rejected: list[tuple[tuple, str]] = field(default_factory=list)
    exhaustive_up_to: int = 0
    heuristic: bool = False
    notes: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        from .io import net_to_json
        return {
            "config": self.config.to_json(),
            "candidates_examined": self.candidates_examined,
            "loops_examined": self.loops_examined,
            "solution_count": len(self.solutions),
            "solutions": [net_to_json(s) for s in self.solutions],
            "solution_words": [[list(w) for w in ws] for ws in self.solution_words],
            "near_misses": [{"word": list(w), "angle_defect": d} for w, d in self.near_misses],
            "rejected": [{"word": list(w), "reason": r} for w, r in self.rejected],
            "exhaustive_up_to": self.exhaustive_up_to,
            "heuristic": self.heuristic,
            "notes": self.notes,
        }


# -- loop enumeration -------------------------------------------------------------

def _children(surface, P, lin, off, last, lo, hi, base, max_length, margin):
    """Feasible next crossings from the copy placed by (lin, off), entered through
    ``last``: (edge, lo, hi) with the launch-angle interval narrowed to the
    rays that also pass through that edge's image."""
    W = surface.vertices @ lin.T + off
    rel = W - P
    ang = (np.arctan2(rel[:, 1], rel[:, 0]) - base + math.pi) % TWO_PI - math.pi
    nxt = np.roll(np.arange(surface.n), -1)
    ta, tb = np.minimum(ang, ang[nxt]), np.maximum(ang, ang[nxt])
    # distance from P to each edge image
    A, D = W, W[nxt] - W
    t = np.clip(np.einsum("ij,ij->i", P - A, D) / np.einsum("ij,ij->i", D, D), 0.0, 1.0)
    dist = np.linalg.norm(P - A - t[:, None] * D, axis=1)
    far = np.maximum(np.linalg.norm(rel, axis=1), np.linalg.norm(rel[nxt], axis=1))
    nlo, nhi = np.maximum(lo, ta), np.minimum(hi, tb)
    ok = (tb - ta < math.pi) & (dist <= max_length) & (nhi - nlo > 2 * margin / far)
    if last is not None:
        ok[last] = False
    return [(int(f), float(nlo[f]), float(nhi[f]), margin / float(far[f]))
            for f in np.nonzero(ok)[0]]


def enumerate_loops(surface: Surface, start: SurfacePoint, max_word_length: int,
                    max_length: float, first_edges=None):
    """All geodesic loops at ``start`` with at most ``max_word_length`` crossings and
    length at most ``max_length``.

    For a seam point only launches into the Top sheet are enumerated; the
    others are their images under the sheet swap.  Returns (loops, nodes),
    nodes counting the corridor-feasible words visited.
    """
    P = start.xy
    seam = start.locus.index if start.locus.kind == "edge" else None
    margin = MARGIN_REL * surface.scale
    n = surface.n
    refl = [surface.reflection(e) for e in range(n)]
    firsts = range(n) if first_edges is None else first_edges
    loops, nodes = [], 0
    for e1 in firsts:
        if e1 == seam:
            continue
        i, j = surface.edges[e1]
        base = angle_of((surface.vertices[i] + surface.vertices[j]) / 2 - P)
        roots = [c for c in _children(surface, P, np.eye(2), np.zeros(2), seam,
                                      -math.pi, math.pi, base, max_length, margin)
                 if c[0] == e1]
        stack = [((e1,), np.eye(3), lo, hi, eps) for _, lo, hi, eps in roots]
        while stack:
            word, iso, lo, hi, eps = stack.pop()
            e = word[-1]
            nodes += 1
            iso = iso @ refl[e]
            lin, off = iso[:2, :2], iso[:2, 2]
            k = len(word)
            closes = (k % 2 == 0) if seam is None else (e != seam)
            if closes:
                v = lin @ P + off - P
                L = float(np.linalg.norm(v))
                phi = _wrap(angle_of(v) - base)
                if L <= max_length and lo + eps < phi < hi - eps and L > margin:
                    u = v / L
                    back = lin.T @ u  # travel direction in the last copy
                    dep = angle_of(u)
                    if seam is not None and k % 2 == 1:
                        back = surface.reflect_vector(seam, back)
                    arr = angle_of(back)
                    loops.append(Loop(word, dep, arr, L, abs(_wrap(arr - dep))))
            if k < max_word_length:
                kids = _children(surface, P, lin, off, e, lo, hi, base, max_length, margin)
                for f, nlo, nhi, neps in reversed(kids):
                    stack.append((word + (f,), iso, nlo, nhi, neps))
    loops.sort(key=lambda lp: (len(lp.word), lp.word))
    return loops, nodes


def _loops_batch(args):
    spec_json, start, max_word_length, max_length, firsts = args
    surface = build_surface(PolygonSpec.from_json(spec_json))
    return enumerate_loops(surface, start, max_word_length, max_length, firsts)


def collect_loops(surface: Surface, start: SurfacePoint, max_word_length: int,
                  max_length: float, threads: int = 1):
    """:func:`enumerate_loops` split into one batch per first crossed edge.

    Batches are independent; the merge sorts by word, so the result does not
    depend on ``threads``.
    """
    # the anchor travels as is (not re-snapped), so workers see the same bits
    jobs = [(surface.spec.to_json(), start, max_word_length, max_length, [e])
            for e in range(surface.n)]
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(_loops_batch, jobs))
    else:
        parts = [enumerate_loops(surface, start, max_word_length, max_length, [e])
                 for e in range(surface.n)]
    loops = [lp for part, _ in parts for lp in part]
    loops.sort(key=lambda lp: (len(lp.word), lp.word))
    return loops, sum(nodes for _, nodes in parts)


def swap_sheets(surface: Surface, anchor: SurfacePoint, loop: Loop) -> Loop:
    """Image of a loop at a seam point under the sheet swap (a reflection of the chart)."""
    tau = angle_of(surface.tangents[anchor.locus.index])
    return Loop(loop.word, (2 * tau - loop.departure) % TWO_PI,
                (2 * tau - loop.arrival) % TWO_PI, loop.length, loop.alpha)


def _confirm(surface, start, departure, length, word):
    """Trace a loop and check it realises ``word`` and first returns at the end."""
    try:
        p = trace(surface, start, departure, max_length=length)
    except TraceError as exc:
        return None, f"trace failed: {exc}"
    if tuple(p.word) != tuple(word):
        return None, f"traced word {p.word} differs"
    if not p.end.same_point(start, 10 * END_SNAP_REL * surface.scale):
        return None, "does not close"
    tol = 1e-9 * surface.scale
    if start.locus.kind == "edge":
        e0 = start.locus.index
        for k, t in zip(p.word, p.crossing_params):
            if k == e0 and abs(t - 0.5) * surface.edge_lengths[e0] <= tol:
                return None, "passes through the anchor before closing"
    return p, ""


def _rays_key(rays):
    return sorted(r % TWO_PI for r in rays)


def _same_rays(a, b, tol=1e-7):
    return all(abs(_wrap(x - y)) <= tol for x, y in zip(a, b))


def search_figure8(config: SearchConfig) -> SearchReport:
    """Figure-eights whose self-intersection is the midpoint M of edge 0.

    Each loop L at M (departure d, arrival a) has a partner: the image of L
    under the half-turn about M that swaps the sheets, reversed, leaves along
    a and returns along d.  L followed by its partner is a closed geodesic
    through M, so opposite angles at M agree by construction, and the loop
    face turns by alpha = angle(d, a).  What is left to check is that alpha is
    admissible and that the result is embedded, which ``verify`` decides.
    """
    report = SearchReport(config, exhaustive_up_to=config.max_word_length)
    report.notes.append(f"bounded search: crossing words of length <= "
                        f"{config.max_word_length} and loops of length <= "
                        f"{config.max_length} x circumradius; not exhaustive beyond that")
    angles = figure8_loop_angles(config.n)
    if not angles.entries:
        report.notes.append("no admissible loop turning angle: no figure-eight can exist")
        return report
    s = build_surface(PolygonSpec.regular(config.n, config.scale))
    M = s.edge_midpoint(0)
    loops, nodes = collect_loops(s, M, config.max_word_length,
                                 config.max_length * config.scale, config.threads)
    report.candidates_examined = nodes
    report.loops_examined = len(loops)
    alphas = [(x, float(a) * math.pi) for x, a in angles.entries]
    all_loops = loops + [swap_sheets(s, M, lp) for lp in loops]
    found_keys = []
    for lp in loops:
        x, target = min(alphas, key=lambda xa: abs(lp.alpha - xa[1]))
        defect = abs(lp.alpha - target)
        if defect > config.angle_tol:
            if config.report_near_misses and defect < config.near_miss_tolerance:
                report.near_misses.append((lp.word, defect))
            continue
        # (a) the partner loop, leaving along the arrival and returning along the departure
        partner = next((q for q in all_loops
                        if abs(_wrap(q.departure - lp.arrival)) <= 1e-9
                        and abs(_wrap(q.arrival - lp.departure)) <= 1e-9
                        and abs(q.length - lp.length) <= 1e-9 * s.scale), None)
        if partner is None:
            report.rejected.append((lp.word, "no partner loop"))
            continue
        rays = _rays_key([lp.departure, lp.arrival, lp.departure + math.pi,
                          lp.arrival + math.pi])
        mirrored = _rays_key([2 * angle_of(s.tangents[0]) - r for r in rays])
        if any(_same_rays(rays, k) or _same_rays(mirrored, k) for k in found_keys):
            continue  # same figure-eight up to the symmetries fixing M
        p, why = _confirm(s, M, lp.departure, lp.length, lp.word)
        if p is None:
            report.rejected.append((lp.word, why))
            continue
        closed = solve_closed(s, list(lp.word), 0)
        if not closed or abs(_wrap(closed[0].path.direction - lp.departure)) > 1e-9:
            report.rejected.append((lp.word, "not confirmed by the closed-path solver"))
            continue
        net = Net.build(s, [M], [(0, 0, lp.departure, lp.length),
                                 (0, 0, lp.arrival, partner.length)], FIGURE_EIGHT)
        rep = verify(net)
        loop_faces = [f for f in rep.faces if f.y == 1]
        if not rep.passed:
            why = "not embedded" if not rep.embedded else "verification failed"
            report.rejected.append((lp.word, why))
            continue
        if len(loop_faces) != 2 or any(f.x != x for f in loop_faces):
            report.rejected.append((lp.word, "enclosed cone count differs"))
            continue
        found_keys.append(rays)
        report.solutions.append(net)
        report.solution_words.append((lp.word, partner.word))
    return report


# -- brute-force oracle ---------------------------------------------------------------

@dataclass(frozen=True)
class ApproxClosed:
    """A trajectory from ``start`` that comes back to it (within ``miss``)."""

    direction: float
    word: tuple[int, ...]
    length: float
    miss: float
    arrival: float
    alpha: float


_HASH_MUL = np.int64(1_000_003)


def _batch_events(surface: Surface, start: SurfacePoint, angles: np.ndarray,
                  max_length: float):
    """Trace many launches at once and record every near-return event.

    For a seam start an event is a hit on the start edge, measured by the
    signed offset from the start point along the edge.  For an interior start
    it is a piece on the start sheet whose closest point to the start lies
    inside the piece, measured by the signed distance of the start from the
    line.  Returns one (offset, word hash, travelled length) array triple per
    event index, NaN where a launch has fewer events.
    """
    N = len(angles)
    n = surface.n
    P = start.xy
    seam = start.locus.index if start.locus.kind == "edge" else None
    normals, offsets = surface.normals, surface.offsets
    V, T, Ls = surface.vertices, surface.edge_vectors, surface.edge_lengths
    d = np.stack([np.cos(angles), np.sin(angles)], axis=1)
    on_top = np.ones(N, bool)
    if seam is not None:
        # launches pointing out of the polygon start on Bottom, mirrored
        out = d @ normals[seam] > 0
        nr = normals[seam]
        d[out] = d[out] - 2 * (d[out] @ nr)[:, None] * nr
        on_top = ~out
    start_top = on_top.copy()
    pos = np.tile(P, (N, 1)).astype(float)
    travelled = np.zeros(N)
    entry = np.full(N, -1 if seam is None else seam)
    alive = np.ones(N, bool)
    hsh = np.zeros(N, np.int64)
    count = np.zeros(N, int)
    events: list[tuple[np.ndarray, np.ndarray, np.ndarray]] = []
    delta = CONE_REL * surface.scale * 10

    def record(mask, values, lengths):
        idx = np.nonzero(mask)[0]
        for j in np.unique(count[idx]):
            while len(events) <= j:
                events.append((np.full(N, np.nan), np.zeros(N, np.int64), np.full(N, np.nan)))
            sel = idx[count[idx] == j]
            events[j][0][sel] = values[sel]
            events[j][1][sel] = hsh[sel]
            events[j][2][sel] = lengths[sel]
        count[idx] += 1

    rows = np.arange(N)
    while alive.any():
        den = d @ normals.T
        with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
            ts = (offsets[None, :] - pos @ normals.T) / den
        ts[den <= 1e-15] = np.inf
        valid = entry >= 0
        ts[rows[valid], entry[valid]] = np.inf
        k = np.argmin(ts, axis=1)
        t = np.maximum(ts[rows, k], 0.0)
        room = max_length - travelled
        t_eff = np.minimum(t, room)
        if seam is None:
            # closest approach to the start on the start sheet
            same = (on_top == start_top) & alive
            w = P - pos
            s_foot = np.einsum("ij,ij->i", w, d)
            inside = same & (s_foot > 0) & (s_foot < t_eff)
            dist = d[:, 0] * w[:, 1] - d[:, 1] * w[:, 0]
            record(inside, dist, travelled + s_foot)
        hit = pos + t[:, None] * d
        s = np.einsum("ij,ij->i", hit - V[k], T[k]) / Ls[k] ** 2
        reach = alive & (t <= room)
        if seam is not None:
            ev = reach & (k == seam)
            record(ev, (s - 0.5) * Ls[seam], travelled + t)
        # cone hits end a trajectory
        cone = reach & (np.minimum(s, 1 - s) * Ls[k] <= delta)
        alive &= reach & ~cone
        pos = np.where(alive[:, None], hit, pos)
        travelled = np.where(alive, travelled + t, travelled)
        nrm = normals[k]
        refl = d - 2 * np.einsum("ij,ij->i", d, nrm)[:, None] * nrm
        d = np.where(alive[:, None], refl, d)
        on_top = np.where(alive, ~on_top, on_top)
        entry = np.where(alive, k, entry)
        hsh = np.where(alive, hsh * _HASH_MUL + (k + 1), hsh)
    return events


def _event_value(surface, start, angle, event, max_length):
    ev = _batch_events(surface, start, np.array([angle]), max_length)
    if len(ev) <= event:
        return math.nan, None
    return ev[event][0][0], ev[event][1][0]


def brute_force_closed(surface: Surface, start: SurfacePoint, direction_samples: int,
                       max_length: float, tol: float | None = None, chunk: int = 1 << 16):
    """Closed trajectories through ``start`` found by sampling launch directions.

    Directions are sampled uniformly over a half turn: for a seam point the
    launches into the Top sheet (angles measured from the edge direction),
    for an interior point the half turn [0, pi) together with its opposite,
    so that loops and their reverses are both seen.  Wherever the return
    offset changes sign between neighbouring samples with the same crossing
    history, bisection refines the launch angle; trajectories returning within
    ``tol`` (default 1e-6 * scale) are reported, sorted by direction.
    """
    if direction_samples < 1:
        raise ValueError("direction_samples must be at least 1")
    tol = 1e-6 * surface.scale if tol is None else tol
    if max_length <= 0:
        return []
    if start.locus.kind == "edge":
        tau = angle_of(surface.tangents[start.locus.index])
        spans = [(tau, math.pi)]
    else:
        spans = [(0.0, math.pi), (math.pi, math.pi)]
    brackets = []
    for lo, width in spans:
        grid = lo + width * (np.arange(direction_samples) + 0.5) / direction_samples
        prev = None
        for c0 in range(0, direction_samples, chunk):
            angles = grid[c0:c0 + chunk]
            if prev is not None:
                angles = np.concatenate([[prev[0]], angles])
            ev = _batch_events(surface, start, angles, max_length)
            for j, (val, h, _) in enumerate(ev):
                a, b = val[:-1], val[1:]
                ok = (np.isfinite(a) & np.isfinite(b) & (h[:-1] == h[1:])
                      & (np.sign(a) != np.sign(b)))
                for i in np.nonzero(ok)[0]:
                    brackets.append((float(angles[i]), float(angles[i + 1]), j))
            prev = angles[-1:]
    found = []
    for a, b, j in sorted(brackets):
        fa, ha = _event_value(surface, start, a, j, max_length)
        for _ in range(80):
            m = 0.5 * (a + b)
            fm, hm = _event_value(surface, start, m, j, max_length)
            if not math.isfinite(fm) or hm != ha:
                break
            if abs(fm) <= 1e-3 * tol or b - a < 1e-16:
                a = b = m
                fa = fm
                break
            if np.sign(fm) == np.sign(fa):
                a, fa = m, fm
            else:
                b = m
        ang = 0.5 * (a + b)
        rec = _closed_record(surface, start, ang, j, max_length, tol)
        if rec is not None and not any(abs(_wrap(rec.direction - f.direction)) < 1e-12
                                       and rec.word == f.word for f in found):
            found.append(rec)
    found.sort(key=lambda r: (r.direction, r.word))
    return found


def _closed_record(surface, start, angle, event, max_length, tol):
    ev = _batch_events(surface, start, np.array([angle]), max_length)
    if len(ev) <= event or not math.isfinite(ev[event][0][0]):
        return None
    miss = abs(float(ev[event][0][0]))
    if miss > tol:
        return None
    length = float(ev[event][2][0])
    try:
        p = trace(surface, start, angle, max_length=length)
    except TraceError:
        return None
    arr = p.end_direction
    if start.locus.kind != "edge" and p.end.sheet != start.sheet:
        return None
    return ApproxClosed(angle % TWO_PI, tuple(p.word), length, miss, arr,
                        abs(_wrap(arr - angle)))


# -- bifocals -------------------------------------------------------------------------

BIFOCAL_TURN = math.pi / 3


def _rot(v, ang):
    c, s = math.cos(ang), math.sin(ang)
    return np.array([c * v[0] - s * v[1], s * v[0] + c * v[1]])


def loop_for_word(surface: Surface, start: SurfacePoint, word) -> Loop | None:
    """The loop at ``start`` with crossing word ``word``, if its corridor admits it."""
    from .tracer import develop_word
    cor = develop_word(surface, word)
    iso = cor.isometries[-1]
    lin = iso[:2, :2]
    v = lin @ start.xy + iso[:2, 2] - start.xy
    L = float(np.linalg.norm(v))
    if L <= MARGIN_REL * surface.scale or not cor.contains_direction(start, angle_of(v)):
        return None
    u = v / L
    back = lin.T @ u
    if start.locus.kind == "edge" and len(word) % 2 == 1:
        back = surface.reflect_vector(start.locus.index, back)
    dep, arr = angle_of(u), angle_of(back)
    return Loop(tuple(word), dep, arr, L, abs(_wrap(arr - dep)))


def _edge_direction(loop: Loop) -> float:
    """Direction of the third edge that balances a loop with a 2pi/3 corner."""
    return angle_of(unit(loop.arrival) - unit(loop.departure))


def _bifocal_net(surface, P, Q, loop_p, loop_q_dep, loop_q_len, edge_dir, edge_len):
    return Net.build(surface, [P, Q], [(0, 0, loop_p.departure, loop_p.length),
                                       (1, 1, loop_q_dep, loop_q_len),
                                       (0, 1, edge_dir, edge_len)], BIFOCAL)


def _accept_bifocal(report, net, word, x_loop):
    rep = verify(net)
    if not rep.passed:
        report.rejected.append((word, "not embedded" if not rep.embedded
                                else "verification failed"))
        return False
    loops = [f for f in rep.faces if f.y == 1]
    if len(loops) != 2 or any(f.x != x_loop for f in loops):
        report.rejected.append((word, "enclosed cone count differs"))
        return False
    report.solutions.append(net)
    return True


def _midpoint_bifocals(report, s, config, x_loop):
    M = s.edge_midpoint(0)
    loops, nodes = collect_loops(s, M, config.max_word_length,
                                 config.max_length * s.scale, config.threads)
    report.candidates_examined += nodes
    report.loops_examined += len(loops)
    good = []
    for lp in loops + [swap_sheets(s, M, q) for q in loops]:
        defect = abs(lp.alpha - BIFOCAL_TURN)
        if defect <= config.angle_tol:
            good.append(lp)
        elif config.report_near_misses and defect < config.near_miss_tolerance:
            report.near_misses.append((lp.word, defect))
    tol = 1e-9 * s.scale
    for lp in good:
        e_dir = _edge_direction(lp)
        try:
            path = trace(s, M, e_dir, max_length=config.max_length * s.scale)
        except TraceError:
            continue
        travelled = 0.0
        for k, (edge, t) in enumerate(zip(path.word, path.crossing_params)):
            seg = path.segments[k]
            travelled += seg.length
            if edge == 0 or abs(t - 0.5) * s.edge_lengths[edge] > tol:
                continue
            u = unit(angle_of(np.subtract(seg.p1, seg.p0)))
            if seg.sheet == BOTTOM:
                u = s.reflect_vector(edge, u)
            turn = 2 * math.pi * edge / s.n
            want = angle_of(_rot(-u, -turn))  # the partner's edge direction, moved to M
            partner = next((q for q in good
                            if abs(_wrap(_edge_direction(q) - want)) <= 1e-9), None)
            if partner is None:
                continue
            Q = s.edge_midpoint(edge)
            net = _bifocal_net(s, M, Q, lp, partner.departure + turn, partner.length,
                               e_dir, travelled)
            if _accept_bifocal(report, net, lp.word, x_loop):
                report.solution_words.append((lp.word, partner.word))


def _axis_bifocals(report, s, config, x_loop):
    """Loops symmetric about a symmetry axis of the polygon, shot along the axis."""
    tol = 1e-9
    K = config.axis_samples
    for axis_angle, reach in ((0.0, s.scale), (math.pi / s.n, s.apothem)):
        ax = unit(axis_angle)
        radii = reach * (np.arange(K) + 0.5) / K
        by_word: dict[tuple, list] = {}
        for i, r in enumerate(radii):
            P = s.point(r * ax, TOP)
            loops, nodes = enumerate_loops(s, P, config.axis_word_length,
                                           config.max_length * s.scale)
            report.candidates_examined += nodes
            report.loops_examined += len(loops)
            for lp in loops:
                bis = unit(lp.departure) - unit(lp.arrival)
                if abs(bis[0] * ax[1] - bis[1] * ax[0]) <= 1e-9 * np.linalg.norm(bis):
                    by_word.setdefault(lp.word, []).append((i, lp.alpha - BIFOCAL_TURN))
        for word in sorted(by_word, key=lambda w: (len(w), w)):
            vals = dict(by_word[word])
            for i in range(K - 1):
                if i not in vals or i + 1 not in vals or np.sign(vals[i]) == np.sign(vals[i + 1]):
                    continue
                a, b, fa = radii[i], radii[i + 1], vals[i]
                lp = None
                for _ in range(200):
                    m = 0.5 * (a + b)
                    lp = loop_for_word(s, s.point(m * ax, TOP), word)
                    if lp is None:
                        break
                    fm = lp.alpha - BIFOCAL_TURN
                    if abs(fm) <= 1e-3 * tol or b - a <= 1e-16 * reach:
                        break
                    if np.sign(fm) == np.sign(fa):
                        a, fa = m, fm
                    else:
                        b = m
                if lp is None or abs(lp.alpha - BIFOCAL_TURN) > config.angle_tol:
                    continue
                P = s.point(m * ax, TOP)
                e_dir = _edge_direction(lp)
                try:
                    path = trace(s, P, e_dir, max_length=config.max_length * s.scale,
                                 max_crossings=1)
                except TraceError:
                    report.rejected.append((word, "connecting edge runs into a cone"))
                    continue
                if not path.word and path.end.locus.kind != "edge":
                    continue
                seg = path.segments[-1]
                k = path.end.locus.index
                u = unit(angle_of(np.subtract(seg.p1, seg.p0)))
                if abs(u @ s.tangents[k]) > 1e-9:
                    report.rejected.append((word, "connecting edge meets the seam obliquely"))
                    continue
                Q = s.point(P.xy, BOTTOM)
                net = _bifocal_net(s, P, Q, lp, lp.departure, lp.length, e_dir,
                                   2 * path.length)
                if _accept_bifocal(report, net, word, x_loop):
                    report.solution_words.append((word, word))


def search_bifocal(config: SearchConfig) -> SearchReport:
    """Bifocals on the doubled regular n-gon (12 | n), with loops anchored at edge
    midpoints or on symmetry axes.

    A bifocal loop is not a closed geodesic, so restricting its vertex to
    these anchors is a heuristic, and an empty result says nothing about
    existence.
    """
    report = SearchReport(config, exhaustive_up_to=config.max_word_length, heuristic=True)
    adm = bifocal_admissible(config.n)
    if not adm["admissible"]:
        report.notes.append("not admissible: bifocals need 12 | n")
        return report
    x_loop = adm["loop_x"]
    assert loop_angle(config.n, x_loop) == 1 - Fraction(2, 3)
    report.notes.append(f"loops must turn by pi/3 and enclose {x_loop} cone points")
    report.notes.append("anchoring at midpoints and axis points is heuristic; "
                        "an empty result is inconclusive")
    s = build_surface(PolygonSpec.regular(config.n, config.scale))
    _midpoint_bifocals(report, s, config, x_loop)
    _axis_bifocals(report, s, config, x_loop)
    return report
