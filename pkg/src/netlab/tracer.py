"""Geodesics on doubled polygons via billiard unfolding.

A geodesic is traced as a billiard trajectory in the base polygon: at each
edge hit the planar direction is reflected across the edge line and the sheet
flips.  Straightening the trajectory by reflecting polygon copies (the
development) must give one straight segment.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .surface import (BOTTOM, TOP, Locus, Surface, SurfaceError, SurfacePoint,
                      angle_of, other_sheet, unit)

CONE_REL = 1e-12
END_SNAP_REL = 1e-9
PERP_TOL = 1e-10
STRAIGHT_REL = 1e-9


class TraceError(SurfaceError):
    pass


class SingularHit(TraceError):
    """The trajectory runs into a cone point and cannot be continued."""


class StartAtCone(TraceError):
    pass


class NotGeodesic(TraceError):
    pass


@dataclass(frozen=True)
class Segment:
    sheet: str
    p0: tuple[float, float]
    p1: tuple[float, float]

    @property
    def length(self) -> float:
        return math.dist(self.p0, self.p1)


@dataclass
class GeodesicPath:
    """A traced geodesic.

    ``direction`` and ``end_direction`` are travel directions.  At interior
    points they are angles in that sheet's polygon coordinates; at seam points
    they are angles in the Top chart extended across the edge, so a direction
    pointing out of the polygon means "into the Bottom sheet".
    """

    start: SurfacePoint
    direction: float
    word: list[int]
    length: float
    end: SurfacePoint
    end_direction: float
    segments: list[Segment]
    start_sheet: str
    perpendicular: list[int] = field(default_factory=list)
    crossing_params: list[float] = field(default_factory=list)

    @property
    def sheets(self) -> list[str]:
        return [s.sheet for s in self.segments]

    @property
    def end_sheet(self) -> str:
        return self.segments[-1].sheet

    @property
    def departure(self) -> np.ndarray:
        """Unit travel vector at the start, in polygon coordinates of the first sheet."""
        s = self.segments[0]
        return _unit_vec(np.subtract(s.p1, s.p0))

    @property
    def arrival(self) -> np.ndarray:
        """Unit travel vector at the end, in polygon coordinates of the last sheet."""
        s = self.segments[-1]
        return _unit_vec(np.subtract(s.p1, s.p0))

    def to_json(self) -> dict:
        return {
            "start": point_to_json(self.start),
            "direction": self.direction,
            "word": list(self.word),
            "length": self.length,
            "perpendicular_crossings": list(self.perpendicular),
        }


def point_to_json(p: SurfacePoint) -> dict:
    return {"sheet": p.sheet, "x": p.coords[0], "y": p.coords[1]}


def _unit_vec(v) -> np.ndarray:
    v = np.asarray(v, dtype=float)
    return v / np.linalg.norm(v)


def launch(surface: Surface, start: SurfacePoint, direction: float):
    """Sheet and polygon-coordinate unit vector for a launch from ``start``."""
    d = unit(direction)
    if start.locus.kind == "cone":
        raise StartAtCone(f"cannot launch a geodesic from cone point {start.locus.index}")
    if start.locus.kind == "edge":
        e = start.locus.index
        inward = -(d @ surface.normals[e])
        if inward > 1e-14:
            return TOP, d
        if inward < -1e-14:
            return BOTTOM, surface.reflect_vector(e, d)
        # gliding along the seam: the edge is straight on both sheets, so the
        # path is a geodesic; it is recorded on Top
        return TOP, d
    return start.sheet, d


def chart_angle(surface: Surface, at: SurfacePoint, sheet: str, v) -> float:
    """Travel direction ``v`` (polygon coords on ``sheet``) written as a direction
    angle in the convention used for ``GeodesicPath.direction`` at ``at``."""
    if at.locus.kind == "edge" and sheet == BOTTOM:
        v = surface.reflect_vector(at.locus.index, v)
    return angle_of(v)


def _segment_cone_distance(surface, p0, p1):
    a = np.asarray(p0)
    d = np.asarray(p1) - a
    L2 = d @ d
    w = surface.vertices - a
    if L2 == 0:
        return np.linalg.norm(w, axis=1)
    t = np.clip(w @ d / L2, 0.0, 1.0)
    return np.linalg.norm(w - t[:, None] * d, axis=1)


def trace(surface: Surface, start: SurfacePoint, direction: float,
          max_length: float, max_crossings: int | None = None) -> GeodesicPath:
    """Trace the geodesic from ``start`` in ``direction``.

    Stops after ``max_length`` or just before crossing number
    ``max_crossings + 1`` (the end then sits on the edge about to be crossed).
    Raises SingularHit if the path comes within 1e-12*scale of a cone point.
    """
    if max_length < 0:
        raise ValueError("max_length must be non-negative")
    sheet, d = launch(surface, start, direction)
    pos = start.xy
    start_sheet = sheet
    start_edge = start.locus.index if start.locus.kind == "edge" else None
    delta = CONE_REL * surface.scale
    end_snap = END_SNAP_REL * surface.scale
    remaining = float(max_length)
    word: list[int] = []
    params: list[float] = []
    perp: list[int] = []
    segments: list[Segment] = []
    normals, offsets = surface.normals, surface.offsets
    entry = start_edge
    end_locus = None
    while True:
        den = normals @ d
        with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
            ts = (offsets - normals @ pos) / den
        ts[den <= 1e-15] = np.inf
        if entry is not None:
            ts[entry] = np.inf
        k = int(np.argmin(ts))
        t = max(float(ts[k]), 0.0)
        if remaining < t - end_snap:
            nxt = pos + remaining * d
            _check_cones(surface, pos, nxt, delta)
            segments.append(Segment(sheet, tuple(pos), tuple(nxt)))
            end_locus = None
            pos = nxt
            break
        # the edge hit
        s = float((pos + t * d - surface.vertices[k]) @ surface.edge_vectors[k]
                  / surface.edge_lengths[k] ** 2)
        hit = surface.edge_point(k, s)
        if min(s, 1 - s) * surface.edge_lengths[k] <= delta:
            raise SingularHit(f"trajectory hits cone point near edge {k} (t={s:.3g})")
        _check_cones(surface, pos, hit, delta)
        segments.append(Segment(sheet, tuple(pos), tuple(hit)))
        remaining -= t
        pos = hit
        if abs(remaining) <= end_snap or (max_crossings is not None and len(word) >= max_crossings):
            end_locus = Locus("edge", k, s)
            break
        word.append(k)
        params.append(s)
        if abs(d @ surface.tangents[k]) < PERP_TOL:
            perp.append(len(word) - 1)
        d = surface.reflect_vector(k, d)
        d = d / np.linalg.norm(d)
        sheet = other_sheet(sheet)
        entry = k

    if end_locus is None:
        loc = surface.classify(pos, tol=surface.snap)
        if loc.kind == "cone":
            raise SingularHit("trajectory ends on a cone point")
        end_locus = loc
        if loc.kind == "edge":
            # ended on the seam without crossing
            p = surface.edge_point(loc.index, loc.t)
            pos = p
    end = SurfacePoint(sheet, (float(pos[0]), float(pos[1])), end_locus)
    length = sum(sg.length for sg in segments)
    return GeodesicPath(
        start=start, direction=float(direction) % (2 * math.pi), word=word,
        length=length, end=end, end_direction=chart_angle(surface, end, sheet, d),
        segments=segments, start_sheet=start_sheet, perpendicular=perp,
        crossing_params=params)


def _check_cones(surface, p0, p1, delta):
    dist = _segment_cone_distance(surface, p0, p1)
    if np.any(dist <= delta):
        i = int(np.argmin(dist))
        raise SingularHit(f"trajectory passes within {dist[i]:.3g} of cone point {i}")


def reverse(surface: Surface, path: GeodesicPath, **limits) -> GeodesicPath:
    """Trace back from the end of ``path`` with the reversed direction."""
    back = (path.end_direction + math.pi) % (2 * math.pi)
    if not limits:
        limits = {"max_length": path.length, "max_crossings": len(path.word)}
    return trace(surface, path.end, back, **limits)


# -- development --------------------------------------------------------------

@dataclass
class Development:
    isometries: list[np.ndarray]
    points: np.ndarray
    start: np.ndarray
    end: np.ndarray
    deviation: float

    @property
    def length(self) -> float:
        return float(np.linalg.norm(self.end - self.start))


def holonomy(surface: Surface, word) -> list[np.ndarray]:
    """Affine isometries of the unfolded polygon copies along ``word``.

    Copy k+1 is copy k composed with the reflection across crossed edge k.
    """
    isos = [np.eye(3)]
    for e in word:
        isos.append(isos[-1] @ surface.reflection(e))
    return isos


def _apply(m, p):
    return m[:2, :2] @ np.asarray(p, float) + m[:2, 2]


def develop(surface: Surface, path: GeodesicPath, tol: float | None = None) -> Development:
    """Unfold ``path`` into the plane of its first sheet and check straightness."""
    tol = STRAIGHT_REL * surface.scale if tol is None else tol
    isos = holonomy(surface, path.word)
    pts = []
    # one copy per segment; segment k lives in copy k
    for k, seg in enumerate(path.segments):
        m = isos[min(k, len(isos) - 1)]
        if k == 0:
            pts.append(_apply(m, seg.p0))
        pts.append(_apply(m, seg.p1))
    pts = np.array(pts)
    a, b = pts[0], pts[-1]
    chord = b - a
    L = np.linalg.norm(chord)
    if L == 0:
        dev = float(np.max(np.linalg.norm(pts - a, axis=1)))
    else:
        nrm = np.array([-chord[1], chord[0]]) / L
        dev = float(np.max(np.abs((pts - a) @ nrm)))
        # points must also advance monotonically along the chord
        proj = (pts - a) @ chord / L
        if np.any(np.diff(proj) < -tol):
            dev = max(dev, float(-np.min(np.diff(proj))))
    if dev > tol:
        raise NotGeodesic(f"development deviates from a straight segment by {dev:.3g}")
    return Development(isos, pts, a, b, dev)


# -- corridors ----------------------------------------------------------------

def _wrap(a):
    """Wrap an angle to (-pi, pi]."""
    return (a + math.pi) % (2 * math.pi) - math.pi


@dataclass
class Corridor:
    """Polygon copies unfolded along a crossing word.

    ``edge_images[k]`` is the image of the k-th crossed edge, as a pair of
    endpoints, in the chart of the first copy.
    """

    surface: Surface
    word: list[int]
    isometries: list[np.ndarray]
    edge_images: list[tuple[np.ndarray, np.ndarray]]

    def sightline(self, p, k: int, base: float):
        """Angular interval (relative to ``base``) of rays from p through edge image k."""
        a, b = self.edge_images[k]
        ta = _wrap(angle_of(a - p) - base)
        tb = _wrap(angle_of(b - p) - base)
        lo, hi = min(ta, tb), max(ta, tb)
        if hi - lo >= math.pi:
            return None
        return lo, hi

    def feasible_directions(self, start: SurfacePoint, sheet: str = TOP,
                            margin: float | None = None):
        """Open interval of launch angles from ``start`` whose ray realises the
        word, or None if the word is infeasible from there.

        Angles are absolute, in the polygon coordinates of the first sheet.
        """
        p = start.xy
        if start.locus.kind == "edge" and self.word and self.word[0] == start.locus.index:
            return None
        a0, b0 = self.edge_images[0]
        base = angle_of((a0 + b0) / 2 - p)
        lo, hi = -math.pi, math.pi
        for k in range(len(self.word)):
            iv = self.sightline(p, k, base)
            if iv is None:
                return None
            lo, hi = max(lo, iv[0]), min(hi, iv[1])
            if lo >= hi:
                return None
        if margin is None:
            far = max(np.linalg.norm(np.asarray(e) - p) for pair in self.edge_images for e in pair)
            margin = CONE_REL * self.surface.scale / max(far, 1e-300)
        if hi - lo <= 2 * margin:
            return None
        return (base + lo + margin) % (2 * math.pi), (base + hi - margin) % (2 * math.pi), hi - lo - 2 * margin

    def contains_direction(self, start: SurfacePoint, angle: float, **kw) -> bool:
        iv = self.feasible_directions(start, **kw)
        if iv is None:
            return False
        lo, _, width = iv
        return (angle - lo) % (2 * math.pi) < width


def develop_word(surface: Surface, word) -> Corridor:
    """Unfold copies along ``word``; feasibility is checked per start point."""
    word = [int(e) for e in word]
    isos = holonomy(surface, word)
    images = []
    for k, e in enumerate(word):
        i, j = surface.edges[e]
        m = isos[k]
        images.append((_apply(m, surface.vertices[i]), _apply(m, surface.vertices[j])))
    return Corridor(surface, word, isos, images)


# -- closed paths through edge midpoints ----------------------------------------

def classify_isometry(m: np.ndarray, tol: float = 1e-12) -> str:
    lin = m[:2, :2]
    det = np.linalg.det(lin)
    if det > 0:
        if np.allclose(lin, np.eye(2), atol=tol):
            return "identity" if np.allclose(m[:2, 2], 0, atol=tol) else "translation"
        return "rotation"
    # orientation reversing: reflection if it has a fixed point, else glide
    fixed = np.linalg.lstsq(np.eye(2) - lin, m[:2, 2], rcond=None)[0]
    return "reflection" if np.allclose(_apply(m, fixed), fixed, atol=1e-9) else "glide"


@dataclass
class ClosedPath:
    path: GeodesicPath
    holonomy_type: str
    departure_angle: float
    arrival_angle: float
    corner_angle: float  # angle between departure and reversed arrival, in (0, pi]


def solve_closed(surface: Surface, word, start_edge: int, sheet: str = TOP,
                 start: SurfacePoint | None = None) -> list[ClosedPath]:
    """Geodesic loops from the midpoint of ``start_edge`` back to itself whose
    crossing word is ``word``.

    The endpoint of such a loop, developed along the word, is the image of the
    midpoint under the word's holonomy, so the launch direction is fixed in
    closed form.  The candidate is kept if it lies in the word's corridor and
    the traced path confirms it.
    """
    word = [int(e) for e in word]
    if not word:
        return []
    M = surface.edge_midpoint(start_edge) if start is None else start
    if M.locus.kind == "edge" and (word[0] == M.locus.index or word[-1] == M.locus.index):
        return []
    cor = develop_word(surface, word)
    target = _apply(cor.isometries[-1], M.xy)
    v = target - M.xy
    L = float(np.linalg.norm(v))
    if L <= CONE_REL * surface.scale:
        return []
    ang = angle_of(v)
    if not cor.contains_direction(M, ang):
        return []
    launch_angle = ang
    if M.locus.kind == "edge" and sheet == BOTTOM:
        launch_angle = angle_of(surface.reflect_vector(M.locus.index, v))
    elif M.locus.kind == "edge" and sheet == TOP and (v @ surface.normals[M.locus.index]) > 0:
        return []
    try:
        path = trace(surface, M, launch_angle, max_length=L, max_crossings=len(word))
    except TraceError:
        return []
    if path.word != word or not path.end.same_point(M, END_SNAP_REL * surface.scale):
        return []
    dep = unit(path.direction)
    back = -unit(path.end_direction)
    corner = math.acos(max(-1.0, min(1.0, float(dep @ back))))
    return [ClosedPath(path, classify_isometry(cor.isometries[-1]), path.direction,
                       path.end_direction, corner)]
