"""Embedded graphs on doubled polygons and the geodesic-net checks.

Each net edge is stored as (a, b, launch direction, length) and re-traced on
the surface, so a net is a purely geometric object: verification asks whether
the traced edges end on their named vertices, develop to straight segments,
balance at every vertex, and cut the sphere into faces whose curvature and
turning angles satisfy Gauss-Bonnet.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .surface import BOTTOM, TOP, Surface, SurfacePoint, angle_of, other_sheet, unit
from .tracer import (END_SNAP_REL, GeodesicPath, NotGeodesic, TraceError, develop,
                     trace)

TWO_PI = 2 * math.pi
GEOM_REL = 1e-9
RESIDUAL_TOL = 1e-8

THETA = "theta"
FIGURE_EIGHT = "figure-eight"
BIFOCAL = "bifocal"
GENERAL_3REGULAR = "3-regular"
OTHER = "other"


class MalformedNet(ValueError):
    pass


class FewerThanThree(ValueError):
    pass


@dataclass
class NetEdge:
    a: int
    b: int
    direction: float
    length: float
    path: GeodesicPath
    word: list[int] | None = None


@dataclass
class Net:
    surface: Surface
    vertices: list[SurfacePoint]
    edges: list[NetEdge]
    graph_type: str = OTHER

    @classmethod
    def build(cls, surface: Surface, vertices, edge_specs, graph_type: str = OTHER) -> "Net":
        """Trace every edge.  ``edge_specs`` holds (a, b, direction, length)."""
        edges = []
        for a, b, direction, length in edge_specs:
            if not (0 <= a < len(vertices) and 0 <= b < len(vertices)):
                raise MalformedNet(f"edge ({a}, {b}) refers to a missing vertex")
            try:
                path = trace(surface, vertices[a], direction, max_length=length)
            except TraceError as exc:
                raise MalformedNet(f"edge ({a}, {b}) cannot be traced: {exc}") from exc
            edges.append(NetEdge(a, b, float(direction) % TWO_PI, float(length), path,
                                 list(path.word)))
        return cls(surface, list(vertices), edges, graph_type)

    @property
    def V(self) -> int:
        return len(self.vertices)

    @property
    def E(self) -> int:
        return len(self.edges)

    def degrees(self) -> list[int]:
        deg = [0] * self.V
        for e in self.edges:
            deg[e.a] += 1
            deg[e.b] += 1
        return deg


@dataclass
class FaceBudget:
    face: int
    y: int
    x: int
    cones: list[int]
    curvature: float
    turning_angles: list[float]
    residual: float
    half_edges: list[int] = field(default_factory=list)

    def to_json(self) -> dict:
        return {"face": self.face, "x": self.x, "y": self.y, "cones": self.cones,
                "curvature": self.curvature, "turning_angles": self.turning_angles,
                "residual": self.residual}


@dataclass
class VerificationReport:
    balanced: list[float]
    geodesic: list[float]
    endpoint: list[float]
    embedded: bool
    crossings: list[tuple]
    faces: list[FaceBudget]
    euler_ok: bool
    degrees_ok: bool
    V: int
    E: int
    F: int
    tol: float
    residual_tol: float
    cone_on_net: list[int] = field(default_factory=list)
    problems: list[str] = field(default_factory=list)

    @property
    def balanced_ok(self) -> bool:
        return all(d <= self.tol for d in self.balanced)

    @property
    def geodesic_ok(self) -> bool:
        return all(d <= self.tol for d in self.geodesic) and all(d <= self.tol for d in self.endpoint)

    @property
    def residuals_ok(self) -> bool:
        return bool(self.faces) and all(abs(f.residual) <= self.residual_tol for f in self.faces)

    @property
    def passed(self) -> bool:
        return (self.balanced_ok and self.geodesic_ok and self.embedded and self.euler_ok
                and self.degrees_ok and self.residuals_ok and not self.cone_on_net
                and not self.problems)

    def to_json(self) -> dict:
        return {
            "passed": self.passed,
            "V": self.V, "E": self.E, "F": self.F,
            "euler_ok": self.euler_ok,
            "embedded": self.embedded,
            "degrees_ok": self.degrees_ok,
            "balancing_defects": self.balanced,
            "geodesic_deviations": self.geodesic,
            "endpoint_errors": self.endpoint,
            "crossings": [list(c) for c in self.crossings],
            "cone_on_net": self.cone_on_net,
            "faces": [f.to_json() for f in self.faces],
            "tol": self.tol,
            "residual_tol": self.residual_tol,
            "problems": self.problems,
        }


def balancing_defect(tangents) -> float:
    """Norm of the sum of unit tangent vectors (angles or 2-vectors)."""
    vecs = [unit(t) if np.ndim(t) == 0 else np.asarray(t, float) / np.linalg.norm(t)
            for t in tangents]
    if len(vecs) < 3:
        raise FewerThanThree(f"a net vertex needs at least 3 edges, got {len(vecs)}")
    return float(np.linalg.norm(np.sum(vecs, axis=0)))


# -- local charts ---------------------------------------------------------------

def _end_angles(net: Net):
    """Chart angle of each half-edge end.

    Half-edge 2i leaves vertex a along edge i, half-edge 2i+1 leaves vertex b
    along edge i reversed.  Angles are taken in the oriented chart at the vertex.
    """
    s = net.surface
    out = []
    for e in net.edges:
        p = e.path
        va, vb = net.vertices[e.a], net.vertices[e.b]
        out.append(angle_of(s.chart_direction(va, p.segments[0].sheet, p.departure)))
        out.append(angle_of(s.chart_direction(vb, p.segments[-1].sheet, -p.arrival)))
    return out


def _rotation_system(net: Net, ends):
    """Half-edges at each vertex sorted counter-clockwise by chart angle."""
    at = [[] for _ in net.vertices]
    for i, e in enumerate(net.edges):
        at[e.a].append(2 * i)
        at[e.b].append(2 * i + 1)
    for v in range(net.V):
        at[v].sort(key=lambda h: (ends[h], h))
    return at


def _origin(net, h):
    e = net.edges[h // 2]
    return e.a if h % 2 == 0 else e.b


def face_walk(net: Net):
    """Faces as cycles of half-edges, each face lying to the left of its half-edges.

    Returns (faces, face_of, corners) where corners[f] is a list of
    (vertex, interior angle) pairs.
    """
    ends = _end_angles(net)
    rot = _rotation_system(net, ends)
    pos = {}
    for v, hs in enumerate(rot):
        for k, h in enumerate(hs):
            pos[h] = (v, k)

    def nxt(h):
        t = h ^ 1  # end of the same edge at the far vertex
        v, k = pos[t]
        hs = rot[v]
        return hs[(k - 1) % len(hs)]

    face_of = [-1] * (2 * net.E)
    faces, corners = [], []
    for h0 in range(2 * net.E):
        if face_of[h0] >= 0:
            continue
        f = len(faces)
        cyc, cor = [], []
        h = h0
        while face_of[h] < 0:
            face_of[h] = f
            cyc.append(h)
            g = nxt(h)
            v = pos[g][0]
            interior = (ends[h ^ 1] - ends[g]) % TWO_PI
            if interior == 0.0:
                interior = TWO_PI
            cor.append((v, interior))
            h = g
        faces.append(cyc)
        corners.append(cor)
    return faces, face_of, corners


# -- per-sheet segments and intersections -------------------------------------

def _sheet_segments(net: Net):
    """(edge index, segment index, sheet, p0, p1) for every traced piece.

    A piece running along the seam lies on both sheets and is listed twice.
    """
    s = net.surface
    segs = []
    for i, e in enumerate(net.edges):
        for j, sg in enumerate(e.path.segments):
            if sg.length > 0:
                p0, p1 = np.array(sg.p0), np.array(sg.p1)
                segs.append((i, j, sg.sheet, p0, p1))
                if _on_seam(s, p0, p1):
                    segs.append((i, j, other_sheet(sg.sheet), p0, p1))
    return segs


def _on_seam(surface, p0, p1):
    tol = surface.snap * 1e3
    a = np.abs(surface.normals @ p0 - surface.offsets)
    b = np.abs(surface.normals @ p1 - surface.offsets)
    return bool(np.any((a <= tol) & (b <= tol)))


def _cross(a, b):
    return a[0] * b[1] - a[1] * b[0]


def segment_intersection(p0, p1, q0, q1, eps):
    """Intersection point of two closed segments, or None.  Collinear overlaps
    return the midpoint of the overlap."""
    r, s = p1 - p0, q1 - q0
    den = _cross(r, s)
    qp = q0 - p0
    Lr, Ls = np.linalg.norm(r), np.linalg.norm(s)
    if abs(den) <= 1e-14 * Lr * Ls:
        # parallel
        if abs(_cross(qp, r)) > eps * Lr:
            return None
        t0 = (qp @ r) / (Lr * Lr)
        t1 = ((q1 - p0) @ r) / (Lr * Lr)
        lo, hi = max(0.0, min(t0, t1)), min(1.0, max(t0, t1))
        if hi < lo - eps / Lr:
            return None
        return p0 + 0.5 * (lo + hi) * r
    t = _cross(qp, s) / den
    u = _cross(qp, r) / den
    if -eps / Lr <= t <= 1 + eps / Lr and -eps / Ls <= u <= 1 + eps / Ls:
        return p0 + t * r
    return None


def _is_vertex_touch(net, pt, seg_a, seg_b, tol):
    """True if pt is a net vertex where both segments end."""
    for v in net.vertices:
        if np.linalg.norm(pt - v.xy) > tol:
            continue
        ok = True
        for (_, _, _, p0, p1) in (seg_a, seg_b):
            if min(np.linalg.norm(p0 - pt), np.linalg.norm(p1 - pt)) > tol:
                ok = False
        if ok:
            return True
    return False


def find_crossings(net: Net, tol: float):
    """Pairs of segments meeting somewhere other than at a shared net vertex."""
    segs = _sheet_segments(net)
    out = []
    boxes = [(np.minimum(p0, p1) - tol, np.maximum(p0, p1) + tol) for *_, p0, p1 in segs]
    for x in range(len(segs)):
        for y in range(x + 1, len(segs)):
            A, B = segs[x], segs[y]
            if A[2] != B[2]:
                continue
            if A[0] == B[0] and abs(A[1] - B[1]) <= 1:
                continue  # consecutive pieces of one edge live on different sheets
            lo = np.maximum(boxes[x][0], boxes[y][0])
            hi = np.minimum(boxes[x][1], boxes[y][1])
            if np.any(lo > hi):
                continue
            pt = segment_intersection(A[3], A[4], B[3], B[4], tol)
            if pt is None or _is_vertex_touch(net, pt, A, B, tol):
                continue
            out.append((A[0], A[1], B[0], B[1], float(pt[0]), float(pt[1])))
    # a crossing on the seam is shared by both sheets: endpoints of pieces of
    # different edges meeting there
    seam = []
    for (i, j, sheet, p0, p1) in segs:
        for p in (p0, p1):
            loc = net.surface.classify(p, tol=tol)
            if loc.kind == "edge":
                seam.append((i, j, p))
    for x in range(len(seam)):
        for y in range(x + 1, len(seam)):
            (i, j, p), (k, l, q) = seam[x], seam[y]
            if i == k and abs(j - l) <= 1:
                continue
            if np.linalg.norm(p - q) <= tol and not any(
                    np.linalg.norm(p - v.xy) <= tol for v in net.vertices):
                c = (i, j, k, l, float(p[0]), float(p[1]))
                if c not in out:
                    out.append(c)
    return out


# -- locating cone points in faces ----------------------------------------------

def _locate_cones(net: Net, face_of, tol):
    """Face index of every cone point, by shooting a chord on one sheet from a
    point next to the cone to a net segment and reading off which side it hits.
    """
    s = net.surface
    segs = _sheet_segments(net)
    result, on_net = [], []
    for c in s.cones:
        cp = np.array(c.position)
        dmin = min((_point_segment_distance(cp, p0, p1) for *_, p0, p1 in segs),
                   default=np.inf)
        if dmin <= tol:
            on_net.append(c.index)
            result.append(None)
            continue
        # bisector of the polygon corner
        prev_e = (c.index - 1) % s.n
        bis = s.tangents[c.index] - s.tangents[prev_e]
        bis = bis / np.linalg.norm(bis)
        eps = min(0.25 * dmin, 0.01 * s.scale)
        found = None
        for sheet in (TOP, BOTTOM):
            q = cp + eps * bis
            mine = [sg for sg in segs if sg[2] == sheet]
            mine.sort(key=lambda sg: -np.linalg.norm(sg[4] - sg[3]))
            for frac in (0.5, 0.382, 0.618, 0.25, 0.75):
                for target_seg in mine[:8]:
                    target = target_seg[3] + frac * (target_seg[4] - target_seg[3])
                    hit = _first_hit(q, target, mine, tol)
                    if hit is None:
                        continue
                    (i, j, sh, p0, p1), pt = hit
                    if min(np.linalg.norm(pt - p0), np.linalg.norm(pt - p1)) <= 1e3 * tol:
                        continue  # too close to a bend or vertex to read the side
                    side = _cross(p1 - p0, target - q)
                    if sheet == BOTTOM:
                        side = -side
                    # side > 0: chord heads to the left of the piece, so q is on its right
                    h = 2 * i + 1 if side > 0 else 2 * i
                    found = face_of[h]
                    break
                if found is not None:
                    break
            if found is not None:
                break
        result.append(found)
    return result, on_net


def _point_segment_distance(p, a, b):
    d = b - a
    L2 = d @ d
    t = 0.0 if L2 == 0 else min(max((p - a) @ d / L2, 0.0), 1.0)
    return float(np.linalg.norm(p - (a + t * d)))


def _first_hit(q, target, segs, tol):
    best, best_u = None, np.inf
    r = target - q
    for sg in segs:
        p0, p1 = sg[3], sg[4]
        s = p1 - p0
        den = _cross(r, s)
        if abs(den) <= 1e-12 * np.linalg.norm(r) * np.linalg.norm(s):
            continue  # parallel or collinear: says nothing about sides
        qp = p0 - q
        u = _cross(qp, s) / den
        t = _cross(qp, r) / den
        if 0 < u <= 1 + 1e-12 and -1e-12 <= t <= 1 + 1e-12 and u < best_u:
            best_u, best = u, (sg, q + u * r)
    return best


# -- verification ---------------------------------------------------------------

def verify(net: Net, surface: Surface | None = None, tol: float | None = None,
           residual_tol: float = RESIDUAL_TOL) -> VerificationReport:
    """Check the geodesic-net conditions and do the Gauss-Bonnet bookkeeping."""
    s = net.surface if surface is None else surface
    if surface is not None and surface is not net.surface:
        net = Net.build(s, net.vertices,
                        [(e.a, e.b, e.direction, e.length) for e in net.edges], net.graph_type)
    tol = GEOM_REL * s.scale if tol is None else tol
    problems = []
    if net.V == 0:
        raise MalformedNet("net has no vertices")
    for x in range(net.V):
        for y in range(x + 1, net.V):
            if net.vertices[x].same_point(net.vertices[y], tol):
                raise MalformedNet(f"vertices {x} and {y} coincide")
    deg = net.degrees()
    if any(d == 0 for d in deg):
        raise MalformedNet("net has an isolated vertex")
    if any(d == 1 for d in deg):
        raise MalformedNet("net has a dangling edge")
    degrees_ok = all(d >= 3 for d in deg)
    if not degrees_ok:
        problems.append("vertex of degree < 3")

    # edges: endpoints and straightness
    endpoint, geodesic = [], []
    for e in net.edges:
        p = e.path
        end = p.end
        tgt = net.vertices[e.b]
        err = math.dist(end.coords, tgt.coords)
        if tgt.locus.kind == "interior" and end.locus.kind == "interior" and end.sheet != tgt.sheet:
            err = max(err, math.inf)
        endpoint.append(err)
        try:
            geodesic.append(develop(s, p, tol=math.inf).deviation)
        except NotGeodesic:
            geodesic.append(math.inf)
        if e.word is not None and list(e.word) != list(p.word):
            problems.append(f"edge ({e.a}, {e.b}) crosses {p.word}, expected {e.word}")

    # balancing
    ends = _end_angles(net)
    at = [[] for _ in range(net.V)]
    for i, e in enumerate(net.edges):
        at[e.a].append(ends[2 * i])
        at[e.b].append(ends[2 * i + 1])
    balanced = []
    for v in range(net.V):
        vec = np.sum([unit(a) for a in at[v]], axis=0)
        balanced.append(float(np.linalg.norm(vec)))

    faces, face_of, corners = face_walk(net)
    F = len(faces)
    euler_ok = net.V - net.E + F == 2
    crossings = find_crossings(net, tol)
    cone_face, on_net = _locate_cones(net, face_of, tol)
    if any(f is None for i, f in enumerate(cone_face) if i not in on_net):
        problems.append("could not locate every cone point in a face")

    budgets = []
    for f, cyc in enumerate(faces):
        cones = [i for i, cf in enumerate(cone_face) if cf == f]
        curv = sum(s.cones[i].curvature for i in cones)
        turning = [math.pi - a for _, a in corners[f]]
        residual = curv + sum(turning) - TWO_PI
        budgets.append(FaceBudget(f, len(cyc), len(cones), cones, curv, turning, residual, cyc))
    return VerificationReport(
        balanced=balanced, geodesic=geodesic, endpoint=endpoint,
        embedded=not crossings, crossings=crossings, faces=budgets, euler_ok=euler_ok,
        degrees_ok=degrees_ok, V=net.V, E=net.E, F=F, tol=tol, residual_tol=residual_tol,
        cone_on_net=on_net, problems=problems)


def classify_partition(net_or_counts) -> str:
    """Which three-face graph a net is (theta, figure-eight, bifocal) or 'other'.

    Accepts a Net or a (V, edge list) pair, edges given as (a, b) tuples.
    """
    if isinstance(net_or_counts, Net):
        V = net_or_counts.V
        pairs = [(e.a, e.b) for e in net_or_counts.edges]
    else:
        V, pairs = net_or_counts
        pairs = list(pairs)
    E = len(pairs)
    if 2 - V + E != 3:  # faces of a connected graph on the sphere
        return OTHER
    loops = sum(1 for a, b in pairs if a == b)
    if V == 1 and E == 2 and loops == 2:
        return FIGURE_EIGHT
    if V == 2 and E == 3 and loops == 0:
        return THETA
    if V == 2 and E == 3 and loops == 2:
        ends = sorted((a for a, b in pairs if a == b))
        if ends == [0, 1]:
            return BIFOCAL
    return OTHER


def scaled_net(net: Net, factor: float) -> Net:
    s = net.surface.scaled(factor)
    verts = [SurfacePoint(v.sheet, (v.coords[0] * factor, v.coords[1] * factor), v.locus)
             for v in net.vertices]
    return Net.build(s, verts, [(e.a, e.b, e.direction, e.length * factor) for e in net.edges],
                     net.graph_type)


def three_face_graphs(max_vertices: int = 4):
    """Connected multigraphs (loops allowed) with minimum degree 3 and E = V + 1,
    i.e. the graphs that cut the sphere into three faces, up to relabelling.

    Degree counting (3V <= 2E = 2V + 2) rules out V > 2; larger bounds are
    accepted so the enumeration can confirm that it finds nothing there.
    """
    from itertools import combinations_with_replacement, permutations

    found = []
    for V in range(1, max_vertices + 1):
        slots = [(a, b) for a in range(V) for b in range(a, V)]
        seen = set()
        for edges in combinations_with_replacement(slots, V + 1):
            deg = [0] * V
            for a, b in edges:
                deg[a] += 1
                deg[b] += 1
            if min(deg) < 3 or not _connected(V, edges):
                continue
            canon = min(tuple(sorted(tuple(sorted((p[a], p[b]))) for a, b in edges))
                        for p in permutations(range(V)))
            if canon in seen:
                continue
            seen.add(canon)
            found.append((V, list(canon)))
    return found


def _connected(V, edges):
    parent = list(range(V))

    def root(i):
        while parent[i] != i:
            i = parent[i]
        return i

    for a, b in edges:
        parent[root(a)] = root(b)
    return len({root(i) for i in range(V)}) == 1
