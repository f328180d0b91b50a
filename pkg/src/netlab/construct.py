"""Builders for the net families that exist on doubled triangles and regular polygons."""

from __future__ import annotations

import json
import math
from importlib import resources

import numpy as np

from .net import BIFOCAL, FIGURE_EIGHT, GENERAL_3REGULAR, THETA, Net
from .surface import (BOTTOM, TOP, Locus, PolygonSpec, Surface, SurfacePoint, angle_of,
                      build_surface)
from .tracer import END_SNAP_REL, develop_word, holonomy, trace

ANGLE_TOL = 1e-10


class ConstructionError(ValueError):
    pass


class NotMultipleOf3(ConstructionError):
    pass


class NotMultipleOf4(ConstructionError):
    pass


class NotOdd(ConstructionError):
    pass


class NotIsosceles(ConstructionError):
    pass


class NotMidpointPerpendicular(ConstructionError):
    pass


def _apply(m, p):
    return m[:2, :2] @ np.asarray(p, float) + m[:2, 2]


def _regular(n, scale=1.0) -> Surface:
    return build_surface(PolygonSpec.regular(n, scale))


# -- theta ----------------------------------------------------------------------

def construct_theta_regular(n: int, scale: float = 1.0) -> Net:
    """Theta-graph on the doubled regular n-gon, n a multiple of 3.

    The two vertices are the centres of the sheets; the edges run along the
    apothems to the midpoints of edges 0, n/3 and 2n/3 and straight on.
    """
    if n < 3 or n % 3:
        raise NotMultipleOf3(f"theta-graphs need n divisible by 3, got {n}")
    s = _regular(n, scale)
    a = s.apothem
    top = SurfacePoint(TOP, (0.0, 0.0))
    bottom = SurfacePoint(BOTTOM, (0.0, 0.0))
    edges = []
    for k in (0, n // 3, 2 * n // 3):
        normal = (2 * k + 1) * math.pi / n
        edges.append((0, 1, normal, 2 * a))
    return Net.build(s, [top, bottom], edges, THETA)


# -- tetrahedral 3-regular net on 4m-gons ----------------------------------------

TETRA_T = (3 + math.sqrt(3)) / 12


def _square_frame(n: int, scale: float):
    """Map from the unit cell [0,1]^2 to the doubled regular n-gon (4 | n), lining
    the cell sides up with the polygon edges 0, n/4, n/2, 3n/4.

    The cell side x=1 goes to edge 0, y=1 to edge n/4 and so on, so the cell is
    the square whose corners get cut off to make the n-gon.
    """
    s = _regular(n, scale)
    a = s.apothem
    phi = math.pi / n  # normal direction of edge 0
    rot = np.array([[math.cos(phi), -math.sin(phi)], [math.sin(phi), math.cos(phi)]])

    def to_poly(uv):
        return rot @ ((np.asarray(uv, float) - 0.5) * 2 * a)

    def dir_to_poly(ang):
        return ang + phi

    return s, to_poly, dir_to_poly, 2 * a


def construct_3regular_4n(n: int, scale: float = 1.0) -> Net:
    """Tetrahedral net (V=4, E=6, F=4) on the doubled regular n-gon, 4 | n.

    In the unit-cell picture the Top vertices sit on the diagonal at (t, t)
    and (1-t, 1-t) and the Bottom vertices on the anti-diagonal; rotating a
    quarter turn about the centre and swapping sheets maps the net to itself.
    Every edge leaving the sheets crosses the seam at an edge midpoint, so the
    same net survives cutting the corners of the square down to an n-gon.
    The balancing condition fixes t = (3 + sqrt 3)/12.
    """
    if n < 4 or n % 4:
        raise NotMultipleOf4(f"the tetrahedral net needs n divisible by 4, got {n}")
    s, to_poly, dir_to_poly, side = _square_frame(n, scale)
    t = TETRA_T

    def pt(sheet, uv):
        return s.point(to_poly(uv), sheet)

    verts = [pt(TOP, (t, t)), pt(TOP, (1 - t, 1 - t)),
             pt(BOTTOM, (1 - t, t)), pt(BOTTOM, (t, 1 - t))]
    diag = math.sqrt(2) * (1 - 2 * t) * side
    # a crossing edge: from (t, t) to the midpoint (0, 1/2) and on to the mirror vertex
    cross_len = 2 * math.hypot(t, 0.5 - t) * side
    towards_left = math.atan2(0.5 - t, -t)
    towards_bottom = math.atan2(-t, 0.5 - t)
    edges = [
        (0, 1, dir_to_poly(math.pi / 4), diag),
        (2, 3, dir_to_poly(3 * math.pi / 4), diag),
        # vertex (t, t): through (0, 1/2) to Bottom (t, 1-t), through (1/2, 0) to Bottom (1-t, t)
        (0, 3, dir_to_poly(towards_left), cross_len),
        (0, 2, dir_to_poly(towards_bottom), cross_len),
        # vertex (1-t, 1-t): through (1, 1/2) and (1/2, 1)
        (1, 2, dir_to_poly(towards_left + math.pi), cross_len),
        (1, 3, dir_to_poly(towards_bottom + math.pi), cross_len),
    ]
    return Net.build(s, verts, edges, GENERAL_3REGULAR)


# -- figure-eights ------------------------------------------------------------------

def _mirror_loop(surface, M, first_dir, length, graph_type=FIGURE_EIGHT):
    """Figure-eight at seam point M made of a loop and its image under the half
    turn about M.

    If the first loop leaves along d and comes back with end tangent e, the
    second one leaves along -e and comes back along -d, so the closed
    geodesic continues smoothly through M and opposite angles agree.
    """
    p = trace(surface, M, first_dir, max_length=length)
    if not p.end.same_point(M, END_SNAP_REL * surface.scale * 10):
        raise ConstructionError("first loop does not return to its base point")
    # the second loop leaves along -e, i.e. along the first loop's arrival direction
    second = p.end_direction % (2 * math.pi)
    return Net.build(surface, [M], [(0, 0, first_dir, length), (0, 0, second, length)],
                     graph_type)


def construct_figure8_odd(n: int, scale: float = 1.0) -> Net:
    """Figure-eight on the doubled regular odd-gon.

    From the midpoint M of edge 0 the geodesic runs straight at the edge
    (n-1)/2 (whose outward normal points along the negative x-axis), meets it
    perpendicularly, comes back to M on the other sheet, and the mirror loop
    does the same with the symmetric far edge.
    """
    if n < 3 or n % 2 == 0:
        raise NotOdd(f"the odd-gon figure-eight needs odd n >= 3, got {n}; on even "
                     "polygons perpendicular geodesics close up on the parallel side")
    s = _regular(n, scale)
    M = s.edge_midpoint(0)
    far = (n - 1) // 2
    d = s.normals[far]
    length = 2 * (s.offsets[far] - M.xy @ d)
    return _mirror_loop(s, M, angle_of(d), length)


def _equal_angle_edge(surface: Surface, angles, tol=ANGLE_TOL):
    """Edge between the two equal-angled vertices of an isosceles triangle."""
    for e in range(3):
        i, j = surface.edges[e]
        if abs(angles[i] - angles[j]) <= tol:
            return e
    return None


def construct_figure8_isosceles(angles_deg, scale: float = 1.0) -> Net:
    """Figure-eight on a doubled isosceles triangle (angles in degrees).

    The self-intersection is the midpoint of the edge between the equal
    angles; each loop runs perpendicularly into the next edge and back.
    """
    spec = PolygonSpec.triangle_deg(angles_deg, scale)
    s = build_surface(spec)
    ang = [c.interior_angle for c in s.cones]
    if spec.angles_deg is not None:
        exact = list(spec.angles_deg)
        e = next((k for k in range(3) if exact[s.edges[k][0]] == exact[s.edges[k][1]]), None)
    else:
        e = _equal_angle_edge(s, ang)
    if e is None:
        raise NotIsosceles(f"triangle {list(angles_deg)} has no two equal angles")
    M = s.edge_midpoint(e)
    f = (e + 1) % 3
    d = s.normals[f]
    length = 2 * (s.offsets[f] - M.xy @ d)
    return _mirror_loop(s, M, angle_of(d), length)


# -- bifocal on 30-30-120 -----------------------------------------------------------

BIFOCAL_LOOP_SIZE = 0.2


def cone_loop_direction(surface: Surface, vertex: SurfacePoint, cone: int, side: int = +1) -> float:
    """Launch angle of the geodesic loop from ``vertex`` once around ``cone``.

    Unrolled about a cone of total angle c < pi, the loop is the chord from the
    vertex to its image rotated by c, so it leaves at (pi - c)/2 off the
    direction to the cone; for c = pi/3 that is 60 degrees either side.
    ``side`` picks the turning sense in the chart at ``vertex``.
    """
    c = surface.cones[cone]
    total = 2 * c.interior_angle
    towards = angle_of(np.asarray(c.position) - vertex.xy)
    return (towards + side * (math.pi - total) / 2) % (2 * math.pi)


def construct_bifocal_30_30_120(scale: float = 1.0,
                                loop_size: float = BIFOCAL_LOOP_SIZE) -> Net:
    """Bifocal on the doubled 30-30-120 triangle.

    The two 30-degree cones (vertices 0 and 1) are joined along the seam by
    the base edge, a saddle connection.  The net vertices sit on the base at
    distance ``loop_size * scale`` from the two cones, the connecting edge is
    the stretch of base between them, and each vertex carries the geodesic
    loop around its cone.  That loop is an equilateral chord of the 60-degree
    cone, so its corner is 2pi/3, its bisector points at the cone, and the
    connecting edge leaving radially balances the vertex.  The mirror in the
    axis of the triangle exchanges the two halves.
    """
    s = build_surface(PolygonSpec.triangle_deg((30, 30, 120), scale))
    L = s.edge_lengths[0]
    p = loop_size * scale
    if not 0 < p < L / 2:
        raise ConstructionError("loop_size must put the vertices strictly inside the base")
    P = s.point(s.edge_point(0, p / L), TOP)
    Q = s.point(s.edge_point(0, 1 - p / L), TOP)
    edges = [
        (0, 0, cone_loop_direction(s, P, 0, -1), p),
        (1, 1, cone_loop_direction(s, Q, 1, +1), p),
        (0, 1, 0.0, L - 2 * p),
    ]
    return Net.build(s, [P, Q], edges, BIFOCAL)


# -- hexagon figure-eight (golden fixture) -----------------------------------------

HEXAGON_FIXTURE = "figure8_hexagon.json"


def construct_figure8_hexagon() -> Net:
    """Figure-eight on the doubled regular hexagon, loaded from the fixture the
    word search produced (see ``netlab.fixtures``)."""
    from .io import net_from_json
    data = json.loads(resources.files("netlab.data").joinpath(HEXAGON_FIXTURE).read_text())
    return net_from_json(data)


# -- corner cutting -------------------------------------------------------------------

def corner_cut_extend(net: Net, from_n: int, to_n: int) -> Net:
    """Re-embed a net from the doubled regular ``from_n``-gon in the doubled
    regular ``to_n``-gon obtained by cutting off corners.

    The target polygon shares the apothem and edge directions of every
    (to_n/from_n)-th edge with the source, so a net that meets the seam only
    at edge midpoints (and keeps away from the corners) is untouched by the
    cut.  The edges are re-traced on the new surface from the same launch
    data.
    """
    src = net.surface
    if src.spec.kind != "regular" or src.n != from_n:
        raise ConstructionError(f"net does not live on the regular {from_n}-gon")
    if to_n % from_n:
        raise ConstructionError(f"{to_n} is not a multiple of {from_n}")
    tol = 1e-9 * src.scale
    for e in net.edges:
        for k, t in enumerate(e.path.crossing_params):
            if abs(t - 0.5) * src.edge_lengths[e.path.word[k]] > tol:
                raise NotMidpointPerpendicular(
                    f"edge ({e.a}, {e.b}) crosses polygon edge {e.path.word[k]} at "
                    f"parameter {t:.6f}, away from its midpoint")
    for v in net.vertices:
        if v.locus.kind == "edge" and abs(v.locus.t - 0.5) > 1e-9:
            raise NotMidpointPerpendicular("a vertex sits on the seam away from a midpoint")
    r = to_n // from_n
    a = src.apothem
    # new circumradius with the same apothem
    R = a / math.cos(math.pi / to_n)
    dst = _regular(to_n, R)
    rho = (1 - r) * math.pi / to_n
    c, sn = math.cos(rho), math.sin(rho)
    rot = np.array([[c, -sn], [sn, c]])
    verts = [dst.point(rot @ v.xy, v.sheet) for v in net.vertices]
    edges = [(e.a, e.b, e.direction + rho, e.length) for e in net.edges]
    out = Net.build(dst, verts, edges, net.graph_type)
    for old, new in zip(net.edges, out.edges):
        if len(old.path.word) != len(new.path.word):
            raise ConstructionError("an edge runs into a cut-off corner")
    return out
