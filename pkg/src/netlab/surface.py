"""Doubled polygons: two copies of a planar polygon glued along their boundary.

The result is a flat 2-sphere whose curvature sits at the polygon vertices.
Both sheets share the same planar polygon coordinates; the Bottom sheet is the
mirror image of the Top one, so that crossing an edge is the planar reflection
of the travel direction across that edge line plus a sheet flip (the billiard
picture).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

TOP = "top"
BOTTOM = "bottom"
SHEETS = (TOP, BOTTOM)

ANGLE_SUM_TOL = 1e-12
SNAP_REL = 1e-12


class SurfaceError(ValueError):
    pass


class InvalidSpec(SurfaceError):
    pass


class OutsidePolygon(SurfaceError):
    pass


def other_sheet(sheet: str) -> str:
    return BOTTOM if sheet == TOP else TOP


def unit(angle: float) -> np.ndarray:
    return np.array([math.cos(angle), math.sin(angle)])


def angle_of(v) -> float:
    """Angle of a planar vector in [0, 2pi)."""
    a = math.atan2(v[1], v[0])
    return a + 2 * math.pi if a < 0 else a


@dataclass(frozen=True)
class PolygonSpec:
    """Base polygon of a doubled polygon.

    ``kind`` is ``"regular"`` (uses ``n``) or ``"triangle"`` (uses ``angles``,
    in radians).  ``scale`` is the circumradius for regular polygons and the
    longest side for triangles.
    """

    kind: str
    n: int | None = None
    angles: tuple[float, float, float] | None = None
    scale: float = 1.0
    angles_deg: tuple | None = field(default=None, compare=False)

    @classmethod
    def regular(cls, n: int, scale: float = 1.0) -> "PolygonSpec":
        return cls("regular", n=int(n), scale=float(scale))

    @classmethod
    def triangle(cls, angles: Sequence[float], scale: float = 1.0) -> "PolygonSpec":
        return cls("triangle", angles=tuple(float(a) for a in angles), scale=float(scale))

    @classmethod
    def triangle_deg(cls, angles_deg: Sequence, scale: float = 1.0) -> "PolygonSpec":
        """Triangle from angles in degrees; keeps the exact degree values around."""
        exact = tuple(Fraction(a).limit_denominator(10**9) for a in angles_deg)
        rad = tuple(float(a) * math.pi / 180.0 for a in exact)
        return cls("triangle", angles=rad, scale=float(scale), angles_deg=exact)

    def validate(self) -> None:
        if not self.scale > 0:
            raise InvalidSpec(f"scale must be positive, got {self.scale}")
        if self.kind == "regular":
            if self.n is None or self.n < 3:
                raise InvalidSpec(f"regular polygon needs n >= 3, got {self.n}")
        elif self.kind == "triangle":
            if self.angles is None or len(self.angles) != 3:
                raise InvalidSpec("triangle needs three angles")
            if any(not (0 < a < math.pi) for a in self.angles):
                raise InvalidSpec(f"triangle angles must lie in (0, pi): {self.angles}")
            if self.angles_deg is not None:
                if sum(self.angles_deg) != 180:
                    raise InvalidSpec(f"angles sum to {float(sum(self.angles_deg))} degrees")
            elif abs(sum(self.angles) - math.pi) > ANGLE_SUM_TOL:
                raise InvalidSpec(f"angles sum to {sum(self.angles)}, not pi")
        else:
            raise InvalidSpec(f"unknown polygon kind {self.kind!r}")

    def scaled(self, factor: float) -> "PolygonSpec":
        return PolygonSpec(self.kind, self.n, self.angles, self.scale * factor, self.angles_deg)

    def to_json(self) -> dict:
        if self.kind == "regular":
            return {"kind": "regular", "n": self.n, "scale": self.scale}
        if self.angles_deg is not None:
            deg = [int(a) if a.denominator == 1 else float(a) for a in self.angles_deg]
        else:
            deg = [a * 180.0 / math.pi for a in self.angles]
        return {"kind": "triangle", "angles_deg": deg, "scale": self.scale}

    @classmethod
    def from_json(cls, data: dict) -> "PolygonSpec":
        kind = data.get("kind")
        scale = float(data.get("scale", 1.0))
        if kind == "regular":
            return cls.regular(int(data["n"]), scale)
        if kind == "triangle":
            return cls.triangle_deg(data["angles_deg"], scale)
        raise InvalidSpec(f"unknown polygon kind {kind!r}")


@dataclass(frozen=True)
class ConePoint:
    index: int
    position: tuple[float, float]
    interior_angle: float
    curvature: float


@dataclass(frozen=True)
class Locus:
    kind: str  # "interior" | "edge" | "cone"
    index: int | None = None
    t: float | None = None

    def __repr__(self):
        if self.kind == "edge":
            return f"OnEdge({self.index}, {self.t:.6g})"
        if self.kind == "cone":
            return f"AtCone({self.index})"
        return "Interior"


INTERIOR = Locus("interior")


@dataclass(frozen=True)
class SurfacePoint:
    sheet: str
    coords: tuple[float, float]
    locus: Locus = INTERIOR

    @property
    def xy(self) -> np.ndarray:
        return np.array(self.coords, dtype=float)

    @property
    def on_edge(self) -> bool:
        return self.locus.kind == "edge"

    def same_point(self, other: "SurfacePoint", tol: float) -> bool:
        if math.dist(self.coords, other.coords) > tol:
            return False
        if self.locus.kind == "interior" and other.locus.kind == "interior":
            return self.sheet == other.sheet
        # boundary points are shared by both sheets
        return True

    def identified(self) -> "SurfacePoint":
        """The same point written on the other sheet (only meaningful on the seam)."""
        if self.locus.kind == "interior":
            raise SurfaceError("interior points are not identified across sheets")
        return SurfacePoint(other_sheet(self.sheet), self.coords, self.locus)


class Surface:
    """A doubled polygon in canonical placement.

    Regular polygons are centred at the origin with vertex k at angle 2*pi*k/n.
    Triangles put their longest side on the positive x-axis starting at the
    origin.  Edge k runs from vertex k to vertex k+1 (counter-clockwise).
    """

    def __init__(self, spec: PolygonSpec):
        spec.validate()
        self.spec = spec
        self.scale = spec.scale
        if spec.kind == "regular":
            n = spec.n
            k = np.arange(n)
            self.vertices = spec.scale * np.column_stack(
                [np.cos(2 * np.pi * k / n), np.sin(2 * np.pi * k / n)])
            interior = [math.pi - 2 * math.pi / n] * n
            curv = [4 * math.pi / n] * n
            self.curvature_over_pi = [Fraction(4, n)] * n
        else:
            self.vertices, interior = _place_triangle(spec.angles, spec.scale)
            curv = [2 * math.pi - 2 * a for a in interior]
            if spec.angles_deg is not None:
                self.curvature_over_pi = [2 - Fraction(a, 90) for a in spec.angles_deg]
            else:
                self.curvature_over_pi = None
        self.vertices.setflags(write=False)
        self.n = len(self.vertices)
        self.edges = [(i, (i + 1) % self.n) for i in range(self.n)]
        self.cones = [ConePoint(i, tuple(self.vertices[i]), interior[i], curv[i])
                      for i in range(self.n)]

        nxt = np.roll(self.vertices, -1, axis=0)
        self.edge_vectors = nxt - self.vertices
        self.edge_lengths = np.linalg.norm(self.edge_vectors, axis=1)
        self.tangents = self.edge_vectors / self.edge_lengths[:, None]
        # outward normals for a counter-clockwise polygon
        self.normals = np.column_stack([self.tangents[:, 1], -self.tangents[:, 0]])
        self.offsets = np.einsum("ij,ij->i", self.normals, self.vertices)
        self.snap = SNAP_REL * self.scale
        self.centroid = self.vertices.mean(axis=0)
        self._reflections = [self._reflection_matrix(e) for e in range(self.n)]

    def __repr__(self):
        if self.spec.kind == "regular":
            return f"Surface(regular n={self.n}, scale={self.scale})"
        deg = [round(c.interior_angle * 180 / math.pi, 9) for c in self.cones]
        return f"Surface(triangle {deg}, scale={self.scale})"

    # -- geometry -----------------------------------------------------------

    @property
    def total_curvature(self) -> float:
        return sum(c.curvature for c in self.cones)

    @property
    def apothem(self) -> float:
        """Distance from the centroid to the edge lines (regular polygons)."""
        return float(np.min(self.offsets - self.normals @ self.centroid))

    def edge_point(self, e: int, t: float) -> np.ndarray:
        return self.vertices[e] + t * self.edge_vectors[e]

    def edge_midpoint(self, e: int) -> SurfacePoint:
        if not 0 <= e < self.n:
            raise IndexError(f"edge index {e} out of range for {self.n}-gon")
        p = self.edge_point(e, 0.5)
        return SurfacePoint(TOP, (float(p[0]), float(p[1])), Locus("edge", e, 0.5))

    def reflect_point(self, e: int, p) -> np.ndarray:
        p = np.asarray(p, dtype=float)
        nrm = self.normals[e]
        return p - 2 * (p @ nrm - self.offsets[e]) * nrm

    def reflect_vector(self, e: int, v) -> np.ndarray:
        v = np.asarray(v, dtype=float)
        nrm = self.normals[e]
        return v - 2 * (v @ nrm) * nrm

    def reflection(self, e: int) -> np.ndarray:
        """3x3 affine matrix of the reflection across the line of edge e."""
        return self._reflections[e]

    def _reflection_matrix(self, e: int) -> np.ndarray:
        nrm = self.normals[e]
        lin = np.eye(2) - 2 * np.outer(nrm, nrm)
        m = np.eye(3)
        m[:2, :2] = lin
        m[:2, 2] = 2 * self.offsets[e] * nrm
        return m

    def contains(self, p, tol: float | None = None) -> bool:
        tol = self.snap if tol is None else tol
        return bool(np.all(self.normals @ np.asarray(p, float) - self.offsets <= tol))

    def classify(self, coords, tol: float | None = None) -> Locus:
        """Interior / OnEdge(e, t) / AtCone(i) with boundary snapping."""
        tol = self.snap if tol is None else tol
        p = np.asarray(coords, dtype=float)
        d = self.normals @ p - self.offsets
        if np.any(d > tol):
            raise OutsidePolygon(f"point {tuple(p)} lies outside the polygon")
        dv = np.linalg.norm(self.vertices - p, axis=1)
        i = int(np.argmin(dv))
        if dv[i] <= tol:
            return Locus("cone", i)
        e = int(np.argmax(d))
        if d[e] >= -tol:
            t = float((p - self.vertices[e]) @ self.edge_vectors[e] / self.edge_lengths[e] ** 2)
            return Locus("edge", e, min(max(t, 0.0), 1.0))
        return INTERIOR

    def point(self, coords, sheet: str = TOP, tol: float | None = None) -> SurfacePoint:
        loc = self.classify(coords, tol)
        if loc.kind == "edge":
            # snap exactly onto the edge
            c = self.edge_point(loc.index, loc.t)
            coords = (float(c[0]), float(c[1]))
        elif loc.kind == "cone":
            coords = tuple(float(c) for c in self.vertices[loc.index])
        else:
            coords = (float(coords[0]), float(coords[1]))
        return SurfacePoint(sheet, coords, loc)

    def center(self, sheet: str = TOP) -> SurfacePoint:
        return self.point(self.centroid, sheet)

    def chart_direction(self, p: SurfacePoint, sheet: str, v) -> np.ndarray:
        """Express a polygon-coordinate vector based at p, lying on ``sheet``,
        in the oriented local chart at p.

        Interior Top points use polygon coordinates, interior Bottom points the
        mirrored chart, and seam points the Top chart extended across the edge
        by reflection.  All charts are orientation-compatible on the sphere.
        """
        v = np.asarray(v, dtype=float)
        if p.locus.kind == "edge":
            return v if sheet == TOP else self.reflect_vector(p.locus.index, v)
        if p.sheet == BOTTOM:
            return np.array([v[0], -v[1]])
        return v

    def scaled(self, factor: float) -> "Surface":
        return Surface(self.spec.scaled(factor))


def _place_triangle(angles, scale):
    a = list(angles)
    big = int(np.argmax(a))
    # the longest edge is opposite the largest angle: edge j = (big+1, big+2)
    j = (big + 1) % 3
    k = (j + 1) % 3
    verts = np.zeros((3, 2))
    verts[j] = (0.0, 0.0)
    verts[k] = (scale, 0.0)
    # law of sines: side from vertex j to the apex is opposite angle at k
    side_j = scale * math.sin(a[k]) / math.sin(a[big])
    verts[big] = (side_j * math.cos(a[j]), side_j * math.sin(a[j]))
    return verts, a


def build_surface(spec: PolygonSpec) -> Surface:
    return Surface(spec)


def classify_point(surface: Surface, coords) -> Locus:
    return surface.classify(coords)


def edge_midpoint(surface: Surface, edge_index: int) -> SurfacePoint:
    return surface.edge_midpoint(edge_index)
