"""Gauss-Bonnet bookkeeping in exact arithmetic.

On the doubled regular n-gon every cone point carries curvature 4pi/n.  A
face of a 3-regular geodesic net with y corners (each turning by pi/3) and x
cone points inside satisfies n(6 - y) = 12x; a loop face of a figure-eight
with x cone points turns by alpha = 2pi - 4pi x/n at its corner.  Angles here
are Fractions standing for multiples of pi.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .surface import InvalidSpec

ANGLE_TOL = 1e-10


class InvalidTriangle(InvalidSpec):
    pass


def _check_n(n):
    if isinstance(n, bool) or not isinstance(n, int) or n < 3:
        raise ValueError(f"n must be an integer >= 3, got {n!r}")


@dataclass(frozen=True)
class Constraint3Regular:
    n: int
    solutions: list[tuple[int, int]]
    degenerate_allowed: bool = True

    def __contains__(self, xy) -> bool:
        return tuple(xy) in self.solutions


@dataclass(frozen=True)
class LoopAngleSet:
    n: int
    entries: list[tuple[int, Fraction]] = field(default_factory=list)

    @property
    def alphas(self) -> list[Fraction]:
        return [a for _, a in self.entries]


def solve_3regular(n: int) -> Constraint3Regular:
    """Face types (x, y), y = 1..5, allowed in a 3-regular net on the doubled n-gon."""
    _check_n(n)
    sols = []
    for y in range(1, 6):
        num = n * (6 - y)
        if num % 12 == 0:
            sols.append((num // 12, y))
    return Constraint3Regular(n, sols, True)


def theta_admissible(n: int) -> dict:
    """All three faces of a theta-graph have two corners, so n = 3x."""
    _check_n(n)
    ok = n % 3 == 0
    return {"admissible": ok, "x_per_face": n // 3 if ok else None}


def bifocal_admissible(n: int) -> dict:
    """Loop faces have one corner (x = 5n/12); the outer face has four (x = n/6)."""
    _check_n(n)
    ok = n % 12 == 0
    return {"admissible": ok,
            "loop_x": 5 * n // 12 if ok else None,
            "outer_x": 2 * n // 12 if ok else None}


def loop_angle(n: int, x: int) -> Fraction:
    """Turning angle (over pi) at the corner of a loop face holding x cone points."""
    return 2 - Fraction(4 * x, n)


def figure8_loop_angles(n: int) -> LoopAngleSet:
    """Loop-face options (x, alpha/pi) with 0 < alpha < pi."""
    _check_n(n)
    entries = []
    for x in range(n + 1):
        a = loop_angle(n, x)
        if 0 < a < 1:
            entries.append((x, a))
    return LoopAngleSet(n, entries)


def _triangle_flags(a, b, c, eq) -> dict:
    third, sixth = math.pi / 3, math.pi / 6
    angles = sorted((a, b, c))
    return {
        "theta": all(eq(t, third) for t in angles),
        "bifocal": eq(angles[0], sixth) and eq(angles[1], sixth) and eq(angles[2], 4 * sixth),
        "figure8": eq(a, b) or eq(b, c) or eq(a, c),
    }


def classify_triangle(angles, tol: float = ANGLE_TOL) -> dict:
    """Which of the three-face nets a doubled triangle with these angles (radians) can carry."""
    angles = [float(t) for t in angles]
    if len(angles) != 3 or any(not math.isfinite(t) or t <= 0 for t in angles):
        raise InvalidTriangle(f"not a triangle: {angles}")
    if abs(sum(angles) - math.pi) > tol:
        raise InvalidTriangle(f"angles sum to {sum(angles)}, not pi")
    return _triangle_flags(*angles, eq=lambda u, v: abs(u - v) <= tol)


def classify_triangle_deg(angles_deg) -> dict:
    """Exact variant of :func:`classify_triangle` for rational degree inputs."""
    try:
        q = [Fraction(str(t)) if isinstance(t, float) else Fraction(t) for t in angles_deg]
    except (TypeError, ValueError) as exc:
        raise InvalidTriangle(f"bad angles {angles_deg!r}") from exc
    if len(q) != 3 or any(t <= 0 for t in q) or sum(q) != 180:
        raise InvalidTriangle(f"not a triangle: {[str(t) for t in q]}")
    s = sorted(q)
    return {
        "theta": s == [60, 60, 60],
        "bifocal": s == [30, 30, 120],
        "figure8": s[0] == s[1] or s[1] == s[2],
    }


def _fmt(fr: Fraction) -> str:
    return str(fr.numerator) if fr.denominator == 1 else f"{fr.numerator}/{fr.denominator}"


def report(n: int, graph: str | None = None) -> dict:
    """JSON-ready summary for the doubled regular n-gon, optionally one graph type only."""
    _check_n(n)
    parts = {
        "three_regular": lambda: [list(s) for s in solve_3regular(n).solutions],
        "theta": lambda: {"admissible": theta_admissible(n)["admissible"],
                          "x": theta_admissible(n)["x_per_face"]},
        "bifocal": lambda: bifocal_admissible(n),
        "figure8_angles": lambda: [{"x": x, "alpha_over_pi": _fmt(a)}
                                   for x, a in figure8_loop_angles(n).entries],
    }
    aliases = {"3regular": "three_regular", "three-regular": "three_regular",
               "figure8": "figure8_angles", "figure-eight": "figure8_angles"}
    out = {"n": n}
    if graph is None:
        keys = list(parts)
    else:
        key = aliases.get(graph, graph)
        if key not in parts:
            raise ValueError(f"unknown graph type {graph!r}")
        keys = [key]
    for k in keys:
        out[k] = parts[k]()
    return out
