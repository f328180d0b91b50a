"""Net files: JSON in, JSON out.

Schema::

    {"surface": {"kind": "regular", "n": 6, "scale": 1.0},
     "vertices": [{"sheet": "top", "x": 0.5, "y": 0.0}, ...],
     "edges": [{"a": 0, "b": 1, "word": [0], "direction": 0.52, "length": 1.7}, ...],
     "type": "theta"}

``length`` is optional; without it the edge length is read off the
development of ``word`` (the distance from vertex a to the unfolded image of
vertex b), so ``word`` becomes mandatory.
"""

from __future__ import annotations

import json
import math
from pathlib import Path

import numpy as np

from .net import OTHER, MalformedNet, Net
from .surface import SHEETS, PolygonSpec, SurfaceError, build_surface
from .tracer import holonomy


class NetFormatError(ValueError):
    pass


def net_to_json(net: Net) -> dict:
    return {
        "surface": net.surface.spec.to_json(),
        "vertices": [{"sheet": v.sheet, "x": v.coords[0], "y": v.coords[1]}
                     for v in net.vertices],
        "edges": [{"a": e.a, "b": e.b, "word": list(e.path.word),
                   "direction": e.direction, "length": e.length} for e in net.edges],
        "type": net.graph_type,
    }


def _developed_length(surface, a, b, word):
    iso = holonomy(surface, word)[-1]
    img = iso[:2, :2] @ b.xy + iso[:2, 2]
    return float(np.linalg.norm(img - a.xy))


def net_from_json(data) -> Net:
    """Parse and re-trace a net; raises NetFormatError on schema problems."""
    try:
        surface = build_surface(PolygonSpec.from_json(data["surface"]))
        verts = []
        for v in data["vertices"]:
            sheet = v.get("sheet", "top")
            if sheet not in SHEETS:
                raise NetFormatError(f"unknown sheet {sheet!r}")
            x, y = float(v["x"]), float(v["y"])
            if not surface.contains((x, y), tol=1e-9 * surface.scale):
                raise NetFormatError(f"vertex ({x}, {y}) lies outside the polygon")
            verts.append(surface.point((x, y), sheet))
        specs, words = [], []
        for e in data["edges"]:
            a, b = int(e["a"]), int(e["b"])
            if not (0 <= a < len(verts) and 0 <= b < len(verts)):
                raise NetFormatError(f"edge ({a}, {b}) refers to a missing vertex")
            word = [int(k) for k in e["word"]] if e.get("word") is not None else None
            if word is not None and any(not 0 <= k < surface.n for k in word):
                raise NetFormatError(f"word {word} names a missing polygon edge")
            if "length" in e and e["length"] is not None:
                length = float(e["length"])
            elif word is not None:
                length = _developed_length(surface, verts[a], verts[b], word)
            else:
                raise NetFormatError("an edge needs a length or a crossing word")
            direction = float(e["direction"])
            if not (math.isfinite(direction) and math.isfinite(length)) or length <= 0:
                raise NetFormatError(f"edge ({a}, {b}) has a bad direction or length")
            specs.append((a, b, direction, length))
            words.append(word)
        net = Net.build(surface, verts, specs, data.get("type", OTHER))
    except (KeyError, TypeError, AttributeError) as exc:
        raise NetFormatError(f"malformed net file: {exc!r}") from exc
    except MalformedNet as exc:
        raise NetFormatError(str(exc)) from exc
    except SurfaceError as exc:
        raise NetFormatError(str(exc)) from exc
    for edge, word in zip(net.edges, words):
        edge.word = word
    return net


def dumps(net: Net) -> str:
    return json.dumps(net_to_json(net), indent=2, sort_keys=True)


def save_net(net: Net, path) -> None:
    Path(path).write_text(dumps(net) + "\n")


def load_net(path) -> Net:
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise NetFormatError(f"{path}: not JSON ({exc})") from exc
    return net_from_json(data)
