"""JSON codecs for scalars, points, lines, matrices, atlases, arcs and scenes.

Scalars are ``"num/den"`` strings, triples are three-element arrays, and
matrices are 3x3 arrays of scalars.  Decoders raise :class:`ParseError` on
anything malformed; reference errors in scenes are parse errors too.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .charts import Atlas, Chart, builtin_atlas_Ck
from .continuation import PolylineArc
from .desargues import LABELS, ClosureWitness, DesarguesConfig
from .errors import GeometryError, ParseError
from .model import (
    IDEAL_VERTICAL,
    LINE_AT_INFINITY,
    Affine,
    Graph,
    Ideal,
    MoultonLine,
    MoultonPoint,
    Vertical,
    as_k,
)
from .projective import Projectivity, to_fraction
from .regions import Region, region_from_json

__all__ = [
    "scalar_to_json",
    "scalar_from_json",
    "point_to_json",
    "point_from_json",
    "line_to_json",
    "line_from_json",
    "triple_to_json",
    "matrix_to_json",
    "matrix_from_json",
    "chart_to_json",
    "chart_from_json",
    "atlas_to_json",
    "atlas_from_json",
    "arc_to_json",
    "arc_from_json",
    "config_to_json",
    "config_from_json",
    "witness_to_json",
    "Scene",
    "scene_from_json",
    "load_scene",
    "dumps",
]


def scalar_to_json(v) -> str:
    v = Fraction(v)
    return f"{v.numerator}/{v.denominator}"


def scalar_from_json(v) -> Fraction:
    if isinstance(v, float):
        raise ParseError(f"floats are not exact rationals: {v!r}")
    return to_fraction(v)


def point_to_json(p: MoultonPoint) -> dict:
    if isinstance(p, Affine):
        return {"affine": [scalar_to_json(p.x), scalar_to_json(p.y)]}
    if isinstance(p, Ideal):
        return {"ideal": scalar_to_json(p.slope)}
    return {"ideal_vertical": True}


def _single(obj, what):
    if not isinstance(obj, dict) or len(obj) != 1:
        raise ParseError(f"bad {what}: {obj!r}")
    return next(iter(obj.items()))


def _pair(val, what):
    if not isinstance(val, list) or len(val) != 2:
        raise ParseError(f"{what} needs two scalars, got {val!r}")
    return [scalar_from_json(v) for v in val]


def point_from_json(obj) -> MoultonPoint:
    tag, val = _single(obj, "point")
    if tag == "affine":
        return Affine(*_pair(val, "affine point"))
    if tag == "ideal":
        return Ideal(scalar_from_json(val))
    if tag == "ideal_vertical" and val is True:
        return IDEAL_VERTICAL
    raise ParseError(f"bad point: {obj!r}")


def line_to_json(l: MoultonLine) -> dict:
    if isinstance(l, Graph):
        return {"graph": [scalar_to_json(l.s), scalar_to_json(l.b)]}
    if isinstance(l, Vertical):
        return {"vertical": scalar_to_json(l.c)}
    return {"line_at_infinity": True}


def line_from_json(obj) -> MoultonLine:
    tag, val = _single(obj, "line")
    if tag == "graph":
        return Graph(*_pair(val, "graph line"))
    if tag == "vertical":
        return Vertical(scalar_from_json(val))
    if tag == "line_at_infinity" and val is True:
        return LINE_AT_INFINITY
    raise ParseError(f"bad line: {obj!r}")


def triple_to_json(t) -> list[str]:
    return [scalar_to_json(v) for v in t]


def matrix_to_json(t: Projectivity) -> list[list[str]]:
    return [[scalar_to_json(v) for v in row] for row in t.rows]


def matrix_from_json(obj) -> Projectivity:
    if not isinstance(obj, list) or len(obj) != 3 or any(
        not isinstance(r, list) or len(r) != 3 for r in obj
    ):
        raise ParseError("a matrix is a 3x3 array of scalars")
    try:
        return Projectivity([[scalar_from_json(v) for v in row] for row in obj])
    except ParseError:
        raise
    except GeometryError as e:
        raise ParseError(str(e)) from None


# -- charts and atlases --------------------------------------------------------


def chart_to_json(c: Chart) -> dict:
    return {
        "name": c.name,
        "domain": c.domain.to_json(),
        "pieces": [{"region": r.to_json(), "matrix": matrix_to_json(t)} for r, t in c.pieces],
    }


def _get(obj, key, what):
    if not isinstance(obj, dict) or key not in obj:
        raise ParseError(f"{what} needs field {key!r}")
    return obj[key]


def chart_from_json(obj) -> Chart:
    name = _get(obj, "name", "chart")
    pieces = _get(obj, "pieces", "chart")
    if not isinstance(pieces, list) or not pieces:
        raise ParseError(f"chart {name!r} needs a non-empty list of pieces")
    return Chart(
        name,
        region_from_json(_get(obj, "domain", "chart")),
        tuple(
            (region_from_json(_get(p, "region", "piece")), matrix_from_json(_get(p, "matrix", "piece")))
            for p in pieces
        ),
    )


def atlas_to_json(a: Atlas) -> dict:
    overlaps = []
    for pair in sorted(a.overlaps, key=sorted):
        x, y = sorted(pair)
        samples = a.overlaps[pair]
        overlaps.append(
            {"a": x, "b": y, "samples": None if samples is None else [point_to_json(p) for p in samples]}
        )
    return {
        "k": scalar_to_json(a.k),
        "charts": [chart_to_json(c) for c in a.charts.values()],
        "overlaps": overlaps,
    }


def atlas_from_json(obj, k=None) -> Atlas:
    if obj == "builtin":
        if k is None:
            raise ParseError("the builtin atlas needs k")
        return builtin_atlas_Ck(k)
    k = scalar_from_json(obj["k"]) if isinstance(obj, dict) and "k" in obj else k
    if k is None:
        raise ParseError("atlas needs field 'k'")
    charts = {}
    for c in _get(obj, "charts", "atlas"):
        chart = chart_from_json(c)
        if chart.name in charts:
            raise ParseError(f"duplicate chart name {chart.name!r}")
        charts[chart.name] = chart
    overlaps = {}
    for o in obj.get("overlaps", []):
        samples = _get(o, "samples", "overlap")
        pair = frozenset((_get(o, "a", "overlap"), _get(o, "b", "overlap")))
        overlaps[pair] = None if samples is None else tuple(map(point_from_json, samples))
    try:
        return Atlas(as_k(k), charts, overlaps)
    except ParseError:
        raise
    except GeometryError as e:
        raise ParseError(str(e)) from None


# -- arcs and configurations -------------------------------------------------


def arc_to_json(arc: PolylineArc) -> dict:
    return {
        "waypoints": [point_to_json(p) for p in arc.waypoints],
        "vias": [point_to_json(p) for p in arc.vias],
    }


def arc_from_json(obj, k) -> PolylineArc:
    wps = [point_from_json(p) for p in _get(obj, "waypoints", "arc")]
    vias = [point_from_json(p) for p in _get(obj, "vias", "arc")]
    try:
        return PolylineArc.build(k, wps, vias)
    except ParseError:
        raise
    except GeometryError as e:
        raise ParseError(f"bad arc: {e}") from None


def config_to_json(cfg: DesarguesConfig) -> dict:
    return {n: point_to_json(p) for n, p in cfg.labeled().items()}


def config_from_json(obj) -> DesarguesConfig:
    pts = {n: point_from_json(_get(obj, n, "configuration")) for n in LABELS}
    return DesarguesConfig.from_points(
        pts["o"], [pts["a1"], pts["a2"], pts["a3"]], [pts["b1"], pts["b2"], pts["b3"]]
    )


def witness_to_json(w: ClosureWitness) -> dict:
    return {
        "c12": point_to_json(MoultonPoint.from_triple(w.c12)),
        "c13": point_to_json(MoultonPoint.from_triple(w.c13)),
        "c23": point_to_json(MoultonPoint.from_triple(w.c23)),
        "closes": w.closes,
        "axis": None if w.axis is None else line_to_json(MoultonLine.from_triple(w.axis)),
        "residual": scalar_to_json(w.residual),
    }


# -- scenes --------------------------------------------------------------------


@dataclass
class Scene:
    """Named objects from a scene file, all decoded and cross-checked."""

    k: Fraction
    points: dict[str, MoultonPoint] = field(default_factory=dict)
    lines: dict[str, MoultonLine] = field(default_factory=dict)
    regions: dict[str, Region] = field(default_factory=dict)
    arcs: dict[str, PolylineArc] = field(default_factory=dict)
    atlases: dict[str, Atlas] = field(default_factory=dict)
    configs: dict[str, DesarguesConfig] = field(default_factory=dict)

    def lookup(self, kind: str, name: str):
        table = getattr(self, kind)
        if name not in table:
            raise ParseError(f"unknown {kind[:-1]} {name!r}")
        return table[name]


def _point_ref(obj, points):
    if isinstance(obj, str):
        if obj not in points:
            raise ParseError(f"unknown point {obj!r}")
        return points[obj]
    return point_from_json(obj)


def scene_from_json(obj: Any, k=None) -> Scene:
    if not isinstance(obj, dict):
        raise ParseError("a scene is a JSON object")
    if k is None and "k" in obj:
        k = scalar_from_json(obj["k"])
    try:
        k = as_k(2 if k is None else k)
    except GeometryError as e:
        if isinstance(e, ParseError):
            raise
        raise ParseError(str(e)) from None
    sc = Scene(k)
    sc.points = {n: point_from_json(p) for n, p in obj.get("points", {}).items()}
    sc.lines = {n: line_from_json(l) for n, l in obj.get("lines", {}).items()}
    sc.regions = {n: region_from_json(r) for n, r in obj.get("regions", {}).items()}
    for n, a in obj.get("arcs", {}).items():
        resolved = {
            "waypoints": [point_to_json(_point_ref(p, sc.points)) for p in _get(a, "waypoints", "arc")],
            "vias": [point_to_json(_point_ref(p, sc.points)) for p in _get(a, "vias", "arc")],
        }
        sc.arcs[n] = arc_from_json(resolved, k)
    sc.atlases = {n: atlas_from_json(a, k) for n, a in obj.get("atlases", {}).items()}
    for n, a in sc.atlases.items():
        if a.k != k:
            raise ParseError(f"atlas {n!r} has k={a.k}, scene has k={k}")
    for n, c in obj.get("configs", {}).items():
        if not isinstance(c, dict):
            raise ParseError(f"bad configuration {n!r}")
        resolved = {lab: point_to_json(_point_ref(_get(c, lab, "configuration"), sc.points)) for lab in LABELS}
        sc.configs[n] = config_from_json(resolved)
    return sc


def load_scene(path: str, k=None) -> Scene:
    try:
        with open(path, encoding="utf-8") as fh:
            obj = json.load(fh)
    except (OSError, json.JSONDecodeError) as e:
        raise ParseError(f"cannot read scene {path!r}: {e}") from None
    return scene_from_json(obj, k)


def dumps(obj) -> str:
    """Deterministic JSON: sorted keys, fixed separators, trailing newline."""
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=True) + "\n"
