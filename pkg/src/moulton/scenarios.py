"""Scripted verifications of the worked examples on M_k.

Each ``example_*`` function runs its checks and returns a JSON-ready report
``{"example", "k", "pass", "checks": [...], ...}``.  ``pass`` is true when
every check holds; witnesses are embedded in serialized form.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .charts import (
    Chart,
    builtin_atlas_Ck,
    chart_union,
    glue,
    identity_chart,
    line_image_verdict,
    overlap_map,
    verify_chart_homomorphism,
)
from .continuation import (
    SLIT_CYLINDER,
    arc_in_region,
    canonical_loop,
    continue_along,
    holonomy,
    route_arc,
)
from .desargues import desargues_closes, find_nonclosing
from .errors import InconsistentError
from .model import Affine, Graph, MoultonPlane, as_k, mincident
from .projective import Projectivity, collinear, proj_equal
from .regions import IDEAL_SLOPE_IN_NEG, IDEAL_SLOPE_IN_POS, X_NEG, X_POS, Y_NEG, Box
from .serialize import (
    arc_to_json,
    config_to_json,
    line_to_json,
    matrix_to_json,
    point_to_json,
    scalar_to_json,
    triple_to_json,
    witness_to_json,
)

__all__ = [
    "EXAMPLES",
    "run_example",
    "example_local_nonclassical",
    "example_cylinder",
    "example_two_charts",
    "example_three_charts",
    "example_slit_cylinder",
    "union_uv",
    "shifted_fourth_chart",
    "kink_box",
]

UNION_UV = X_POS | (X_NEG & Y_NEG) | IDEAL_SLOPE_IN_POS


def _check(name, ok, **detail):
    return {"name": name, "ok": bool(ok), **detail}


def _report(example, k, checks, **extra):
    return {
        "example": example,
        "k": scalar_to_json(k),
        "pass": all(c["ok"] for c in checks),
        "checks": checks,
        **extra,
    }


def _verdict_json(v):
    out = {"ok": v.ok, "lines_checked": v.lines_checked}
    if not v.ok:
        out["line"] = line_to_json(v.line)
        out["points"] = [point_to_json(p) for p in v.points]
        out["images"] = [triple_to_json(i.coords) for i in v.images]
        out["reason"] = v.reason
    return out


def kink_box(i: int):
    """The open box of half-width 2^-i about the origin, minus the y-axis."""
    e = Fraction(1, 2**i)
    return Box(-e, e, -e, e) & (X_POS | X_NEG)


def example_local_nonclassical(k=2, budget: int = 100_000, seed: int = 0, levels: int = 9):
    """Complement of the kink axis: classical half planes, yet non-closing
    Desargues configurations in every box around the origin."""
    k = as_k(k)
    plane = MoultonPlane(k)
    checks = []
    for name, dom in (("right half plane", X_POS), ("left half plane", X_NEG)):
        v = verify_chart_homomorphism(k, identity_chart(name, dom), budget=200, seed=seed)
        checks.append(_check(f"{name} is classical", v.ok, verdict=_verdict_json(v)))
    for i in range(levels):
        hit = find_nonclosing(plane, kink_box(i), budget, seed=seed)
        detail = {"half_width": scalar_to_json(Fraction(1, 2**i))}
        ok = False
        if hit is not None:
            cfg, w = hit
            ok = not desargues_closes(plane, cfg).closes
            detail.update(config=config_to_json(cfg), witness=witness_to_json(w))
        checks.append(_check(f"non-closing configuration in box {i}", ok, **detail))
    return _report("6.1", k, checks)


def example_cylinder(k=2, budget: int = 1000, seed: int = 0):
    """The four-chart atlas of C_k and the holonomy of the canonical loop."""
    k = as_k(k)
    atlas = builtin_atlas_Ck(k)
    checks = []
    for name, chart in atlas.charts.items():
        v = verify_chart_homomorphism(k, chart, budget=budget, seed=seed)
        checks.append(_check(f"chart {name} is a homomorphism", v.ok, verdict=_verdict_json(v)))
    h = holonomy(atlas, canonical_loop(k), "U1")
    expected = Projectivity.diag(1 / k, 1, 1)
    checks.append(_check("holonomy is diag(1/k, 1, 1)", proj_equal(h.transform, expected)))
    checks.append(_check("holonomy is trivial exactly when k = 1", h.trivial == (k == 1)))
    return _report(
        "6.3",
        k,
        checks,
        holonomy={"matrix": matrix_to_json(h.transform), "trivial": h.trivial},
        chain=continue_along(atlas, canonical_loop(k), "U1").chain.names,
    )


def union_uv(k) -> Chart:
    """U1 glued to U2 along the first quadrant: one chart on U v V."""
    atlas = builtin_atlas_Ck(k)
    u, v = atlas["U1"], atlas["U2"]
    v_glued = glue(k, u, v, atlas.overlap("U1", "U2"))
    return chart_union(u, v_glued, "UV")


def example_two_charts(k=2, budget: int = 100_000, seed: int = 0):
    """U v V glues to a local homomorphism that is not a homomorphism."""
    k = as_k(k)
    atlas = builtin_atlas_Ck(k)
    u, v = atlas["U1"], atlas["U2"]
    v_glued = glue(k, u, v, atlas.overlap("U1", "U2"))
    psi_ok = all(t.is_identity for _, t in v_glued.pieces)
    phi = chart_union(u, v_glued, "UV")
    line = Graph(-1, -1)
    pts = (Affine(1, -2), Affine(2, -3), Affine(-1 / (2 * k), Fraction(-1, 2)))
    verdict = line_image_verdict(k, phi, line, pts)
    checks = [
        _check("glue gives the identity correction", psi_ok),
        _check(
            "witness line has non-collinear image",
            not verdict.ok,
            line=line_to_json(line),
            points=[point_to_json(p) for p in pts],
            images=[triple_to_json(phi(p).coords) for p in pts],
        ),
    ]
    plane = MoultonPlane(k)
    hit = find_nonclosing(plane, UNION_UV, budget, seed=seed)
    detail = {}
    ok = False
    if hit is not None:
        cfg, w = hit
        ok = not desargues_closes(plane, cfg).closes
        detail = {"config": config_to_json(cfg), "witness": witness_to_json(w)}
    checks.append(_check("non-closing configuration in U v V", ok, **detail))
    return _report("6.4", k, checks)


def shifted_fourth_chart(k) -> Chart:
    """U4 moved down by one: the chart p -> U4(p + (0, 1)) on U4 - (0, 1)."""
    k = as_k(k)
    left = X_NEG & Box(None, None, -1, None)
    right = X_POS & Box(None, None, None, -1)
    up = [[1, 0, 0], [0, 1, 1], [0, 0, 1]]
    return Chart(
        "W",
        left | right | IDEAL_SLOPE_IN_NEG,
        (
            (left, Projectivity([[k, 0, 0], [0, 1, 1], [0, 0, 1]])),
            (right | IDEAL_SLOPE_IN_NEG, Projectivity(up)),
        ),
    )


LEFT_STRIP = tuple(
    Affine(x, y)
    for x, y in [(-1, "-1/2"), (-2, "-1/4"), ("-1/2", "-3/4"), (-3, "-1/2"), (-1, "-1/4"), (-2, "-3/4")]
)
LOWER_RIGHT = tuple(Affine(x, y) for x, y in [(1, -2), (2, -3), (3, -2), (1, -5), (2, -2), (5, -3)])


def example_three_charts(k=2):
    """Closing the cover with a third chart W meets U v V in two components;
    the corrections demanded by the two components disagree."""
    k = as_k(k)
    phi = union_uv(k)
    w = shifted_fourth_chart(k)
    per_component = {
        name: matrix_to_json(overlap_map(phi, w, samples))
        for name, samples in (("left strip", LEFT_STRIP), ("lower right", LOWER_RIGHT))
    }
    try:
        glue(k, phi, w, LEFT_STRIP + LOWER_RIGHT)
        failure = None
    except InconsistentError as e:
        failure = str(e)
    h = holonomy(builtin_atlas_Ck(k), canonical_loop(k), "U1")
    checks = [
        _check("each overlap component glues on its own", True, corrections=per_component),
        _check(
            "gluing across both components fails",
            failure == "inconsistent correspondences",
            error=failure,
        ),
        _check("cylinder holonomy is nontrivial", not h.trivial, matrix=matrix_to_json(h.transform)),
    ]
    return _report("6.5", k, checks)


BASE_POINT = Affine(1, 1)


def continued_image(k, atlas, p, seed: int = 0):
    """Value at ``p`` of U1 continued inside the slit cylinder from (1, 1)."""
    arc = route_arc(k, BASE_POINT, p, random.Random(seed))
    return continue_along(atlas, arc, "U1").image


def example_slit_cylinder(k=2, pairs: int = 20, seed: int = 0):
    """Inside the slit cylinder continuation is path independent, but the
    continued map is no homomorphism: a line cut by the slit bends."""
    k = as_k(k)
    atlas = builtin_atlas_Ck(k)
    rng = random.Random(seed)
    agree = []
    for i in range(pairs):
        quad = rng.choice(((1, 1), (-1, -1), (-1, 1), (1, -1)))
        end = Affine(quad[0] * Fraction(rng.randint(1, 12), 4), quad[1] * Fraction(rng.randint(1, 12), 4))
        a1 = route_arc(k, BASE_POINT, end, rng)
        a2 = route_arc(k, BASE_POINT, end, rng)
        inside = arc_in_region(a1, SLIT_CYLINDER) and arc_in_region(a2, SLIT_CYLINDER)
        i1 = continue_along(atlas, a1, "U1").image
        i2 = continue_along(atlas, a2, "U1").image
        agree.append(
            {
                "end": point_to_json(end),
                "inside": inside,
                "images": [triple_to_json(i1.coords), triple_to_json(i2.coords)],
                "ok": inside and i1 == i2,
                "arcs": [arc_to_json(a1), arc_to_json(a2)],
            }
        )
    line = Graph(-1, 1)
    pts = (Affine(Fraction(1, 2), Fraction(1, 2)), Affine(2, -1), Affine(-1, k + 1))
    imgs = [continued_image(k, atlas, p, seed) for p in pts]
    on_line = all(p in SLIT_CYLINDER and mincident(k, p, line) for p in pts)
    checks = [
        _check("homotopic arcs give equal images", all(a["ok"] for a in agree), pairs=agree),
        _check(
            "line cut by the slit has non-collinear image",
            on_line and not collinear(*imgs),
            line=line_to_json(line),
            points=[point_to_json(p) for p in pts],
            images=[triple_to_json(i.coords) for i in imgs],
        ),
    ]
    return _report("6.6", k, checks)


EXAMPLES = {
    "6.1": example_local_nonclassical,
    "6.3": example_cylinder,
    "6.4": example_two_charts,
    "6.5": example_three_charts,
    "6.6": example_slit_cylinder,
}


def run_example(example_id: str, k=2, seed: int = 0, budget=None):
    if example_id not in EXAMPLES:
        raise KeyError(example_id)
    fn = EXAMPLES[example_id]
    kwargs = {"k": k}
    if example_id != "6.5":
        kwargs["seed"] = seed
    if budget is not None and example_id in ("6.1", "6.3", "6.4"):
        kwargs["budget"] = budget
    return fn(**kwargs)
