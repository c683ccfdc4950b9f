"""Command-line front end.

Exit codes: 0 pass, 1 expectation not met, 2 input error, 3 witness found,
4 arc leaves atlas coverage.  Reports are JSON with sorted keys, so a rerun
with the same inputs and seed is byte-identical.
"""

from __future__ import annotations

import functools
import json
import sys
from fractions import Fraction
from typing import Optional

import click

from .charts import builtin_atlas_Ck
from .continuation import canonical_loop, continue_along, holonomy
from .desargues import desargues_closes, find_nonclosing
from .errors import CoverageError, GeometryError, ParseError
from .model import MoultonPlane, as_k
from .regions import EVERYTHING, X_POS, region_from_json
from .render import Figure, Viewport, render_svg
from .scenarios import EXAMPLES, UNION_UV, kink_box, run_example
from .serialize import (
    Scene,
    chart_to_json,
    config_from_json,
    config_to_json,
    dumps,
    load_scene,
    matrix_to_json,
    point_to_json,
    scalar_from_json,
    scalar_to_json,
    triple_to_json,
    witness_to_json,
)

__all__ = ["main", "SEARCH_PRESETS"]

EXIT_PASS, EXIT_EXPECT, EXIT_INPUT, EXIT_WITNESS, EXIT_COVERAGE = 0, 1, 2, 3, 4

SEARCH_PRESETS = {
    "anywhere": EVERYTHING,
    "origin": kink_box(0),
    "right": X_POS,
    "uv": UNION_UV,
}


class _InputError(Exception):
    pass


def _k_option(f):
    return click.option("--k", "k_text", default=None, help="Moulton parameter, e.g. 2 or 3/2.")(f)


def _scene_option(f):
    return click.option("--scene", "scene_path", default=None, type=click.Path(dir_okay=False),
                        help="Scene JSON file.")(f)


def _out_option(f):
    return click.option("--out", "out_path", default=None, type=click.Path(dir_okay=False),
                        help="Write the report here instead of stdout.")(f)


def _parse_k(k_text: Optional[str]) -> Optional[Fraction]:
    if k_text is None:
        return None
    try:
        return as_k(scalar_from_json(k_text))
    except GeometryError as e:
        raise _InputError(str(e)) from None


def _scene(scene_path, k) -> Scene:
    if scene_path is None:
        return Scene(as_k(2 if k is None else k))
    try:
        return load_scene(scene_path, k)
    except GeometryError as e:
        raise _InputError(str(e)) from None


def _emit(report: dict, out_path: Optional[str]) -> None:
    text = dumps(report)
    if out_path is None:
        click.echo(text, nl=False)
    else:
        with open(out_path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _finish(report: dict, natural: int, expect: Optional[str], verdict: str, out_path) -> None:
    """Attach the exit status and exit.

    With ``--expect`` a matching verdict exits with the natural code; a
    mismatch exits with the natural code, or 1 when that would be 0.
    """
    code = natural
    if expect is not None:
        report["expectation"] = {"expected": expect, "met": verdict == expect}
        if verdict != expect and code == EXIT_PASS:
            code = EXIT_EXPECT
    report["exit_status"] = code
    _emit(report, out_path)
    sys.exit(code)


def _input_error(command: str, err: Exception, out_path) -> None:
    click.echo(f"error: {err}", err=True)
    _emit({"command": command, "error": str(err), "exit_status": EXIT_INPUT}, out_path)
    sys.exit(EXIT_INPUT)


def _guard(command):
    """Map library input errors to exit code 2."""

    def wrap(fn):
        @functools.wraps(fn)
        def inner(*args, **kwargs):
            try:
                return fn(*args, **kwargs)
            except (_InputError, ParseError) as e:
                # the render target is an SVG path, never a report
                _input_error(command, e, None if command == "render" else kwargs.get("out_path"))

        return inner

    return wrap


@click.group()
def main():
    """Exact computations in the Moulton planes M_k."""


# -- desargues -------------------------------------------------------------


def _resolve_region(text: str, scene: Scene):
    if text in SEARCH_PRESETS:
        return SEARCH_PRESETS[text]
    if text in scene.regions:
        return scene.regions[text]
    try:
        obj = json.loads(text)
    except json.JSONDecodeError:
        raise _InputError(
            f"unknown region {text!r}: use one of {sorted(SEARCH_PRESETS)}, a scene region or a JSON expression"
        ) from None
    return region_from_json(obj)


@main.command("desargues")
@_k_option
@_scene_option
@click.option("--config", "config_name", default=None, help="Configuration name in the scene.")
@click.option("--config-json", default=None, help="Configuration as inline JSON.")
@click.option("--search", "search", default=None, help="Region to search: preset, scene name or JSON.")
@click.option("--budget", default=100_000, show_default=True, type=click.IntRange(min=1))
@click.option("--seed", default=0, show_default=True, type=int)
@click.option("--expect", type=click.Choice(["closes", "absent"]), default=None)
@_out_option
@_guard("desargues")
def cmd_desargues(k_text, scene_path, config_name, config_json, search, budget, seed, expect, out_path):
    """Test one configuration for closure, or search a region for a non-closing one."""
    k = _parse_k(k_text)
    scene = _scene(scene_path, k)
    plane = MoultonPlane(scene.k)
    report = {"command": "desargues", "k": scalar_to_json(scene.k)}
    if (config_name is None and config_json is None) == (search is None):
        raise _InputError("give exactly one of --config/--config-json or --search")
    if search is None:
        if config_json is not None:
            try:
                cfg = config_from_json(json.loads(config_json))
            except json.JSONDecodeError as e:
                raise _InputError(f"bad --config-json: {e}") from None
        else:
            cfg = scene.lookup("configs", config_name)
        try:
            w = desargues_closes(plane, cfg)
        except GeometryError as e:
            raise _InputError(str(e)) from None
        verdict = "closes" if w.closes else "nonclosing"
        report.update(mode="config", config=config_to_json(cfg), witness=witness_to_json(w), verdict=verdict)
        _finish(report, EXIT_PASS if w.closes else EXIT_WITNESS, expect, verdict, out_path)
    region = _resolve_region(search, scene)
    hit = find_nonclosing(plane, region, budget, seed=seed)
    report.update(mode="search", region=region.to_json(), budget=budget, seed=seed)
    if hit is None:
        report["verdict"] = "absent"
        _finish(report, EXIT_PASS, expect, "absent", out_path)
    cfg, w = hit
    report.update(verdict="found", config=config_to_json(cfg), witness=witness_to_json(w))
    _finish(report, EXIT_WITNESS, expect, "found", out_path)


# -- holonomy and continuation ----------------------------------------------


def _atlas_and_arc(scene: Scene, atlas_name, arc_name, default_arc):
    atlas = builtin_atlas_Ck(scene.k) if atlas_name in (None, "builtin") else scene.lookup("atlases", atlas_name)
    if arc_name in (None, "canonical") and default_arc:
        arc = canonical_loop(scene.k)
    elif arc_name is None:
        raise _InputError("an arc name is required")
    else:
        arc = scene.lookup("arcs", arc_name)
    if atlas.k != scene.k:
        raise _InputError(f"atlas has k={atlas.k}, scene has k={scene.k}")
    return atlas, arc


def _coverage_report(report, err: CoverageError, out_path):
    report.update(verdict="coverage", exit_point=point_to_json(err.exit_point), error=str(err))
    report["exit_status"] = EXIT_COVERAGE
    _emit(report, out_path)
    sys.exit(EXIT_COVERAGE)


@main.command("holonomy")
@_k_option
@_scene_option
@click.option("--atlas", "atlas_name", default=None, help="Atlas name in the scene (default: builtin).")
@click.option("--loop", "loop_name", default=None, help="Loop name in the scene (default: canonical).")
@click.option("--base", default="U1", show_default=True, help="Base chart.")
@click.option("--expect", type=click.Choice(["trivial", "nontrivial"]), default=None)
@_out_option
@_guard("holonomy")
def cmd_holonomy(k_text, scene_path, atlas_name, loop_name, base, expect, out_path):
    """Holonomy of a loop: the projectivity relating the base chart to its continuation."""
    scene = _scene(scene_path, _parse_k(k_text))
    atlas, loop = _atlas_and_arc(scene, atlas_name, loop_name, True)
    report = {"command": "holonomy", "k": scalar_to_json(scene.k), "atlas": atlas_name or "builtin",
              "loop": loop_name or "canonical", "base": base}
    if base not in atlas.charts:
        raise _InputError(f"unknown chart {base!r}")
    try:
        h = holonomy(atlas, loop, base)
        chain = continue_along(atlas, loop, base).chain.names
    except CoverageError as e:
        _coverage_report(report, e, out_path)
    except GeometryError as e:
        raise _InputError(str(e)) from None
    verdict = "trivial" if h.trivial else "nontrivial"
    report.update(matrix=matrix_to_json(h.transform), trivial=h.trivial, chain=chain, verdict=verdict)
    _finish(report, EXIT_PASS, expect, verdict, out_path)


@main.command("continue")
@_k_option
@_scene_option
@click.option("--atlas", "atlas_name", default=None, help="Atlas name in the scene (default: builtin).")
@click.option("--arc", "arc_name", default=None, help="Arc name in the scene (default: canonical loop).")
@click.option("--start", "start_chart", default="U1", show_default=True)
@_out_option
@_guard("continue")
def cmd_continue(k_text, scene_path, atlas_name, arc_name, start_chart, out_path):
    """Continue the start chart along an arc and report the final chart and end image."""
    scene = _scene(scene_path, _parse_k(k_text))
    atlas, arc = _atlas_and_arc(scene, atlas_name, arc_name, True)
    report = {"command": "continue", "k": scalar_to_json(scene.k), "atlas": atlas_name or "builtin",
              "arc": arc_name or "canonical", "start": start_chart}
    if start_chart not in atlas.charts:
        raise _InputError(f"unknown chart {start_chart!r}")
    try:
        c = continue_along(atlas, arc, start_chart)
    except CoverageError as e:
        _coverage_report(report, e, out_path)
    except GeometryError as e:
        raise _InputError(str(e)) from None
    report.update(
        chain=c.chain.names,
        final=chart_to_json(c.final),
        end=point_to_json(arc.end),
        image=triple_to_json(c.image.coords),
        verdict="continued",
    )
    _finish(report, EXIT_PASS, None, "continued", out_path)


# -- examples and rendering -------------------------------------------------


@main.command("example")
@click.argument("example_id", type=click.Choice(sorted(EXAMPLES)))
@_k_option
@click.option("--seed", default=0, show_default=True, type=int)
@click.option("--budget", default=None, type=click.IntRange(min=1))
@click.option("--expect", type=click.Choice(["pass"]), default=None)
@_out_option
@_guard("example")
def cmd_example(example_id, k_text, seed, budget, expect, out_path):
    """Run the scripted verification of one worked example."""
    k = _parse_k(k_text) or Fraction(2)
    report = {"command": "example", **run_example(example_id, k=k, seed=seed, budget=budget)}
    verdict = "pass" if report["pass"] else "fail"
    _finish(report, EXIT_PASS if report["pass"] else EXIT_EXPECT, expect, verdict, out_path)


def _parse_viewport(text: str) -> Viewport:
    parts = text.split(",")
    if len(parts) != 4:
        raise _InputError("viewport is x0,x1,y0,y1")
    try:
        return Viewport(*(scalar_from_json(p) for p in parts))
    except GeometryError as e:
        raise _InputError(str(e)) from None


def _witness_from_report(path: str, plane: MoultonPlane):
    try:
        with open(path, encoding="utf-8") as fh:
            rep = json.load(fh)
        cfg = config_from_json(rep["config"])
    except (OSError, json.JSONDecodeError, KeyError, TypeError) as e:
        raise _InputError(f"cannot read a configuration from {path!r}: {e}") from None
    try:
        return cfg, desargues_closes(plane, cfg)
    except GeometryError as e:
        raise _InputError(str(e)) from None


@main.command("render")
@_k_option
@_scene_option
@click.option("--select", "selection", multiple=True, help="Scene object name; repeatable.")
@click.option("--witness", "witness_path", default=None, type=click.Path(dir_okay=False),
              help="A desargues report whose configuration is drawn.")
@click.option("--viewport", default="-3,3,-3,3", show_default=True, help="x0,x1,y0,y1")
@click.option("--out", "out_path", required=True, type=click.Path(dir_okay=False))
@_guard("render")
def cmd_render(k_text, scene_path, selection, witness_path, viewport, out_path):
    """Draw selected scene objects as an SVG figure."""
    scene = _scene(scene_path, _parse_k(k_text))
    vp = _parse_viewport(viewport)
    fig = Figure()
    plane = MoultonPlane(scene.k)
    for name in selection:
        if name in scene.points:
            fig.points.append((name, scene.points[name]))
        elif name in scene.lines:
            fig.lines.append((name, scene.lines[name]))
        elif name in scene.regions:
            fig.regions.append((name, scene.regions[name]))
        elif name in scene.configs:
            cfg = scene.configs[name]
            try:
                fig.configs.append((name, cfg, desargues_closes(plane, cfg)))
            except GeometryError as e:
                raise _InputError(str(e)) from None
        elif name in scene.arcs:
            arc = scene.arcs[name]
            fig.points.extend((f"{name}[{i}]", p) for i, p in enumerate(arc.waypoints))
            fig.lines.extend((f"{name}:leg{i}", leg.line) for i, leg in enumerate(arc.legs))
        else:
            raise _InputError(f"unknown scene object {name!r}")
    if witness_path is not None:
        cfg, w = _witness_from_report(witness_path, plane)
        fig.configs.append(("witness", cfg, w))
    if fig.empty():
        raise _InputError("empty selection")
    svg = render_svg(scene.k, fig, vp)
    with open(out_path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(svg)
    sys.exit(EXIT_PASS)

