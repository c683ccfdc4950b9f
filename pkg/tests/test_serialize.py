import json
from fractions import Fraction
from pathlib import Path

import pytest
from conftest import oracle_lines, oracle_points
from hypothesis import given
from oracles import to_lib_line, to_lib_point

from moulton import Affine, Ideal, MoultonPlane, ParseError, builtin_atlas_Ck
from moulton.continuation import canonical_loop, holonomy
from moulton.desargues import desargues_closes
from moulton.serialize import (
    arc_from_json,
    arc_to_json,
    atlas_from_json,
    atlas_to_json,
    config_from_json,
    config_to_json,
    dumps,
    line_from_json,
    line_to_json,
    load_scene,
    matrix_from_json,
    point_from_json,
    point_to_json,
    scalar_from_json,
    scalar_to_json,
    scene_from_json,
)

DEMO = Path(__file__).resolve().parent.parent / "scenes" / "demo.json"


def test_scalar_format():
    assert scalar_to_json(2) == "2/1"
    assert scalar_to_json(Fraction(-6, 4)) == "-3/2"
    assert scalar_from_json("-3/2") == Fraction(-3, 2)
    with pytest.raises(ParseError):
        scalar_from_json(0.5)


@given(oracle_points())
def test_point_roundtrip(p):
    q = to_lib_point(p)
    assert point_from_json(json.loads(json.dumps(point_to_json(q)))) == q


@given(oracle_lines())
def test_line_roundtrip(l):
    m = to_lib_line(l)
    assert line_from_json(json.loads(json.dumps(line_to_json(m)))) == m


@pytest.mark.parametrize(
    "bad",
    [{}, {"affine": ["1"]}, {"affine": ["1", "2"], "ideal": "0"}, {"ideal": 0.25}, {"ideal_vertical": False}, []],
)
def test_point_rejects(bad):
    with pytest.raises(ParseError):
        point_from_json(bad)


def test_matrix_rejects():
    with pytest.raises(ParseError):
        matrix_from_json([["1", "0"], ["0", "1"]])
    with pytest.raises(ParseError):
        matrix_from_json([["1", "2", "3"], ["2", "4", "6"], ["0", "0", "1"]])


def test_atlas_roundtrip_keeps_holonomy():
    atlas = builtin_atlas_Ck(Fraction(3, 2))
    again = atlas_from_json(json.loads(dumps(atlas_to_json(atlas))))
    assert again.k == atlas.k and list(again.charts) == list(atlas.charts)
    h1 = holonomy(atlas, canonical_loop(atlas.k), "U1").transform
    h2 = holonomy(again, canonical_loop(atlas.k), "U1").transform
    assert h1 == h2


def test_builtin_atlas_keyword():
    assert atlas_from_json("builtin", k=3).k == 3


def test_arc_roundtrip():
    arc = canonical_loop(2)
    assert arc_from_json(json.loads(dumps(arc_to_json(arc))), 2) == arc


def test_config_roundtrip():
    sc = load_scene(str(DEMO))
    cfg = sc.configs["right_half"]
    assert config_from_json(config_to_json(cfg)) == cfg


def test_demo_scene():
    sc = load_scene(str(DEMO))
    assert sc.k == 2
    assert sc.points["q"] == Ideal(0)
    assert sc.arcs["canonical"] == canonical_loop(2)
    assert desargues_closes(MoultonPlane(2), sc.configs["right_half"]).closes
    assert Affine(Fraction(1, 8), Fraction(-1, 8)) in sc.regions["near_origin"]


def test_scene_k_override():
    assert scene_from_json({"k": "2", "points": {"p": {"affine": ["1", "1"]}}}, k="1/2").k == Fraction(1, 2)
    # the demo arcs bend at the kink for k = 2 only
    with pytest.raises(ParseError, match="bad arc"):
        load_scene(str(DEMO), k=Fraction(1, 2))
    assert scene_from_json({}).k == 2


@pytest.mark.parametrize(
    "obj",
    [
        [],
        {"k": "0"},
        {"k": "1/0"},
        {"arcs": {"a": {"waypoints": ["nowhere", {"affine": ["1", "1"]}], "vias": [{"affine": ["2", "2"]}]}}},
        {"configs": {"c": {"o": {"affine": ["0", "0"]}}}},
        {"atlases": {"a": {"k": "3", "charts": [], "overlaps": []}}},
    ],
)
def test_scene_rejects(obj):
    with pytest.raises(ParseError):
        scene_from_json(obj)


def test_missing_file(tmp_path):
    with pytest.raises(ParseError):
        load_scene(str(tmp_path / "absent.json"))


def test_dumps_is_stable():
    assert dumps({"b": 1, "a": [1, 2]}) == '{\n  "a": [\n    1,\n    2\n  ],\n  "b": 1\n}\n'
