from fractions import Fraction

import pytest
from conftest import KS, oracle_lines, oracle_points, rationals
from hypothesis import assume, given
from hypothesis import strategies as st
from oracles import (
    from_lib_line,
    from_lib_point,
    o_incident,
    o_join,
    o_meet,
    to_lib_line,
    to_lib_point,
)

from moulton import (
    IDEAL_VERTICAL,
    LINE_AT_INFINITY,
    Affine,
    DegenerateError,
    GeometryError,
    Graph,
    Ideal,
    MoultonPlane,
    Vertical,
    line_param,
    line_point,
    mincident,
    mjoin,
    mmeet,
    moulton_automorphism,
)


class TestLeftHalfSlope:
    """Negative-slope lines have slope k*s left of the y-axis."""

    def test_kinked_graph_points(self):
        line = Graph(-1, 0)
        assert mincident(2, Affine(1, -1), line)
        assert mincident(2, Affine(-1, 2), line)
        assert not mincident(2, Affine(-1, 1), line)
        assert mincident(1, Affine(-1, 1), line)

    def test_positive_slopes_straight(self):
        line = Graph(3, 1)
        assert mincident(2, Affine(-1, -2), line)

    def test_kinked_flag(self):
        assert Graph(-1, 5).kinked
        assert not Graph(0, 5).kinked and not Graph(2, 5).kinked
        assert not Vertical(1).kinked and not LINE_AT_INFINITY.kinked


class TestFrozenOracleValues:
    """Expected values computed once with the branch-formula oracle."""

    @pytest.mark.parametrize(
        "k, p, q, expected",
        [
            (2, (-1, 3), (1, 1), Graph(Fraction(-2, 3), Fraction(5, 3))),
            (2, (-2, 1), (-1, -1), Graph(-1, -3)),
            (Fraction(1, 2), (-2, 3), (2, 0), Graph(Fraction(-1), 2)),
            (3, (-1, 1), (4, 1), Graph(0, 1)),
            (2, (5, 2), (5, -7), Vertical(5)),
        ],
    )
    def test_join(self, k, p, q, expected):
        assert mjoin(k, Affine(*p), Affine(*q)) == expected

    @pytest.mark.parametrize(
        "k, l, m, expected",
        [
            (2, Graph(-1, 0), Graph(1, 3), Affine(-1, 2)),
            (2, Graph(-1, 0), Graph(-2, 2), Affine(2, -2)),
            (2, Graph(-1, 1), Vertical(-3), Affine(-3, 7)),
            (2, Graph(-1, 1), Graph(-1, 4), Ideal(-1)),
            (2, Vertical(0), Vertical(2), IDEAL_VERTICAL),
            (Fraction(3, 2), Graph(-2, 0), Graph(1, -1), Affine(Fraction(1, 3), Fraction(-2, 3))),
        ],
    )
    def test_meet(self, k, l, m, expected):
        assert mmeet(k, l, m) == expected

    def test_ideal_joins(self):
        assert mjoin(2, Affine(-1, 0), Ideal(-1)) == Graph(-1, -2)
        assert mjoin(2, Affine(1, 0), Ideal(-1)) == Graph(-1, 1)
        assert mjoin(2, Affine(3, 4), IDEAL_VERTICAL) == Vertical(3)
        assert mjoin(2, Ideal(1), Ideal(2)) == LINE_AT_INFINITY


@given(KS, oracle_points(), oracle_points())
def test_join_matches_oracle(k, p, q):
    assume(p != q)
    assert from_lib_line(mjoin(k, to_lib_point(p), to_lib_point(q))) == o_join(k, p, q)


@given(KS, oracle_lines(), oracle_lines())
def test_meet_matches_oracle(k, l, m):
    assume(l != m)
    assert from_lib_point(mmeet(k, to_lib_line(l), to_lib_line(m))) == o_meet(k, l, m)


@given(KS, oracle_points(), oracle_lines())
def test_incidence_matches_oracle(k, p, l):
    assert mincident(k, to_lib_point(p), to_lib_line(l)) == o_incident(k, p, l)


@given(KS, oracle_points(), oracle_points(), st.one_of(st.none(), rationals()))
def test_join_unique(k, p, q, t):
    """The join contains both points, and any two of its points give it back."""
    assume(p != q)
    a, b = to_lib_point(p), to_lib_point(q)
    line = mjoin(k, a, b)
    assert mincident(k, a, line) and mincident(k, b, line)
    assert mjoin(k, b, a) == line
    r = line_point(k, line, t)
    if r != a:
        assert mjoin(k, a, r) == line


@given(KS, oracle_lines(), oracle_lines())
def test_meet_total_and_on_both(k, l, m):
    assume(l != m)
    a, b = to_lib_line(l), to_lib_line(m)
    x = mmeet(k, a, b)
    assert mincident(k, x, a) and mincident(k, x, b)


def test_degenerate_errors():
    with pytest.raises(DegenerateError, match="degenerate join"):
        mjoin(2, Affine(1, 1), Affine(1, 1))
    with pytest.raises(DegenerateError, match="degenerate meet"):
        mmeet(2, Graph(-1, 0), Graph(-1, 0))


def test_k_must_be_positive():
    with pytest.raises(GeometryError):
        MoultonPlane(0)
    with pytest.raises(GeometryError):
        MoultonPlane("-1/2")


@given(KS, rationals(), rationals(), rationals(), st.one_of(st.none(), rationals()))
def test_line_param_roundtrip(k, s, b, c, t):
    for line in (Graph(s, b), Vertical(c), LINE_AT_INFINITY):
        p = line_point(k, line, t)
        assert mincident(k, p, line)
        assert line_param(line, p) == t


@given(KS, oracle_points(), oracle_lines(), rationals().filter(bool), rationals().filter(bool), rationals())
def test_automorphism_equivariance(k, p, l, a, b, c):
    g = moulton_automorphism(k, abs(a), abs(b), c)
    lp, ll = to_lib_point(p), to_lib_line(l)
    assert mincident(k, g(lp), g.line(ll)) == mincident(k, lp, ll)
    assert g.inverse()(g(lp)) == lp


def test_automorphism_formulae():
    g = moulton_automorphism(2, 2, 3, 1)
    assert g(Affine(1, 1)) == Affine(2, 4)
    assert g(Ideal(-1)) == Ideal(Fraction(-3, 2))
    assert g(IDEAL_VERTICAL) == IDEAL_VERTICAL
    assert g.line(Graph(-1, 1)) == Graph(Fraction(-3, 2), 4)
    assert g.line(Vertical(2)) == Vertical(4)
    with pytest.raises(GeometryError):
        moulton_automorphism(2, -1, 1, 0)


def test_plane_residual_zero_iff_incident():
    plane = MoultonPlane(2)
    line = Graph(-1, 0).t
    assert plane.residual(Affine(-1, 2).t, line) == 0
    assert plane.residual(Affine(-1, 1).t, line) != 0
    assert plane.residual(Ideal(-1).t, line) == 0


def test_classical_triples_at_k1():
    """With k = 1 the stored triples are the homogeneous coordinates."""
    assert Affine(Fraction(1, 2), -3).t == (1, -6, 2)
    assert Ideal(Fraction(2, 3)).t == (3, 2, 0)
    assert Graph(Fraction(1, 2), 1).t == (1, -2, 2)
    assert Vertical(3).t == (1, 0, -3)
