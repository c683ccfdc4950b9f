from fractions import Fraction

import pytest
from conftest import rationals
from hypothesis import assume, given
from hypothesis import strategies as st
from oracles import h_cross, h_same

from moulton import (
    DegenerateError,
    GeneralPositionError,
    InconsistentError,
    ParseError,
    PLine,
    PPoint,
    Projectivity,
    SingularError,
    apply,
    collinear,
    compose,
    fit_projectivity,
    invert,
    pincident,
    pjoin,
    pmeet,
    proj_equal,
    to_fraction,
)

ints = st.integers(-9, 9)
points = st.tuples(ints, ints, ints).filter(lambda t: t != (0, 0, 0)).map(lambda t: PPoint(*t))


@st.composite
def projectivities(draw):
    rows = [[draw(ints) for _ in range(3)] for _ in range(3)]
    try:
        return Projectivity(rows)
    except SingularError:
        assume(False)


class TestScalars:
    @pytest.mark.parametrize(
        "text, value",
        [("3", Fraction(3)), ("-4/3", Fraction(-4, 3)), (" 6/8 ", Fraction(3, 4)), (5, Fraction(5))],
    )
    def test_parse(self, text, value):
        assert to_fraction(text) == value

    @pytest.mark.parametrize("bad", ["1/0", "abc", "1.5", 0.5, True, None, "1/2/3"])
    def test_reject(self, bad):
        with pytest.raises(ParseError):
            to_fraction(bad)


class TestTriples:
    def test_scale_invariance(self):
        assert PPoint(2, 4, 6) == PPoint(-1, -2, -3) == PPoint(Fraction(1, 3), Fraction(2, 3), 1)

    def test_zero_rejected(self):
        with pytest.raises(DegenerateError):
            PPoint(0, 0, 0)

    def test_affine_view(self):
        assert PPoint(3, -6, 9).affine() == (Fraction(1, 3), Fraction(-2, 3))
        assert not PPoint(1, 2, 0).is_finite

    def test_degenerate_join_and_meet(self):
        p = PPoint(1, 2, 3)
        with pytest.raises(DegenerateError, match="degenerate join"):
            pjoin(p, PPoint(2, 4, 6))
        l = PLine(1, 1, 1)
        with pytest.raises(DegenerateError, match="degenerate meet"):
            pmeet(l, PLine(-3, -3, -3))

    @given(points, points)
    def test_join_matches_cross_oracle(self, p, q):
        assume(p != q)
        line = pjoin(p, q)
        assert pincident(p, line) and pincident(q, line)
        assert h_same(line.coords, h_cross(p.coords, q.coords))

    @given(points, points, points)
    def test_collinear_symmetric(self, a, b, c):
        assert collinear(a, b, c) == collinear(b, c, a) == collinear(c, a, b)


class TestProjectivity:
    def test_singular(self):
        with pytest.raises(SingularError):
            Projectivity([[1, 2, 3], [2, 4, 6], [0, 0, 1]])

    def test_scale_class(self):
        assert proj_equal(Projectivity.diag(Fraction(1, 2), 1, 1), Projectivity.diag(1, 2, 2))

    def test_compose_order(self):
        # translate then scale, versus scale then translate
        shift = Projectivity([[1, 0, 1], [0, 1, 0], [0, 0, 1]])
        double = Projectivity.diag(2, 1, 1)
        p = PPoint(1, 0, 1)
        assert compose(shift, double)(p) == PPoint(4, 0, 1)
        assert compose(double, shift)(p) == PPoint(3, 0, 1)

    @given(projectivities(), points)
    def test_inverse(self, t, p):
        assert invert(t)(t(p)) == p
        assert compose(t, invert(t)).is_identity()

    @given(projectivities(), points, points)
    def test_incidence_preserved(self, t, p, q):
        assume(p != q)
        line = pjoin(p, q)
        other = PLine(1, 2, 5)
        assume(line != other)
        r = pmeet(line, other)
        assert collinear(t(p), t(q), t(r))


class TestFit:
    @given(projectivities(), st.lists(points, min_size=6, max_size=10, unique=True))
    def test_recovers(self, t, pts):
        pairs = [(p, apply(t, p)) for p in pts]
        try:
            fitted = fit_projectivity(pairs)
        except GeneralPositionError:
            return
        assert proj_equal(fitted, t)

    def test_square_frame(self):
        src = [PPoint(0, 0, 1), PPoint(1, 0, 1), PPoint(1, 1, 1), PPoint(0, 1, 1)]
        dst = [PPoint(0, 0, 1), PPoint(2, 0, 1), PPoint(3, 2, 1), PPoint(0, 1, 1)]
        t = fit_projectivity(list(zip(src, dst)))
        for a, b in zip(src, dst):
            assert t(a) == b

    def test_too_few(self):
        with pytest.raises(GeneralPositionError):
            fit_projectivity([(PPoint(0, 0, 1), PPoint(0, 0, 1))] * 3)

    def test_collinear_sources(self):
        pts = [PPoint(i, 0, 1) for i in range(5)]
        with pytest.raises(GeneralPositionError):
            fit_projectivity([(p, p) for p in pts])

    def test_inconsistent(self):
        src = [PPoint(0, 0, 1), PPoint(1, 0, 1), PPoint(0, 1, 1), PPoint(1, 1, 1), PPoint(2, 3, 1)]
        dst = src[:4] + [PPoint(2, 4, 1)]
        with pytest.raises(InconsistentError, match="inconsistent correspondences"):
            fit_projectivity(list(zip(src, dst)))

    def test_validation_pairs_checked(self):
        src = [PPoint(0, 0, 1), PPoint(1, 0, 1), PPoint(0, 1, 1), PPoint(1, 1, 1)]
        with pytest.raises(InconsistentError):
            fit_projectivity([(p, p) for p in src], validation=[(PPoint(2, 3, 1), PPoint(2, 4, 1))])

    def test_degenerate_targets(self):
        src = [PPoint(0, 0, 1), PPoint(1, 0, 1), PPoint(0, 1, 1), PPoint(1, 1, 1)]
        dst = [PPoint(i, 0, 1) for i in range(4)]
        with pytest.raises(InconsistentError):
            fit_projectivity(list(zip(src, dst)))

    @given(st.lists(rationals(), min_size=2, max_size=2))
    def test_translation(self, v):
        a, b = v
        t = Projectivity([[1, 0, a], [0, 1, b], [0, 0, 1]])
        pts = [PPoint(x, y, 1) for x, y in [(0, 0), (1, 0), (0, 1), (1, 1), (2, 5)]]
        assert proj_equal(fit_projectivity([(p, t(p)) for p in pts]), t)
