import random
from fractions import Fraction

import pytest
from conftest import KS
from hypothesis import given, settings
from hypothesis import strategies as st

from moulton import (
    IDEAL_SLOPE_IN_NEG,
    X_NEG,
    X_POS,
    Y_NEG,
    Y_POS,
    Affine,
    Atlas,
    Chart,
    DensityError,
    GeometryError,
    Graph,
    Ideal,
    InconsistentError,
    OnRemovedLineError,
    OutsideChartError,
    PPoint,
    Projectivity,
    builtin_atlas_Ck,
    chart_union,
    extend_dense,
    glue,
    identity_chart,
    image_line,
    line_image_verdict,
    verify_chart_homomorphism,
)
from moulton.sampling import random_point

U4_DOMAIN = (X_NEG & Y_POS) | (X_POS & Y_NEG) | IDEAL_SLOPE_IN_NEG


def test_chart_outside_domain():
    c = identity_chart("R", X_POS)
    assert c(Affine(1, 2)) == PPoint(1, 2, 1)
    with pytest.raises(OutsideChartError, match="outside chart"):
        c(Affine(-1, 2))


def test_fourth_chart_straightens_left_branch():
    u4 = builtin_atlas_Ck(2)["U4"]
    assert u4(Affine(-1, 3)) == PPoint(-2, 3, 1)
    assert u4(Affine(1, -3)) == PPoint(1, -3, 1)
    assert u4(Ideal(-2)) == PPoint(1, -2, 0)


@pytest.mark.parametrize("k", [2, Fraction(3, 2), Fraction(1, 2), 1])
@pytest.mark.parametrize("name", ["U1", "U2", "U3", "U4"])
def test_builtin_charts_are_homomorphisms(k, name):
    chart = builtin_atlas_Ck(k)[name]
    v = verify_chart_homomorphism(k, chart, budget=300, seed=1)
    assert v.ok and v.lines_checked == 300


def test_identity_on_u4_domain_is_not_a_homomorphism():
    v = verify_chart_homomorphism(2, identity_chart("bad", U4_DOMAIN), budget=500, seed=0)
    assert not v.ok
    assert v.reason == "images not collinear"
    assert v.line.kinked
    assert all(p in U4_DOMAIN for p in v.points)


def test_identity_is_a_homomorphism_at_k1():
    assert verify_chart_homomorphism(1, identity_chart("flat", U4_DOMAIN), budget=300).ok


def test_verifier_is_deterministic():
    c = identity_chart("bad", U4_DOMAIN)
    a = verify_chart_homomorphism(2, c, budget=200, seed=7)
    b = verify_chart_homomorphism(2, c, budget=200, seed=7)
    assert (a.line, a.points) == (b.line, b.points)


def test_line_image_verdict_requires_incidence():
    with pytest.raises(GeometryError):
        line_image_verdict(2, identity_chart("R", X_POS), Graph(1, 0), [Affine(1, 5)])


class TestGlue:
    def test_transition_recovered(self):
        atlas = builtin_atlas_Ck(2)
        glued = glue(2, atlas["U3"], atlas["U4"], atlas.overlap("U3", "U4"))
        for p in (Affine(-1, 1), Affine(-5, 2)):
            assert glued(p) == atlas["U3"](p)

    def test_inconsistent(self):
        a = identity_chart("A", X_POS)
        b = Chart("B", X_POS, ((X_POS & Y_POS, Projectivity.identity()), (X_POS & Y_NEG, Projectivity.diag(2, 1, 1))))
        samples = [Affine(1, 1), Affine(2, 1), Affine(1, 2), Affine(3, 5), Affine(1, -1), Affine(2, -3)]
        with pytest.raises(InconsistentError, match="inconsistent correspondences"):
            glue(2, a, b, samples)

    def test_sample_must_be_in_both(self):
        with pytest.raises(GeometryError):
            glue(2, identity_chart("A", X_POS), identity_chart("B", X_NEG), [Affine(1, 1)] * 5)

    def test_union_prefers_first(self):
        a = identity_chart("A", X_POS)
        b = Chart("B", X_POS | X_NEG, ((X_POS | X_NEG, Projectivity.diag(3, 1, 1)),))
        u = chart_union(a, b)
        assert u(Affine(1, 1)) == PPoint(1, 1, 1)
        assert u(Affine(-1, 1)) == PPoint(-3, 1, 1)


class TestAtlas:
    def test_overlap_lookup_is_unordered(self):
        atlas = builtin_atlas_Ck(2)
        assert atlas.overlap("U2", "U1") == atlas.overlap("U1", "U2")
        assert atlas.overlap("U1", "U3") is None and not atlas.has_overlap("U4", "U2")

    def test_rejects_bad_samples(self):
        charts = {"A": identity_chart("A", X_POS), "B": identity_chart("B", Y_POS)}
        with pytest.raises(GeometryError):
            Atlas(2, charts, {frozenset("AB"): (Affine(1, 1),) * 4})
        with pytest.raises(GeometryError):
            Atlas(2, charts, {frozenset("AB"): tuple(Affine(-i, 1) for i in range(1, 6))})

    def test_samples_in(self):
        atlas = builtin_atlas_Ck(2)
        assert all(p in atlas["U1"] for p in atlas.samples_in("U1"))
        assert len(atlas.samples_in("U1")) == 12


class TestDenseExtension:
    @given(KS, st.integers(0, 10**6))
    @settings(max_examples=40)
    def test_reproduces_projectivity(self, k, seed):
        rng = random.Random(seed)
        t = Projectivity([[2, 1, 0], [0, 1, 3], [1, 0, 5]])
        chart = Chart("R", X_POS, ((X_POS, t),))
        a, b = Affine(1, 1), Affine(2, 5)
        q = random_point(X_POS, rng)
        try:
            got = extend_dense(k, chart, a, b, q)
        except OnRemovedLineError:
            return
        assert got == t(q.embed())

    def test_on_removed_line(self):
        chart = identity_chart("R", X_POS)
        with pytest.raises(OnRemovedLineError, match="on the removed line"):
            extend_dense(2, chart, Affine(1, 1), Affine(2, 2), Affine(3, 3))

    def test_query_outside_domain(self):
        """The value at a point missing from the domain comes from two lines through it."""
        chart = identity_chart("R", X_POS)
        got = extend_dense(2, chart, Affine(1, 1), Affine(1, -1), Affine(0, 5))
        assert got == PPoint(0, 5, 1)

    def test_density_failure(self):
        chart = identity_chart("quadrant", X_POS & Y_NEG)
        with pytest.raises(DensityError, match="insufficient density witnesses"):
            image_line(2, chart, Graph(0, 1))
