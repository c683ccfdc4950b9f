import random
from fractions import Fraction

import pytest
from conftest import KS
from hypothesis import given, settings
from hypothesis import strategies as st
from oracles import holonomy_oracle, m_same_class

from moulton import (
    X_POS,
    Affine,
    CoverageError,
    DegenerateError,
    GeometryError,
    Ideal,
    PPoint,
    builtin_atlas_Ck,
)
from moulton.continuation import (
    SLIT_CYLINDER,
    Leg,
    PolylineArc,
    arc_in_region,
    build_chain,
    canonical_loop,
    continue_along,
    holonomy,
    leg_cells,
    leg_in_region,
    quadrant,
    route_arc,
)


class TestLegs:
    def test_via_must_lie_on_join(self):
        with pytest.raises(GeometryError):
            Leg.make(2, Affine(1, 1), Affine(3, 3), Affine(2, 5))
        with pytest.raises(DegenerateError):
            Leg.make(2, Affine(1, 1), Affine(1, 1), Affine(2, 2))

    def test_via_picks_the_side(self):
        """Through infinity or straight across, decided by the via point."""
        direct = Leg.make(1, Affine(1, 0), Affine(-1, 0), Affine(0, 0))
        around = Leg.make(1, Affine(1, 0), Affine(-1, 0), Affine(5, 0))
        cells = [p for _, p in leg_cells(1, around)]
        assert Ideal(0) in cells and Affine(0, 0) not in cells
        cells = [p for _, p in leg_cells(1, direct)]
        assert Ideal(0) not in cells

    def test_cells_alternate(self):
        leg = Leg.make(2, Affine(1, 1), Affine(-1, -1), Affine(5, 5))
        kinds = [kind for kind, _ in leg_cells(2, leg, X_POS)]
        assert kinds[0] == kinds[-1] == "pt"
        assert all(a != b for a, b in zip(kinds, kinds[1:]))

    def test_leg_in_region_sees_crossing(self):
        leg = Leg.make(2, Affine(1, 1), Affine(3, 3), Affine(2, 2))
        assert leg_in_region(2, leg, X_POS)
        leg = Leg.make(2, Affine(1, 1), Affine(3, 3), Affine(-1, -1))
        assert not leg_in_region(2, leg, X_POS)


class TestArcs:
    def test_build_checks_counts(self):
        with pytest.raises(GeometryError):
            PolylineArc.build(2, [Affine(1, 1)], [])
        with pytest.raises(GeometryError):
            PolylineArc.build(2, [Affine(1, 1), Affine(2, 2)], [])

    def test_reverse_and_concat(self):
        a = PolylineArc.build(2, [Affine(1, 1), Affine(2, 2)], [Affine(3, 3)])
        b = PolylineArc.build(2, [Affine(2, 2), Affine(2, 5)], [Affine(2, 3)])
        ab = a + b
        assert ab.waypoints == [Affine(1, 1), Affine(2, 2), Affine(2, 5)]
        assert ab.reversed().waypoints == [Affine(2, 5), Affine(2, 2), Affine(1, 1)]
        assert ab.reversed().vias == [Affine(2, 3), Affine(3, 3)]
        with pytest.raises(GeometryError):
            b + b

    @pytest.mark.parametrize("k", [2, Fraction(3, 2), Fraction(1, 2), 1, 5])
    def test_canonical_loop_is_closed(self, k):
        loop = canonical_loop(k)
        assert loop.is_loop and len(loop.legs) == 7


class TestChains:
    def test_canonical_chain(self):
        atlas = builtin_atlas_Ck(2)
        chain = build_chain(atlas, canonical_loop(2), "U1")
        assert chain.names == ["U1", "U2", "U3", "U4", "U1"]

    def test_unknown_start(self):
        atlas = builtin_atlas_Ck(2)
        with pytest.raises(GeometryError):
            build_chain(atlas, canonical_loop(2), "U9")
        with pytest.raises(GeometryError):
            build_chain(atlas, canonical_loop(2), "U3")

    def test_leaving_coverage(self):
        atlas = builtin_atlas_Ck(2)
        arc = PolylineArc.build(2, [Affine(1, 1), Affine(-1, 1)], [Affine(0, 1)])
        with pytest.raises(CoverageError) as err:
            build_chain(atlas, arc, "U1")
        assert err.value.exit_point == Affine(0, 1)

    def test_through_axis_reports_exit(self):
        atlas = builtin_atlas_Ck(2)
        arc = PolylineArc.build(
            2, [Affine(1, 5), Affine(-1, 5), Affine(1, 5)], [Affine(0, 5), Affine(3, 5)]
        )
        with pytest.raises(CoverageError) as err:
            continue_along(atlas, arc, "U1")
        assert err.value.exit_point == Affine(0, 5)


class TestHolonomy:
    @pytest.mark.parametrize("k", [2, Fraction(3, 2), Fraction(1, 2), 5])
    def test_matches_hand_composition(self, k):
        h = holonomy(builtin_atlas_Ck(k), canonical_loop(k), "U1")
        assert m_same_class(h.transform.rows, holonomy_oracle(k))
        assert not h.trivial

    def test_trivial_at_k1(self):
        assert holonomy(builtin_atlas_Ck(1), canonical_loop(1), "U1").trivial

    def test_reverse_gives_inverse(self):
        atlas = builtin_atlas_Ck(2)
        h = holonomy(atlas, canonical_loop(2).reversed(), "U1")
        assert m_same_class(h.transform.rows, holonomy_oracle(Fraction(1, 2)))

    def test_double_loop_squares(self):
        atlas = builtin_atlas_Ck(2)
        loop = canonical_loop(2)
        h = holonomy(atlas, loop + loop, "U1")
        assert m_same_class(h.transform.rows, holonomy_oracle(4))

    def test_open_arc_rejected(self):
        arc = PolylineArc.build(2, [Affine(1, 1), Affine(2, 2)], [Affine(3, 3)])
        with pytest.raises(GeometryError):
            holonomy(builtin_atlas_Ck(2), arc, "U1")

    def test_contractible_loop_trivial(self):
        arc = PolylineArc.build(
            2, [Affine(1, 1), Affine(2, 1), Affine(2, 3), Affine(1, 1)],
            [Affine(Fraction(3, 2), 1), Affine(2, 2), Affine(Fraction(3, 2), 2)],
        )
        assert holonomy(builtin_atlas_Ck(2), arc, "U1").trivial


class TestContinuation:
    def test_continued_chart_agrees_with_start_on_base(self):
        atlas = builtin_atlas_Ck(2)
        cont = continue_along(atlas, canonical_loop(2), "U1")
        base = Affine(1, 1)
        # once round the cylinder the x coordinate is scaled by 1/k
        assert cont.image == PPoint(1, 2, 2)
        assert cont.charts[0](base) == PPoint(1, 1, 1)

    @given(KS, st.integers(0, 10**6))
    @settings(max_examples=25)
    def test_route_stays_in_slit_cylinder(self, k, seed):
        rng = random.Random(seed)
        end = Affine(Fraction(-3, 2), Fraction(1, 3))
        arc = route_arc(k, Affine(1, 1), end, rng)
        assert arc.start == Affine(1, 1) and arc.end == end
        assert arc_in_region(arc, SLIT_CYLINDER)

    @given(st.integers(0, 10**6), st.integers(0, 10**6), st.sampled_from(["Q1", "Q2", "Q3", "Q4"]))
    @settings(max_examples=20)
    def test_homotopic_routes_agree(self, s1, s2, quad):
        k = 2
        atlas = builtin_atlas_Ck(k)
        sx, sy = {"Q1": (1, 1), "Q2": (-1, 1), "Q3": (-1, -1), "Q4": (1, -1)}[quad]
        end = Affine(sx * Fraction(5, 3), sy * Fraction(2, 7))
        assert quadrant(end) == quad
        a = route_arc(k, Affine(1, 1), end, random.Random(s1))
        b = route_arc(k, Affine(1, 1), end, random.Random(s2))
        assert continue_along(atlas, a, "U1").image == continue_along(atlas, b, "U1").image

    def test_route_rejects_bad_start(self):
        with pytest.raises(GeometryError):
            route_arc(2, Affine(-1, 1), Affine(1, 1), random.Random(0))

    def test_initial_chart_override(self):
        atlas = builtin_atlas_Ck(2)
        first = continue_along(atlas, canonical_loop(2), "U1")
        again = continue_along(atlas, canonical_loop(2), "U1", initial=first.final)
        assert again.image == PPoint(1, 4, 4)
