from __future__ import annotations

from fractions import Fraction

import pytest
from conftest import diagrams, knots, links
from hypothesis import given, strategies as st

from vgauss.diagram import ChordDiagram, parse_gdf
from vgauss.equivalence import (
    Decision,
    MoveClass,
    build_standard_link,
    decide_equivalent,
    distance_lower_bound,
    lower_bounds,
)
from vgauss.invariants import lambda_vector, linking_matrix, parity_vector
from vgauss.moves import apply_move, parse_moves, sample_site

TREFOIL = parse_gdf("O1+ O2+ U1+ U2+")
ALL_CLASSES = list(MoveClass)
PARITY = [MoveClass.VDELTA, MoveClass.VDELTA_WEDGE, MoveClass.VSHARP]
LAMBDA = [MoveClass.VDELTA_CIRC, MoveClass.VPASS]


class TestStandardLink:
    def test_shape(self):
        d = build_standard_link([2, 0, -1])
        assert d.sizes == (3, 2, 0, 1)
        assert linking_matrix(d)[0] == [0, 2, 0, -1]

    def test_blocks_are_parallel(self):
        d = build_standard_link([3])
        tails = [s.chord for s in d.words[0]]
        heads = [s.chord for s in d.words[1]]
        assert heads == tails[::-1]

    def test_needs_two_components(self):
        with pytest.raises(ValueError):
            build_standard_link([])

    @given(st.lists(st.integers(-5, 5), min_size=1, max_size=5))
    def test_lambda(self, a):
        assert lambda_vector(build_standard_link(a)) == [-sum(a), *a]


class TestDecide:
    def test_component_mismatch(self):
        r = decide_equivalent(MoveClass.VPASS, TREFOIL, build_standard_link([1]))
        assert not r and "component" in r.reason

    @pytest.mark.parametrize("x", ALL_CLASSES)
    def test_knots(self, x):
        assert decide_equivalent(x, TREFOIL, ChordDiagram.empty())

    def test_parity_only(self):
        a, b = build_standard_link([2]), build_standard_link([0])
        for x in PARITY:
            assert decide_equivalent(x, a, b)
        for x in LAMBDA:
            assert not decide_equivalent(x, a, b)

    def test_parity_differs(self):
        a, b = build_standard_link([1]), build_standard_link([0])
        assert not any(decide_equivalent(x, a, b) for x in ALL_CLASSES)

    def test_decision_is_truthy(self):
        assert bool(Decision(True, "")) and not Decision(False, "")

    @given(links(), st.sampled_from(ALL_CLASSES))
    def test_standard_form(self, d, x):
        assert decide_equivalent(x, d, build_standard_link(lambda_vector(d)[1:]))

    @given(links(6, 3), links(6, 3), st.sampled_from(ALL_CLASSES))
    def test_depends_only_on_vectors(self, a, b, x):
        r = bool(decide_equivalent(x, a, b))
        if a.n_components != b.n_components:
            assert not r
        elif x in PARITY:
            assert r == (parity_vector(a) == parity_vector(b))
        else:
            assert r == (lambda_vector(a) == lambda_vector(b))

    @given(links(6, 3), links(6, 3), links(6, 3), st.sampled_from(ALL_CLASSES))
    def test_equivalence_relation(self, a, b, c, x):
        assert decide_equivalent(x, a, a)
        assert bool(decide_equivalent(x, a, b)) == bool(decide_equivalent(x, b, a))
        if decide_equivalent(x, a, b) and decide_equivalent(x, b, c):
            assert decide_equivalent(x, a, c)

    @given(links(6), st.randoms(use_true_random=False))
    def test_move_keeps_class(self, d, r):
        moves = parse_moves("vdc,cc,r1,r2,r3")
        site = sample_site(d, r.choice(moves), r)
        if site is None:
            return
        out = apply_move(d, site)
        for x in ALL_CLASSES:
            assert decide_equivalent(x, d, out)


class TestBounds:
    def test_trefoil(self):
        b = lower_bounds(MoveClass.VDELTA_CIRC, TREFOIL)
        assert b == {"odd_writhe": Fraction(1), "spectrum": Fraction(2, 3)}
        assert distance_lower_bound(MoveClass.VDELTA_CIRC, TREFOIL) == 1

    def test_keys_per_class(self):
        assert set(lower_bounds(MoveClass.VDELTA, TREFOIL)) == {"odd_writhe"}
        assert set(lower_bounds(MoveClass.VPASS, TREFOIL)) == {"odd_writhe", "spectrum"}
        assert lower_bounds(MoveClass.VSHARP, TREFOIL)["odd_writhe"] == Fraction(1, 2)
        assert lower_bounds(MoveClass.VPASS, TREFOIL)["spectrum"] == Fraction(1, 2)

    def test_ceiling(self):
        assert distance_lower_bound(MoveClass.VSHARP, TREFOIL) == 1

    def test_zero_against_itself(self):
        assert all(distance_lower_bound(x, TREFOIL, TREFOIL) == 0 for x in ALL_CLASSES)

    def test_links_rejected(self):
        with pytest.raises(ValueError):
            lower_bounds(MoveClass.VPASS, build_standard_link([1]))

    @given(knots(6), knots(6), st.sampled_from(ALL_CLASSES))
    def test_symmetric(self, a, b, x):
        assert lower_bounds(x, a, b) == lower_bounds(x, b, a)

    @given(knots(6), st.randoms(use_true_random=False), st.sampled_from(ALL_CLASSES))
    def test_unchanged_by_r_moves(self, d, r, x):
        site = sample_site(d, r.choice(parse_moves("r1,r2,r3")), r)
        if site is None:
            return
        assert lower_bounds(x, apply_move(d, site)) == lower_bounds(x, d)

    @given(diagrams(max_chords=6, max_components=1), st.randoms(use_true_random=False))
    def test_one_move_costs_at_most_one(self, d, r):
        for x, kinds in ((MoveClass.VDELTA_CIRC, "vdc"), (MoveClass.VPASS, "vp")):
            site = sample_site(d, r.choice(parse_moves(kinds)), r)
            if site is None:
                continue
            assert distance_lower_bound(x, d, apply_move(d, site)) <= 1
