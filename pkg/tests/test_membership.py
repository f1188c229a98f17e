"""Ceiling-inequality membership tests and exhaustive enumeration.

The reference scans below re-derive pure-gap sets with a plain odometer
over the whole box through the public scalar predicates, pinning the
optimized enumeration against a straight-line implementation.
"""

from __future__ import annotations

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

import puregaps as pg
from puregaps.intmath import ceil_div

FROZEN_25 = frozenset(
    {
        (1, 1, 1), (1, 1, 2), (1, 1, 4), (1, 1, 5), (1, 1, 7),
        (1, 2, 1), (1, 2, 2), (1, 2, 4), (1, 4, 1), (1, 4, 2),
        (1, 4, 4), (1, 5, 1), (1, 7, 1), (2, 1, 1), (2, 1, 2),
        (2, 1, 4), (2, 2, 1), (2, 4, 1), (4, 1, 1), (4, 1, 2),
        (4, 1, 4), (4, 2, 1), (4, 4, 1), (5, 1, 1), (7, 1, 1),
    }
)

SMALL_CURVES = [
    pg.make_curve(5, 2),
    pg.make_curve(5, 3),
    pg.make_curve(7, 4),
    pg.make_curve(8, 3),
    pg.hermitian(4),
]


def plain_scan(curve: pg.CurveParams, n: int, include_infinity: bool) -> list[tuple[int, ...]]:
    bound = curve.coordinate_bound
    if include_infinity:
        predicate = lambda t: pg.is_pure_gap_quotient_inf(
            curve, pg.GapTuple(t, includes_infinity=True)
        )
    else:
        predicate = lambda t: pg.is_pure_gap_quotient(curve, pg.GapTuple(t))
    return [
        t for t in itertools.product(range(1, bound + 1), repeat=n) if predicate(t)
    ]


class TestDecompose:
    def test_examples(self):
        assert pg.decompose(7, 4) == (1, 3)
        assert pg.decompose(8, 4) == (1, 4)
        assert pg.decompose(1, 3) == (0, 1)
        assert pg.decompose(12, 4) == (2, 4)

    @given(t=st.integers(1, 10**6), m=st.integers(2, 50))
    def test_roundtrip(self, t, m):
        i, j = pg.decompose(t, m)
        assert t == m * i + j
        assert i >= 0
        assert 1 <= j <= m

    def test_rejects_bad_arguments(self):
        with pytest.raises(ValueError):
            pg.decompose(0, 4)
        with pytest.raises(ValueError):
            pg.decompose(3, 1)


class TestScalarPredicates:
    def test_quotient_frozen_memberships(self):
        c74 = pg.make_curve(7, 4)
        assert pg.is_pure_gap_quotient(c74, pg.GapTuple((1, 1)))
        assert pg.is_pure_gap_quotient(c74, pg.GapTuple((1, 2)))
        assert pg.is_pure_gap_quotient(c74, pg.GapTuple((5, 1)))
        assert not pg.is_pure_gap_quotient(c74, pg.GapTuple((1, 17)))
        c83 = pg.make_curve(8, 3)
        assert pg.is_pure_gap_quotient(c83, pg.GapTuple((1, 1, 7)))
        assert not pg.is_pure_gap_quotient(c83, pg.GapTuple((3, 1, 1)))
        assert not pg.is_pure_gap_quotient(c83, pg.GapTuple((1, 1, 8)))

    def test_kummer_shape_frozen_memberships(self):
        assert pg.is_pure_gap_kummer(pg.bezout_for(4, 7), pg.GapTuple((1, 1)))
        assert pg.is_pure_gap_kummer(pg.bezout_for(3, 8), pg.GapTuple((1, 1, 1)))
        assert not pg.is_pure_gap_kummer(pg.bezout_for(3, 8), pg.GapTuple((3, 1, 1)))

    def test_infinite_frozen_memberships(self):
        inf = lambda coords: pg.GapTuple(coords, includes_infinity=True)
        assert pg.is_pure_gap_kummer_inf(pg.bezout_for(4, 7), inf((1, 1)))
        assert pg.is_pure_gap_kummer_inf(pg.bezout_for(3, 8), inf((1, 1, 7)))
        assert not pg.is_pure_gap_kummer_inf(pg.bezout_for(3, 8), inf((1, 1, 8)))
        c74 = pg.make_curve(7, 4)
        assert pg.is_pure_gap_quotient_inf(c74, inf((1, 1)))
        assert not pg.is_pure_gap_quotient_inf(c74, inf((1, 17)))

    def test_variant_flag_enforced(self):
        c74 = pg.make_curve(7, 4)
        with pytest.raises(pg.PreconditionFailed):
            pg.is_pure_gap_quotient(c74, pg.GapTuple((1, 1), includes_infinity=True))
        with pytest.raises(pg.PreconditionFailed):
            pg.is_pure_gap_quotient_inf(c74, pg.GapTuple((1, 1)))

    def test_arity_bounds(self):
        c74 = pg.make_curve(7, 4)
        with pytest.raises(pg.BadArity):
            pg.is_pure_gap_quotient(c74, pg.GapTuple((1,)))
        with pytest.raises(pg.BadArity):
            pg.is_pure_gap_quotient(c74, pg.GapTuple((1,) * 8))
        shape = pg.bezout_for(4, 7)
        with pytest.raises(pg.BadArity):
            pg.is_pure_gap_kummer(shape, pg.GapTuple((1,) * 8))
        assert isinstance(
            pg.is_pure_gap_kummer_inf(
                shape, pg.GapTuple((1,) * 8, includes_infinity=True)
            ),
            bool,
        )

    def test_hermitian_specialization(self):
        # Explicit rederivation with m = q + 1 spelled out, compared on
        # the whole search box.
        def hermitian_member(coords, q):
            m = q + 1
            n = len(coords)
            for k, tk in enumerate(coords):
                lhs = m * (q - n) * ceil_div(tk, m)
                for s, ts in enumerate(coords):
                    if s != k:
                        lhs += m * ceil_div(tk - ts, m)
                if lhs <= q * tk:
                    return False
            return True

        for q, n in [(3, 2), (4, 2), (4, 3)]:
            curve = pg.hermitian(q)
            bound = curve.coordinate_bound
            for coords in itertools.product(range(1, bound + 1), repeat=n):
                assert pg.is_pure_gap_quotient(curve, pg.GapTuple(coords)) == (
                    hermitian_member(coords, q)
                )

    @given(data=st.data())
    def test_permutation_invariance(self, data):
        curve = data.draw(st.sampled_from(SMALL_CURVES))
        n = data.draw(st.integers(2, min(4, curve.q)))
        coords = tuple(
            data.draw(
                st.lists(
                    st.integers(1, curve.coordinate_bound + 3),
                    min_size=n,
                    max_size=n,
                )
            )
        )
        expected = pg.is_pure_gap_quotient(curve, pg.GapTuple(coords))
        for perm in itertools.permutations(coords):
            assert pg.is_pure_gap_quotient(curve, pg.GapTuple(perm)) == expected

    @given(data=st.data())
    def test_middle_block_invariance_with_infinity(self, data):
        curve = data.draw(st.sampled_from([pg.make_curve(7, 4), pg.make_curve(8, 3)]))
        coords = tuple(
            data.draw(
                st.lists(
                    st.integers(1, curve.coordinate_bound + 3), min_size=4, max_size=4
                )
            )
        )
        expected = pg.is_pure_gap_quotient_inf(
            curve, pg.GapTuple(coords, includes_infinity=True)
        )
        swapped = (coords[0], coords[2], coords[1], coords[3])
        assert (
            pg.is_pure_gap_quotient_inf(
                curve, pg.GapTuple(swapped, includes_infinity=True)
            )
            == expected
        )


class TestEnumerate:
    def test_frozen_triple_set(self):
        result = pg.enumerate_pure_gaps(pg.make_curve(8, 3), 3)
        assert result.as_set() == FROZEN_25
        assert result.count == 25
        assert result.bound == 13

    def test_matches_plain_scan(self):
        cases = [
            (pg.make_curve(5, 2), 2),
            (pg.make_curve(5, 3), 2),
            (pg.make_curve(5, 3), 3),
            (pg.make_curve(7, 4), 2),
            (pg.make_curve(8, 3), 2),
            (pg.make_curve(8, 3), 3),
            (pg.hermitian(4), 2),
            (pg.hermitian(4), 3),
        ]
        for curve, n in cases:
            expected = plain_scan(curve, n, include_infinity=False)
            assert list(pg.enumerate_pure_gaps(curve, n).tuples) == expected
            expected_inf = plain_scan(curve, n, include_infinity=True)
            result_inf = pg.enumerate_pure_gaps(curve, n, include_infinity=True)
            assert list(result_inf.tuples) == expected_inf

    def test_matches_formula_counts(self):
        for curve, n in [
            (pg.make_curve(5, 6), 2),
            (pg.make_curve(5, 6), 3),
            (pg.make_curve(7, 2), 2),
            (pg.make_curve(7, 4), 3),
            (pg.make_curve(3, 4), 2),
        ]:
            assert (
                pg.enumerate_pure_gaps(curve, n).count
                == pg.count_pure_gaps_quotient(curve, n).total
            )

    def test_empty_beyond_quotient_width(self):
        result = pg.enumerate_pure_gaps(pg.make_curve(7, 4), 6)
        assert result.tuples == ()

    def test_sorted_lexicographically(self):
        for include_infinity in (False, True):
            result = pg.enumerate_pure_gaps(
                pg.make_curve(7, 4), 2, include_infinity=include_infinity
            )
            assert list(result.tuples) == sorted(result.tuples)
            assert result.includes_infinity == include_infinity

    def test_finite_equals_infinite_variant(self):
        for curve, n in [
            (pg.make_curve(5, 3), 2),
            (pg.make_curve(5, 3), 3),
            (pg.make_curve(5, 6), 3),
            (pg.make_curve(7, 2), 2),
            (pg.make_curve(7, 4), 2),
            (pg.make_curve(7, 4), 3),
            (pg.make_curve(8, 3), 2),
            (pg.make_curve(8, 3), 3),
            (pg.hermitian(4), 2),
            (pg.hermitian(4), 3),
            (pg.make_curve(3, 4), 2),
        ]:
            finite = pg.enumerate_pure_gaps(curve, n)
            infinite = pg.enumerate_pure_gaps(curve, n, include_infinity=True)
            assert finite.tuples == infinite.tuples

    def test_coordinates_are_single_place_gaps(self):
        for curve, n in [(pg.make_curve(5, 3), 2), (pg.make_curve(8, 3), 3)]:
            single = set(pg.gap_set_single(curve))
            for coords in pg.enumerate_pure_gaps(curve, n).tuples:
                assert all(c in single for c in coords)
                assert all(c % curve.m != 0 for c in coords)

    def test_members_pass_public_predicate(self):
        curve = pg.make_curve(7, 4)
        result = pg.enumerate_pure_gaps(curve, 3)
        for coords in result.tuples:
            assert pg.is_pure_gap_quotient(curve, pg.GapTuple(coords))

    def test_arity_bounds(self):
        curve = pg.make_curve(7, 4)
        with pytest.raises(pg.BadArity):
            pg.enumerate_pure_gaps(curve, 1)
        with pytest.raises(pg.BadArity):
            pg.enumerate_pure_gaps(curve, 8)

    def test_work_limit(self):
        with pytest.raises(pg.BoxTooLarge):
            pg.enumerate_pure_gaps(pg.make_curve(7, 4), 4, work_limit=10)
        with pytest.raises(pg.BoxTooLarge):
            pg.enumerate_pure_gaps(
                pg.make_curve(7, 4), 4, include_infinity=True, work_limit=10
            )

    def test_work_limit_from_environment(self, monkeypatch):
        monkeypatch.setenv("PUREGAPS_WORK_LIMIT", "10")
        with pytest.raises(pg.BoxTooLarge):
            pg.enumerate_pure_gaps(pg.make_curve(7, 4), 4)
        monkeypatch.setenv("PUREGAPS_WORK_LIMIT", "1000000")
        assert pg.enumerate_pure_gaps(pg.make_curve(7, 4), 4).count > 0


class TestBoxClassification:
    def test_frozen_pair_box(self):
        counts = pg.count_in_box(pg.make_curve(7, 4), 20, 20)
        assert counts == (29, 338, 441)

    def test_degree_three_quotient_box(self):
        counts = pg.count_in_box(pg.make_curve(8, 3), 20, 20)
        assert counts.pure == 17
        assert counts.total == 441

    def test_trivial_box(self):
        counts = pg.count_in_box(pg.make_curve(5, 3), 0, 0)
        assert counts == (0, 1, 1)

    def test_classes_are_consistent(self):
        curve = pg.make_curve(5, 3)
        places = (pg.finite_place(1), pg.finite_place(2))
        single = set(pg.gap_set_single(curve))
        for t1, t2, cls in pg.classify_box(curve, 10, 10):
            member = pg.is_semigroup_member(curve, places, (t1, t2))
            assert (cls == "semigroup") == member
            if cls == "pure_gap":
                assert t1 >= 1 and t2 >= 1
                assert not member
            if t2 == 0:
                # Along the axis the classification reduces to the
                # single-place gap sequence.
                expected = "gap" if t1 in single else "semigroup"
                assert cls == expected

    def test_pure_gaps_in_box_match_enumeration(self):
        curve = pg.make_curve(7, 4)
        from_box = {
            (t1, t2)
            for t1, t2, cls in pg.classify_box(curve, 20, 20)
            if cls == "pure_gap"
        }
        assert from_box == pg.enumerate_pure_gaps(curve, 2).as_set()

    def test_rejects_negative_corner(self):
        with pytest.raises(ValueError):
            pg.classify_box(pg.make_curve(5, 3), -1, 3)
