import json

import pytest
from hypothesis import given, strategies as st

from mstdkit import (
    IntSet,
    affine,
    diffset,
    h_fold,
    interval,
    mstd_delta,
    normalize,
    sum_diff,
    sumset,
    symmetry_witness,
)
from oracles import brute_diffset, brute_sum_diff, brute_sumset

A1 = IntSet([0, 2, 3, 4, 7, 11, 12, 14])
A2 = IntSet([0, 2, 3, 4, 7, 9, 13, 14, 16])

int_sets = st.builds(
    IntSet, st.lists(st.integers(-60, 60), min_size=1, max_size=9)
)


class TestWorkedExamples:
    def test_a1_sumset(self):
        want = IntSet(e for e in range(0, 29) if e not in (1, 20, 27))
        assert sumset(A1, A1) == want
        assert len(want) == 26

    def test_a1_diffset(self):
        want = IntSet(e for e in range(-14, 15) if abs(e) not in (6, 13))
        assert diffset(A1, A1) == want
        assert len(want) == 25

    def test_a2_sumset(self):
        want = IntSet(e for e in range(0, 33) if e not in (1, 24, 31))
        assert sumset(A2, A2) == want
        assert len(want) == 30

    def test_a2_diffset(self):
        want = IntSet(e for e in range(-16, 17) if abs(e) not in (8, 15))
        assert diffset(A2, A2) == want
        assert len(want) == 29

    def test_a1_delta(self):
        d = mstd_delta(A1)
        assert (d.sum_card, d.diff_card, d.delta) == (26, 25, 1)
        assert d.is_mstd

    def test_a2_delta(self):
        d = mstd_delta(A2)
        assert (d.sum_card, d.diff_card, d.delta) == (30, 29, 1)


class TestSumset:
    def test_singletons(self):
        assert sumset(IntSet([0]), IntSet([0])) == IntSet([0])

    def test_small_by_hand(self):
        assert sumset(IntSet([0, 1, 3]), IntSet([0, 2])) == IntSet([0, 1, 2, 3, 5])

    def test_empty_operand(self):
        assert sumset(IntSet(), A1) == IntSet()
        assert sumset(A1, IntSet()) == IntSet()

    def test_negative_elements(self):
        a = IntSet([-5, -1, 2])
        assert sumset(a, a).elements == tuple(sorted(brute_sumset(a, a)))


class TestDiffset:
    def test_singleton(self):
        assert diffset(IntSet([5]), IntSet([5])) == IntSet([0])

    def test_empty(self):
        assert diffset(IntSet(), IntSet([1])) == IntSet()

    def test_matches_brute(self):
        a = IntSet([0, 1, 4, 9])
        b = IntSet([-2, 3])
        assert set(diffset(a, b)) == brute_diffset(a, b)


class TestHFold:
    def test_zero_fold_is_origin(self):
        assert h_fold(A1, 0) == IntSet([0])
        assert h_fold(IntSet(), 0) == IntSet([0])

    def test_one_fold_identity(self):
        assert h_fold(A1, 1) == A1

    def test_two_fold(self):
        assert h_fold(IntSet([0, 1]), 2) == IntSet([0, 1, 2])

    def test_three_fold_by_hand(self):
        got = h_fold(IntSet([0, 2, 5]), 3)
        assert got == IntSet([0, 2, 4, 5, 6, 7, 9, 10, 12, 15])
        assert set(got) == brute_sum_diff(IntSet([0, 2, 5]), 3, 0)

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            h_fold(A1, -1)


class TestSumDiff:
    def test_two_zero_is_sumset(self):
        assert sum_diff(A1, 2, 0) == sumset(A1, A1)

    def test_one_one_is_diffset(self):
        assert sum_diff(A1, 1, 1) == diffset(A1, A1)
        assert len(sum_diff(A1, 1, 1)) == 25

    def test_two_one_by_hand(self):
        got = sum_diff(IntSet([0, 1, 3]), 2, 1)
        assert got == IntSet(range(-3, 7))

    def test_matches_brute_oracle(self):
        a = IntSet([0, 2, 5, 6])
        for h in range(3):
            for k in range(3):
                assert set(sum_diff(a, h, k)) == brute_sum_diff(a, h, k)


class TestAffine:
    def test_identity(self):
        assert affine(A1, 1, 0) == A1

    def test_reflect_translate(self):
        assert affine(A1, -1, 14) == IntSet([0, 2, 3, 7, 10, 11, 12, 14])

    def test_preserves_delta(self):
        assert mstd_delta(affine(A1, 2, 1)).delta == mstd_delta(A1).delta == 1

    def test_zero_scale_rejected(self):
        with pytest.raises(ValueError):
            affine(A1, 0, 3)


class TestSymmetry:
    def test_progression(self):
        w = symmetry_witness(IntSet([3, 5, 7]))
        assert w is not None and w.center == 10

    def test_a1_not_symmetric(self):
        assert symmetry_witness(A1) is None

    def test_a1_minus_4(self):
        w = symmetry_witness(IntSet(e for e in A1 if e != 4))
        assert w is not None and w.center == 14

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            symmetry_witness(IntSet())


class TestNormalize:
    def test_translate(self):
        assert normalize(IntSet([10, 12, 14])) == IntSet([0, 1, 2])

    def test_already_normal(self):
        assert normalize(A1) == A1

    def test_gcd_division(self):
        assert normalize(IntSet([3, 7, 11])) == IntSet([0, 1, 2])

    def test_singleton(self):
        assert normalize(IntSet([42])) == IntSet([0])

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            normalize(IntSet())


class TestOverflow:
    def test_construction_out_of_range(self):
        with pytest.raises(OverflowError):
            IntSet([1 << 63])

    def test_sumset_overflow(self):
        big = IntSet([(1 << 62), (1 << 62) + 2])
        with pytest.raises(OverflowError):
            sumset(big, big)

    def test_affine_overflow(self):
        with pytest.raises(OverflowError):
            affine(IntSet([1 << 62]), 4, 0)

    def test_span_too_large(self):
        wide = IntSet([0, 1 << 60])
        with pytest.raises(ValueError):
            sumset(wide, wide)


class TestParsing:
    def test_text_round_trip(self):
        assert IntSet.from_text(A1.to_text()) == A1

    def test_json_round_trip(self):
        assert IntSet.from_json(A1.to_json()) == A1
        assert json.loads(A1.to_json()) == {"elements": list(A1.elements)}

    def test_text_rejects_non_monotone(self):
        with pytest.raises(ValueError):
            IntSet.from_text("3 2 5")

    def test_text_rejects_duplicates(self):
        with pytest.raises(ValueError):
            IntSet.from_text("1 2 2")

    def test_json_rejects_non_monotone(self):
        with pytest.raises(ValueError):
            IntSet.from_json('{"elements": [1, 3, 2]}')

    def test_json_rejects_duplicates(self):
        with pytest.raises(ValueError):
            IntSet.from_json('{"elements": [1, 1]}')

    def test_json_rejects_non_integers(self):
        with pytest.raises(ValueError):
            IntSet.from_json('{"elements": [1, 2.5]}')
        with pytest.raises(ValueError):
            IntSet.from_json('{"elements": "nope"}')

    def test_empty_inputs(self):
        assert IntSet.from_text("") == IntSet()
        assert IntSet.from_json('{"elements": []}') == IntSet()


class TestIntervalHelper:
    def test_basic(self):
        assert interval(2, 5) == IntSet([2, 3, 4, 5])

    def test_empty(self):
        assert interval(5, 2) == IntSet()


@given(int_sets)
def test_diff_pairing(a):
    d = diffset(a, a)
    assert all(-c in d for c in d)


@given(int_sets)
def test_diff_parity_odd(a):
    assert len(diffset(a, a)) % 2 == 1


@given(int_sets)
def test_cardinality_bounds(a):
    n = len(a)
    s = len(sumset(a, a))
    d = len(diffset(a, a))
    assert 2 * n - 1 <= s <= n * (n + 1) // 2
    assert 2 * n - 1 <= d <= n * n - n + 1


@given(int_sets, st.integers(-30, 30))
def test_symmetric_sets_balance(a, c):
    sym = IntSet(list(a) + [c - e for e in a])
    assert symmetry_witness(sym) is not None
    assert len(sumset(sym, sym)) == len(diffset(sym, sym))


@given(int_sets, st.integers(-5, 5).filter(lambda x: x != 0), st.integers(-40, 40))
def test_affine_invariance(a, x, y):
    assert mstd_delta(affine(a, x, y)).delta == mstd_delta(a).delta


@given(int_sets, st.integers(1, 5), st.integers(-40, 40))
def test_normalize_affine_consistency(a, x, y):
    assert normalize(affine(a, x, y)) == normalize(a)


@given(int_sets)
def test_normalize_idempotent(a):
    assert normalize(normalize(a)) == normalize(a)


@given(int_sets, int_sets)
def test_sumset_commutative_and_matches_brute(a, b):
    got = sumset(a, b)
    assert got == sumset(b, a)
    assert set(got) == brute_sumset(a, b)


@given(
    st.builds(IntSet, st.lists(st.integers(-9, 9), min_size=1, max_size=4)),
    st.integers(0, 2),
    st.integers(0, 2),
)
def test_sum_diff_matches_brute(a, h, k):
    assert set(sum_diff(a, h, k)) == brute_sum_diff(a, h, k)
