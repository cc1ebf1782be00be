import pytest

from fusionrel.cvpres.combinatorics import (BELOW_K, FROM_K, ExponentSequence, NotApplicable,
                                            admissible_recursion_indices, check_cv_recursion,
                                            cv_recursion_sides, enum_exponent_sequences, garland_poly)

import oracles


def test_small_sequence_sets():
    assert enum_exponent_sequences(2, 2) == [ExponentSequence((0, 2)), ExponentSequence((1, 0, 1))]
    assert enum_exponent_sequences(0, 3) == []
    assert enum_exponent_sequences(4, 0) == [ExponentSequence((4,))]
    assert enum_exponent_sequences(0, 0) == [ExponentSequence(())]


@pytest.mark.parametrize("r,s", [(r, s) for r in range(0, 6) for s in range(0, 8)])
def test_sequence_counts_match_brute_force(r, s):
    full = enum_exponent_sequences(r, s)
    assert len(full) == len(set(full)) == oracles.count_sequences(r, s)
    for seq in full:
        assert seq.r == r and seq.s == s
    for k in range(1, 4):
        below = enum_exponent_sequences(r, s, BELOW_K, k)
        above = enum_exponent_sequences(r, s, FROM_K, k)
        assert len(below) == oracles.count_sequences(r, s, 0, min(s, k - 1))
        assert len(above) == oracles.count_sequences(r, s, k, s)
        assert all(seq[j] == 0 for seq in below for j in range(k, s + 1))
        assert all(seq[j] == 0 for seq in above for j in range(0, k))


@pytest.mark.parametrize("r,s", [(1, 3), (2, 2), (2, 4), (3, 3), (3, 5), (4, 2)])
def test_garland_polynomials_match_generating_function(r, s):
    assert garland_poly(r, s) == oracles.garland_by_series(r, s)
    for k in (1, 2):
        assert garland_poly(r, s, FROM_K, k) == oracles.garland_by_series(r, s, k, s)
        assert garland_poly(r, s, BELOW_K, k) == oracles.garland_by_series(r, s, 0, min(s, k - 1))


def test_recursion_examples():
    assert check_cv_recursion(1, 2, 1, 1)
    assert check_cv_recursion(2, 2, 1, 0)
    # r = 1: x(1,s) = _kx(1,s) + x(1,s)_k
    for s in range(2, 6):
        for k in range(1, s):
            lhs, rhs = cv_recursion_sides(1, s, k, 1)
            assert lhs == rhs == {tuple([0] * s + [1]): 1}


def test_recursion_preconditions():
    with pytest.raises(NotApplicable):
        check_cv_recursion(0, 2, 1, 0)
    with pytest.raises(NotApplicable):
        check_cv_recursion(2, 1, 2, 0)


def test_recursion_range_is_complete():
    idx = list(admissible_recursion_indices(8))
    assert len(idx) == len(set(idx))
    brute = [(r, s, k, K) for r in range(1, 8) for s in range(1, 8) for k in range(1, 9) for K in range(0, 9)
             if r + s <= 8 and r + s >= k * r + K]
    assert sorted(idx) == sorted(brute)
