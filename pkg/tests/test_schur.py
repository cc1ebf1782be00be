import pytest

from fusionrel.lie_core import CharacterPoly, weyl_character
from fusionrel.schur import (DominancePair, TotalMismatch, character_difference, dominates,
                             index_set_contained, pairs_of_total, product_character,
                             schur_positivity_check, surjection_witness, sweep)

import oracles


def test_dominance_examples():
    assert dominates((1, 1), (2,))
    assert not dominates((2,), (1, 1))
    assert dominates((2, 2), (3, 1))
    assert dominates((2, 1, 1), (2, 2))
    assert not dominates((3, 1, 1), (2, 2, 1)) == dominates((2, 2, 1), (3, 1, 1))
    assert dominates((2, 1), (2, 1, 0))
    with pytest.raises(TotalMismatch):
        dominates((2, 1), (2,))
    with pytest.raises(ValueError):
        DominancePair(1, (1,), (2,))


def test_pair_is_padded():
    pair = DominancePair(1, (1, 1), (2,))
    assert tuple(pair.ell) == (1, 1) and tuple(pair.r) == (2, 0)
    assert pair.dominant


def test_sl2_two_parts_difference_is_trivial_module():
    assert character_difference(1, DominancePair(1, (1, 1), (2, 0))) == [((0,), 1)]
    assert product_character(1, 1, (1, 1)) - product_character(1, 1, (2,)) == weyl_character((0,))


@pytest.mark.parametrize("a,b", [((1, 1), (2, 0)), ((2, 1), (3, 0)), ((2, 2), (3, 1)), ((1, 1), (1, 1))])
def test_sl2_difference_matches_clebsch_gordan(a, b):
    def cg(parts):
        acc = {0: 1}
        for part in parts:
            nxt = {}
            for hw, c in acc.items():
                for k in oracles.clebsch_gordan(hw, part):
                    nxt[k] = nxt.get(k, 0) + c
            acc = nxt
        return acc
    want = cg(a)
    for k, c in cg(b).items():
        want[k] = want.get(k, 0) - c
    want = {k: c for k, c in want.items() if c}
    got = dict(((mu[0],), c) for mu, c in character_difference(1, DominancePair(1, a, b)))
    assert got == {(k,): c for k, c in want.items()}


def test_higher_rank_examples():
    v = schur_positivity_check(2, 1, ((2, 2), (3, 1)), witness=True)
    assert v.dominates and v.schur_positive and v.witness and v.passed
    v = schur_positivity_check(2, 2, ((2, 2), (3, 1)), witness=True)
    assert v.witness is True and v.passed
    assert surjection_witness(2, 2, ((2, 2), (3, 1)))


def test_equal_pair_has_empty_decomposition():
    v = schur_positivity_check(2, 1, ((2, 1), (2, 1)), witness=True)
    assert v.decomposition == [] and v.passed


def test_non_dominant_pair_is_not_applicable():
    v = schur_positivity_check(1, 1, ((2, 0), (1, 1)))
    assert v.passed is None and v.schur_positive is None and v.witness is None
    d = schur_positivity_check(1, 1, ((2, 0), (1, 1)), diagnostic=True, witness=True)
    assert d.schur_positive is False and d.witness is False and d.passed is None
    assert set(d.to_jsonable()) == {"n", "m", "ell", "r", "dominates", "applicable", "schur_positive",
                                    "witness", "decomposition"}


def test_sl2_positivity_iff_dominance():
    for total in range(1, 6):
        for a, b in pairs_of_total(total, 3):
            v = schur_positivity_check(1, 1, DominancePair(1, a, b), diagnostic=True)
            assert v.schur_positive == v.dominates


def test_sweep_passes_for_small_totals():
    for n, m in [(1, 1), (2, 1), (2, 2), (3, 2)]:
        for v in sweep(n, m, 3, 3):
            assert v.passed in (True, None)


def test_index_sets_grow_along_dominance():
    for a, b in pairs_of_total(4, 3):
        if dominates(a, b):
            assert index_set_contained(a, b, 8)
    assert not index_set_contained((2, 0), (1, 1), 8)
