from fractions import Fraction

from fusionrel.linalg import (MODULAR, RATIONAL, Subspace, exact_rank, in_span, independent_subset,
                              solve_in_basis)

import oracles


def _dense(vecs, n):
    return [[Fraction(v.get(i, 0)) for i in range(n)] for v in vecs]


def test_exact_rank_and_span():
    vecs = [{0: 1, 1: 2}, {0: 2, 1: 4}, {2: Fraction(1, 3)}]
    assert exact_rank(vecs, 3) == 2 == oracles.rank(_dense(vecs, 3), 3)
    assert in_span(vecs, {0: 3, 1: 6, 2: 1}, 3)
    assert not in_span(vecs, {1: 1}, 3)
    assert independent_subset(vecs, 3) == [0, 2]


def test_solve_in_basis():
    basis = [{0: 1, 1: 1}, {1: 1, 2: 1}]
    assert solve_in_basis(basis, {0: 2, 1: 5, 2: 3}, 3) == [2, 3]
    assert solve_in_basis(basis, {0: 1}, 3) is None
    assert solve_in_basis([], {}, 3) == []


def test_subspace_add_and_reduce_in_both_fields():
    for fld in (MODULAR, RATIONAL):
        sub = Subspace(3, fld)
        new = sub.add(fld.from_sparse([{0: 1, 1: 1}, {0: 2, 1: 2}], 3))
        assert sub.dim == 1 and new.nrows() == 1
        assert sub.add(fld.from_sparse([{0: 3, 1: 3}], 3)) is None
        sub.add(fld.from_sparse([{2: 1}], 3))
        assert sub.dim == 2
        assert sub.reduce({0: 1, 1: 1, 2: 5}) == {}
        assert sub.reduce({1: 1}) != {}


def test_stack_and_take_rows():
    for fld in (MODULAR, RATIONAL):
        a = fld.from_sparse([{0: 1}, {1: 2}], 3)
        b = fld.from_sparse([{2: 3}], 3)
        st = fld.stack([a, b])
        assert st.nrows() == 3
        assert fld.entries(st) == [fld.convert(x) for x in [1, 0, 0, 0, 2, 0, 0, 0, 3]]
        assert fld.entries(fld.take_rows(st, [2, 0])) == [fld.convert(x) for x in [0, 0, 3, 1, 0, 0]]
