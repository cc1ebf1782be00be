import json
from fractions import Fraction

import pytest

from fusionrel.lie_core import decompose_character, fundamental_weight, positive_roots, wscale
from fusionrel.modules import (bracket_defects, build_irrep, generator_labels, highest_vector_defects,
                               tensor, tensor_many, trivial_module)

import oracles


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_fundamental_modules_have_binomial_dimension(n):
    for m in range(1, n + 1):
        assert build_irrep(n, 1, m).dim == oracles.binomial_dim(n, m)


def test_sl2_strings_and_small_examples():
    for l in range(6):
        assert build_irrep(1, l, 1).dim == l + 1
    assert build_irrep(2, 2, 1).dim == 6
    assert build_irrep(3, 0, 2).dim == 1


def test_build_irrep_rejects_bad_index():
    with pytest.raises(ValueError):
        build_irrep(2, 1, 3)
    with pytest.raises(ValueError):
        build_irrep(2, 1, 0)


@pytest.mark.parametrize("n,l,m", [(1, 4, 1), (2, 2, 1), (2, 3, 2), (3, 2, 2), (3, 2, 1), (4, 1, 2)])
def test_irrep_character_and_relations(n, l, m):
    V = build_irrep(n, l, m)
    assert dict(V.character()) == oracles.rectangle_character(n, l, m)
    assert bracket_defects(V) == []
    assert highest_vector_defects(V, wscale(l, fundamental_weight(m, n))) == []


def test_root_vectors_are_matrix_units_on_natural_module():
    # natural module of sl4 with basis e_1..e_4: f_[i..j] = E_{j+1,i}, e_[i..j] = E_{i,j+1}
    V = build_irrep(3, 1, 1)
    # e_k has weight eps_k, i.e. coordinates delta_{k,i} - delta_{k,i+1}
    natural = {tuple(int(k == i) - int(k == i + 1) for i in range(1, 4)): k for k in range(1, 5)}
    pos = {b: natural[w] for b, w in enumerate(V.weights)}
    for a in positive_roots(3):
        f = V.matrix(("f", a.i, a.j)).entries()
        e = V.matrix(("e", a.i, a.j)).entries()
        assert [(pos[r], pos[c], v) for r, c, v in f] == [(a.j + 1, a.i, 1)]
        assert [(pos[r], pos[c], v) for r, c, v in e] == [(a.i, a.j + 1, 1)]


def test_commutator_of_root_vectors_is_coroot():
    V = build_irrep(3, 2, 2)
    for a in positive_roots(3):
        e, f, h = (V.matrix((k, a.i, a.j)) for k in "efh")
        assert e.commutator(f) == h


def test_tensor_products():
    V = build_irrep(1, 1, 1)
    T = tensor(V, V)
    assert T.dim == 4
    assert decompose_character(T.character()) == [((2,), 1), ((0,), 1)]
    assert bracket_defects(T) == []
    W = tensor(build_irrep(2, 1, 1), trivial_module(2))
    assert W.character() == build_irrep(2, 1, 1).character()
    A, B = build_irrep(2, 1, 1), build_irrep(2, 1, 2)
    assert tensor(A, B).dim == A.dim * B.dim
    assert tensor_many([A, B, A], 2).dim == 27
    with pytest.raises(ValueError):
        tensor(A, V)


def test_json_dump_uses_quadruples():
    V = build_irrep(1, 2, 1)
    data = json.loads(V.to_json())
    assert data["dim"] == 3
    assert len(data["weights"]) == 3
    for lab in generator_labels(1):
        for quad in data["matrices"]["%s[%d..%d]" % lab]:
            assert len(quad) == 4
            r, c, num, den = quad
            assert Fraction(num, den) == V.matrix(lab).to_dense()[r][c]
