import pytest

from fusionrel.cvpres.presented import build_presented_module, dominant_count, hull_count
from fusionrel.cvpres.relations import CapExceeded, Caps
from fusionrel.fusion import fusion_product
from fusionrel.lie_core import fundamental_weight, weyl_character, wscale

import oracles


def test_single_part_is_the_irreducible_module():
    for n, m, l in [(1, 1, 3), (2, 1, 2), (3, 2, 1)]:
        P = build_presented_module(n, m, (l,))
        assert P.graded_char.degrees() == [0]
        assert P.graded_char.component(0) == weyl_character(wscale(l, fundamental_weight(m, n)))


def test_small_graded_dimensions():
    assert build_presented_module(1, 1, (1, 1)).degree_dims() == (3, 1)
    assert build_presented_module(1, 1, (2, 1)).degree_dims() == (4, 2)
    assert build_presented_module(2, 1, (1, 1)).degree_dims() == (6, 3)
    assert build_presented_module(1, 1, (2, 2, 2)).degree_dims() == oracles.sl2_fusion_dims((2, 2, 2))


@pytest.mark.parametrize("n,m,ell", [(1, 1, (2, 1, 1)), (2, 1, (2, 1)), (2, 2, (1, 1, 1))])
def test_exact_and_modular_agree(n, m, ell):
    a = build_presented_module(n, m, ell)
    b = build_presented_module(n, m, ell, exact=True)
    assert a.graded_char == b.graded_char


@pytest.mark.parametrize("n,m,ell", [(1, 1, (1, 1)), (1, 1, (2, 1, 1)), (2, 1, (1, 1)), (2, 2, (2, 1))])
def test_materialized_quotient_matches_fusion(n, m, ell):
    P = build_presented_module(n, m, ell, exact=True, full=True)
    M = P.materialize()
    G = fusion_product(n, m, ell)
    assert M.dim == G.dim
    assert M.grading_defects() == []
    assert M.generated_dimension() == M.dim
    from fusionrel.fusion import graded_character
    assert graded_character(M) == G.graded_char


def test_materialize_needs_full_exact_build():
    with pytest.raises(ValueError):
        build_presented_module(1, 1, (1, 1)).materialize()


def test_word_cap_bounds():
    lam = wscale(3, fundamental_weight(1, 1))
    assert dominant_count(lam, 1) == 1 and hull_count(lam, 1) == 3
    with pytest.raises(CapExceeded):
        build_presented_module(1, 1, (2, 1), Caps(word=0))
    with pytest.raises(CapExceeded):
        build_presented_module(1, 1, (1, 1), Caps(degree=0))


def test_unmet_target_raises_with_diagnostics():
    G = fusion_product(1, 1, (2, 2, 2))
    with pytest.raises(CapExceeded) as info:
        build_presented_module(1, 1, (2, 2, 2), Caps(word=3), target=G.dominant_blocks())
    assert info.value.diagnostics["word_ladder"] == [3]
    # the power relation only shows up in the quotient once count L_1 + 1 is kept
    assert info.value.diagnostics["excess"] == {"(0,)": [0, 0, 0, 0, 1, 0]}
    P = build_presented_module(1, 1, (2, 2, 2), target=G.dominant_blocks())
    assert P.ladder == [3, 7]
    assert P.graded_char == G.graded_char
