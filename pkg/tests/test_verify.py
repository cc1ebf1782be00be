import pytest

from fusionrel.cvpres.combinatorics import NotApplicable
from fusionrel.cvpres.verify import (check_garland, expected_dimension, raw_garland_equivalence,
                                     surjection_witness, verify_theorem_instance)
from fusionrel.fusion import fusion_product
from fusionrel.lie_core import Partition, Root, level_one_roots
from fusionrel.modules import build_irrep, tensor_many


@pytest.mark.parametrize("n,m,ell", [(1, 1, (2, 1)), (2, 1, (1, 1, 1)), (2, 2, (2, 1))])
def test_garland_identity_on_fusion_generator(n, m, ell):
    G = fusion_product(n, m, ell)
    for alpha in level_one_roots(n, m):
        for r in range(0, 4):
            for s in range(0, 4 - r):
                assert check_garland(G, alpha, r, s)


def test_garland_not_applicable_off_highest_vector():
    G = fusion_product(1, 1, (1, 1))
    w = G.act(("f", 1, 1), 0, G.cyclic_vector())
    with pytest.raises(NotApplicable):
        check_garland(G, Root(1, 1), 1, 1, w)
    with pytest.raises(ValueError):
        check_garland(G, Root(1, 1), -1, 1)


def test_garland_on_zero_vector():
    G = fusion_product(1, 1, (1, 1))
    zero = G.cyclic_vector().scale(0)
    assert check_garland(G, Root(1, 1), 2, 1, zero)


def test_raw_and_garland_families_agree():
    for n, m, ell in [(1, 1, (2, 2, 1)), (2, 1, (2, 1)), (3, 2, (1, 1))]:
        rep = raw_garland_equivalence(fusion_product(n, m, ell), n, m, ell)
        assert rep.applicable and rep.raw_holds and rep.garland_holds and rep.equivalent
    # relations of a smaller-step partition fail on a bigger fusion product, in both families at once
    rep = raw_garland_equivalence(fusion_product(1, 1, (1, 1, 1)), 1, 1, (2, 1))
    assert rep.applicable and rep.raw_holds is False and rep.garland_holds is False and rep.equivalent
    assert rep.to_jsonable()["equivalent"] is True


def test_surjection_witness():
    assert surjection_witness(fusion_product(1, 1, (2, 1)), 1, 1, (2, 1)) == []
    assert surjection_witness(fusion_product(1, 1, (1, 1, 1)), 1, 1, (2, 1)) != []


def test_verification_instances():
    v = verify_theorem_instance(1, 1, (2, 1))
    assert v.passed and v.dim_presented == v.dim_fusion == v.dim_expected == 6
    v = verify_theorem_instance(2, 2, (1, 1, 1))
    assert v.passed and v.dim_presented == 27
    data = verify_theorem_instance(2, 2, (2, 1), exact=True).to_jsonable()
    assert data["pass"] and data["dim_expected"] == 18
    assert set(data) == {"instance", "surjection_witness", "dim_presented", "dim_fusion", "dim_expected",
                         "graded_char_equal", "graded_dims", "caps_used", "stabilization_iterations",
                         "failing_relations", "pass"}
    assert {"degree", "relations", "word", "word_ladder"} <= set(data["caps_used"])


def test_expected_dimension_is_tensor_product_dimension():
    for n, m, ell in [(2, 1, (2, 1)), (2, 2, (2, 1)), (3, 2, (1, 1))]:
        assert expected_dimension(n, m, Partition(ell)) == tensor_many([build_irrep(n, l, m) for l in ell], n).dim
