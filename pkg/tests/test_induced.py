from fusionrel.cvpres.induced import InducedSpace, label_units
from fusionrel.lie_core import level_one_roots

E, F, H = ("e", 1, 1), ("f", 1, 1), ("h", 1, 1)


def test_sl2_hand_computations():
    S = InducedSpace(1, 1, 2, 3)
    v = S.cyclic_vector()
    fv = S.act(F, 0, v)
    assert fv == {((0, 0),): 1}
    assert S.act(E, 0, fv) == {(): 2}
    ffv = S.act(F, 0, fv)
    assert S.act(E, 0, ffv) == {k: 2 * c for k, c in fv.items()}
    assert S.act(H, 1, fv) == {k: -2 * c for k, c in S.act(F, 1, v).items()}
    assert S.act(H, 0, v) == {(): 2}
    assert S.act(E, 0, v) == {}


def test_high_degree_currents_vanish():
    S = InducedSpace(1, 1, 3, 2)
    assert S.act(F, 2, S.cyclic_vector()) == {}
    assert S.act(E, 1, S.act(F, 0, S.cyclic_vector())) == {}


def test_variables_and_weights():
    S = InducedSpace(3, 2, 2, 2)
    assert len(S.roots) == len(level_one_roots(3, 2)) == 4
    for idx, r in enumerate(S.roots):
        a, b, s = S.variable_unit((idx, 1))
        assert S.is_negative(a, b) and s == 1
        assert S.variable(a, b, 1) == (idx, 1)
        assert label_units(("f", r.i, r.j)) == [(1, a, b)]
    assert S.monomial_weight(()) == (0, 2, 0)
    mono = ((0, 0), (1, 1))
    w = S.monomial_weight(mono)
    assert sum(w) == sum(S.highest_weight) + sum(sum(S.variable_weight(x)) for x in mono)


def test_levi_bracket_on_two_variables():
    # sl3, m=1: e_2 maps x_{21} to x_{31} up to sign and back
    S = InducedSpace(2, 1, 1, 1)
    f1 = S.act(("f", 1, 1), 0, S.cyclic_vector())
    f12 = S.act(("f", 2, 2), 0, f1)
    assert f12 and all(len(k) == 1 for k in f12)
    assert S.act(("e", 2, 2), 0, f12) == f1
