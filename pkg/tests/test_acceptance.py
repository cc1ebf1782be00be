"""Acceptance criteria 1-8, each run at exact (zero) tolerance.

Run with pytest (a summary line per criterion is printed at the end of the
session) or directly: ``python3 tests/test_acceptance.py``.
"""
import os
import sys
import time
from functools import lru_cache

import pytest

sys.path.insert(0, os.path.dirname(__file__))

import oracles  # noqa: E402
from fusionrel.cvpres.combinatorics import admissible_recursion_indices, check_cv_recursion  # noqa: E402
from fusionrel.cvpres.presented import build_presented_module  # noqa: E402
from fusionrel.cvpres.relations import Caps  # noqa: E402
from fusionrel.cvpres.verify import (check_garland, raw_garland_equivalence,  # noqa: E402
                                     verify_theorem_instance)
from fusionrel.fusion import fusion_product  # noqa: E402
from fusionrel.lie_core import (Partition, decompose_character, demazure, fundamental_weight,  # noqa: E402
                                is_root, level_one_roots, partitions, positive_roots, wadd,
                                weyl_character, wscale)
from fusionrel.modules import bracket_defects, build_irrep  # noqa: E402
from fusionrel.schur import DominancePair, pairs_of_total, schur_positivity_check  # noqa: E402

RESULTS: dict[int, tuple[bool, str]] = {}


def sweep_instances():
    """n in 1..3, every m, at most 3 parts, largest part 2 (3 when n = 1)."""
    out = []
    for n in (1, 2, 3):
        for m in range(1, n + 1):
            top = 3 if n == 1 else 2
            for total in range(1, 3 * top + 1):
                for ell in partitions(total, 3, top):
                    out.append((n, m, tuple(ell)))
    return out


INSTANCES = sweep_instances()


@lru_cache(maxsize=None)
def fusion(n, m, ell):
    return fusion_product(n, m, ell)


def record(k, ok, detail):
    RESULTS[k] = (ok, detail)
    return ok


# -- the criteria ---------------------------------------------------------------

def criterion_1():
    failed = []
    started = time.time()
    for n, m, ell in INSTANCES:
        v = verify_theorem_instance(n, m, ell)
        if not v.passed:
            failed.append((n, m, ell))
    elapsed = time.time() - started
    ok = not failed and elapsed < 600
    return record(1, ok, f"{len(INSTANCES)} instances, {len(failed)} failed, {elapsed:.0f}s"
                  + (f", failing {failed[:5]}" if failed else ""))


def criterion_2():
    bad = []
    for l in range(5):
        for r in range(5):
            dec = decompose_character(weyl_character((l,)) * weyl_character((r,)))
            want = [((k,), 1) for k in oracles.clebsch_gordan(l, r)]
            if sorted(dec) != sorted(want):
                bad.append((l, r))
    return record(2, not bad, f"25 pairs, {len(bad)} failed")


def criterion_3():
    cases = {(1, 1): ((3, 1), (0,)), (2, 1): ((4, 2), (1,))}
    bad = []
    for ell, (dims, deg1) in cases.items():
        oracle = oracles.sl2_fusion_dims(ell)
        P = build_presented_module(1, 1, ell, exact=True)
        G = fusion(1, 1, ell)
        ok = (oracle == dims == P.degree_dims() == G.graded_char.degree_dims()
              and P.graded_char == G.graded_char
              and decompose_character(P.graded_char.component(1)) == [(deg1, 1)])
        if not ok:
            bad.append(ell)
    return record(3, not bad, f"(1,1) and (2,1) against the filtration oracle, {len(bad)} failed")


def criterion_4():
    bad = []
    checks = 0
    for n, m, ell in INSTANCES:
        G = fusion(n, m, ell)
        for alpha in level_one_roots(n, m):
            for r in range(7):
                for s in range(7 - r):
                    checks += 1
                    if not check_garland(G, alpha, r, s):
                        bad.append((n, m, ell, str(alpha), r, s))
    return record(4, not bad, f"{checks} identities, {len(bad)} failed")


def criterion_5():
    idx = list(admissible_recursion_indices(8))
    bad = [t for t in idx if not check_cv_recursion(*t)]
    return record(5, not bad, f"{len(idx)} indices, {len(bad)} failed")


def criterion_6():
    bad = []
    for n, m, ell in INSTANCES:
        rep = raw_garland_equivalence(fusion(n, m, ell), n, m, ell)
        if not (rep.applicable and rep.equivalent and rep.raw_holds):
            bad.append((n, m, ell))
    return record(6, not bad, f"{len(INSTANCES)} generators, {len(bad)} failed")


def criterion_7():
    bad = []
    count = 0
    for n in (1, 2, 3):
        for m in range(1, n + 1):
            for total in range(1, 5):
                for a, b in pairs_of_total(total, 3):
                    pair = DominancePair(m, a, b)
                    if not pair.dominant:
                        continue
                    count += 1
                    v = schur_positivity_check(n, m, pair, witness=True)
                    if not (v.schur_positive and v.witness):
                        bad.append((n, m, tuple(a), tuple(b)))
    iff = 0
    for total in range(1, 7):
        for a, b in pairs_of_total(total, 2):
            pair = DominancePair(1, a, b)
            v = schur_positivity_check(1, 1, pair, diagnostic=True, witness=True)
            holds = bool(v.schur_positive and v.witness)
            iff += 1
            # l_2 >= r_2 exactly when both tests hold
            if holds != (pair.ell[1] >= pair.r[1]) or holds != pair.dominant:
                bad.append(("sl2", tuple(a), tuple(b)))
    return record(7, not bad, f"{count} dominant pairs, {iff} sl2 pairs, {len(bad)} failed")


def _current_brackets(M, n, top):
    """sl2-triple and Cartan brackets of the current algebra on a graded module."""
    bad = 0
    for alpha in positive_roots(n):
        e, f, h = (("e", alpha.i, alpha.j), ("f", alpha.i, alpha.j), ("h", alpha.i, alpha.j))
        for a in range(top + 1):
            for b in range(top + 1 - a):
                E, F, H = M.matrix(e, a), M.matrix(f, b), M.matrix(h, a)
                bad += E.commutator(F) != M.matrix(h, a + b)
                bad += H.commutator(M.matrix(e, b)) != M.matrix(e, a + b).scale(2)
                bad += H.commutator(F) != M.matrix(f, a + b).scale(-2)
                for beta in positive_roots(n):
                    bad += not H.commutator(M.matrix(("h", beta.i, beta.j), b)).is_zero()
    return bad


def criterion_8():
    notes = []
    bad = 0
    # Demazure idempotence and W-invariance of irreducible characters
    for n in (1, 2, 3):
        for lam in [w for w in _small_weights(n)]:
            ch = weyl_character(lam)
            bad += not ch.is_weyl_invariant()
            bad += any(demazure(i, ch) != ch for i in range(1, n + 1))
    notes.append("demazure")
    # brackets on every irreducible factor and on materialized graded modules
    factors = {(n, l, m) for n, m, ell in INSTANCES for l in ell}
    for n, l, m in sorted(factors):
        bad += len(bracket_defects(build_irrep(n, l, m)))
    built = 0
    for n, m, ell in INSTANCES:
        G = fusion(n, m, ell)
        if G.dim <= 120:
            bad += _current_brackets(G.materialize(), n, len(ell))
            built += 1
    for n, m, ell in [(1, 1, (1, 1)), (1, 1, (2, 1)), (1, 1, (1, 1, 1)), (2, 1, (1, 1)), (2, 2, (2, 1))]:
        M = build_presented_module(n, m, ell, exact=True, full=True).materialize()
        bad += _current_brackets(M, n, len(ell))
        built += 1
    notes.append(f"brackets on {len(factors)} factors and {built} graded modules")
    # minusculity: no two level-one roots add up to a root
    for n in range(1, 7):
        for m in range(1, n + 1):
            roots = level_one_roots(n, m)
            bad += sum(is_root(wadd(a.weight(n), b.weight(n))) for a in roots for b in roots)
    notes.append("minuscule n<=6")
    # parameter independence: a second, non-integer parameter choice
    for n, m, ell in INSTANCES:
        params = [(-1) ** i * (2 * i + 1) for i in range(len(ell))]
        params[0] = "1/2"
        bad += fusion_product(n, m, ell, params).graded_char != fusion(n, m, ell).graded_char
    notes.append("parameters")
    # cap stability: one more in the degree and relation caps
    for n, m, ell in INSTANCES:
        base = Caps().resolved(Partition(ell))
        bigger = Caps(degree=base.degree + 1, relations=base.relations + 1)
        v = verify_theorem_instance(n, m, ell, bigger)
        bad += not (v.passed and v.dim_presented == fusion(n, m, ell).dim)
    notes.append("caps+1")
    return record(8, not bad, ", ".join(notes) + f"; {bad} failures")


def _small_weights(n):
    import itertools
    return [w for w in itertools.product(range(3), repeat=n) if sum(w) <= 4]


CRITERIA = {1: criterion_1, 2: criterion_2, 3: criterion_3, 4: criterion_4,
            5: criterion_5, 6: criterion_6, 7: criterion_7, 8: criterion_8}


def line(k):
    if k not in RESULTS:
        return f"criterion {k}: FAIL (not run)"
    ok, detail = RESULTS[k]
    return f"criterion {k}: {'PASS' if ok else 'FAIL'} ({detail})"


def summary_lines():
    return [line(k) for k in sorted(RESULTS)]


@pytest.mark.parametrize("k", sorted(CRITERIA))
def test_criterion(k):
    ok = CRITERIA[k]()
    print(line(k))
    assert ok, RESULTS[k][1]


def test_instance_set_size():
    assert len(INSTANCES) == 64
    assert all(len(ell) <= 3 and max(ell) <= (3 if n == 1 else 2) for n, _, ell in INSTANCES)


if __name__ == "__main__":
    for k in sorted(CRITERIA):
        CRITERIA[k]()
        print(line(k), flush=True)
    sys.exit(0 if all(ok for ok, _ in RESULTS.values()) else 1)
