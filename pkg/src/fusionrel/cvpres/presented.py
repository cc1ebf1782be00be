"""The cyclic module presented by the defining relations, computed by closure.

Write S for the polynomial space of ``induced.InducedSpace`` and J for the
submodule generated by the remaining relations (the power and the raw and
Garland families) applied to v.  With u^+ the span of E_ab, a <= m < b,
and l the Levi part, U(g[t]) = U(n^-[t]) U(l[t]) U(u^+[t]) shows

    J = S . Q,   Q = U(p[t]) . span{R v},

and Q splits by the number c of variables ("count"): u^+ lowers the count
by one and l[t] preserves it, so

    Q_c = U(l[t]) . (e_m Q_{c+1} + span{R v of count c}),
    J_c = sum over variables x of x J_{c-1} + Q_c.

Only monomials with at most ``word`` variables are kept, and vectors are
truncated to them.  Since the count is preserved or lowered by every
operator used and by the truncation, every vector produced is a genuine
element of J restricted to the kept counts, and the computed quotient
dimensions are upper bounds for those of the presented module.  (For a
full quotient, counts above L_1 + 1 are also cut down to the Weyl hull of
L_1 varpi_m: the power relation makes the quotient integrable, so the
other weight spaces lie in J anyway.)  Computations modulo a prime keep this property, since
reducing integer vectors mod p can only lower their rank.

The word cap is at least the largest count at a dominant weight, and at
most L_1 + 1; see ``build_presented_module``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Mapping, Sequence

from ..fusion import ExplicitGradedModule, GradedCharacterPoly, InternalError
from ..lie_core import (Partition, Weight, fundamental_weight, height_below, is_dominant,
                        weyl_character, wscale)
from ..linalg import MODULAR, RATIONAL, Field, Subspace
from ..modules import SparseMatrix, generator_labels, label_weight
from ..monomials import monomial_degree, monomials_of_weight
from .induced import InducedSpace, label_units
from .relations import GARLAND, POWER, RAW, CapExceeded, Caps, apply_operator, relation_set

Block = tuple[Weight, int]


@dataclass
class PresentedModule:
    """Graded quotient dimensions of the presented module (upper bounds, see module doc)."""

    n: int
    m: int
    ell: Partition
    caps: Caps
    word_cap: int
    blocks: dict[Weight, list[int]]
    iterations: int
    exact: bool
    ladder: list[int] = field(default_factory=list)
    engine: "ClosureEngine | None" = field(default=None, repr=False)

    @cached_property
    def graded_char(self) -> GradedCharacterPoly:
        return GradedCharacterPoly.from_dominant_blocks(self.blocks)

    def graded_character(self) -> GradedCharacterPoly:
        return self.graded_char

    @property
    def dim(self) -> int:
        return self.graded_char.dimension()

    def degree_dims(self) -> tuple[int, ...]:
        return self.graded_char.degree_dims()

    def materialize(self) -> ExplicitGradedModule:
        if self.engine is None or not self.engine.all_weights or not self.exact:
            raise ValueError("materialize needs an exact build over all weights (build_presented_module(..., full=True))")
        return self.engine.quotient_module()


class ClosureEngine:
    def __init__(self, n: int, m: int, ell: Partition, caps: Caps, word: int,
                 fld: Field = MODULAR, all_weights: bool = False):
        self.n, self.m = n, m
        self.ell = ell
        self.caps = caps
        self.word = word
        self.field = fld
        self.all_weights = all_weights
        self.p = ell.p
        self.L1 = ell.total
        self.lam = wscale(self.L1, fundamental_weight(m, n))
        self.space = InducedSpace(n, m, self.L1, self.p)
        self.iterations = 0
        self._ops: dict = {}
        self._build_blocks()

    # -- blocks ---------------------------------------------------------------
    def _build_blocks(self):
        # Every monomial with at most L_1 variables has a weight in the hull
        # (it is a weight of V(varpi_m)^{(x) L_1}), so those counts are kept
        # in full.  Count L_1 + 1 is kept in full too: the consequences of the
        # power relation pass through it.  Higher counts are only built for a
        # full quotient and are cut down to the hull, whose complement lies in J.
        self.hull = set(weyl_character(self.lam))
        self.blocks: dict[Block, list[tuple]] = {}
        variables = [(r, s) for r in range(len(self.space.roots)) for s in range(max(self.p, 1))]
        for c in range(0, min(self.word, self.L1 + 1) + 1):
            for mono in itertools.combinations_with_replacement(variables, c):
                self.blocks.setdefault(self.block_of(mono), []).append(mono)
        if self.word > self.L1 + 1:
            for mu in self.hull:
                if self.L1 + 1 < height_below(self.lam, mu, self.m) <= self.word:
                    for mono in monomials_of_weight(self.lam, mu, self.space.roots, max(self.p, 1)):
                        self.blocks.setdefault((mu, monomial_degree(mono)), []).append(mono)
        self.index: dict[Block, dict[tuple, int]] = {}
        for key, monos in self.blocks.items():
            monos.sort()
            self.index[key] = {mono: i for i, mono in enumerate(monos)}
        self.count = {key[0]: height_below(self.lam, key[0], self.m) for key in self.blocks}
        self.by_count: dict[int, list[Block]] = {}
        for key in sorted(self.blocks):
            self.by_count.setdefault(self.count[key[0]], []).append(key)

    def block_of(self, mono: tuple) -> Block:
        return (self.space.monomial_weight(mono), monomial_degree(mono))

    def split(self, poly: Mapping[tuple, object]) -> dict[Block, dict[int, object]]:
        """Sparse rows per block; monomials outside the retained blocks are dropped."""
        out: dict[Block, dict[int, object]] = {}
        for mono, c in poly.items():
            if not c:
                continue
            key = self.block_of(mono)
            idx = self.index.get(key)
            if idx is None:
                continue
            out.setdefault(key, {})[idx[mono]] = c
        return out

    # -- operators ------------------------------------------------------------
    def levi_generators(self) -> list[tuple]:
        gens = []
        for i in range(1, self.n + 1):
            if i != self.m:
                gens.append(((1, i, i + 1),))
                gens.append(((1, i + 1, i),))
        for s in range(1, self.p):
            for a in range(1, self.n + 2):
                gens.append(((1, a, a, s),))
        return gens

    def _units(self, gen):
        for term in gen:
            if len(term) == 3:
                yield term[0], (term[1], term[2], 0)
            else:
                yield term[0], (term[1], term[2], term[3])

    def operator(self, gen, key: Block):
        """(target block, matrix) for a generator acting on a block, or None."""
        ck = (gen, key)
        if ck in self._ops:
            return self._ops[ck]
        monos = self.blocks[key]
        target = None
        rows: list[dict[int, int]] = []
        for mono in monos:
            poly: dict[tuple, int] = {}
            for coef, unit in self._units(gen):
                for mono2, c in self.space.act_unit(unit, mono).items():
                    poly[mono2] = poly.get(mono2, 0) + coef * c
            parts = self.split(poly)
            if len(parts) > 1:
                raise InternalError("operator image spans several blocks")
            row = {}
            for tk, r in parts.items():
                target = tk
                row = r
            rows.append(row)
        if target is None:
            res = None
        else:
            res = (target, self.field.from_sparse(rows, len(self.blocks[target])))
        self._ops[ck] = res
        return res

    def multiplication(self, var, key: Block):
        ck = (("mul", var), key)
        if ck in self._ops:
            return self._ops[ck]
        monos = self.blocks[key]
        target = (tuple(a + b for a, b in zip(key[0], self.space.variable_weight(var))), key[1] + var[1])
        idx = self.index.get(target)
        if idx is None:
            res = None
        else:
            rows = [{idx[tuple(sorted(mono + (var,)))]: 1} for mono in monos]
            res = (target, self.field.from_sparse(rows, len(idx)))
        self._ops[ck] = res
        return res

    # -- relations ------------------------------------------------------------
    def relation_rows(self) -> dict[Block, list[dict[int, object]]]:
        seeds: dict[Block, list] = {}
        for rel in relation_set(self.n, self.m, self.ell, self.caps):
            if rel.family not in (POWER, RAW, GARLAND):
                continue
            r = rel.info.get("r", self.L1 + 1)
            if r > self.word:
                continue
            poly = apply_operator(rel, self.space, self.space.cyclic_vector())
            for key, row in self.split(poly).items():
                seeds.setdefault(key, []).append(row)
        return seeds

    def _close(self, spaces: dict[Block, Subspace], seeds: dict[Block, list]):
        gens = self.levi_generators()
        work: dict[Block, list] = {}
        for key, mats in seeds.items():
            new = spaces[key].add(self.field.stack(mats))
            if new is not None:
                work[key] = [new]
        while work:
            self.iterations += 1
            pending: dict[Block, list] = {}
            for key, mats in work.items():
                rows = self.field.stack(mats)
                if rows is None:
                    continue
                for gen in gens:
                    op = self.operator(gen, key)
                    if op is None:
                        continue
                    tk, mat = op
                    pending.setdefault(tk, []).append(rows * mat)
            work = {}
            for tk, mats in pending.items():
                new = spaces[tk].add(self.field.stack(mats))
                if new is not None:
                    work[tk] = [new]

    def compute(self) -> dict[Block, Subspace]:
        """The spaces J restricted to every retained block."""
        seeds_all = self.relation_rows()
        Q: dict[Block, Subspace] = {key: Subspace(len(v), self.field) for key, v in self.blocks.items()}
        top = max(self.by_count, default=0)
        raise_unit = ((1, self.m, self.m + 1),)
        for c in range(top, -1, -1):
            seeds: dict[Block, list] = {}
            for key in self.by_count.get(c, []):
                if key in seeds_all:
                    seeds.setdefault(key, []).append(self.field.from_sparse(seeds_all[key], len(self.blocks[key])))
            for key in self.by_count.get(c + 1, []):
                if Q[key].dim == 0:
                    continue
                op = self.operator(raise_unit, key)
                if op is None:
                    continue
                tk, mat = op
                seeds.setdefault(tk, []).append(Q[key].basis * mat)
            self._close(Q, seeds)
        J: dict[Block, Subspace] = {}
        roots = range(len(self.space.roots))
        for c in range(0, top + 1):
            for key in self.by_count.get(c, []):
                sub = Subspace(len(self.blocks[key]), self.field)
                parts = []
                if Q[key].dim:
                    parts.append(Q[key].basis)
                mu, d = key
                for ridx in roots:
                    for s in range(min(d, self.p - 1) + 1):
                        var = (ridx, s)
                        src = (tuple(a - b for a, b in zip(mu, self.space.variable_weight(var))), d - s)
                        if src not in J or J[src].dim == 0:
                            continue
                        tk, mat = self.multiplication(var, src)
                        parts.append(J[src].basis * mat)
                sub.add(self.field.stack(parts) if parts else None)
                J[key] = sub
        self.J = J
        return J

    def dominant_blocks(self) -> dict[Weight, list[int]]:
        out: dict[Weight, list[int]] = {}
        for (mu, d), monos in self.blocks.items():
            if not is_dominant(mu):
                continue
            dims = out.setdefault(mu, [])
            while len(dims) <= d:
                dims.append(0)
            dims[d] = len(monos) - self.J[(mu, d)].dim
        for mu in list(out):
            while out[mu] and out[mu][-1] == 0:
                out[mu].pop()
            if not out[mu]:
                del out[mu]
        return out

    def all_blocks(self) -> dict[Weight, list[int]]:
        out: dict[Weight, list[int]] = {}
        for (mu, d), monos in self.blocks.items():
            dims = out.setdefault(mu, [])
            while len(dims) <= d:
                dims.append(0)
            dims[d] = len(monos) - self.J[(mu, d)].dim
        return {mu: dims for mu, dims in out.items() if any(dims)}

    def quotient_module(self) -> ExplicitGradedModule:
        """Exact quotient with induced action matrices (all weights must be retained)."""
        basis: list[tuple[Block, int]] = []
        for key in sorted(self.blocks, key=lambda k: (k[1], k[0])):
            piv = set(self.J[key].pivots)
            for col in range(len(self.blocks[key])):
                if col not in piv:
                    basis.append((key, col))
        pos = {b: i for i, b in enumerate(basis)}
        dim = len(basis)
        actions = {}
        for label in generator_labels(self.n):
            for s in range(self.p + 1):
                cols = {}
                for j, (key, col) in enumerate(basis):
                    mono = self.blocks[key][col]
                    img = self.space.act(label, s, {mono: 1})
                    col_out = {}
                    for tk, row in self.split(img).items():
                        red = self.J[tk].reduce(row)
                        for c2, a in red.items():
                            col_out[pos[(tk, c2)]] = _fraction(a)
                    if col_out:
                        cols[j] = col_out
                actions[(label, s)] = SparseMatrix(dim, dim, cols)
        weights = [key[0] for key, _ in basis]
        degrees = [key[1] for key, _ in basis]
        cyclic = pos[((self.lam, 0), 0)]
        return ExplicitGradedModule(self.n, weights, degrees, actions, cyclic, self.p)


def _fraction(a):
    from fractions import Fraction
    return Fraction(int(a.p), int(a.q))


def dominant_count(lam: Weight, m: int) -> int:
    """Largest count among the dominant weights below lam."""
    return max(height_below(lam, mu, m) for mu in weyl_character(lam) if is_dominant(mu))


def hull_count(lam: Weight, m: int) -> int:
    return max(height_below(lam, mu, m) for mu in weyl_character(lam))


def build_presented_module(n: int, m: int, ell: Partition | Sequence[int], caps: Caps | None = None, *,
                           target: Mapping[Weight, Sequence[int]] | None = None,
                           exact: bool = False, full: bool = False) -> PresentedModule:
    """Quotient of the induced module by the closure of the relation vectors.

    With ``target`` (dominant graded dimensions known to be lower bounds,
    e.g. from a fusion product with a verified surjection) the cheap word
    cap (the largest dominant count) is tried first and then L_1 + 1;
    CapExceeded is raised if the bounds still do not meet.  Without a
    target a single build at the largest cap is made.
    ``full`` retains every weight so that the exact quotient can be
    materialized.
    """
    ell = (ell if isinstance(ell, Partition) else Partition(ell)).stripped()
    fundamental_weight(m, n)
    caps = (caps or Caps()).resolved(ell)
    p = ell.p
    if p >= 1 and caps.degree < p - 1:
        raise CapExceeded(f"degree cap {caps.degree} is below p-1={p - 1}; the variables f (x) t^s with "
                          f"s < p are all needed", {"degree": caps.degree, "required": p - 1})
    relation_set(n, m, ell, caps)  # validates the relation cap
    lam = wscale(ell.total, fundamental_weight(m, n))
    fld = RATIONAL if exact else MODULAR
    if full:
        ladder = [max(hull_count(lam, m), ell.total + 1)]
    else:
        lo = dominant_count(lam, m)
        hi = max(lo, ell.total + 1)
        if caps.word is not None:
            if caps.word < lo:
                raise CapExceeded(f"word cap {caps.word} is below {lo}, the largest count at a dominant weight",
                                  {"word": caps.word, "required": lo})
            hi = min(hi, caps.word)
        ladder = sorted({lo, hi}) if target is not None else [hi]
    used = []
    total_iter = 0
    engine = None
    blocks: dict[Weight, list[int]] = {}
    for word in ladder:
        engine = ClosureEngine(n, m, ell, caps, word, fld, all_weights=full)
        engine.compute()
        total_iter += engine.iterations
        used.append(word)
        blocks = engine.all_blocks() if full else engine.dominant_blocks()
        if target is None:
            break
        dom = {mu: d for mu, d in blocks.items() if is_dominant(mu)}
        if _same_blocks(dom, target):
            break
        if _below(dom, target):
            raise InternalError("presented module is smaller than a module it surjects onto")
    dom_blocks = {mu: d for mu, d in blocks.items() if is_dominant(mu)}
    if target is not None and not _same_blocks(dom_blocks, target):
        raise CapExceeded(
            f"closure bounds did not meet the target within word caps {used}",
            {"word_ladder": used, "iterations": total_iter, "caps": caps.to_jsonable(),
             "excess": {str(mu): [a - b for a, b in zip(_pad(d, len(d) + 1), _pad(target.get(mu, []), len(d) + 1))]
                        for mu, d in dom_blocks.items() if not _same_blocks({mu: d}, {mu: target.get(mu, [])})}})
    return PresentedModule(n, m, ell, caps, used[-1], dom_blocks, total_iter, exact, used, engine)


def _pad(d: Sequence[int], k: int) -> list[int]:
    return list(d) + [0] * (k - len(d))


def _same_blocks(a: Mapping, b: Mapping) -> bool:
    keys = set(a) | set(b)
    for k in keys:
        x, y = a.get(k, []), b.get(k, [])
        w = max(len(x), len(y))
        if _pad(x, w) != _pad(y, w):
            return False
    return True


def _below(a: Mapping, b: Mapping) -> bool:
    """Some entry of a is strictly below the matching entry of b."""
    for k in set(a) | set(b):
        x, y = a.get(k, []), b.get(k, [])
        w = max(len(x), len(y))
        if any(u < v for u, v in zip(_pad(x, w), _pad(y, w))):
            return True
    return False
