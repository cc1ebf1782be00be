"""Explicit finite-dimensional sl(n+1)-modules with exact rational matrices.

Generators are labelled ``('e', i, j)``, ``('f', i, j)`` and ``('h', i, j)``
for the root interval ``[i..j]``; the Chevalley generators are the labels
with ``i == j``.  Root vectors for longer intervals are right-nested
commutators ``[x_i, [x_{i+1}, ...]]`` with ``f`` rescaled so that
``[e_alpha, f_alpha] = h_alpha``.  In the natural representation this makes
``e_[i..j]`` and ``f_[i..j]`` the matrix units ``E_{i,j+1}`` and ``E_{j+1,i}``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

from .lie_core import (CharacterPoly, Root, Weight, fundamental_weight, pairing,
                       positive_roots, simple_root, wadd, weyl_character, wscale,
                       zero_weight)

Label = tuple[str, int, int]


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


class SparseMatrix:
    """Column-sparse matrix: ``cols[j]`` maps row index to nonzero entry."""

    __slots__ = ("nrows", "ncols", "cols")

    def __init__(self, nrows: int, ncols: int, cols: Mapping[int, Mapping[int, object]] | None = None):
        self.nrows = nrows
        self.ncols = ncols
        self.cols: dict[int, dict[int, object]] = {}
        for j, col in (cols or {}).items():
            col = {i: _norm(c) for i, c in col.items() if c}
            if col:
                self.cols[j] = col

    @classmethod
    def zero(cls, n: int) -> "SparseMatrix":
        return cls(n, n)

    @classmethod
    def identity(cls, n: int) -> "SparseMatrix":
        return cls(n, n, {i: {i: 1} for i in range(n)})

    def apply(self, vec: Mapping[int, object]) -> dict[int, object]:
        out: dict[int, object] = {}
        for j, c in vec.items():
            col = self.cols.get(j)
            if col:
                for i, a in col.items():
                    out[i] = out.get(i, 0) + a * c
        return {i: _norm(c) for i, c in out.items() if c}

    def __matmul__(self, other: "SparseMatrix") -> "SparseMatrix":
        return SparseMatrix(self.nrows, other.ncols,
                            {j: self.apply(col) for j, col in other.cols.items()})

    def __add__(self, other):
        cols = {j: dict(c) for j, c in self.cols.items()}
        for j, col in other.cols.items():
            tgt = cols.setdefault(j, {})
            for i, a in col.items():
                tgt[i] = tgt.get(i, 0) + a
        return SparseMatrix(self.nrows, self.ncols, cols)

    def scale(self, c) -> "SparseMatrix":
        return SparseMatrix(self.nrows, self.ncols,
                            {j: {i: a * c for i, a in col.items()} for j, col in self.cols.items()})

    def __sub__(self, other):
        return self + other.scale(-1)

    def commutator(self, other) -> "SparseMatrix":
        return self @ other - other @ self

    def is_zero(self) -> bool:
        return not self.cols

    def __eq__(self, other):
        return (isinstance(other, SparseMatrix) and self.nrows == other.nrows
                and self.ncols == other.ncols and self.cols == other.cols)

    def entries(self) -> list[tuple[int, int, object]]:
        return sorted((i, j, a) for j, col in self.cols.items() for i, a in col.items())

    def to_dense(self) -> list[list]:
        rows = [[0] * self.ncols for _ in range(self.nrows)]
        for i, j, a in self.entries():
            rows[i][j] = a
        return rows


@dataclass
class ExplicitModule:
    """Weight-labelled basis with exact action matrices for every root generator."""

    n: int
    weights: list[Weight]
    actions: dict[Label, SparseMatrix]
    highest: int | None = None
    name: str = ""
    _by_weight: dict[Weight, list[int]] = field(default_factory=dict, repr=False)

    def __post_init__(self):
        by = {}
        for idx, w in enumerate(self.weights):
            by.setdefault(w, []).append(idx)
        self._by_weight = by

    @property
    def dim(self) -> int:
        return len(self.weights)

    def weight_space(self, mu: Weight) -> list[int]:
        return self._by_weight.get(tuple(mu), [])

    def character(self) -> CharacterPoly:
        return CharacterPoly((w, 1) for w in self.weights)

    def matrix(self, label: Label) -> SparseMatrix:
        return self.actions[label]

    def act(self, label: Label, vec: Mapping[int, object]) -> dict[int, object]:
        return self.actions[label].apply(vec)

    def highest_vector(self) -> dict[int, object]:
        if self.highest is None:
            raise ValueError("module has no distinguished cyclic vector")
        return {self.highest: 1}

    def to_jsonable(self) -> dict:
        return {
            "n": self.n,
            "dim": self.dim,
            "weights": [list(w) for w in self.weights],
            "highest": self.highest,
            "matrices": {
                f"{k}[{i}..{j}]": [[r, c, Fraction(a).numerator, Fraction(a).denominator]
                                    for r, c, a in m.entries()]
                for (k, i, j), m in sorted(self.actions.items())
            },
        }

    def to_json(self) -> str:
        return json.dumps(self.to_jsonable(), sort_keys=True)


def generator_labels(n: int) -> list[Label]:
    out = []
    for a in positive_roots(n):
        out += [("e", a.i, a.j), ("f", a.i, a.j), ("h", a.i, a.j)]
    return out


def label_weight(label: Label, n: int) -> Weight:
    kind, i, j = label
    if kind == "h":
        return zero_weight(n)
    w = Root(i, j).weight(n)
    return w if kind == "e" else wscale(-1, w)


def _complete_actions(n: int, weights: list[Weight], simple: dict[Label, SparseMatrix]) -> dict[Label, SparseMatrix]:
    """Extend Chevalley matrices to all root vectors by right-nested brackets."""
    dim = len(weights)
    acts = dict(simple)
    for i in range(1, n + 1):
        acts[("h", i, i)] = SparseMatrix(dim, dim, {b: {b: w[i - 1]} for b, w in enumerate(weights) if w[i - 1]})
    for length in range(2, n + 1):
        for i in range(1, n - length + 2):
            j = i + length - 1
            e = acts[("e", i, i)].commutator(acts[("e", i + 1, j)])
            f = acts[("f", i, i)].commutator(acts[("f", i + 1, j)])
            h = SparseMatrix(dim, dim, {b: {b: pairing(Root(i, j), w)} for b, w in enumerate(weights)
                                        if pairing(Root(i, j), w)})
            # [E_{i+1,i}, E_{j+1,i+1}] = -E_{j+1,i}, so one sign flip per step
            f = f.scale(-1)
            acts[("e", i, j)] = e
            acts[("f", i, j)] = f
            acts[("h", i, j)] = h
    return acts


def trivial_module(n: int) -> ExplicitModule:
    w = [zero_weight(n)]
    simple = {}
    for i in range(1, n + 1):
        simple[("e", i, i)] = SparseMatrix.zero(1)
        simple[("f", i, i)] = SparseMatrix.zero(1)
    return ExplicitModule(n, w, _complete_actions(n, w, simple), highest=0, name="V(0)")


# -- V(l varpi_m) inside Sym^l(Lambda^m C^{n+1}) ------------------------------

def _wedge_weight(subset: tuple[int, ...], n: int) -> Weight:
    # e_a has weight varpi_a - varpi_{a-1} (with varpi_0 = varpi_{n+1} = 0)
    w = [0] * n
    for a in subset:
        if a <= n:
            w[a - 1] += 1
        if a >= 2:
            w[a - 2] -= 1
    return tuple(w)


def _shift(subset: tuple[int, ...], src: int, dst: int) -> tuple[int, ...] | None:
    """E_{dst,src} on a wedge of basis vectors; None if it vanishes."""
    if src not in subset or dst in subset:
        return None
    # adjacent indices: replacing src by dst keeps the sorted order
    return tuple(dst if a == src else a for a in subset)


def _sym_apply(vec: dict, src: int, dst: int) -> dict:
    """Derivation action of E_{dst,src} on Sym^l(Lambda^m)."""
    out: dict = {}
    for mono, c in vec.items():
        for pos, subset in enumerate(mono):
            if pos and mono[pos - 1] == subset:
                continue
            new = _shift(subset, src, dst)
            if new is None:
                continue
            mult = mono.count(subset)
            key = tuple(sorted(mono[:pos] + (new,) + mono[pos + mult:] + (subset,) * (mult - 1)))
            out[key] = out.get(key, 0) + c * mult
    return {k: v for k, v in out.items() if v}


class _WeightSpaceBasis:
    """Reduced echelon basis of a subspace of the ambient symmetric power."""

    def __init__(self):
        self.rows: list[dict] = []
        self.pivots: list = []

    def reduce(self, vec: dict) -> dict:
        vec = dict(vec)
        for row, piv in zip(self.rows, self.pivots):
            c = vec.get(piv)
            if c:
                for k, a in row.items():
                    nv = vec.get(k, 0) - c * a
                    if nv:
                        vec[k] = nv
                    else:
                        vec.pop(k, None)
        return vec

    def add(self, vec: dict) -> bool:
        vec = self.reduce(vec)
        if not vec:
            return False
        piv = min(vec)
        lead = Fraction(vec[piv])
        vec = {k: _norm(Fraction(a) / lead) for k, a in vec.items()}
        for row in self.rows:
            c = row.get(piv)
            if c:
                for k, a in vec.items():
                    nv = row.get(k, 0) - c * a
                    if nv:
                        row[k] = _norm(nv)
                    else:
                        row.pop(k, None)
        self.rows.append(vec)
        self.pivots.append(piv)
        return True

    def coordinates(self, vec: dict) -> dict[int, object]:
        """Coordinates of a vector known to lie in the span."""
        coords = {r: vec[piv] for r, piv in enumerate(self.pivots) if vec.get(piv)}
        return coords


def build_irrep(n: int, ell: int, m: int) -> ExplicitModule:
    """V(ell * varpi_m) as the f-span of (e_1 ^ ... ^ e_m)^ell in Sym^ell(Lambda^m C^{n+1})."""
    lam = wscale(ell, fundamental_weight(m, n))
    if ell < 0:
        raise ValueError("ell must be nonnegative")
    if ell == 0:
        return trivial_module(n)
    top = tuple(range(1, m + 1))
    highest = {(top,) * ell: 1}

    def weight_of(mono):
        w = zero_weight(n)
        for s in mono:
            w = wadd(w, _wedge_weight(s, n))
        return w

    spaces: dict[Weight, _WeightSpaceBasis] = {lam: _WeightSpaceBasis()}
    spaces[lam].add(highest)
    frontier = [lam]
    order = [lam]
    while frontier:
        nxt = []
        for mu in frontier:
            for i in range(1, n + 1):
                nu = tuple(a - b for a, b in zip(mu, simple_root(i, n)))
                for row in spaces[mu].rows:
                    img = _sym_apply(row, i, i + 1)
                    if not img:
                        continue
                    if nu not in spaces:
                        spaces[nu] = _WeightSpaceBasis()
                        nxt.append(nu)
                        order.append(nu)
                    spaces[nu].add(img)
        frontier = nxt
    index: dict[tuple[Weight, int], int] = {}
    weights: list[Weight] = []
    for mu in order:
        for r in range(len(spaces[mu].rows)):
            index[(mu, r)] = len(weights)
            weights.append(mu)
    dim = len(weights)
    simple: dict[Label, SparseMatrix] = {}
    for i in range(1, n + 1):
        alpha = simple_root(i, n)
        for kind, src, dst, shift in (("f", i, i + 1, -1), ("e", i + 1, i, 1)):
            cols = {}
            for mu in order:
                nu = tuple(a + shift * b for a, b in zip(mu, alpha))
                if nu not in spaces:
                    continue
                for r, row in enumerate(spaces[mu].rows):
                    img = _sym_apply(row, src, dst)
                    if img:
                        coords = spaces[nu].coordinates(img)
                        cols[index[(mu, r)]] = {index[(nu, q)]: c for q, c in coords.items()}
            simple[(kind, i, i)] = SparseMatrix(dim, dim, cols)
    mod = ExplicitModule(n, weights, _complete_actions(n, weights, simple), highest=0,
                         name=f"V({ell}w{m})")
    if mod.character() != weyl_character(lam):
        raise AssertionError(f"constructed module for {lam} has the wrong character")
    return mod


def tensor(a: ExplicitModule, b: ExplicitModule) -> ExplicitModule:
    """Tensor product with the Leibniz action x (x) 1 + 1 (x) x."""
    if a.n != b.n:
        raise ValueError(f"rank mismatch: {a.n} vs {b.n}")
    db = b.dim
    weights = [wadd(wa, wb) for wa in a.weights for wb in b.weights]
    acts = {}
    for label in a.actions:
        ma, mb = a.actions[label], b.actions[label]
        cols: dict[int, dict] = {}
        for ia in range(a.dim):
            for ib in range(db):
                col = {}
                for r, c in ma.cols.get(ia, {}).items():
                    col[r * db + ib] = c
                for r, c in mb.cols.get(ib, {}).items():
                    key = ia * db + r
                    col[key] = col.get(key, 0) + c
                if col:
                    cols[ia * db + ib] = col
        acts[label] = SparseMatrix(len(weights), len(weights), cols)
    high = None
    if a.highest is not None and b.highest is not None:
        high = a.highest * db + b.highest
    return ExplicitModule(a.n, weights, acts, highest=high, name=f"{a.name}*{b.name}")


def bracket_defects(mod: ExplicitModule) -> list[str]:
    """Failed Chevalley/Serre identities, as readable strings (empty if all hold)."""
    n = mod.n
    A = mod.actions
    bad = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            aij = 2 if i == j else (-1 if abs(i - j) == 1 else 0)
            if A[("h", i, i)].commutator(A[("e", j, j)]) != A[("e", j, j)].scale(aij):
                bad.append(f"[h{i},e{j}]")
            if A[("h", i, i)].commutator(A[("f", j, j)]) != A[("f", j, j)].scale(-aij):
                bad.append(f"[h{i},f{j}]")
            want = A[("h", i, i)] if i == j else SparseMatrix.zero(mod.dim)
            if A[("e", i, i)].commutator(A[("f", j, j)]) != want:
                bad.append(f"[e{i},f{j}]")
            if abs(i - j) == 1:
                for k in ("e", "f"):
                    x, y = A[(k, i, i)], A[(k, j, j)]
                    serre = x @ x @ y - (x @ y @ x).scale(2) + y @ x @ x
                    if not serre.is_zero():
                        bad.append(f"serre {k}{i}{j}")
            elif i != j:
                for k in ("e", "f"):
                    if not A[(k, i, i)].commutator(A[(k, j, j)]).is_zero():
                        bad.append(f"[{k}{i},{k}{j}]")
    for a in positive_roots(n):
        lab = (a.i, a.j)
        if A[("e",) + lab].commutator(A[("f",) + lab]) != A[("h",) + lab]:
            bad.append(f"[e,f]!=h on {a}")
    for idx, w in enumerate(mod.weights):
        for i in range(1, n + 1):
            if A[("h", i, i)].apply({idx: 1}) != ({idx: w[i - 1]} if w[i - 1] else {}):
                bad.append(f"h{i} not diagonal at {idx}")
    return bad


def highest_vector_defects(mod: ExplicitModule, lam: Weight) -> list[str]:
    bad = []
    if mod.highest is None:
        return ["no highest vector"]
    if mod.weights[mod.highest] != tuple(lam):
        bad.append("highest vector has the wrong weight")
    for i in range(1, mod.n + 1):
        if mod.act(("e", i, i), {mod.highest: 1}):
            bad.append(f"e{i} does not kill the highest vector")
    return bad


def tensor_many(mods: Iterable[ExplicitModule], n: int) -> ExplicitModule:
    acc = trivial_module(n)
    for mod in mods:
        acc = tensor(acc, mod)
    return acc

