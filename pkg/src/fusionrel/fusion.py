"""Evaluation modules, fusion products and graded characters.

The fusion product of V(l_1 w_m), ..., V(l_p w_m) is built inside the
tensor product W of evaluation modules at distinct parameters c_i.  With
v = v_1 (x) ... (x) v_p and x_{a,s} = f_a (x) t^s for the roots a with
<h_a, w_m> = 1, the filtration piece F^{<=k} is spanned by the commuting
products of x_{a,s} (s < p) of total t-degree at most k applied to v:
the parabolic part of g[t] acts on v by scalars, the remaining negative
part is abelian, and t^s reduces to lower powers on W for s >= p.

Each graded piece is a g-module, so only dominant weight blocks are ever
computed; other weights follow by Weyl symmetry.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .lie_core import (CharacterPoly, Partition, Weight, fundamental_weight, is_dominant,
                       level_one_roots, wadd, weyl_orbit, wscale, wsub, zero_weight)
from .linalg import exact_rank, in_span, independent_subset, solve_in_basis
from .monomials import monomials_of_weight
from .modules import ExplicitModule, Label, SparseMatrix, build_irrep, generator_labels, label_weight


class InternalError(RuntimeError):
    pass


def _param(c) -> Fraction:
    c = Fraction(c)
    return c


def _power(c: Fraction, s: int):
    v = c ** s
    return int(v) if v.denominator == 1 else v


# -- current modules ----------------------------------------------------------

class EvaluationModule:
    """V as a g[t]-module where x (x) t^s acts by c^s x."""

    def __init__(self, V: ExplicitModule, c=0):
        self.V = V
        self.c = _param(c)
        self.n = V.n

    @property
    def nilpotency(self) -> int | None:
        """Smallest N with t^N g[t] acting as zero, or None if there is none."""
        return 1 if self.c == 0 else None

    def current_matrix(self, label: Label, s: int) -> SparseMatrix:
        if s == 0:
            return self.V.matrix(label)
        return self.V.matrix(label).scale(_power(self.c, s))

    def act(self, label: Label, s: int, vec: Mapping[int, object]) -> dict[int, object]:
        if s and self.c == 0:
            return {}
        out = self.V.act(label, vec)
        if s:
            k = _power(self.c, s)
            out = {i: a * k for i, a in out.items()}
        return out


class EvaluationTensor:
    """Tensor product of evaluation modules; basis vectors are index tuples."""

    def __init__(self, factors: Sequence[ExplicitModule], params: Sequence, n: int | None = None):
        self.factors = list(factors)
        self.params = [_param(c) for c in params]
        if len(self.factors) != len(self.params):
            raise ValueError("one parameter per factor is required")
        if len(set(self.params)) != len(self.params):
            raise ValueError(f"parameters must be pairwise distinct, got {list(map(str, self.params))}")
        ranks = {f.n for f in self.factors}
        if len(ranks) > 1:
            raise ValueError("factors of different rank")
        self.n = ranks.pop() if ranks else n
        if self.n is None:
            raise ValueError("the rank is needed for an empty tensor product")

    @property
    def dim(self) -> int:
        d = 1
        for f in self.factors:
            d *= f.dim
        return d

    def weight_of(self, key: tuple[int, ...]) -> Weight:
        w = zero_weight(self.n)
        for f, b in zip(self.factors, key):
            w = wadd(w, f.weights[b])
        return w

    def cyclic_vector(self) -> dict[tuple[int, ...], int]:
        return {tuple(f.highest for f in self.factors): 1}

    def act(self, label: Label, s: int, vec: Mapping[tuple, object]) -> dict[tuple, object]:
        out: dict[tuple, object] = {}
        for i, (f, c) in enumerate(zip(self.factors, self.params)):
            if s and c == 0:
                continue
            scale = _power(c, s) if s else 1
            mat = f.actions[label]
            for key, a in vec.items():
                col = mat.cols.get(key[i])
                if not col:
                    continue
                for r, b in col.items():
                    nk = key[:i] + (r,) + key[i + 1:]
                    out[nk] = out.get(nk, 0) + a * b * scale
        return {k: _clean(v) for k, v in out.items() if v}

    @cached_property
    def _supports(self) -> list[dict[Weight, list[int]]]:
        return [f._by_weight for f in self.factors]

    @cached_property
    def _tail_supports(self) -> list[set[Weight]]:
        tails = [{zero_weight(self.n)}]
        for f in reversed(self.factors):
            prev = tails[-1]
            tails.append({wadd(a, b) for a in f._by_weight for b in prev})
        return list(reversed(tails))

    def weight_basis(self, mu: Weight) -> list[tuple[int, ...]]:
        """Index tuples of weight mu, in lexicographic order."""
        out: list[tuple[int, ...]] = []
        tails = self._tail_supports

        def rec(i, rest, prefix):
            if i == len(self.factors):
                if rest == zero_weight(self.n):
                    out.append(prefix)
                return
            for w, idxs in self._supports[i].items():
                r = wsub(rest, w)
                if r in tails[i + 1]:
                    for b in idxs:
                        rec(i + 1, r, prefix + (b,))

        rec(0, tuple(mu), ())
        return sorted(out)

    def split_by_weight(self, vec: Mapping[tuple, object]) -> dict[Weight, dict[tuple, object]]:
        out: dict[Weight, dict] = {}
        for key, a in vec.items():
            out.setdefault(self.weight_of(key), {})[key] = a
        return out


def evaluation_module(V: ExplicitModule, c=0) -> EvaluationModule:
    return EvaluationModule(V, c)


def _clean(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


# -- graded characters ----------------------------------------------------------

class GradedCharacterPoly(Mapping):
    """Finitely supported map (weight, degree) -> multiplicity."""

    def __init__(self, terms: Mapping[tuple[Weight, int], int] | Iterable = ()):
        if isinstance(terms, Mapping):
            terms = terms.items()
        acc: dict[tuple[Weight, int], int] = {}
        for (mu, k), c in terms:
            if k < 0:
                raise ValueError("grading degrees are nonnegative")
            key = (tuple(mu), int(k))
            acc[key] = acc.get(key, 0) + c
        self._terms = {k: c for k, c in acc.items() if c}

    def __getitem__(self, key):
        mu, k = key
        return self._terms.get((tuple(mu), k), 0)

    def __iter__(self):
        return iter(self._terms)

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if isinstance(other, GradedCharacterPoly):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def degrees(self) -> list[int]:
        return sorted({k for _, k in self._terms})

    def at_q_one(self) -> CharacterPoly:
        return CharacterPoly((mu, c) for (mu, _), c in self._terms.items())

    def component(self, k: int) -> CharacterPoly:
        return CharacterPoly((mu, c) for (mu, d), c in self._terms.items() if d == k)

    def degree_dims(self) -> tuple[int, ...]:
        if not self._terms:
            return ()
        top = max(self.degrees())
        return tuple(self.component(k).dimension() for k in range(top + 1))

    def dimension(self) -> int:
        return sum(self._terms.values())

    def to_jsonable(self) -> list:
        return [[list(mu), k, c] for (mu, k), c in sorted(self._terms.items())]

    def to_json(self) -> str:
        return json.dumps(self.to_jsonable(), sort_keys=True)

    @classmethod
    def from_jsonable(cls, entries) -> "GradedCharacterPoly":
        return cls(((tuple(mu), k), c) for mu, k, c in entries)

    @classmethod
    def from_dominant_blocks(cls, blocks: Mapping[Weight, Sequence[int]]) -> "GradedCharacterPoly":
        """Extend dominant-weight graded multiplicities along Weyl orbits."""
        acc = {}
        for mu, dims in blocks.items():
            orbit = weyl_orbit(mu)
            for k, d in enumerate(dims):
                if d:
                    for nu in orbit:
                        acc[(nu, k)] = d
        return cls(acc)

    def __repr__(self):
        return f"GradedCharacterPoly({dict(sorted(self._terms.items()))})"


# -- graded vectors and the filtration -------------------------------------------

@dataclass(frozen=True)
class GradedVector:
    """Element of a graded piece, represented by a lift in the filtered space."""

    degree: int
    vec: Mapping

    def __add__(self, other: "GradedVector") -> "GradedVector":
        if not other.vec:
            return self
        if not self.vec:
            return other
        if other.degree != self.degree:
            raise ValueError("cannot add graded vectors of different degrees")
        out = dict(self.vec)
        for k, a in other.vec.items():
            out[k] = out.get(k, 0) + a
        return GradedVector(self.degree, {k: _clean(a) for k, a in out.items() if a})

    def scale(self, c) -> "GradedVector":
        return GradedVector(self.degree, {k: _clean(a * c) for k, a in self.vec.items() if a * c})


class FiltrationBlock:
    """F^{<=k} restricted to one weight, spanned by monomial images."""

    def __init__(self, mu: Weight, columns: list[tuple], monomials: list[tuple], degrees: list[int],
                 images: list[dict]):
        self.mu = mu
        self.columns = columns
        self.colindex = {c: i for i, c in enumerate(columns)}
        order = sorted(range(len(monomials)), key=lambda i: (degrees[i], monomials[i]))
        self.monomials = [monomials[i] for i in order]
        self.degrees = [degrees[i] for i in order]
        self.rows = [self._row(images[i]) for i in order]
        self.top = max(self.degrees, default=-1)
        self._basis()

    def _row(self, vec: Mapping[tuple, object]) -> dict[int, object]:
        return {self.colindex[k]: a for k, a in vec.items()}

    def _basis(self):
        ncols = len(self.columns)
        picks = independent_subset(self.rows, ncols)
        ranks = []
        for k in range(self.top + 1):
            sub = [r for r, d in zip(self.rows, self.degrees) if d <= k]
            ranks.append(exact_rank(sub, ncols))
        chosen = [[i for i in picks if self.degrees[i] <= k] for k in range(self.top + 1)]
        if any(len(c) != r for c, r in zip(chosen, ranks)):
            # modular pivots disagreed with exact ranks; redo greedily per degree
            picks, current = [], 0
            for i, row in enumerate(self.rows):
                trial = exact_rank([self.rows[j] for j in picks] + [row], ncols)
                if trial > current:
                    picks.append(i)
                    current = trial
            chosen = [[i for i in picks if self.degrees[i] <= k] for k in range(self.top + 1)]
        self.picks = picks
        self.cum_ranks = [len(c) for c in chosen]

    @property
    def graded_dims(self) -> list[int]:
        out, prev = [], 0
        for r in self.cum_ranks:
            out.append(r - prev)
            prev = r
        return out

    def basis_upto(self, k: int) -> list[dict]:
        return [self.rows[i] for i in self.picks if self.degrees[i] <= k]

    def contains(self, vec: Mapping[tuple, object], k: int) -> bool:
        """Is the weight-mu vector ``vec`` in F^{<=k}?"""
        if not vec:
            return True
        if k < 0:
            return False
        if any(key not in self.colindex for key in vec):
            raise InternalError("vector has components outside this weight space")
        k = min(k, self.top)
        basis = self.basis_upto(k)
        return in_span(basis, self._row(vec), len(self.columns), len(basis))


class FusionProduct:
    """Associated graded of the degree filtration on a tensor of evaluation modules.

    The graded pieces are computed lazily, one weight block at a time.
    Elements of the graded module are ``GradedVector`` lifts; a lift of
    degree k represents zero when it lies in F^{<=k-1}.
    """

    def __init__(self, n: int, m: int, ell: Partition | Sequence[int], params: Sequence | None = None):
        ell = ell if isinstance(ell, Partition) else Partition(ell)
        self.n, self.m = n, m
        self.ell = ell.stripped()
        fundamental_weight(m, n)
        self.p = self.ell.p
        if params is None:
            params = list(range(self.p))
        if len(params) != self.p:
            raise ValueError(f"need {self.p} parameters, got {len(params)}")
        self.params = [_param(c) for c in params]
        self.factors = [build_irrep(n, l, m) for l in self.ell]
        self.space = EvaluationTensor(self.factors, self.params, n)
        self.L1 = self.ell.total
        self.highest_weight = wscale(self.L1, fundamental_weight(m, n))
        self.roots = level_one_roots(n, m)
        self._images: dict[tuple, dict] = {(): self.space.cyclic_vector()}
        self._blocks: dict[Weight, FiltrationBlock] = {}

    # current algebra action on lifts
    def cyclic_vector(self) -> GradedVector:
        return GradedVector(0, self.space.cyclic_vector())

    def act(self, label: Label, s: int, gv: GradedVector) -> GradedVector:
        return GradedVector(gv.degree + s, self.space.act(label, s, gv.vec))

    def is_zero(self, gv: GradedVector) -> bool:
        for mu, part in self.space.split_by_weight(gv.vec).items():
            if not self.block(mu).contains(part, gv.degree - 1):
                return False
        return True

    @property
    def dim(self) -> int:
        return self.space.dim

    def character(self) -> CharacterPoly:
        acc = CharacterPoly.monomial(zero_weight(self.n))
        for f in self.factors:
            acc = acc * f.character()
        return acc

    # monomial images
    def _variable(self, var: tuple[int, int]) -> tuple[Label, int]:
        a = self.roots[var[0]]
        return ("f", a.i, a.j), var[1]

    def image(self, mono: tuple) -> dict:
        got = self._images.get(mono)
        if got is None:
            label, s = self._variable(mono[0])
            got = self.space.act(label, s, self.image(mono[1:]))
            self._images[mono] = got
        return got

    def monomials_at(self, mu: Weight) -> list[tuple]:
        return monomials_of_weight(self.highest_weight, mu, self.roots, max(self.p, 1))

    def block(self, mu: Weight) -> FiltrationBlock:
        mu = tuple(mu)
        blk = self._blocks.get(mu)
        if blk is None:
            monos = self.monomials_at(mu)
            degrees = [sum(s for _, s in mono) for mono in monos]
            images = [self.image(mono) for mono in monos]
            blk = FiltrationBlock(mu, self.space.weight_basis(mu), monos, degrees, images)
            if blk.cum_ranks and blk.cum_ranks[-1] != len(blk.columns):
                raise InternalError(f"filtration does not exhaust the weight space {mu}")
            if not blk.cum_ranks and blk.columns:
                raise InternalError(f"weight {mu} is not reached from the cyclic vector")
            self._blocks[mu] = blk
        return blk

    def dominant_weights(self) -> list[Weight]:
        return sorted((mu for mu in self.character() if is_dominant(mu)), reverse=True)

    def dominant_blocks(self) -> dict[Weight, list[int]]:
        return {mu: self.block(mu).graded_dims for mu in self.dominant_weights()}

    @cached_property
    def graded_char(self) -> GradedCharacterPoly:
        return GradedCharacterPoly.from_dominant_blocks(self.dominant_blocks())

    def top_degree(self) -> int:
        return max(self.graded_char.degrees(), default=0)

    def nilpotency_check(self) -> bool:
        """x (x) t^p kills the graded cyclic vector for every root generator x."""
        v = self.cyclic_vector()
        return all(self.is_zero(self.act(label, self.p, v)) for label in generator_labels(self.n))

    def materialize(self, max_dim: int = 400) -> "ExplicitGradedModule":
        """Explicit graded components and degree-shifting action matrices."""
        if self.dim > max_dim:
            raise ValueError(f"dimension {self.dim} exceeds max_dim={max_dim}")
        weights = sorted(self.character())
        basis: list[tuple[Weight, int, int]] = []  # (weight, degree, row index in block)
        for mu in weights:
            blk = self.block(mu)
            for i in blk.picks:
                basis.append((mu, blk.degrees[i], i))
        basis.sort(key=lambda b: (b[1], b[0], b[2]))
        index = {(mu, i): pos for pos, (mu, _, i) in enumerate(basis)}
        dim = len(basis)
        actions: dict[tuple[Label, int], SparseMatrix] = {}
        for label in generator_labels(self.n):
            for s in range(self.p + 1):
                cols = {}
                for pos, (mu, k, i) in enumerate(basis):
                    blk = self.block(mu)
                    img = self.space.act(label, s, self.image(blk.monomials[i]))
                    if not img:
                        continue
                    nu = wadd(mu, label_weight(label, self.n))
                    tgt = self.block(nu)
                    full = [tgt.picks[j] for j in range(len(tgt.picks)) if tgt.degrees[tgt.picks[j]] <= k + s]
                    coeffs = solve_in_basis([tgt.rows[j] for j in full], tgt._row(img), len(tgt.columns))
                    if coeffs is None:
                        raise InternalError("action leaves the filtration")
                    col = {index[(nu, j)]: c for j, c in zip(full, coeffs)
                           if c and tgt.degrees[j] == k + s}
                    if col:
                        cols[pos] = col
                actions[(label, s)] = SparseMatrix(dim, dim, cols)
        return ExplicitGradedModule(self.n, [b[0] for b in basis], [b[1] for b in basis], actions,
                                    cyclic=index[(self.highest_weight, 0)], top_power=self.p)


class ExplicitGradedModule:
    """Graded module with a weight basis and matrices for x (x) t^s."""

    def __init__(self, n: int, weights: list[Weight], degrees: list[int],
                 actions: dict[tuple[Label, int], SparseMatrix], cyclic: int, top_power: int):
        self.n = n
        self.weights = weights
        self.degrees = degrees
        self.actions = actions
        self.cyclic = cyclic
        self.top_power = top_power

    @property
    def dim(self) -> int:
        return len(self.weights)

    def cyclic_vector(self) -> GradedVector:
        return GradedVector(self.degrees[self.cyclic], {self.cyclic: 1})

    def matrix(self, label: Label, s: int) -> SparseMatrix:
        if s > self.top_power:
            return SparseMatrix.zero(self.dim)
        return self.actions[(label, s)]

    def act(self, label: Label, s: int, gv: GradedVector) -> GradedVector:
        return GradedVector(gv.degree + s, self.matrix(label, s).apply(gv.vec))

    def is_zero(self, gv: GradedVector) -> bool:
        return not gv.vec

    def components(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {}
        for i, k in enumerate(self.degrees):
            out.setdefault(k, []).append(i)
        return out

    def graded_character(self) -> GradedCharacterPoly:
        return GradedCharacterPoly(((w, k), 1) for w, k in zip(self.weights, self.degrees))

    def grading_defects(self) -> list[str]:
        bad = []
        for (label, s), mat in self.actions.items():
            for j, col in mat.cols.items():
                for i in col:
                    if self.degrees[i] != self.degrees[j] + s:
                        bad.append(f"{label} t^{s} maps degree {self.degrees[j]} to {self.degrees[i]}")
                    if self.weights[i] != wadd(self.weights[j], label_weight(label, self.n)):
                        bad.append(f"{label} t^{s} breaks weights")
        return bad

    def generated_dimension(self) -> int:
        """Dimension of the span of the cyclic vector's closure under all x (x) t^s."""
        seen = [{self.cyclic: 1}]
        rank = 1
        frontier = list(seen)
        while frontier:
            nxt = []
            for vec in frontier:
                for mat in self.actions.values():
                    img = mat.apply(vec)
                    if img and not in_span(seen, img, self.dim, rank):
                        seen.append(img)
                        rank += 1
                        nxt.append(img)
            frontier = nxt
        return rank


def fusion_product(n: int, m: int, ell, params: Sequence | None = None) -> FusionProduct:
    return FusionProduct(n, m, ell, params)


def graded_character(G) -> GradedCharacterPoly:
    if isinstance(G, FusionProduct):
        return G.graded_char
    return G.graded_character()


def parameter_independence_check(n: int, m: int, ell, params1: Sequence, params2: Sequence) -> bool:
    return fusion_product(n, m, ell, params1).graded_char == fusion_product(n, m, ell, params2).graded_char
