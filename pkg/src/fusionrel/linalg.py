"""Exact and modular linear algebra helpers built on python-flint.

Vectors are sparse dicts ``{column: coefficient}`` with int or Fraction
coefficients.  Exact ranks go through ``fmpz_mat`` after clearing
denominators row by row.  ``Subspace`` keeps a reduced echelon basis over
Z/p or over Q for the closure computations.  Reducing integer vectors
modulo p can only lower their rank, so a modular rank is a lower bound
for the rank over Q of the same vectors.
"""
from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, Mapping, Sequence

import flint

PRIME = 2**61 - 1

Vector = Mapping[int, "int | Fraction"]


def clear_denominators(vec: Vector) -> dict[int, int]:
    den = 1
    for c in vec.values():
        if isinstance(c, Fraction):
            den = lcm(den, c.denominator)
    return {k: int(c * den) for k, c in vec.items() if c}


def _fmpz_rows(vectors: Sequence[Vector], ncols: int) -> flint.fmpz_mat:
    m = flint.fmpz_mat(len(vectors), ncols)
    for r, vec in enumerate(vectors):
        for col, c in clear_denominators(vec).items():
            m[r, col] = c
    return m


def exact_rank(vectors: Sequence[Vector], ncols: int) -> int:
    if not vectors or ncols == 0:
        return 0
    return _fmpz_rows(vectors, ncols).rank()


def in_span(basis: Sequence[Vector], w: Vector, ncols: int, basis_rank: int | None = None) -> bool:
    """Exact test that ``w`` lies in the span of ``basis``."""
    if not any(w.values()):
        return True
    if basis_rank is None:
        basis_rank = exact_rank(basis, ncols)
    return exact_rank(list(basis) + [w], ncols) == basis_rank


def independent_subset(vectors: Sequence[Vector], ncols: int) -> list[int]:
    """Indices of a maximal independent subset, greedily in the given order.

    Pivots are found modulo a large prime and then confirmed by an exact
    rank; on disagreement the exact greedy scan is used.
    """
    if not vectors:
        return []
    mat = flint.nmod_mat(ncols, len(vectors), PRIME)
    for r, vec in enumerate(vectors):
        for col, c in vec.items():
            mat[col, r] = reduce_mod(c)
    red, rank = mat.rref()
    picks = _pivots(red, rank, len(vectors))
    if exact_rank([vectors[i] for i in picks], ncols) == len(picks) == exact_rank(vectors, ncols):
        return picks
    picks, current = [], 0
    for i in range(len(vectors)):
        trial = exact_rank([vectors[j] for j in picks] + [vectors[i]], ncols)
        if trial > current:
            picks.append(i)
            current = trial
    return picks


def reduce_mod(c, p: int = PRIME) -> int:
    if isinstance(c, Fraction):
        return c.numerator % p * pow(c.denominator, -1, p) % p
    return int(c) % p


def solve_in_basis(basis: Sequence[Vector], w: Vector, ncols: int) -> list[Fraction] | None:
    """Coefficients a with sum a_i basis_i = w, or None if w is outside the span.

    ``basis`` must be linearly independent.
    """
    k = len(basis)
    if k == 0:
        return [] if not any(w.values()) else None
    aug = flint.fmpq_mat(ncols, k + 1)
    for i, vec in enumerate(basis):
        for col, c in vec.items():
            aug[col, i] = _to_fmpq(c)
    for col, c in w.items():
        aug[col, k] = _to_fmpq(c)
    red, rank = aug.rref()
    if rank > k:
        return None
    out = [Fraction(0)] * k
    for r in range(rank):
        row = [red[r, c] for c in range(k + 1)]
        lead = next(c for c in range(k + 1) if row[c] != 0)
        if lead == k:
            return None
        q = row[k]
        out[lead] = Fraction(int(q.p), int(q.q))
    return out


def _to_fmpq(c) -> flint.fmpq:
    if isinstance(c, Fraction):
        return flint.fmpq(c.numerator, c.denominator)
    return flint.fmpq(int(c))


class Field:
    """Matrix backend: integers modulo a prime, or exact rationals."""

    def __init__(self, modulus: int | None = PRIME):
        self.modulus = modulus

    @property
    def exact(self) -> bool:
        return self.modulus is None

    def convert(self, c):
        if self.modulus is None:
            return _to_fmpq(c)
        return reduce_mod(c, self.modulus)

    def matrix(self, nrows: int, ncols: int, entries: list | None = None):
        if self.modulus is None:
            if entries is None:
                return flint.fmpq_mat(nrows, ncols)
            return flint.fmpq_mat(nrows, ncols, entries)
        if entries is None:
            return flint.nmod_mat(nrows, ncols, self.modulus)
        return flint.nmod_mat(nrows, ncols, entries, self.modulus)

    def entries(self, mat) -> list:
        if self.modulus is None:
            return list(mat.entries())
        return [int(x) for x in mat.entries()]

    def from_sparse(self, rows: Sequence[Mapping[int, object]], ncols: int):
        mat = self.matrix(len(rows), ncols)
        for r, vec in enumerate(rows):
            for col, c in vec.items():
                mat[r, col] = self.convert(c)
        return mat

    def _selector(self, nrows: int, ncols: int, pairs: Iterable[tuple[int, int]]):
        sel = self.matrix(nrows, ncols)
        for i, j in pairs:
            sel[i, j] = 1
        return sel

    # Stacking and row selection multiply by 0/1 selector matrices, which
    # keeps the entries inside flint instead of round-tripping through Python.
    def stack(self, mats: Sequence) -> object:
        mats = [a for a in mats if a is not None and a.nrows()]
        if not mats:
            return None
        if len(mats) == 1:
            return mats[0]
        nc = mats[0].ncols()
        total = sum(a.nrows() for a in mats)
        out = None
        offset = 0
        for a in mats:
            if a.ncols() != nc:
                raise ValueError("column mismatch")
            k = a.nrows()
            part = self._selector(total, k, ((offset + i, i) for i in range(k))) * a
            out = part if out is None else out + part
            offset += k
        return out

    def take_rows(self, mat, rows: Iterable[int]):
        rows = list(rows)
        if rows == list(range(mat.nrows())):
            return mat
        return self._selector(len(rows), mat.nrows(), enumerate(rows)) * mat

    def is_nonzero(self, x) -> bool:
        return x != 0


MODULAR = Field(PRIME)
RATIONAL = Field(None)


class Subspace:
    """Subspace of F^N kept as a reduced row echelon matrix over ``field``."""

    __slots__ = ("ncols", "basis", "pivots", "field")

    def __init__(self, ncols: int, field: Field = MODULAR):
        self.ncols = ncols
        self.field = field
        self.basis = None
        self.pivots: list[int] = []

    @property
    def dim(self) -> int:
        return len(self.pivots)

    def add(self, rows):
        """Adjoin ``rows``; return rows spanning a complement of the old span, or None."""
        if rows is None or rows.nrows() == 0 or self.dim == self.ncols:
            return None
        stacked = rows if self.basis is None else self.field.stack([self.basis, rows])
        red, rank = stacked.rref()
        if rank == self.dim:
            return None
        pivots = _pivots(red, rank, self.ncols)
        old = set(self.pivots)
        fresh = [r for r, c in enumerate(pivots) if c not in old]
        self.basis = self.field.take_rows(red, range(rank))
        self.pivots = pivots
        return self.field.take_rows(red, fresh)

    def reduce(self, vec: Mapping[int, object]) -> dict[int, object]:
        """Normal form of a sparse vector modulo the subspace (zero at pivots)."""
        out = {c: self.field.convert(a) for c, a in vec.items() if a}
        if self.basis is None:
            return out
        nc = self.ncols
        ent = self.basis.entries()
        for r, piv in enumerate(self.pivots):
            c = out.get(piv)
            if c is None or c == 0:
                continue
            row = ent[r * nc:(r + 1) * nc]
            for j in range(nc):
                if row[j] != 0:
                    out[j] = out.get(j, 0) - c * row[j]
        return {j: a for j, a in out.items() if a != 0}


def _pivots(red, rank: int, ncols: int) -> list[int]:
    pivots = []
    col = 0
    for r in range(rank):
        while col < ncols and red[r, col] == 0:
            col += 1
        pivots.append(col)
        col += 1
    return pivots
