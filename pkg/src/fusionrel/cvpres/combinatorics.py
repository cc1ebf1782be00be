"""Exponent sequences and the Garland polynomials x(r,s), x(r,s)_k, _k x(r,s).

Polynomials here live in commuting indeterminates X_0, X_1, ... standing
for x (x) t^j; a monomial is a tuple of exponents and coefficients are
exact Fractions.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterator

FULL, BELOW_K, FROM_K = "full", "below_k", "from_k"


class NotApplicable(ValueError):
    """Raised when a check's hypotheses do not hold (the check is neither true nor false)."""


@dataclass(frozen=True)
class ExponentSequence:
    """Finitely supported (b_0, b_1, ...) stored without trailing zeros."""

    b: tuple[int, ...]

    def __init__(self, b=()):
        b = tuple(int(x) for x in b)
        if any(x < 0 for x in b):
            raise ValueError("exponents are nonnegative")
        while b and b[-1] == 0:
            b = b[:-1]
        object.__setattr__(self, "b", b)

    def __getitem__(self, j: int) -> int:
        return self.b[j] if j < len(self.b) else 0

    @property
    def r(self) -> int:
        return sum(self.b)

    @property
    def s(self) -> int:
        return sum(j * x for j, x in enumerate(self.b))

    def support(self) -> list[int]:
        return [j for j, x in enumerate(self.b) if x]

    def weight(self) -> Fraction:
        """Product of 1/b_j!, the divided-power normalisation."""
        den = 1
        for x in self.b:
            den *= factorial(x)
        return Fraction(1, den)

    def __str__(self):
        return "(" + ",".join(f"b{j}={x}" for j, x in enumerate(self.b) if x) + ")"


def _sequences(r: int, s: int, lo: int, hi: int) -> Iterator[tuple[int, ...]]:
    """Exponent vectors on positions lo..hi (inclusive) with sum r and weighted sum s."""
    if r == 0:
        if s == 0:
            yield ()
        return
    if lo > hi:
        return
    # b_lo copies at position lo, the rest strictly later
    for first in range(r, -1, -1):
        rest_s = s - lo * first
        if rest_s < 0:
            continue
        rest_r = r - first
        if rest_r and rest_s < (lo + 1) * rest_r:
            continue
        for tail in _sequences(rest_r, rest_s, lo + 1, hi):
            yield (first,) + tail


def enum_exponent_sequences(r: int, s: int, mode: str = FULL, k: int = 0) -> list[ExponentSequence]:
    """S(r,s), S(r,s)_k (b_j = 0 for j >= k) or _kS(r,s) (b_j = 0 for j < k)."""
    if r < 0 or s < 0:
        raise ValueError("r and s must be nonnegative")
    if mode == FULL:
        lo, hi = 0, s
    elif mode == BELOW_K:
        lo, hi = 0, min(s, k - 1)
    elif mode == FROM_K:
        lo, hi = k, s
    else:
        raise ValueError(f"unknown mode {mode!r}")
    out = []
    for vec in _sequences(r, s, lo, hi):
        out.append(ExponentSequence((0,) * lo + vec))
    return sorted(set(out), key=lambda e: e.b)


# -- symbolic Garland polynomials ------------------------------------------------

Poly = dict  # exponent tuple -> Fraction


def _normal(b: tuple[int, ...]) -> tuple[int, ...]:
    while b and b[-1] == 0:
        b = b[:-1]
    return b


def garland_poly(r: int, s: int, mode: str = FULL, k: int = 0) -> Poly:
    """x(r,s) (or a truncated variant) as a polynomial in X_0, X_1, ..."""
    return {seq.b: seq.weight() for seq in enum_exponent_sequences(r, s, mode, k)}


def poly_mul(a: Poly, b: Poly) -> Poly:
    out: Poly = {}
    for ma, ca in a.items():
        for mb, cb in b.items():
            w = max(len(ma), len(mb))
            key = _normal(tuple((ma[i] if i < len(ma) else 0) + (mb[i] if i < len(mb) else 0)
                                for i in range(w)))
            out[key] = out.get(key, 0) + ca * cb
    return {m: c for m, c in out.items() if c}


def poly_add(a: Poly, b: Poly) -> Poly:
    out = dict(a)
    for m, c in b.items():
        out[m] = out.get(m, 0) + c
    return {m: c for m, c in out.items() if c}


def cv_recursion_sides(r: int, s: int, k: int, K: int) -> tuple[Poly, Poly]:
    """Both sides of x(r,s) = _kx(r,s) + sum x(r-r', s-s')_k * _kx(r', s')."""
    lhs = garland_poly(r, s)
    rhs = garland_poly(r, s, FROM_K, k)
    for rp in range(r):
        for sp in range(s + 1):
            if rp + sp >= k * rp + K:
                term = poly_mul(garland_poly(r - rp, s - sp, BELOW_K, k), garland_poly(rp, sp, FROM_K, k))
                rhs = poly_add(rhs, term)
    return lhs, rhs


def check_cv_recursion(r: int, s: int, k: int, K: int) -> bool:
    """Exact symbolic check of the splitting identity for x(r,s) at cut k."""
    if not (r > 0 and s > 0 and k > 0 and K >= 0 and r + s >= k * r + K):
        raise NotApplicable(f"(r,s,k,K)=({r},{s},{k},{K}) violates r,s,k>0, K>=0, r+s>=kr+K")
    lhs, rhs = cv_recursion_sides(r, s, k, K)
    return lhs == rhs


def admissible_recursion_indices(max_total: int) -> Iterator[tuple[int, int, int, int]]:
    """All (r,s,k,K) with r,s,k > 0, K >= 0, r+s <= max_total and r+s >= kr+K."""
    for total in range(2, max_total + 1):
        for r in range(1, total):
            s = total - r
            for k in range(1, total // r + 1):
                for K in range(0, total - k * r + 1):
                    yield r, s, k, K
