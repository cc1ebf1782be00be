"""The induced module for the parabolic relations, realized on polynomials.

Let p be the parabolic subalgebra attached to varpi_m and n^- its abelian
complement, spanned by the matrix units E_ab with a > m >= b.  Imposing
n_+[t] v = 0, the Cartan relations and (f_gamma (x) C[t]) v = 0 for Levi
roots gamma makes U(g[t]) v the induced module U(g[t]) (x)_{U(p[t])} C v,
where p[t] acts on v by the character

    chi(E_ab (x) t^s) = L_1 if a = b <= m and s = 0, and 0 otherwise.

As a vector space this is the polynomial ring in x_{ab,s} = E_ab (x) t^s.
Elements z of p[t] act on a product by commuting through:

    z x_1 ... x_k v = sum_j x_1 .. [z, x_j] .. x_k v + chi(z) x_1 ... x_k v,

where a bracket landing in p[t] keeps acting on the factors to its right.

The relations with (r,s,k) = (1,s,p) put every x_{ab,s} with s >= p into
the relation module, and the span of monomials containing such a variable
is itself a submodule (t^p g[t] is an ideal).  So the quotient is the
polynomial ring in the variables with s < p, on which z (x) t^s with s >= p
acts as zero.  Everything here uses the gl(n+1) matrix units; the identity
matrix acts by a scalar, so nothing changes for sl(n+1).
"""
from __future__ import annotations

from fractions import Fraction
from typing import Mapping

from ..lie_core import Weight, level_one_roots, wadd, wscale
from ..modules import Label

Unit = tuple[int, int, int]  # (a, b, s): E_ab (x) t^s


def label_units(label: Label) -> list[tuple[int, int, int]]:
    """A root generator as a combination of matrix units, as (coeff, a, b)."""
    kind, i, j = label
    if kind == "e":
        return [(1, i, j + 1)]
    if kind == "f":
        return [(1, j + 1, i)]
    return [(1, i, i), (-1, j + 1, j + 1)]


class InducedSpace:
    """Polynomials in x_{ab,s} (a > m >= b, 0 <= s < p) with the truncated g[t]-action."""

    def __init__(self, n: int, m: int, L1: int, p: int):
        self.n, self.m, self.L1, self.p = n, m, L1, p
        self.roots = level_one_roots(n, m)
        # root [i..j] of level one <-> f = E_{j+1, i}
        self.root_of_pair = {(r.j + 1, r.i): idx for idx, r in enumerate(self.roots)}
        self.pair_of_root = [(r.j + 1, r.i) for r in self.roots]
        self.highest_weight = wscale(L1, tuple(1 if k == m else 0 for k in range(1, n + 1)))
        self._memo: dict[tuple[Unit, tuple], dict[tuple, int]] = {}
        self._var_weights = [wscale(-1, r.weight(n)) for r in self.roots]
        self._mono_weights: dict[tuple, Weight] = {}

    # -- variables ----------------------------------------------------------
    def is_negative(self, a: int, b: int) -> bool:
        return a > self.m >= b

    def variable(self, a: int, b: int, s: int) -> tuple[int, int]:
        return (self.root_of_pair[(a, b)], s)

    def variable_unit(self, var: tuple[int, int]) -> Unit:
        a, b = self.pair_of_root[var[0]]
        return (a, b, var[1])

    def variable_weight(self, var: tuple[int, int]) -> Weight:
        return self._var_weights[var[0]]

    def monomial_weight(self, mono: tuple) -> Weight:
        w = self._mono_weights.get(mono)
        if w is None:
            w = self.highest_weight
            for var in mono:
                w = wadd(w, self._var_weights[var[0]])
            self._mono_weights[mono] = w
        return w

    def chi(self, a: int, b: int, s: int) -> int:
        return self.L1 if (a == b and s == 0 and a <= self.m) else 0

    # -- action -------------------------------------------------------------
    def act_unit(self, z: Unit, mono: tuple) -> dict[tuple, int]:
        """E_ab (x) t^s applied to the monomial ``mono`` (times v); integer coefficients."""
        a, b, s = z
        if s >= self.p:
            return {}
        if self.is_negative(a, b):
            return {tuple(sorted(mono + (self.variable(a, b, s),))): 1}
        key = (z, mono)
        got = self._memo.get(key)
        if got is not None:
            return got
        out: dict[tuple, int] = {}
        c = self.chi(a, b, s)
        if c:
            out[mono] = c
        for pos, var in enumerate(mono):
            first = pos == 0 or mono[pos - 1] != var
            if self._needs_suffix(z, var):
                mult = 1
            elif first:
                # the bracket is a variable, so every copy of var gives the same term
                mult = mono.count(var)
            else:
                continue
            for mono2, c2 in self._bracket_terms(z, mono, pos):
                out[mono2] = out.get(mono2, 0) + mult * c2
        out = {k: v for k, v in out.items() if v}
        self._memo[key] = out
        return out

    def _needs_suffix(self, z: Unit, var) -> bool:
        """Does [z, x_var] lie in p[t], so that the result depends on the factors to its right?"""
        a, b, s = z
        c, d, s2 = self.variable_unit(var)
        if b == c and not self.is_negative(a, d):
            return True
        if d == a and not self.is_negative(c, b):
            return True
        return False

    def _bracket_terms(self, z: Unit, mono: tuple, pos: int):
        a, b, s = z
        c, d, s2 = self.variable_unit(mono[pos])
        prefix, suffix = mono[:pos], mono[pos + 1:]
        terms = []
        # [E_ab, E_cd] = delta_bc E_ad - delta_da E_cb
        if b == c:
            terms.append((1, (a, d, s + s2)))
        if d == a:
            terms.append((-1, (c, b, s + s2)))
        for coef, w in terms:
            for mono2, c2 in self.act_unit(w, suffix).items():
                yield tuple(sorted(prefix + mono2)), coef * c2

    def act(self, label: Label, s: int, vec: Mapping[tuple, object]) -> dict[tuple, object]:
        """Root generator ``label`` (x) t^s on a polynomial."""
        out: dict[tuple, object] = {}
        for coef, a, b in label_units(label):
            for mono, c in vec.items():
                for mono2, c2 in self.act_unit((a, b, s), mono).items():
                    out[mono2] = out.get(mono2, 0) + coef * c * c2
        return {k: _clean(v) for k, v in out.items() if v}

    def cyclic_vector(self) -> dict[tuple, int]:
        return {(): 1}

    def multiply(self, vec: Mapping[tuple, object], var) -> dict[tuple, object]:
        return {tuple(sorted(mono + (var,))): c for mono, c in vec.items()}


def _clean(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c
