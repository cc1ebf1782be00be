"""Type-A root and weight combinatorics for sl(n+1).

Weights are plain tuples of integers giving coordinates on the fundamental
weights, so ``(1, 0)`` is the first fundamental weight of sl(3).  Positive
roots are intervals ``[i..j]`` of simple roots, ``alpha_i + ... + alpha_j``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Mapping

Weight = tuple[int, ...]


class RankError(ValueError):
    pass


def _check_rank(n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise RankError(f"rank must be a positive integer, got {n!r}")


def _check_index(i: int, n: int) -> None:
    if not 1 <= i <= n:
        raise ValueError(f"index {i} outside 1..{n}")


def fundamental_weight(i: int, n: int) -> Weight:
    _check_rank(n)
    _check_index(i, n)
    return tuple(1 if k == i else 0 for k in range(1, n + 1))


def zero_weight(n: int) -> Weight:
    return (0,) * n


def wadd(a: Weight, b: Weight) -> Weight:
    return tuple(x + y for x, y in zip(a, b))


def wsub(a: Weight, b: Weight) -> Weight:
    return tuple(x - y for x, y in zip(a, b))


def wscale(c: int, a: Weight) -> Weight:
    return tuple(c * x for x in a)


def is_dominant(mu: Weight) -> bool:
    return all(c >= 0 for c in mu)


@dataclass(frozen=True, order=True)
class Root:
    """The root ``sign * (alpha_i + ... + alpha_j)`` of sl(n+1)."""

    i: int
    j: int
    sign: int = 1

    def __post_init__(self):
        if self.i < 1 or self.j < self.i:
            raise ValueError(f"bad root interval [{self.i}..{self.j}]")
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")

    @property
    def positive(self) -> bool:
        return self.sign == 1

    def __neg__(self) -> "Root":
        return Root(self.i, self.j, -self.sign)

    def support(self) -> range:
        return range(self.i, self.j + 1)

    def weight(self, n: int) -> Weight:
        """The root as a weight, in fundamental-weight coordinates."""
        if self.j > n:
            raise RankError(f"root [{self.i}..{self.j}] does not live in rank {n}")
        w = [0] * n
        w[self.i - 1] += 1
        w[self.j - 1] += 1
        if self.i > 1:
            w[self.i - 2] -= 1
        if self.j < n:
            w[self.j] -= 1
        return wscale(self.sign, tuple(w))

    def __str__(self):
        s = "" if self.positive else "-"
        if self.i == self.j:
            return f"{s}a{self.i}"
        return f"{s}a[{self.i}..{self.j}]"


def simple_root(i: int, n: int) -> Weight:
    return Root(i, i).weight(n)


def highest_root(n: int) -> Root:
    _check_rank(n)
    return Root(1, n)


@lru_cache(maxsize=None)
def positive_roots(n: int) -> tuple[Root, ...]:
    """All n(n+1)/2 positive roots, ordered by (i, j)."""
    _check_rank(n)
    return tuple(Root(i, j) for i in range(1, n + 1) for j in range(i, n + 1))


def all_roots(n: int) -> tuple[Root, ...]:
    pos = positive_roots(n)
    return pos + tuple(-a for a in pos)


def pairing(alpha: Root, lam: Weight) -> int:
    """Coroot pairing <h_alpha, lam>."""
    n = len(lam)
    if alpha.j > n:
        raise RankError(f"root [{alpha.i}..{alpha.j}] paired with a weight of rank {n}")
    return alpha.sign * sum(lam[k - 1] for k in alpha.support())


def root_level(alpha: Root, m: int) -> int:
    """<h_alpha, varpi_m>, which is -1, 0 or 1 in type A."""
    if m < 1:
        raise ValueError(f"index {m} must be positive")
    return alpha.sign if alpha.i <= m <= alpha.j else 0


def roots_at_level(n: int, m: int, a: int) -> tuple[Root, ...]:
    """The set Delta[a] of roots whose pairing with varpi_m equals ``a``."""
    _check_rank(n)
    _check_index(m, n)
    return tuple(r for r in all_roots(n) if root_level(r, m) == a)


def level_one_roots(n: int, m: int) -> tuple[Root, ...]:
    """Delta[1]: positive roots whose support contains m."""
    return roots_at_level(n, m, 1)


def levi_positive_roots(n: int, m: int) -> tuple[Root, ...]:
    """Delta[0] intersected with the positive roots."""
    return tuple(r for r in roots_at_level(n, m, 0) if r.positive)


def is_root(mu: Weight) -> bool:
    n = len(mu)
    return any(a.weight(n) == mu for a in all_roots(n))


def dual_index(i: int, n: int) -> int:
    _check_rank(n)
    _check_index(i, n)
    return n + 1 - i


# -- Weyl group -------------------------------------------------------------

def reflect(i: int, mu: Weight) -> Weight:
    """Simple reflection s_i: mu - <h_i, mu> alpha_i."""
    k = mu[i - 1]
    if k == 0:
        return mu
    w = list(mu)
    w[i - 1] = -k
    if i > 1:
        w[i - 2] += k
    if i < len(mu):
        w[i] += k
    return tuple(w)


def longest_element_word(n: int) -> tuple[int, ...]:
    """Reduced word (s1)(s2 s1)(s3 s2 s1)... of w0, listed left to right."""
    _check_rank(n)
    word: list[int] = []
    for top in range(1, n + 1):
        word.extend(range(top, 0, -1))
    return tuple(word)


def apply_word(word: Iterable[int], mu: Weight) -> Weight:
    """Apply s_{i_1} ... s_{i_N} (rightmost acts first)."""
    for i in reversed(tuple(word)):
        mu = reflect(i, mu)
    return mu


def w0(mu: Weight) -> Weight:
    """Longest element: w0(varpi_i) = -varpi_{n+1-i}."""
    return tuple(-c for c in reversed(mu))


def dominant_conjugate(mu: Weight) -> Weight:
    mu = tuple(mu)
    while True:
        for i, c in enumerate(mu, start=1):
            if c < 0:
                mu = reflect(i, mu)
                break
        else:
            return mu


def weyl_orbit(mu: Weight) -> set[Weight]:
    seen = {tuple(mu)}
    frontier = [tuple(mu)]
    n = len(mu)
    while frontier:
        nxt = []
        for nu in frontier:
            for i in range(1, n + 1):
                r = reflect(i, nu)
                if r not in seen:
                    seen.add(r)
                    nxt.append(r)
        frontier = nxt
    return seen


def root_coordinates(mu: Weight) -> tuple[Fraction, ...]:
    """Coordinates of mu on the simple roots (inverse Cartan matrix)."""
    n = len(mu)
    return tuple(
        sum(Fraction(min(i, j) * (n + 1 - max(i, j)), n + 1) * mu[j - 1]
            for j in range(1, n + 1))
        for i in range(1, n + 1)
    )


def dominates(lam: Weight, mu: Weight) -> bool:
    """Dominance order: lam - mu is a nonnegative integer combination of simple roots."""
    c = root_coordinates(wsub(lam, mu))
    return all(x >= 0 and x.denominator == 1 for x in c)


def height_below(lam: Weight, mu: Weight, m: int) -> int:
    """Coefficient of alpha_m in lam - mu (must be an integer)."""
    c = root_coordinates(wsub(lam, mu))[m - 1]
    if c.denominator != 1:
        raise ValueError(f"{mu} is not in the root-lattice coset of {lam}")
    return int(c)


# -- characters -------------------------------------------------------------

class CharacterPoly(Mapping):
    """Finitely supported integer combination of formal exponentials e^mu."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Weight, int] | Iterable[tuple[Weight, int]] = ()):
        if isinstance(terms, Mapping):
            terms = terms.items()
        acc: dict[Weight, int] = {}
        for mu, c in terms:
            mu = tuple(mu)
            acc[mu] = acc.get(mu, 0) + c
        self._terms = {mu: c for mu, c in acc.items() if c != 0}
        self._hash = None

    @classmethod
    def monomial(cls, mu: Weight, coeff: int = 1) -> "CharacterPoly":
        return cls({tuple(mu): coeff})

    def __getitem__(self, mu):
        return self._terms.get(tuple(mu), 0)

    def __iter__(self):
        return iter(self._terms)

    def __len__(self):
        return len(self._terms)

    def __contains__(self, mu):
        return tuple(mu) in self._terms

    def __eq__(self, other):
        if isinstance(other, CharacterPoly):
            return self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other: "CharacterPoly") -> "CharacterPoly":
        acc = dict(self._terms)
        for mu, c in other._terms.items():
            acc[mu] = acc.get(mu, 0) + c
        return CharacterPoly(acc)

    def __neg__(self):
        return CharacterPoly({mu: -c for mu, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return CharacterPoly({mu: other * c for mu, c in self._terms.items()})
        acc: dict[Weight, int] = {}
        for mu, a in self._terms.items():
            for nu, b in other._terms.items():
                key = wadd(mu, nu)
                acc[key] = acc.get(key, 0) + a * b
        return CharacterPoly(acc)

    __rmul__ = __mul__

    @property
    def rank(self) -> int | None:
        for mu in self._terms:
            return len(mu)
        return None

    def dimension(self) -> int:
        return sum(self._terms.values())

    def reflect(self, i: int) -> "CharacterPoly":
        return CharacterPoly({reflect(i, mu): c for mu, c in self._terms.items()})

    def is_weyl_invariant(self) -> bool:
        n = self.rank
        if n is None:
            return True
        return all(self.reflect(i) == self for i in range(1, n + 1))

    def dominant_part(self) -> dict[Weight, int]:
        return {mu: c for mu, c in self._terms.items() if is_dominant(mu)}

    def to_json(self) -> str:
        return json.dumps(self.to_jsonable(), sort_keys=True)

    def to_jsonable(self) -> list:
        return [[list(mu), c] for mu, c in sorted(self._terms.items())]

    @classmethod
    def from_jsonable(cls, entries) -> "CharacterPoly":
        return cls((tuple(mu), c) for mu, c in entries)

    def __repr__(self):
        if not self._terms:
            return "CharacterPoly(0)"
        body = " + ".join(f"{c}*e^{mu}" for mu, c in sorted(self._terms.items(), reverse=True))
        return f"CharacterPoly({body})"


def one(n: int) -> CharacterPoly:
    return CharacterPoly.monomial(zero_weight(n))


def demazure(i: int, f: CharacterPoly) -> CharacterPoly:
    """Demazure operator (f - e^{-alpha_i} s_i f) / (1 - e^{-alpha_i}).

    Evaluated monomial by monomial from the closed-form weight strings,
    so no division ever occurs.
    """
    n = f.rank
    if n is None:
        return f
    _check_index(i, n)
    alpha = simple_root(i, n)
    acc: dict[Weight, int] = {}
    for mu, c in f.items():
        k = mu[i - 1]
        if k >= 0:
            nu = mu
            for _ in range(k + 1):
                acc[nu] = acc.get(nu, 0) + c
                nu = wsub(nu, alpha)
        elif k <= -2:
            nu = mu
            for _ in range(-k - 1):
                nu = wadd(nu, alpha)
                acc[nu] = acc.get(nu, 0) - c
    return CharacterPoly(acc)


@lru_cache(maxsize=None)
def weyl_character(lam: Weight) -> CharacterPoly:
    """ch V(lam) as D_{i_1} ... D_{i_N} e^lam along the fixed reduced word of w0."""
    lam = tuple(lam)
    if not is_dominant(lam):
        raise ValueError(f"{lam} is not dominant")
    f = CharacterPoly.monomial(lam)
    for i in reversed(longest_element_word(len(lam))):
        f = demazure(i, f)
    return f


def weyl_dimension(lam: Weight) -> int:
    """Weyl dimension formula; an independent check on weyl_character."""
    n = len(lam)
    num = Fraction(1)
    for a in positive_roots(n):
        num *= Fraction(pairing(a, lam) + (a.j - a.i + 1), a.j - a.i + 1)
    assert num.denominator == 1
    return int(num)


def _leading_dominant(weights: Iterable[Weight]) -> Weight:
    dom = [mu for mu in weights if is_dominant(mu)]
    maximal = [mu for mu in dom if not any(nu != mu and dominates(nu, mu) for nu in dom)]
    return max(maximal)


def decompose_character(f: CharacterPoly) -> list[tuple[Weight, int]]:
    """Multiplicities of irreducible characters in a W-invariant character.

    Multiplicities may be negative; the list is in the order the weights
    were peeled off (maximal dominant weight first, lexicographic ties).
    """
    if not f.is_weyl_invariant():
        raise ValueError("character is not Weyl-group invariant")
    out: list[tuple[Weight, int]] = []
    rest = f
    while len(rest):
        lam = _leading_dominant(rest.keys())
        c = rest[lam]
        out.append((lam, c))
        rest = rest - weyl_character(lam) * c
    return out


def orbit_sum(mu: Weight) -> CharacterPoly:
    return CharacterPoly((nu, 1) for nu in weyl_orbit(mu))


def from_dominant_part(dom: Mapping[Weight, int]) -> CharacterPoly:
    """Rebuild a W-invariant character from its dominant weight multiplicities."""
    acc = CharacterPoly()
    for mu, c in dom.items():
        if c:
            acc = acc + orbit_sum(mu) * c
    return acc


def character_product(chars: Iterable[CharacterPoly], n: int) -> CharacterPoly:
    acc = one(n)
    for ch in chars:
        acc = acc * ch
    return acc


def dominant_weights_below(lam: Weight) -> list[Weight]:
    """Dominant weights of V(lam), highest first."""
    return sorted(weyl_character(lam).dominant_part(), reverse=True)


# -- partitions -------------------------------------------------------------

@dataclass(frozen=True)
class Partition:
    """Nonincreasing sequence of nonnegative integers with tail sums L_i."""

    parts: tuple[int, ...]

    def __init__(self, parts: Iterable[int] = ()):
        parts = tuple(int(x) for x in parts)
        if any(x < 0 for x in parts):
            raise ValueError(f"negative part in {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"{parts} is not nonincreasing")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        text = text.strip()
        if not text:
            return cls(())
        return cls(int(x) for x in text.split(","))

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    @property
    def p(self) -> int:
        return len(self.parts)

    @property
    def total(self) -> int:
        return sum(self.parts)

    def stripped(self) -> "Partition":
        return Partition(x for x in self.parts if x)

    def padded(self, length: int) -> "Partition":
        if length < len(self.parts):
            raise ValueError("cannot pad to a shorter length")
        return Partition(self.parts + (0,) * (length - len(self.parts)))

    def tail(self, i: int) -> int:
        """L_i = l_i + ... + l_p for i <= p, and 0 beyond."""
        if i < 1:
            raise ValueError("tail index starts at 1")
        return sum(self.parts[i - 1:])

    def tails(self) -> tuple[int, ...]:
        return tuple(self.tail(i) for i in range(1, len(self.parts) + 1))

    def __str__(self):
        return ",".join(map(str, self.parts))


def partitions(total: int, max_parts: int | None = None, max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of ``total`` with bounded length and largest part."""
    if max_part is None:
        max_part = total

    def rec(rest, cap, slots):
        if rest == 0:
            yield ()
            return
        if slots == 0:
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in rec(rest - first, first, slots - 1):
                yield (first,) + tail

    slots = total if max_parts is None else max_parts
    for parts in rec(total, max_part, slots):
        yield Partition(parts)
