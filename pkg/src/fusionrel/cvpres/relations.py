"""Relation elements of U(g[t]) and the defining relation set of the presented module.

A word is a tuple of letters, the leftmost letter acting last.  A letter
is a generator label (see ``modules``), a t-degree and a divided power
exponent, so ``Letter(('f', 1, 2), 1, 3)`` is (f_{a1+a2} (x) t)^{(3)}.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Iterator, Sequence

from ..lie_core import Partition, level_one_roots, levi_positive_roots, positive_roots
from ..modules import Label
from .combinatorics import FROM_K, enum_exponent_sequences

ANNIHILATION = "annihilation"
CARTAN = "cartan"
LEVI = "levi"
POWER = "power"
RAW = "raw"
GARLAND = "garland"
FAMILIES = (ANNIHILATION, CARTAN, LEVI, POWER, RAW, GARLAND)


class CapExceeded(RuntimeError):
    """A cap is too small for a sound or complete computation."""

    def __init__(self, message: str, diagnostics: dict | None = None):
        super().__init__(message)
        self.diagnostics = diagnostics or {}


@dataclass(frozen=True, order=True)
class Letter:
    gen: Label
    s: int = 0
    b: int = 1

    def __str__(self):
        kind, i, j = self.gen
        root = f"{i}" if i == j else f"{i}..{j}"
        t = "" if self.s == 0 else ("(x)t" if self.s == 1 else f"(x)t^{self.s}")
        core = f"{kind}[{root}]{t}"
        if self.b == 1:
            return core
        return f"({core})^({self.b})"


Word = tuple[Letter, ...]


@dataclass(frozen=True)
class RelationElement:
    """Integer/rational combination of words, tagged with its family and indices."""

    terms: tuple[tuple[Fraction, Word], ...]
    family: str
    data: tuple = field(default=())

    @property
    def degree(self) -> int:
        degs = {sum(l.s * l.b for l in w) for _, w in self.terms}
        if len(degs) > 1:
            raise ValueError("relation is not t-homogeneous")
        return degs.pop() if degs else 0

    @property
    def info(self) -> dict:
        return dict(self.data)

    def __str__(self):
        parts = []
        for c, w in self.terms:
            body = " ".join(map(str, w)) or "1"
            parts.append(f"{c}*{body}" if c != 1 else body)
        return f"[{self.family}] " + " + ".join(parts)


def _rel(terms, family, **data) -> RelationElement:
    return RelationElement(tuple((Fraction(c), tuple(w)) for c, w in terms), family,
                           tuple(sorted(data.items())))


def raw_relation(alpha, r: int, s: int) -> RelationElement:
    """(e_alpha (x) t)^s f_alpha^{r+s}, written with divided powers."""
    e = ("e", alpha.i, alpha.j)
    f = ("f", alpha.i, alpha.j)
    word = []
    if s:
        word.append(Letter(e, 1, s))
    word.append(Letter(f, 0, r + s))
    return _rel([(factorial(s) * factorial(r + s), word)], RAW, root=(alpha.i, alpha.j), r=r, s=s)


def garland_relation(alpha, r: int, s: int, k: int) -> RelationElement:
    """_k f_alpha(r,s): sum over _kS(r,s) of products of divided powers."""
    f = ("f", alpha.i, alpha.j)
    terms = []
    for seq in enum_exponent_sequences(r, s, FROM_K, k):
        word = [Letter(f, j, seq[j]) for j in range(k, s + 1) if seq[j]]
        terms.append((1, word))
    return _rel(terms, GARLAND, root=(alpha.i, alpha.j), r=r, s=s, k=k)


def divided_raw_relation(alpha, r: int, s: int) -> RelationElement:
    """(e_alpha (x) t)^{(s)} f_alpha^{(r+s)}."""
    e = ("e", alpha.i, alpha.j)
    f = ("f", alpha.i, alpha.j)
    word = ([Letter(e, 1, s)] if s else []) + [Letter(f, 0, r + s)]
    return _rel([(1, word)], RAW, root=(alpha.i, alpha.j), r=r, s=s)


def full_garland(alpha, r: int, s: int) -> RelationElement:
    """f_alpha(r,s) = sum over S(r,s)."""
    f = ("f", alpha.i, alpha.j)
    terms = []
    for seq in enum_exponent_sequences(r, s):
        terms.append((1, [Letter(f, j, seq[j]) for j in range(0, s + 1) if seq[j]]))
    return _rel(terms, GARLAND, root=(alpha.i, alpha.j), r=r, s=s, k=0)


# -- index sets ---------------------------------------------------------------

@dataclass(frozen=True, order=True)
class TqIndex:
    r: int
    s: int
    k: int
    q: int = 1

    def __post_init__(self):
        if min(self.r, self.s, self.k) <= 0:
            raise ValueError("r, s, k must be positive")

    def admissible(self, ell: Partition) -> bool:
        return self.r + self.s >= 1 + self.k * self.r + _tail(ell, self.k + self.q)


def _tail(ell: Partition, i: int) -> int:
    return ell.tail(i) if i <= ell.p else 0


def tq_indices(ell: Partition, q: int, max_total: int) -> Iterator[TqIndex]:
    """Members of T_q with r + s <= max_total."""
    for total in range(2, max_total + 1):
        for r in range(1, total):
            s = total - r
            for k in range(1, (total - 1) // r + 1):
                idx = TqIndex(r, s, k, q)
                if idx.admissible(ell):
                    yield idx


def raw_pairs(ell: Partition, max_total: int) -> list[tuple[int, int]]:
    """(r,s) with r,s > 0, r+s <= max_total and (r,s,k) in T_1 for some k."""
    return sorted({(t.r, t.s) for t in tq_indices(ell, 1, max_total)})


# -- caps and the relation set -----------------------------------------------

@dataclass(frozen=True)
class Caps:
    """Bounds for the finite part of the relation family that is used.

    degree:    largest t-degree of the current variables and operators
               (None means p - 1, the smallest sound choice).
    relations: bound R on r + s in the raw and Garland families
               (None means 2 (L_1 + p) + 2).
    word:      largest number of f-variables in a monomial retained by the
               closure (None means no bound beyond the weight hull).
    """

    degree: int | None = None
    relations: int | None = None
    word: int | None = None

    def resolved(self, ell: Partition) -> "Caps":
        ell = ell.stripped()
        p, L1 = ell.p, ell.total
        return Caps(
            degree=max(p - 1, 0) if self.degree is None else self.degree,
            relations=2 * (L1 + p) + 2 if self.relations is None else self.relations,
            word=self.word,
        )

    def to_jsonable(self) -> dict:
        return {"degree": self.degree, "relations": self.relations, "word": self.word}


def relation_set(n: int, m: int, ell: Partition | Sequence[int], caps: Caps | None = None) -> list[RelationElement]:
    """The defining relations, with the infinite families cut off by ``caps``."""
    ell = (ell if isinstance(ell, Partition) else Partition(ell)).stripped()
    caps = (caps or Caps()).resolved(ell)
    p, L1 = ell.p, ell.total
    R = caps.relations
    if p >= 1 and R < p + 1:
        raise CapExceeded(
            f"relation cap R={R} excludes (r,s,k)=(1,p,{p}); need R >= {p + 1}",
            {"relations": R, "required": p + 1})
    D = max(caps.degree, p)
    out: list[RelationElement] = []
    for a in positive_roots(n):
        for s in range(D + 1):
            out.append(_rel([(1, [Letter(("e", a.i, a.j), s)])], ANNIHILATION, root=(a.i, a.j), s=s))
    for i in range(1, n + 1):
        for s in range(D + 1):
            const = L1 if (s == 0 and i == m) else 0
            terms = [(1, [Letter(("h", i, i), s)])]
            if const:
                terms.append((-const, []))
            out.append(_rel(terms, CARTAN, index=i, s=s))
    for g in levi_positive_roots(n, m):
        for s in range(D + 1):
            out.append(_rel([(1, [Letter(("f", g.i, g.j), s)])], LEVI, root=(g.i, g.j), s=s))
    for a in level_one_roots(n, m):
        out.append(_rel([(factorial(L1 + 1), [Letter(("f", a.i, a.j), 0, L1 + 1)])], POWER,
                        root=(a.i, a.j)))
    for a in level_one_roots(n, m):
        for r, s in raw_pairs(ell, R):
            out.append(raw_relation(a, r, s))
        for t in tq_indices(ell, 1, R):
            out.append(garland_relation(a, t.r, t.s, t.k))
    return out


# -- evaluation ---------------------------------------------------------------

def _add(x, y):
    if hasattr(x, "degree") and hasattr(x, "vec"):
        return x + y
    out = dict(x)
    for k, a in y.items():
        out[k] = out.get(k, 0) + a
    return {k: a for k, a in out.items() if a}


def _scale(x, c):
    if hasattr(x, "degree") and hasattr(x, "vec"):
        return x.scale(c)
    return {k: a * c for k, a in x.items() if a * c}


def _zero_like(v):
    if hasattr(v, "degree") and hasattr(v, "vec"):
        return type(v)(v.degree, {})
    return {}


def _act(G, letter: Letter, v):
    for _ in range(letter.b):
        v = G.act(letter.gen, letter.s, v)
    if letter.b > 1:
        v = _scale(v, Fraction(1, factorial(letter.b)))
    return v


def apply_word(word: Word, G, v):
    for letter in reversed(word):
        v = _act(G, letter, v)
    return v


def apply_operator(R: RelationElement, G, v):
    """Evaluate R on v; G supplies ``act(label, s, vector)``."""
    total = None
    for c, word in R.terms:
        img = _scale(apply_word(word, G, v), c)
        total = img if total is None else _add(total, img)
    if total is None:
        return _zero_like(v)
    return total


def annihilates(R: RelationElement, G, v) -> bool:
    """Does R kill v?  G must also supply ``is_zero``."""
    img = apply_operator(R, G, v)
    if hasattr(img, "degree") and not img.vec:
        return True
    return G.is_zero(img)
