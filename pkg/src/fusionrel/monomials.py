"""Commuting monomials in the abelian negative radical attached to varpi_m.

A variable is a pair ``(root_index, s)`` standing for f_alpha (x) t^s with
alpha the root of that index among the level-one roots.  Monomials are
sorted tuples of variables.
"""
from __future__ import annotations

import itertools
from typing import Iterable, Mapping, Sequence

from .lie_core import Root, Weight, root_coordinates, wsub


def root_multisets(target: tuple[int, ...], roots: Sequence[Root]) -> list[tuple[int, ...]]:
    """All multisets (as sorted index tuples) of roots summing to ``target`` in root coordinates."""
    out = []
    n = len(target)

    def rec(start, rest, acc):
        if not any(rest):
            out.append(tuple(acc))
            return
        for idx in range(start, len(roots)):
            a = roots[idx]
            if all(rest[k - 1] > 0 for k in a.support()):
                new = list(rest)
                for k in a.support():
                    new[k - 1] -= 1
                rec(idx, new, acc + [idx])

    if all(x >= 0 for x in target) and len(target) == n:
        rec(0, list(target), [])
    return out


def degree_assignments(counts: Mapping[int, int], p: int) -> Iterable[tuple[tuple[int, int], ...]]:
    """Distribute t-degrees 0..p-1 over a root multiset; yields sorted variable tuples."""
    per_root = []
    for idx in sorted(counts):
        per_root.append([tuple((idx, s) for s in combo)
                         for combo in itertools.combinations_with_replacement(range(p), counts[idx])])
    for parts in itertools.product(*per_root):
        yield tuple(v for part in parts for v in part)


def monomials_of_weight(top: Weight, mu: Weight, roots: Sequence[Root], p: int) -> list[tuple]:
    """Monomials with t-degrees below p whose application to a vector of weight ``top`` has weight ``mu``."""
    target = root_coordinates(wsub(top, mu))
    if any(x.denominator != 1 for x in target):
        return []
    target = tuple(int(x) for x in target)
    out = []
    for ms in root_multisets(target, roots):
        counts: dict[int, int] = {}
        for idx in ms:
            counts[idx] = counts.get(idx, 0) + 1
        out.extend(degree_assignments(counts, p))
    return out


def monomial_degree(mono: tuple) -> int:
    return sum(s for _, s in mono)
