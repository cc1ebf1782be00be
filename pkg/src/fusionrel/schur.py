"""Tail-sum dominance of partitions, Schur positivity and surjection witnesses.

For partitions l, r of the same total, l dominates r when every tail sum
of l is at least the matching tail sum of r.  Then the product of the
characters ch V(l_i varpi_m) minus that for r should decompose with
nonnegative multiplicities, and the defining relations attached to l
should annihilate the cyclic vector of the fusion product for r.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .cvpres.relations import Caps
from .cvpres.verify import surjection_witness as _failing_relations
from .fusion import FusionProduct
from .lie_core import (CharacterPoly, Partition, decompose_character, fundamental_weight,
                       partitions, weyl_character, wscale, zero_weight)


class TotalMismatch(ValueError):
    """The two partitions do not have the same total."""


def _as_partition(x) -> Partition:
    return x if isinstance(x, Partition) else Partition(x)


def _common_length(ell: Partition, r: Partition) -> int:
    return max(len(ell), len(r))


def dominates(ell, r) -> bool:
    """Tail sums of ``ell`` bound those of ``r`` from above (after zero padding)."""
    ell, r = _as_partition(ell), _as_partition(r)
    if ell.total != r.total:
        raise TotalMismatch(f"totals differ: {ell.total} != {r.total}")
    k = _common_length(ell, r)
    a, b = ell.padded(k), r.padded(k)
    return all(a.tail(i) >= b.tail(i) for i in range(1, k + 1))


@dataclass(frozen=True)
class DominancePair:
    m: int
    ell: Partition
    r: Partition

    def __init__(self, m: int, ell, r):
        ell, r = _as_partition(ell), _as_partition(r)
        if ell.total != r.total:
            raise TotalMismatch(f"totals differ: {ell.total} != {r.total}")
        k = _common_length(ell, r)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "ell", ell.padded(k))
        object.__setattr__(self, "r", r.padded(k))

    @property
    def dominant(self) -> bool:
        return dominates(self.ell, self.r)


def product_character(n: int, m: int, ell: Partition) -> CharacterPoly:
    acc = CharacterPoly.monomial(zero_weight(n))
    for part in ell:
        if part:
            acc = acc * weyl_character(wscale(part, fundamental_weight(m, n)))
    return acc


@dataclass
class SchurVerdict:
    n: int
    pair: DominancePair
    dominates: bool
    schur_positive: bool | None
    witness: bool | None
    decomposition: list[tuple[tuple[int, ...], int]] | None

    @property
    def applicable(self) -> bool:
        return self.dominates

    @property
    def passed(self) -> bool | None:
        """Positivity and witness both hold (None when the pair is not dominant)."""
        if not self.dominates:
            return None
        return bool(self.schur_positive) and self.witness is not False

    def to_jsonable(self) -> dict:
        return {
            "n": self.n,
            "m": self.pair.m,
            "ell": list(self.pair.ell),
            "r": list(self.pair.r),
            "dominates": self.dominates,
            "applicable": self.applicable,
            "schur_positive": self.schur_positive,
            "witness": self.witness,
            "decomposition": None if self.decomposition is None
            else [[list(mu), c] for mu, c in self.decomposition],
        }


def character_difference(n: int, pair: DominancePair) -> list[tuple[tuple[int, ...], int]]:
    diff = product_character(n, pair.m, pair.ell) - product_character(n, pair.m, pair.r)
    return decompose_character(diff)


def schur_positivity_check(n: int, m: int, pair: DominancePair | tuple, *, diagnostic: bool = False,
                           witness: bool = False, caps: Caps | None = None) -> SchurVerdict:
    """Decompose prod ch V(l_i varpi_m) - prod ch V(r_i varpi_m).

    For a non-dominant pair the verdict is not applicable and nothing is
    computed unless ``diagnostic`` is set, in which case the signed
    decomposition (and, with ``witness``, the relation check) is reported
    as evidence only.
    """
    if not isinstance(pair, DominancePair):
        pair = DominancePair(m, *pair)
    if pair.m != m:
        raise ValueError("pair was built for a different m")
    dom = pair.dominant
    if not dom and not diagnostic:
        return SchurVerdict(n, pair, False, None, None, None)
    dec = character_difference(n, pair)
    positive = all(c >= 0 for _, c in dec)
    wit = surjection_witness(n, m, pair, caps) if witness else None
    return SchurVerdict(n, pair, dom, positive, wit, dec)


def surjection_witness(n: int, m: int, pair: DominancePair | tuple, caps: Caps | None = None) -> bool:
    """Do all relations attached to l annihilate the cyclic vector of the fusion product for r?"""
    if not isinstance(pair, DominancePair):
        pair = DominancePair(m, *pair)
    fusion = FusionProduct(n, m, pair.r.stripped())
    return not _failing_relations(fusion, n, m, pair.ell.stripped(), caps)


def index_set_contained(ell, r, max_total: int) -> bool:
    """{(r,s,k) admissible for l} is inside {(r,s,k) admissible for r}, for r + s <= max_total."""
    from .cvpres.relations import tq_indices
    ell, r = _as_partition(ell).stripped(), _as_partition(r).stripped()
    a = set((t.r, t.s, t.k) for t in tq_indices(ell, 1, max_total))
    b = set((t.r, t.s, t.k) for t in tq_indices(r, 1, max_total))
    return a <= b


def pairs_of_total(total: int, max_parts: int) -> Iterator[tuple[Partition, Partition]]:
    """All ordered pairs of partitions of ``total`` with at most ``max_parts`` parts, padded."""
    parts = [q.padded(max_parts) for q in partitions(total, max_parts)]
    yield from itertools.product(parts, repeat=2)


def sweep(n: int, m: int, total: int, max_parts: int, *, diagnostic: bool = False,
          witness: bool = True, caps: Caps | None = None) -> list[SchurVerdict]:
    out = []
    for ell, r in pairs_of_total(total, max_parts):
        pair = DominancePair(m, ell, r)
        out.append(schur_positivity_check(n, m, pair, diagnostic=diagnostic,
                                          witness=witness, caps=caps))
    return out


__all__ = ["DominancePair", "dominates", "schur_positivity_check", "surjection_witness",
           "SchurVerdict", "character_difference", "product_character", "index_set_contained",
           "pairs_of_total", "sweep", "TotalMismatch"]
