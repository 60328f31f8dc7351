"""Ferrers relations and the maximal-coverage chain dynamic program.

A Ferrers relation is a staircase-shaped subset of the object/attribute
grid: whenever (g,m) and (h,n) belong to it, (g,n) or (h,m) does too.
Equivalently, its rows form a chain under inclusion. Inside a context, the
maximal Ferrers subrelations of the incidence correspond one-to-one to the
maximal chains of the concept lattice, which is what ``max_ferrers``
searches over.

All functions here are pure; concurrent calls on the same lattice are safe.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, Sequence

from .bitsets import bits, set_of
from .context import rows_from_pairs
from .lattice import ConceptLattice, linear_extension


@dataclass(frozen=True)
class FerrersRelation:
    """A set of (object index, attribute index) pairs in staircase shape."""

    pairs: frozenset[tuple[int, int]]

    def __len__(self) -> int:
        return len(self.pairs)


@dataclass(frozen=True)
class ConceptChain:
    """Concept ids in ascending lattice order (extents strictly increase)."""

    concept_ids: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.concept_ids)


def is_ferrers(pairs: Iterable[tuple[int, int]]) -> bool:
    """Whether the pair set satisfies the staircase condition.

    Checked via the equivalent row characterization: the distinct rows must
    form a chain under set inclusion.
    """
    rows: dict[int, set[int]] = defaultdict(set)
    for g, m in pairs:
        rows[g].add(m)
    distinct = {frozenset(r) for r in rows.values()}
    ordered = sorted(distinct, key=len, reverse=True)
    return all(ordered[i + 1] <= ordered[i] for i in range(len(ordered) - 1))


def check_chain(lat: ConceptLattice, chain: ConceptChain) -> None:
    """Validate ascending lattice order; raises ValueError on violations."""
    ids = chain.concept_ids
    for cid in ids:
        if not 0 <= cid < len(lat.concepts):
            raise ValueError(f"concept id {cid} out of range")
    for a, b in zip(ids, ids[1:]):
        ea, eb = lat.extent_bits[a], lat.extent_bits[b]
        if ea == eb or ea & ~eb:
            raise ValueError(
                f"concepts {a} and {b} are not in ascending lattice order"
            )


def chain_to_ferrers(lat: ConceptLattice, chain: ConceptChain) -> FerrersRelation:
    """Expand a chain into its Ferrers relation, the union of extent x intent."""
    check_chain(lat, chain)
    pairs = set()
    for cid in chain.concept_ids:
        intent = set_of(lat.intent_bits[cid])
        for g in bits(lat.extent_bits[cid]):
            for m in intent:
                pairs.add((g, m))
    return FerrersRelation(frozenset(pairs))


def max_ferrers(
    lat: ConceptLattice, covered: Iterable[tuple[int, int]] = ()
) -> ConceptChain:
    """Maximal chain covering the most incidences outside ``covered``.

    Single bottom-up pass over the covering relation. The score of a chain
    decomposes over objects: each object counts the uncovered attributes of
    the first chain concept containing it, so the gain of extending a chain
    ending in d by a cover c is the uncovered part of (extent(c) setminus
    extent(d)) x intent(c). Ties prefer the lower cover with the smaller
    concept id, making the result independent of the linear extension.
    """
    e_rows = rows_from_pairs(covered, lat.n_objects, lat.n_attributes)
    value, back = _chain_dp(lat, e_rows)
    return extract_chain(lat, back)


def _chain_dp(
    lat: ConceptLattice, e_rows: Sequence[int]
) -> tuple[list[int], list[int | None]]:
    """Full DP pass; returns per-concept best value and back-pointer."""
    n = len(lat.concepts)
    value = [0] * n
    back: list[int | None] = [None] * n
    for cid in linear_extension(lat):
        lows = lat.lower_covers[cid]
        if not lows:
            value[cid] = _block_gain(
                lat, cid, lat.extent_bits[cid], e_rows
            )
            back[cid] = None
            continue
        best = -1
        best_d: int | None = None
        for d in lows:
            v = value[d] + _block_gain(
                lat, cid, lat.extent_bits[cid] & ~lat.extent_bits[d], e_rows
            )
            if v > best:
                best, best_d = v, d
        value[cid] = best
        back[cid] = best_d
    return value, back


def _block_gain(
    lat: ConceptLattice, cid: int, new_objects: int, e_rows: Sequence[int]
) -> int:
    """Uncovered cells of new_objects x intent(cid)."""
    intent = lat.intent_bits[cid]
    total = 0
    m = new_objects
    while m:
        low = m & -m
        total += (intent & ~e_rows[low.bit_length() - 1]).bit_count()
        m ^= low
    return total


def extract_chain(lat: ConceptLattice, back: Sequence[int | None]) -> ConceptChain:
    """Follow back-pointers from the top concept down to the bottom."""
    path = []
    cid: int | None = lat.top_id
    while cid is not None:
        path.append(cid)
        cid = back[cid]
    path.reverse()
    return ConceptChain(tuple(path))


def chain_coverage(
    lat: ConceptLattice, chain: ConceptChain, covered: Iterable[tuple[int, int]] = ()
) -> int:
    """|ferrers(chain) setminus covered|, without materializing the union."""
    e_rows = rows_from_pairs(covered, lat.n_objects, lat.n_attributes)
    seen = 0
    total = 0
    for cid in chain.concept_ids:
        total += _block_gain(lat, cid, lat.extent_bits[cid] & ~seen, e_rows)
        seen |= lat.extent_bits[cid]
    return total
