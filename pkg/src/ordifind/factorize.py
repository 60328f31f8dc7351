"""Complete greedy ordinal factorizations.

``factorize_naive`` is the reference implementation: it repeatedly runs the
full maximal-chain dynamic program on the remaining uncovered incidence.
``ordifind`` produces the identical factor sequence but keeps the DP state
alive between factors, recomputing only concepts whose rectangle meets the
cells the last factor freshly covered (plus upward change propagation).

Both guarantee the same deterministic tie-breaking: strict improvement
only, ties resolved towards the smaller concept id.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bitsets import bits, set_of
from .context import FormalContext
from .ferrers import (
    ConceptChain,
    check_chain,
    chain_to_ferrers,
    extract_chain,
    max_ferrers,
)
from .lattice import ConceptLattice, linear_extension


@dataclass(frozen=True)
class FactorTick:
    """One axis position of a factor: the attributes gained at a concept."""

    concept_id: int
    gained: frozenset[int]


@dataclass(frozen=True)
class OrdinalFactor:
    """A chain of concepts with its tick labels and first-time coverage."""

    chain: ConceptChain
    ticks: tuple[FactorTick, ...]
    new_coverage: int


@dataclass(frozen=True)
class Factorization:
    """Ordered greedy factors; ``covered[i]`` is the union after factor i."""

    context: FormalContext
    factors: tuple[OrdinalFactor, ...]
    covered: tuple[frozenset[tuple[int, int]], ...]

    @property
    def width(self) -> int:
        return len(self.factors)


def factor_ticks(lat: ConceptLattice, chain: ConceptChain) -> tuple[FactorTick, ...]:
    """Tick list of a chain, ordered from fewest to most attributes required.

    Walking the chain downward from its largest concept, each tick records
    the attributes its concept gains over the previous tick; the cumulative
    attribute set at tick r therefore equals that concept's intent. Concepts
    with an empty attribute delta (an empty-intent top) or an empty extent
    (a bottom concept covering nothing) yield no tick.
    """
    check_chain(lat, chain)
    ticks = []
    prev = 0
    for cid in reversed(chain.concept_ids):
        if not lat.extent_bits[cid]:
            continue
        gained = lat.intent_bits[cid] & ~prev
        if gained:
            ticks.append(FactorTick(cid, set_of(gained)))
        prev = lat.intent_bits[cid]
    return tuple(ticks)


def factorize_naive(ctx: FormalContext, lat: ConceptLattice) -> Factorization:
    """Greedy factorization by repeated full maximal-chain searches."""
    covered: frozenset[tuple[int, int]] = frozenset()
    factors: list[OrdinalFactor] = []
    snapshots: list[frozenset[tuple[int, int]]] = []
    while covered != ctx.incidence:
        chain = max_ferrers(lat, covered)
        pairs = chain_to_ferrers(lat, chain).pairs
        gained = len(pairs - covered)
        if gained == 0:
            raise RuntimeError("greedy factorization made no progress")
        covered = covered | pairs
        factors.append(OrdinalFactor(chain, factor_ticks(lat, chain), gained))
        snapshots.append(covered)
    return Factorization(ctx, tuple(factors), tuple(snapshots))


def ordifind(ctx: FormalContext, lat: ConceptLattice) -> Factorization:
    """Greedy factorization with incremental DP state between factors."""
    return _IncrementalEngine(ctx, lat).run()


class _IncrementalEngine:
    """Chain DP whose per-concept values survive across factor extractions.

    After a factor is extracted, the only concepts whose incoming edge gains
    can differ are those whose rectangle meets the freshly covered cells,
    i.e. whose extent intersects the objects that gained coverage and whose
    intent intersects the attributes they gained. Everything else is only
    revisited if a lower cover's value actually changed. The worklist is a
    marked scan over the fixed linear extension, which processes concepts in
    descending intent cardinality (ties on smaller id), so every lower cover
    is final before a concept is recomputed; a value change marks the upper
    covers, which sit later in the scan.
    """

    def __init__(self, ctx: FormalContext, lat: ConceptLattice):
        self.ctx = ctx
        self.lat = lat
        n = len(lat.concepts)
        self.order = linear_extension(lat)
        self.value = [0] * n
        self.back: list[int | None] = [None] * n
        self.e_rows = [0] * ctx.n_objects
        self.uncovered = len(ctx.incidence)

    def run(self) -> Factorization:
        lat = self.lat
        n = len(lat.concepts)
        factors: list[OrdinalFactor] = []
        snapshots: list[frozenset[tuple[int, int]]] = []
        covered: frozenset[tuple[int, int]] = frozenset()
        marked = [True] * n
        while self.uncovered:
            self._propagate(marked)
            chain = extract_chain(lat, self.back)
            gained, new_pairs, changed_objs, changed_attrs = self._apply_chain(chain)
            if gained == 0:
                raise RuntimeError("greedy factorization made no progress")
            assert gained == self.value[lat.top_id]
            self.uncovered -= gained
            covered = covered | new_pairs
            factors.append(OrdinalFactor(chain, factor_ticks(lat, chain), gained))
            snapshots.append(covered)
            extent_bits, intent_bits = lat.extent_bits, lat.intent_bits
            marked = [
                bool(extent_bits[cid] & changed_objs)
                and bool(intent_bits[cid] & changed_attrs)
                for cid in range(n)
            ]
        return Factorization(self.ctx, tuple(factors), tuple(snapshots))

    def _propagate(self, marked: list[bool]) -> None:
        lat = self.lat
        upper_covers = lat.upper_covers
        for cid in self.order:
            if not marked[cid]:
                continue
            if self._recompute(cid):
                for up in upper_covers[cid]:
                    marked[up] = True

    def _recompute(self, cid: int) -> bool:
        """Refresh value/back of one concept; True if the value changed."""
        lat = self.lat
        lows = lat.lower_covers[cid]
        extent = lat.extent_bits[cid]
        intent = lat.intent_bits[cid]
        e_rows = self.e_rows
        value = self.value
        if not lows:
            best = 0
            m = extent
            while m:
                low = m & -m
                best += (intent & ~e_rows[low.bit_length() - 1]).bit_count()
                m ^= low
            best_d: int | None = None
        else:
            extent_bits = lat.extent_bits
            best = -1
            best_d = None
            for d in lows:
                v = value[d]
                m = extent & ~extent_bits[d]
                while m:
                    low = m & -m
                    v += (intent & ~e_rows[low.bit_length() - 1]).bit_count()
                    m ^= low
                if v > best:
                    best, best_d = v, d
        changed = best != value[cid]
        value[cid] = best
        self.back[cid] = best_d
        return changed

    def _apply_chain(
        self, chain: ConceptChain
    ) -> tuple[int, frozenset[tuple[int, int]], int, int]:
        """Mark the chain's cells covered; report what actually changed."""
        lat = self.lat
        seen = 0
        total = 0
        changed_objs = 0
        changed_attrs = 0
        new_pairs = []
        for cid in chain.concept_ids:
            extent, intent = lat.extent_bits[cid], lat.intent_bits[cid]
            fresh = extent & ~seen
            for g in bits(fresh):
                gained_mask = intent & ~self.e_rows[g]
                if gained_mask:
                    total += gained_mask.bit_count()
                    new_pairs.extend((g, m) for m in bits(gained_mask))
                    self.e_rows[g] |= gained_mask
                    changed_objs |= 1 << g
                    changed_attrs |= gained_mask
            seen |= extent
        return total, frozenset(new_pairs), changed_objs, changed_attrs


