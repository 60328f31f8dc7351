"""Concept lattice construction: all formal concepts plus the covering relation.

Concepts are enumerated bottom-up with Lindig-style upper-neighbor search,
which yields the covering (Hasse) edges as a byproduct. Concept ids are
assigned in order of first generation and are stable for a given input, so
everything downstream that breaks ties on ids is reproducible.

The finished lattice is immutable and can be shared across threads.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property

from .bitsets import set_of
from .context import FormalContext

DEFAULT_MAX_CONCEPTS = 10_000_000


class ConceptLimitError(RuntimeError):
    """The context has more concepts than the configured cap allows."""


@dataclass(frozen=True)
class Concept:
    """A closed (extent, intent) pair of object and attribute indices."""

    extent: frozenset[int]
    intent: frozenset[int]


@dataclass(frozen=True)
class ConceptLattice:
    """All concepts of a context with their covering adjacency.

    ``upper_covers[c]``/``lower_covers[c]`` list the ids directly above/below
    concept ``c``; both are sorted ascending. ``extent_bits``/``intent_bits``
    are the bitmask forms used by the factorization dynamic programs.
    """

    concepts: tuple[Concept, ...]
    upper_covers: tuple[tuple[int, ...], ...]
    lower_covers: tuple[tuple[int, ...], ...]
    top_id: int
    bottom_id: int
    n_objects: int
    n_attributes: int
    extent_bits: tuple[int, ...] = field(repr=False)
    intent_bits: tuple[int, ...] = field(repr=False)

    def __len__(self) -> int:
        return len(self.concepts)

    @cached_property
    def _id_by_extent(self) -> dict[int, int]:
        return {mask: cid for cid, mask in enumerate(self.extent_bits)}

    def concept_id_of_extent(self, extent_mask: int) -> int | None:
        return self._id_by_extent.get(extent_mask)


def build_lattice(
    ctx: FormalContext, max_concepts: int = DEFAULT_MAX_CONCEPTS
) -> ConceptLattice:
    """Enumerate every formal concept of ``ctx`` and the covering relation.

    Raises ConceptLimitError once more than ``max_concepts`` concepts have
    been generated, so pathological contexts fail fast instead of exhausting
    memory.
    """
    rows = ctx.row_masks
    cols = ctx.col_masks
    all_objs = ctx.all_objects_mask
    all_attrs = ctx.all_attributes_mask

    def intent_of(extent_mask: int) -> int:
        mask = all_attrs
        m = extent_mask
        while m:
            low = m & -m
            mask &= rows[low.bit_length() - 1]
            m ^= low
        return mask

    def extent_of(intent_mask: int) -> int:
        mask = all_objs
        m = intent_mask
        while m:
            low = m & -m
            mask &= cols[low.bit_length() - 1]
            m ^= low
        return mask

    bottom_intent = all_attrs
    bottom_extent = extent_of(bottom_intent)

    extents = [bottom_extent]
    intents = [bottom_intent]
    ids: dict[int, int] = {bottom_extent: 0}
    upper: list[list[int]] = [[]]
    lower: list[list[int]] = [[]]

    queue: deque[int] = deque([0])
    while queue:
        cid = queue.popleft()
        extent = extents[cid]
        intent = intents[cid]

        # Lindig's upper-neighbor search: each neighbor is reported exactly
        # once thanks to the shrinking candidate set.
        candidates = all_objs & ~extent
        min_mask = candidates
        m = candidates
        while m:
            low = m & -m
            g = low.bit_length() - 1
            m ^= low
            new_intent = intent & rows[g]
            new_extent = extent_of(new_intent)
            extra = new_extent & ~extent & ~low
            if extra & min_mask:
                min_mask &= ~low
                continue
            nid = ids.get(new_extent)
            if nid is None:
                nid = len(extents)
                if nid >= max_concepts:
                    raise ConceptLimitError(
                        f"concept count exceeds cap of {max_concepts}"
                    )
                ids[new_extent] = nid
                extents.append(new_extent)
                intents.append(new_intent)
                upper.append([])
                lower.append([])
                queue.append(nid)
            upper[cid].append(nid)
            lower[nid].append(cid)

    concepts = tuple(
        Concept(set_of(e), set_of(i)) for e, i in zip(extents, intents)
    )
    top_id = ids[extent_of(intent_of(all_objs))]
    return ConceptLattice(
        concepts=concepts,
        upper_covers=tuple(tuple(sorted(u)) for u in upper),
        lower_covers=tuple(tuple(sorted(l)) for l in lower),
        top_id=top_id,
        bottom_id=0,
        n_objects=ctx.n_objects,
        n_attributes=ctx.n_attributes,
        extent_bits=tuple(extents),
        intent_bits=tuple(intents),
    )


def attribute_concept(ctx: FormalContext, lat: ConceptLattice, m: int) -> int:
    """Id of the greatest concept whose intent contains attribute ``m``."""
    if not 0 <= m < ctx.n_attributes:
        raise ValueError(f"attribute index {m} out of range")
    cid = lat.concept_id_of_extent(ctx.col_masks[m])
    assert cid is not None, "attribute extent must be closed"
    return cid


def object_concept(ctx: FormalContext, lat: ConceptLattice, g: int) -> int:
    """Id of the smallest concept whose extent contains object ``g``."""
    if not 0 <= g < ctx.n_objects:
        raise ValueError(f"object index {g} out of range")
    intent = ctx.row_masks[g]
    extent = ctx.all_objects_mask
    m = intent
    while m:
        low = m & -m
        extent &= ctx.col_masks[low.bit_length() - 1]
        m ^= low
    cid = lat.concept_id_of_extent(extent)
    assert cid is not None, "object closure must be a concept"
    return cid


def linear_extension(lat: ConceptLattice) -> list[int]:
    """Concept ids in an order compatible with the lattice (bottom first).

    Sorting by descending intent cardinality places every concept after all
    of its lower covers; ties are broken by concept id for reproducibility.
    """
    return sorted(
        range(len(lat.concepts)),
        key=lambda cid: (-lat.intent_bits[cid].bit_count(), cid),
    )


def lattice_debug_json(ctx: FormalContext, lat: ConceptLattice) -> dict:
    """Name-resolved dump of concepts and covers; debugging aid only."""
    return {
        "concepts": [
            {
                "id": cid,
                "extent": [ctx.objects[g] for g in sorted(c.extent)],
                "intent": [ctx.attributes[a] for a in sorted(c.intent)],
            }
            for cid, c in enumerate(lat.concepts)
        ],
        "upper_covers": {str(cid): list(u) for cid, u in enumerate(lat.upper_covers)},
        "top": lat.top_id,
        "bottom": lat.bottom_id,
    }
