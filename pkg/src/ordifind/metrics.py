"""Object positions in factors and the factorization distances.

The position of an object in a factor is the last tick whose cumulative
attribute set the object fully possesses. Distances compare attribute sets:
``distance`` counts what the first object has and the second lacks,
``hamming`` symmetrizes it, and ``selection_distance`` measures how many
attributes demanded by a per-factor position selection an object is
missing. All functions are pure.
"""

from __future__ import annotations

from typing import Sequence

from .bitsets import mask_of
from .context import FormalContext
from .factorize import Factorization, OrdinalFactor

SelectionVector = Sequence[int]


def position(ctx: FormalContext, factor: OrdinalFactor, g: int) -> int:
    """Largest tick index whose cumulative attributes object g has (0 if none)."""
    if not 0 <= g < ctx.n_objects:
        raise ValueError(f"object index {g} out of range")
    row = ctx.row_masks[g]
    pos = 0
    acc = 0
    for i, tick in enumerate(factor.ticks, start=1):
        acc |= mask_of(tick.gained, ctx.n_attributes)
        if acc & ~row:
            break
        pos = i
    return pos


def distance(ctx: FormalContext, g1: int, g2: int) -> int:
    """Attributes g1 has that g2 lacks; asymmetric, 0 iff row(g1) is a subset."""
    for g in (g1, g2):
        if not 0 <= g < ctx.n_objects:
            raise ValueError(f"object index {g} out of range")
    return (ctx.row_masks[g1] & ~ctx.row_masks[g2]).bit_count()


def hamming(ctx: FormalContext, g1: int, g2: int) -> int:
    """Symmetric attribute-set difference size."""
    return distance(ctx, g1, g2) + distance(ctx, g2, g1)


def selection_mask(
    ctx: FormalContext, factorization: Factorization, sel: SelectionVector
) -> int:
    """Union of the attributes demanded by a per-factor position selection."""
    factors = factorization.factors
    if len(sel) != len(factors):
        raise ValueError(
            f"selection has {len(sel)} positions, factorization has {len(factors)} factors"
        )
    demanded = 0
    for p, factor in zip(sel, factors):
        if not 0 <= p <= len(factor.ticks):
            raise ValueError(
                f"position {p} out of range 0..{len(factor.ticks)}"
            )
        for tick in factor.ticks[:p]:
            demanded |= mask_of(tick.gained, ctx.n_attributes)
    return demanded


def selection_distance(
    ctx: FormalContext, factorization: Factorization, g: int, sel: SelectionVector
) -> int:
    """How many demanded attributes object g is missing."""
    if not 0 <= g < ctx.n_objects:
        raise ValueError(f"object index {g} out of range")
    demanded = selection_mask(ctx, factorization, sel)
    return (demanded & ~ctx.row_masks[g]).bit_count()


def rank_objects(
    ctx: FormalContext, factorization: Factorization, sel: SelectionVector
) -> list[tuple[int, int]]:
    """(object index, selection distance) ascending; ties keep input order."""
    demanded = selection_mask(ctx, factorization, sel)
    ranked = [
        (g, (demanded & ~ctx.row_masks[g]).bit_count())
        for g in range(ctx.n_objects)
    ]
    ranked.sort(key=lambda item: item[1])
    return ranked


def supported_positions(
    ctx: FormalContext, factorization: Factorization, g: int
) -> list[int]:
    """Per-factor maximal positions object g supports."""
    return [position(ctx, f, g) for f in factorization.factors]
