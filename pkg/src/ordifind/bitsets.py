"""Index sets packed into Python ints.

All hot loops in the lattice and factorization code work on int bitmasks;
frozensets appear only at API boundaries.
"""

from __future__ import annotations

from typing import Iterable, Iterator


def mask_of(indices: Iterable[int], size: int) -> int:
    """Pack indices into a bitmask, validating the 0..size-1 range."""
    mask = 0
    for i in indices:
        if not 0 <= i < size:
            raise ValueError(f"index {i} out of range [0, {size})")
        mask |= 1 << i
    return mask


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of a mask in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def set_of(mask: int) -> frozenset[int]:
    return frozenset(bits(mask))
