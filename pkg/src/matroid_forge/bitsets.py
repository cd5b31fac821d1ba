"""Subsets of {0, ..., n-1} as int bitmasks.

All set manipulation in the combinatorial core runs on plain Python ints,
which keeps union/intersection/containment O(1) word operations for the
ground-set sizes we care about (n <= 64).  The helpers here convert between
masks and sorted element tuples and provide the canonical ordering used
everywhere: subsets sort by (cardinality, sorted element tuple).
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator

MAX_GROUND = 64


def mask_of(elements: Iterable[int]) -> int:
    m = 0
    for e in elements:
        m |= 1 << e
    return m


def elements_of(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def iter_elements(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return mask.bit_count()


def full_mask(n: int) -> int:
    return (1 << n) - 1


def canonical_key(mask: int) -> tuple[int, tuple[int, ...]]:
    """Sort key giving the canonical subset order: size first, then elements."""
    return (mask.bit_count(), elements_of(mask))


def sort_masks(masks: Iterable[int]) -> tuple[int, ...]:
    return tuple(sorted(masks, key=canonical_key))


def subset_masks_of_size(universe: Iterable[int] | int, k: int) -> Iterator[int]:
    """All k-subsets of the universe, as masks, in canonical order.

    The universe is either an iterable of elements or an int mask.
    """
    elems = elements_of(universe) if isinstance(universe, int) else tuple(sorted(universe))
    for combo in combinations(elems, k):
        yield mask_of(combo)


def submasks(mask: int) -> Iterator[int]:
    """Every subset of ``mask`` (including 0 and mask itself), arbitrary order."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def coerce_mask(x: int | Iterable[int], n: int, *, what: str = "subset") -> int:
    """Accept either a bitmask or an iterable of elements; range-check."""
    if isinstance(x, int):
        m = x
    else:
        m = mask_of(x)
    if m < 0 or m >= (1 << n):
        raise ValueError(f"{what} is not inside the ground set of size {n}")
    return m


def format_set(mask: int) -> str:
    return "{" + ",".join(str(e) for e in elements_of(mask)) + "}"
