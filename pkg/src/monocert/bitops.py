"""Bitmask helpers.

Coordinates are 1-based throughout the package; coordinate i lives at bit
i-1 of a mask. Masks are arbitrary-precision Python ints so dimensions in
the millions work; array-returning helpers switch to numpy past a small
cutoff.
"""

from __future__ import annotations

from typing import Iterable

import numpy as np

_NUMPY_CUTOFF = 512


def members_to_mask(members: Iterable[int]) -> int:
    """Pack 1-based coordinates into a mask."""
    mask = 0
    for i in members:
        mask |= 1 << (i - 1)
    return mask


def mask_to_members(mask: int, n: int) -> np.ndarray:
    """Unpack a mask into ascending 1-based coordinates (int64 array)."""
    if n <= _NUMPY_CUTOFF:
        out = []
        i = 1
        while mask:
            if mask & 1:
                out.append(i)
            mask >>= 1
            i += 1
        return np.asarray(out, dtype=np.int64)
    raw = mask.to_bytes((n + 7) // 8, "little")
    bits = np.unpackbits(np.frombuffer(raw, dtype=np.uint8), bitorder="little")[:n]
    return np.flatnonzero(bits).astype(np.int64) + 1


def popcount(mask: int) -> int:
    return mask.bit_count()


def ceil_log2(m: int) -> int:
    """Smallest k with 2**k >= m, for m >= 1."""
    if m < 1:
        raise ValueError("ceil_log2 requires m >= 1")
    return (m - 1).bit_length()


def submask_completions(free_mask: int, n: int) -> np.ndarray:
    """All submasks of free_mask as an int64 array, one per bit pattern.

    Entry t places bit j of t at the j-th lowest set position of free_mask,
    so the result enumerates every assignment to the free coordinates.
    """
    positions = mask_to_members(free_mask, n) - 1
    count = 1 << len(positions)
    t = np.arange(count, dtype=np.int64)
    out = np.zeros(count, dtype=np.int64)
    for j, p in enumerate(positions):
        out |= ((t >> j) & 1) << int(p)
    return out


def iter_submasks(mask: int):
    """Yield every submask of mask, descending, ending with 0."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


_MIX_A = 0x9E3779B97F4A7C15
_MIX_B = 0xBF58476D1CE4E5B9
_MASK64 = (1 << 64) - 1


def mix64(*parts: int) -> int:
    """Deterministically fold integers into a 64-bit seed."""
    acc = 0x243F6A8885A308D3
    for p in parts:
        acc = (acc ^ (p & _MASK64)) * _MIX_A & _MASK64
        acc = ((acc >> 29) ^ acc) * _MIX_B & _MASK64
        acc = (acc >> 32) ^ acc
    return acc & _MASK64
