"""Numpy implementation of the lattice kernels.

Every function here treats a length-2**n array as a function on the subset
lattice of n coordinates, indexed by bitmask. The compiled module
monocert._kernels exports the same signatures; monocert.kernels picks one
at import time.
"""

from __future__ import annotations

import numpy as np

INF = 1 << 20


def weight_table(n: int) -> np.ndarray:
    """Popcount of every mask in [0, 2**n), as uint8."""
    w = np.zeros(1, dtype=np.uint8)
    for _ in range(n):
        w = np.concatenate([w, w + 1])
    return w


def dnf_table(n: int, masks: np.ndarray) -> np.ndarray:
    """Evaluate an OR of AND-terms (given as bitmasks) on every input."""
    xs = np.arange(1 << n, dtype=np.int64)
    out = np.zeros(1 << n, dtype=bool)
    for m in np.asarray(masks, dtype=np.int64):
        out |= (xs & m) == m
    return out.astype(np.uint8)


def min_true_weight_below(table: np.ndarray, n: int) -> np.ndarray:
    """For each x, the least popcount of a y <= x with table[y] = 1 (INF if none)."""
    m = np.where(table != 0, weight_table(n).astype(np.int32), np.int32(INF))
    for i in range(n):
        m3 = m.reshape(-1, 2, 1 << i)
        np.minimum(m3[:, 1, :], m3[:, 0, :], out=m3[:, 1, :])
    return m


def min_false_coweight_above(table: np.ndarray, n: int) -> np.ndarray:
    """For each x, the least n - popcount of a y >= x with table[y] = 0 (INF if none)."""
    m = np.where(table == 0, (n - weight_table(n)).astype(np.int32), np.int32(INF))
    for i in range(n):
        m3 = m.reshape(-1, 2, 1 << i)
        np.minimum(m3[:, 0, :], m3[:, 1, :], out=m3[:, 0, :])
    return m


def certificate_sizes(table: np.ndarray, n: int) -> np.ndarray:
    """Smallest certificate size at every input of a monotone 0/1 table.

    On the true side a smallest certificate is a lightest true point below x;
    on the false side it is the complement of a heaviest false point above x.
    """
    below = min_true_weight_below(table, n)
    above = min_false_coweight_above(table, n)
    return np.where(table != 0, below, above).astype(np.int32)


def certificate_sizes_real(values: np.ndarray, n: int) -> np.ndarray:
    """Smallest certificate size at every input of a monotone real table.

    A set S certifies at x exactly when the two extreme completions of x
    outside S take equal values. Subsets are scanned in weight order, so the
    first hit for an input is its smallest certificate.
    """
    values = np.ascontiguousarray(values, dtype=np.float64)
    size = 1 << n
    full = size - 1
    xs = np.arange(size, dtype=np.int64)
    w = weight_table(n)
    out = np.full(size, INF, dtype=np.int32)
    order = np.argsort(w, kind="stable")
    unset = size
    for s in order:
        s = int(s)
        ws = np.int32(w[s])
        hit = (values[xs & s] == values[xs | (full ^ s)]) & (out == INF)
        out[hit] = ws
        unset -= int(np.count_nonzero(hit))
        if unset == 0:
            break
    return out


def first_monotone_violation(values: np.ndarray, n: int) -> int:
    """Packed (x << 6) | i for the first x, i with values[x] > values[x | 1<<i].

    Scanned bit-major then mask-ascending; -1 when the table is monotone.
    """
    for i in range(n):
        v3 = values.reshape(-1, 2, 1 << i)
        bad = v3[:, 0, :] > v3[:, 1, :]
        if bad.any():
            j, k = divmod(int(np.argmax(bad)), 1 << i)
            x = (j << (i + 1)) | k
            return (x << 6) | i
    return -1
