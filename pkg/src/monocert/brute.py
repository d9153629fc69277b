"""Ground-truth verification by exhaustive or lattice-wide computation.

Everything here evaluates the function directly, outside any counting
oracle, and may cache a dense table on the function object; that cache is
an internal convenience of the verifier and never part of an algorithm's
query count. Capacity limits are hard errors, not silent truncation.

Two verification modes are offered. "exhaustive" enumerates every
completion of the fixed coordinates and does not assume monotonicity.
"monotone_fast" checks only the extreme completions, which is equivalent
for monotone functions and runs in one or two evaluations.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from . import kernels
from .bitops import iter_submasks, mask_to_members, members_to_mask, submask_completions
from .errors import CapacityError, ContractError, DimensionError
from .model import IndexSet, MonotoneFunction, Point

EXHAUSTIVE_MAX_FREE = 24
COMPLEXITY_MAX_N = 16
MONOTONE_MAX_N = 20
ENUMERATION_MAX_BASE = 22

_VECTOR_MAX_N = 18
_VECTOR_MAX_FREE = 20


@dataclass(frozen=True, slots=True)
class ComplexityReport:
    """A certificate-complexity value with evidence.

    `witness` is a smallest certificate achieving the value and `at` the
    input where it was measured (for the function-wide maximum, the first
    maximizing input in bitmask order).
    """

    value: int
    witness: IndexSet
    at: Point


def dense_table(f: MonotoneFunction) -> np.ndarray:
    """Dense value table of f over all 2**n inputs, cached on f.

    uint8 for boolean functions, float64 for real-valued ones. Indexed by
    point bitmask.
    """
    if f.n > MONOTONE_MAX_N:
        raise CapacityError(f"dense tables are capped at n <= {MONOTONE_MAX_N}, got {f.n}")
    memo = f._table_memo
    if memo is not None:
        return memo
    table = _build_table(f)
    table.setflags(write=False)
    f._table_memo = table
    return table


def _build_table(f: MonotoneFunction) -> np.ndarray:
    n, p = f.n, f.payload
    size = 1 << n
    if f.tag == "truth_table":
        return p["table"].copy()
    if f.tag == "dnf":
        return kernels.dnf_table(n, np.asarray(p["minterm_masks"], dtype=np.int64))
    if f.tag == "threshold":
        return (kernels.weight_table(n).astype(np.int32) >= p["k"]).astype(np.uint8)
    if f.tag == "indicator":
        w = kernels.weight_table(n).astype(np.int32)
        hit = (w > p["k"]) | ((w == p["k"]) & (np.arange(size) == p["planted_mask"]))
        return hit.astype(np.uint8)
    if f.tag == "weighted_real":
        vals = np.zeros(1, dtype=np.float64)
        for weight in p["weights"]:
            vals = np.concatenate([vals, vals + weight])
        return vals
    if f.tag == "derived" and p.get("derived") == "dual":
        inner = dense_table(p["inner"])
        return (1 - inner[::-1]).astype(np.uint8)
    if f.tag == "derived" and p.get("derived") == "binarized":
        inner = dense_table(p["inner"]).astype(np.float64)
        out = np.where(inner > p["pivot"], 1, np.where(inner < p["pivot"], 0, p["tie"]))
        return out.astype(np.uint8)
    dtype = np.uint8 if f.kind == "boolean" else np.float64
    out = np.empty(size, dtype=dtype)
    ev = f.evaluate_mask
    for mask in range(size):
        out[mask] = ev(mask)
    return out


def _check_triple(f: MonotoneFunction, x: Point, s: IndexSet):
    if x.n != f.n:
        raise DimensionError(f"point on {x.n} coordinates, function takes {f.n}")
    if s.n != f.n:
        raise DimensionError(f"index set on {s.n} coordinates, function takes {f.n}")


def is_certificate(f: MonotoneFunction, x: Point, s: IndexSet,
                   mode: str = "exhaustive") -> bool:
    """Does fixing x's values on s force f to f(x) on every completion?

    mode "exhaustive" tries all 2**(n-|s|) completions (capped at 2**24)
    and makes no monotonicity assumption. mode "monotone_fast" evaluates
    only the lowest and highest completions, which is equivalent when f is
    monotone.
    """
    _check_triple(f, x, s)
    n = f.n
    full = (1 << n) - 1
    fx = f.evaluate_mask(x.mask)
    low = x.mask & s.mask
    high = x.mask | (full ^ s.mask)
    if mode == "monotone_fast":
        if f.kind == "boolean":
            if fx == 1:
                return f.evaluate_mask(low) == 1
            return f.evaluate_mask(high) == 0
        return f.evaluate_mask(low) == fx and f.evaluate_mask(high) == fx
    if mode != "exhaustive":
        raise ContractError(f"unknown mode {mode!r}")
    free = full ^ s.mask
    free_count = free.bit_count()
    if free_count > EXHAUSTIVE_MAX_FREE:
        raise CapacityError(
            f"{free_count} free coordinates exceed the exhaustive cap of "
            f"{EXHAUSTIVE_MAX_FREE}")
    if n <= _VECTOR_MAX_N and free_count <= _VECTOR_MAX_FREE:
        table = dense_table(f)
        ys = low | submask_completions(free, n)
        return bool(np.all(table[ys] == fx))
    ev = f.evaluate_mask
    for sub in iter_submasks(free):
        if ev(low | sub) != fx:
            return False
    return True


def is_minimal(f: MonotoneFunction, x: Point, s: IndexSet,
               mode: str = "exhaustive") -> bool:
    """Is s a certificate at x none of whose proper subsets certifies?

    Dropping any single member must break certification; for certificates
    that is equivalent to full subset minimality. Raises ContractError if
    s is not a certificate in the first place.
    """
    if not is_certificate(f, x, s, mode):
        raise ContractError("minimality is only defined for certificates")
    for i in s.members:
        smaller = IndexSet(s.n, s.mask & ~(1 << (i - 1)))
        if is_certificate(f, x, smaller, mode):
            return False
    return True


def _candidate_value(f: MonotoneFunction, n: int):
    """Evaluation routine for candidate scans: dense lookup when cheap."""
    if n <= COMPLEXITY_MAX_N:
        table = dense_table(f)
        return lambda mask: table[mask]
    return f.evaluate_mask


def cert_complexity_at(f: MonotoneFunction, x: Point) -> ComplexityReport:
    """Smallest certificate at x, by size-then-lexicographic enumeration.

    For boolean f only the support (value 1) or zero set (value 0) can
    matter, so candidates are drawn from there; for real-valued f every
    coordinate is a candidate. The first subset found in the scan order is
    returned, which makes the witness deterministic.
    """
    if x.n != f.n:
        raise DimensionError(f"point on {x.n} coordinates, function takes {f.n}")
    n = f.n
    full = (1 << n) - 1
    fx = f.evaluate_mask(x.mask)
    if f.kind == "boolean":
        base_mask = x.mask if fx == 1 else full ^ x.mask
    else:
        base_mask = full
    base = [int(i) for i in mask_to_members(base_mask, n)]
    if len(base) > ENUMERATION_MAX_BASE:
        raise CapacityError(
            f"{len(base)} candidate coordinates exceed the enumeration cap of "
            f"{ENUMERATION_MAX_BASE}")
    value_at = _candidate_value(f, n)
    boolean = f.kind == "boolean"
    for size in range(len(base) + 1):
        for combo in combinations(base, size):
            smask = members_to_mask(combo)
            if boolean:
                if fx == 1:
                    hit = value_at(smask) == 1
                else:
                    hit = value_at(x.mask | (full ^ smask)) == 0
            else:
                hit = (value_at(x.mask & smask) == fx
                       and value_at(x.mask | (full ^ smask)) == fx)
            if hit:
                return ComplexityReport(size, IndexSet(n, smask), x)
    raise AssertionError("unreachable: the full candidate set always certifies")


def cert_complexity(f: MonotoneFunction) -> ComplexityReport:
    """Certificate complexity of f: the maximum of cert_complexity_at.

    Scans the whole lattice with the kernels, then re-derives the witness
    at the first maximizing input by direct enumeration. Capped at
    n <= 16.
    """
    if f.n > COMPLEXITY_MAX_N:
        raise CapacityError(
            f"certificate complexity is capped at n <= {COMPLEXITY_MAX_N}, got {f.n}")
    table = dense_table(f)
    if f.kind == "boolean":
        sizes = kernels.certificate_sizes(table, f.n)
    else:
        sizes = kernels.certificate_sizes_real(table.astype(np.float64), f.n)
    value = int(sizes.max())
    at = Point(f.n, int(np.argmax(sizes)))
    detail = cert_complexity_at(f, at)
    if detail.value != value:
        raise AssertionError("internal: lattice scan disagrees with enumeration")
    return ComplexityReport(value, detail.witness, at)


def is_monotone(f: MonotoneFunction) -> bool:
    """Does raising any coordinate ever lower the value? Capped at n <= 20."""
    if f.n > MONOTONE_MAX_N:
        raise CapacityError(
            f"monotonicity checking is capped at n <= {MONOTONE_MAX_N}, got {f.n}")
    table = dense_table(f)
    if table.dtype != np.uint8:
        table = np.ascontiguousarray(table, dtype=np.float64)
    return kernels.first_monotone_violation(table, f.n) < 0
