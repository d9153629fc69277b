"""Certifiers for monotone functions under query access.

certify_binary finds a minimal certificate for a boolean monotone function
using O(k log n) queries, where k is the size of the certificate it
returns. It grows a set A of support coordinates; while fixing A alone
does not force the value, a binary search over prefixes of the remaining
candidates finds the largest coordinate that some minimal certificate
extending A must contain. Candidates above it are discarded, so the
coordinates enter A in strictly decreasing order and each costs about
log n queries.

A reference value of 0 is handled by the mirror reduction: negate the
output, complement the input, certify the 1 there, and read the result
back as a set of coordinates fixed to 0.

certify_real extends this to real values by thresholding the function
against its value at the reference point, once breaking ties downward and
once upward; the union of the two boolean certificates pins the exact
value and is at most twice the optimal size.

angluin_certify is the classical local-search baseline: start from the
full support and try to delete coordinates one at a time. It returns a
minimal certificate using about n queries instead of k log n.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bitops import mask_to_members
from .errors import DimensionError, KindError, SearchError
from .model import Certificate, IndexSet, MonotoneFunction, Point
from .oracle import CountingOracle


@dataclass(frozen=True, slots=True)
class CertifyResult:
    """Outcome of one certifier run.

    queries_used counts oracle evaluations made by this call, including
    any evaluation of the reference point. iterations counts coordinates
    the run added to (or, for the baseline, deleted from) its working set.
    added records the certificate coordinates in discovery order.
    """

    certificate: Certificate
    queries_used: int
    iterations: int
    algorithm: str
    added: tuple[int, ...] = ()


def _as_oracle(f) -> CountingOracle:
    if isinstance(f, CountingOracle):
        return f
    if isinstance(f, MonotoneFunction):
        return CountingOracle(f)
    raise TypeError(f"expected MonotoneFunction or CountingOracle, got {type(f).__name__}")


def _require_boolean(oracle: CountingOracle, what: str):
    if oracle.kind != "boolean":
        raise KindError(f"{what} requires a boolean function; "
                        "use certify_real for real-valued ones")


def _require_dim(oracle: CountingOracle, x: Point):
    if x.n != oracle.n:
        raise DimensionError(f"point on {x.n} coordinates, function takes {oracle.n}")


def prefix_search(f, fixed: IndexSet, candidates: IndexSet, *,
                  debug: bool = False) -> int:
    """Smallest candidate s whose prefix closes a certificate over `fixed`.

    Precisely: the smallest s in `candidates` such that fixing `fixed`
    together with every candidate <= s forces the value 1. Assumes the
    caller has established that fixing `fixed` alone gives 0 and fixing
    `fixed` with all of `candidates` gives 1; under that contract the
    answer exists and binary search finds it with ceil(log2 m) queries for
    m candidates. With debug=True the contract and the answer's defining
    property are checked with extra queries, raising SearchError on
    violation; without it a broken contract yields an arbitrary candidate.
    """
    oracle = _as_oracle(f)
    _require_boolean(oracle, "prefix_search")
    if fixed.n != oracle.n or candidates.n != oracle.n:
        raise DimensionError("index sets do not match the function's dimension")
    amask, smask = fixed.mask, candidates.mask
    members = mask_to_members(smask, oracle.n)
    if debug:
        if oracle.query_mask(amask) != 0:
            raise SearchError("contract violated: the fixed set already forces 1")
        if oracle.query_mask(amask | smask) != 1:
            raise SearchError("contract violated: fixed plus all candidates gives 0")
    if len(members) == 0:
        raise SearchError("no candidates to search")
    pos = _search_positions(oracle.query_mask, amask, smask, members, 0, len(members))
    s = int(members[pos - 1])
    if debug:
        below = smask & ((1 << (s - 1)) - 1)
        if oracle.query_mask(amask | below | (1 << (s - 1))) != 1:
            raise SearchError("search landed on a prefix that does not force 1")
        if pos > 1 and oracle.query_mask(amask | below) == 1:
            raise SearchError("search landed above the smallest closing prefix")
    return s


def _search_positions(query_mask, amask: int, smask: int, members, lo: int,
                      hi: int) -> int:
    """Binary search on prefix length; positions lo and hi are known 0 and 1."""
    while hi - lo > 1:
        mid = (lo + hi) // 2
        s_mid = int(members[mid - 1])
        if query_mask(amask | (smask & ((1 << s_mid) - 1))):
            hi = mid
        else:
            lo = mid
    return hi


def _grow_certificate(query_mask, start_mask: int, n: int, debug: bool):
    """Shared loop: grow A until fixing it alone forces the value 1.

    query_mask must be oriented so that the target value at the reference
    is 1 and the candidate pool is `start_mask`. Returns the final mask and
    the coordinates in the order added (strictly decreasing).
    """
    amask = 0
    smask = start_mask
    members = mask_to_members(start_mask, n)
    added: list[int] = []
    while True:
        if query_mask(amask):
            return amask, added
        if debug and query_mask(amask | smask) != 1:
            raise SearchError("loop invariant broken: remaining candidates "
                              "cannot force the value")
        m = len(members)
        if m == 0:
            raise SearchError("candidate pool exhausted without certifying; "
                              "is the function monotone?")
        pos = _search_positions(query_mask, amask, smask, members, 0, m)
        s = int(members[pos - 1])
        amask |= 1 << (s - 1)
        added.append(s)
        members = members[: pos - 1]
        smask &= (1 << (s - 1)) - 1


def certify_binary(f, x: Point, *, debug: bool = False) -> CertifyResult:
    """Minimal certificate for a boolean monotone f at x.

    Accepts a MonotoneFunction or a CountingOracle; queries_used is the
    number of oracle evaluations this call performed, at most
    k * (1 + ceil(log2 n)) + 2 for a size-k certificate. debug adds
    invariant checks that cost extra queries.
    """
    oracle = _as_oracle(f)
    _require_boolean(oracle, "certify_binary")
    _require_dim(oracle, x)
    start = oracle.count
    value = oracle.query(x)
    n = oracle.n
    full = (1 << n) - 1
    if value == 1:
        amask, added = _grow_certificate(oracle.query_mask, x.mask, n, debug)
    else:
        def mirrored(mask: int) -> int:
            return 1 - oracle.query_mask(full ^ mask)

        amask, added = _grow_certificate(mirrored, full ^ x.mask, n, debug)
    cert = Certificate(IndexSet(n, amask), x, value)
    return CertifyResult(cert, oracle.count - start, len(added), "binary",
                         tuple(added))


def certify_real(f, x: Point, *, debug: bool = False) -> CertifyResult:
    """Certificate for a real-valued monotone f at x, at most twice optimal.

    Thresholds f against its value at x with ties broken low, then high;
    each thresholding is certified as in the boolean case and the union of
    the two certificates pins the exact value. The reference evaluation is
    shared: one query establishes the pivot for both rounds.
    """
    oracle = _as_oracle(f)
    _require_dim(oracle, x)
    start = oracle.count
    pivot = oracle.query(x)
    n = oracle.n
    full = (1 << n) - 1
    union = 0
    added_all: list[int] = []
    for tie in (0, 1):
        def thresholded(mask: int, _tie=tie):
            v = oracle.query_mask(mask)
            if v < pivot:
                return 0
            if v > pivot:
                return 1
            return _tie

        if thresholded(x.mask) == 1:
            amask, added = _grow_certificate(thresholded, x.mask, n, debug)
        else:
            def mirrored(mask: int, _q=thresholded):
                return 1 - _q(full ^ mask)

            amask, added = _grow_certificate(mirrored, full ^ x.mask, n, debug)
        union |= amask
        added_all.extend(added)
    cert = Certificate(IndexSet(n, union), x, pivot)
    return CertifyResult(cert, oracle.count - start, len(added_all), "real",
                         tuple(added_all))


def angluin_certify(f, x: Point) -> CertifyResult:
    """Local-search baseline: delete coordinates from the full support.

    Sweeps the support (or, for a reference value of 0, the zero set)
    in ascending order, dropping each coordinate whose deletion still
    forces the value. The result is a minimal certificate; the cost is one
    query per swept coordinate plus the reference evaluation. iterations
    counts successful deletions.
    """
    oracle = _as_oracle(f)
    _require_boolean(oracle, "angluin_certify")
    _require_dim(oracle, x)
    start = oracle.count
    value = oracle.query(x)
    n = oracle.n
    full = (1 << n) - 1
    if value == 1:
        query_mask = oracle.query_mask
        base = x.mask
    else:
        def query_mask(mask: int) -> int:
            return 1 - oracle.query_mask(full ^ mask)

        base = full ^ x.mask
    amask = base
    deletions = 0
    for c in mask_to_members(base, n):
        bit = 1 << (int(c) - 1)
        if query_mask(amask & ~bit):
            amask &= ~bit
            deletions += 1
    cert = Certificate(IndexSet(n, amask), x, value)
    return CertifyResult(cert, oracle.count - start, deletions, "angluin")
