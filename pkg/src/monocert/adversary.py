"""Why finding a shortest certificate is expensive even when one is short.

The planted indicator family has certificate complexity k at the all-ones
point, but the smallest certificate is the planted set itself, and any
procedure restricted to size-k probes cannot distinguish candidates until
it queries the right one. Shuffling the probe order uniformly makes the
hitting time uniform on 1..C(n, k), so the expected cost is
(C(n, k) + 1) / 2 queries despite the certificate having size k.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .bitops import mask_to_members, members_to_mask, mix64
from .errors import CapacityError, ContractError, DimensionError, ExhaustionError
from .model import Certificate, IndexSet, MonotoneFunction, Point, make_indicator
from .oracle import CountingOracle

SUBSET_SCAN_CAP = 10 ** 6


def make_planted_indicator(n: int, k: int, planted) -> MonotoneFunction:
    """The hard instance: a weight-k indicator with 1 <= k <= n-1.

    Delegates to make_indicator after range-checking k; the endpoints are
    excluded because they collapse to threshold functions with nothing
    planted.
    """
    if not isinstance(k, int) or not 1 <= k <= n - 1:
        raise ContractError(f"level {k!r} outside 1..{n - 1}")
    return make_indicator(n, k, planted)


def exhaustive_shortest_cert(f, x: Point, k: int,
                             order="lex") -> tuple[Certificate, int]:
    """Scan size-k subsets of x's support until one certifies the value 1.

    order is "lex" for lexicographic, or an int seed or random.Random for
    a uniform shuffle (shuffling materializes the subset list, capped at
    10**6 entries). Each probe is one oracle query; the scan stops at the
    first subset s with f(x restricted to s) = 1, so for monotone f the
    result is a certificate of size k. Raises ExhaustionError when no
    size-k subset certifies.
    """
    oracle = f if isinstance(f, CountingOracle) else CountingOracle(f)
    if x.n != oracle.n:
        raise DimensionError(f"point on {x.n} coordinates, function takes {oracle.n}")
    if not isinstance(k, int) or k < 0:
        raise ContractError(f"subset size {k!r} must be a nonnegative integer")
    members = [int(i) for i in mask_to_members(x.mask, x.n)]
    start = oracle.count
    combos: Iterator[tuple[int, ...]] = combinations(members, k)
    if order != "lex":
        rng = order if isinstance(order, random.Random) else random.Random(order)
        total = math.comb(len(members), k)
        if total > SUBSET_SCAN_CAP:
            raise CapacityError(
                f"{total} size-{k} subsets exceed the shuffle cap of {SUBSET_SCAN_CAP}")
        pool = list(combos)
        rng.shuffle(pool)
        combos = iter(pool)
    for combo in combos:
        smask = members_to_mask(combo)
        if oracle.query_mask(smask) == 1:
            cert = Certificate(IndexSet(x.n, smask), x, 1)
            return cert, oracle.count - start
    raise ExhaustionError(
        f"no size-{k} subset of the support certifies; "
        f"{oracle.count - start} queries spent")


@dataclass(frozen=True, slots=True)
class TrialRecord:
    """One shuffled scan: which set was planted and what it cost to find."""

    trial: int
    planted: IndexSet
    queries: int


@dataclass(frozen=True, slots=True)
class HardnessTrialStats:
    """Aggregate of a batch of shuffled scans against random planted sets."""

    n: int
    k: int
    trials: int
    mean_queries: float
    min_queries: int
    max_queries: int
    total_subsets: int
    seed: int


def iter_hardness_trials(n: int, k: int, trials: int,
                         seed: int) -> Iterator[TrialRecord]:
    """Run shuffled scans one at a time, deterministically in the seed.

    Every trial derives its own generator from (seed, trial), plants a
    uniform size-k set, and scans size-k subsets of the all-ones support
    in a fresh uniform order.
    """
    if not isinstance(k, int) or not 1 <= k <= n - 1:
        raise ContractError(f"level {k!r} outside 1..{n - 1}")
    if trials < 1:
        raise ContractError(f"need at least one trial, got {trials}")
    total = math.comb(n, k)
    if total > SUBSET_SCAN_CAP:
        raise CapacityError(
            f"{total} size-{k} subsets exceed the scan cap of {SUBSET_SCAN_CAP}")
    ones = Point.ones(n)
    for t in range(trials):
        rng = random.Random(mix64(seed, t))
        planted = sorted(rng.sample(range(1, n + 1), k))
        f = make_planted_indicator(n, k, planted)
        oracle = CountingOracle(f)
        cert, queries = exhaustive_shortest_cert(oracle, ones, k, order=rng)
        if cert.indices.members != tuple(planted):
            raise AssertionError("internal: scan hit a subset other than the planted one")
        yield TrialRecord(t, IndexSet.of(planted, n), queries)


def stats_from_trials(n: int, k: int, seed: int,
                      records) -> HardnessTrialStats:
    """Aggregate TrialRecords into HardnessTrialStats."""
    queries = [rec.queries for rec in records]
    if not queries:
        raise ContractError("no trial records to aggregate")
    return HardnessTrialStats(
        n=n, k=k, trials=len(queries),
        mean_queries=sum(queries) / len(queries),
        min_queries=min(queries),
        max_queries=max(queries),
        total_subsets=math.comb(n, k),
        seed=seed,
    )


def hardness_experiment(n: int, k: int, trials: int, seed: int) -> HardnessTrialStats:
    """Measure the cost of shuffled shortest-certificate scans.

    The hitting index is uniform on 1..C(n, k), so mean_queries should
    land near (C(n, k) + 1) / 2 for enough trials.
    """
    return stats_from_trials(n, k, seed,
                             list(iter_hardness_trials(n, k, trials, seed)))
