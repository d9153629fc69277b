"""Seeded benchmark sweeps comparing the certifier with the baseline.

Each (n, trial) pair draws a random monotone DNF from a seed derived
deterministically from the sweep seed, certifies at the all-ones point
and, when the function has a zero anywhere, at a seeded random input with
value 0 (exercising the mirror reduction). Every emitted record has been
verified: the certificate is valid and minimal, and the binary certifier
respected its query bound. Violations abort the sweep.

Output rows are deterministic for a fixed invocation except for the wall
clock column.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from typing import Iterable, Sequence

from .brute import cert_complexity, cert_complexity_at, is_certificate, is_minimal
from .bitops import ceil_log2, mix64
from .certify import angluin_certify, certify_binary
from .errors import ContractError, VerificationError
from .model import MonotoneFunction, Point, random_monotone_dnf
from .oracle import CountingOracle

BRUTE_MAX_N = 14

CSV_HEADER = ("seed,n,repr,algorithm,cert_size,C_f,C_f_x,queries_used,"
              "query_bound,valid,minimal,wall_time_us")

ADVERSARY_CSV_HEADER = "trial,queries,planted"

_ALGORITHMS = {"binary": certify_binary, "angluin": angluin_certify}


@dataclass(frozen=True, slots=True)
class BenchRecord:
    """One verified certifier run; C_f and C_f_x are -1 when out of reach."""

    seed: int
    n: int
    repr: str
    algorithm: str
    cert_size: int
    C_f: int
    C_f_x: int
    queries_used: int
    query_bound: int
    valid: bool
    minimal: bool
    wall_time_us: int

    def csv_row(self) -> str:
        return ",".join([
            str(self.seed), str(self.n), self.repr, self.algorithm,
            str(self.cert_size), str(self.C_f), str(self.C_f_x),
            str(self.queries_used), str(self.query_bound),
            "true" if self.valid else "false",
            "true" if self.minimal else "false",
            str(self.wall_time_us),
        ])


def _zero_input(f: MonotoneFunction, seed: int) -> Point | None:
    """A seeded input with value 0, or None when f is constant 1."""
    if f.evaluate_mask(0) != 0:
        return None
    rng = random.Random(mix64(seed, 0xD))
    for _ in range(64):
        mask = rng.getrandbits(f.n)
        if f.evaluate_mask(mask) == 0:
            return Point(f.n, mask)
    return Point.zeros(f.n)


def _verified_record(f: MonotoneFunction, x: Point, algorithm: str,
                     seed: int, c_f: int, c_f_x: int) -> BenchRecord:
    oracle = CountingOracle(f)
    t0 = time.perf_counter()
    result = _ALGORITHMS[algorithm](oracle, x)
    wall_us = int((time.perf_counter() - t0) * 1e6)
    cert = result.certificate
    mode = "exhaustive" if f.n <= BRUTE_MAX_N else "monotone_fast"
    valid = is_certificate(f, x, cert.indices, mode)
    minimal = valid and is_minimal(f, x, cert.indices, mode)
    bound = len(cert) * (1 + ceil_log2(f.n)) + 2
    record = BenchRecord(
        seed=seed, n=f.n, repr=f.tag, algorithm=algorithm,
        cert_size=len(cert), C_f=c_f, C_f_x=c_f_x,
        queries_used=result.queries_used, query_bound=bound,
        valid=valid, minimal=minimal, wall_time_us=wall_us,
    )
    if not valid or not minimal:
        raise VerificationError(
            f"{algorithm} produced an invalid or non-minimal certificate on "
            f"seed {seed}, n {f.n}")
    if algorithm == "binary" and result.queries_used > bound:
        raise VerificationError(
            f"binary certifier exceeded its query bound on seed {seed}, n {f.n}: "
            f"{result.queries_used} > {bound}")
    return record


def run_bench(n_list: Sequence[int], trials: int, seed: int,
              num_minterms: int = 4, max_width: int = 4,
              algorithms: Iterable[str] = ("binary", "angluin")) -> list[BenchRecord]:
    """Run the sweep and return verified records in deterministic order."""
    algorithms = list(algorithms)
    for name in algorithms:
        if name not in _ALGORITHMS:
            raise ContractError(f"unknown algorithm {name!r}")
    if trials < 1:
        raise ContractError(f"need at least one trial, got {trials}")
    records = []
    for n in n_list:
        for trial in range(trials):
            trial_seed = mix64(seed, n, trial)
            f = random_monotone_dnf(n, num_minterms, min(max_width, n), trial_seed)
            c_f = cert_complexity(f).value if n <= BRUTE_MAX_N else -1
            targets = [Point.ones(n)]
            zero = _zero_input(f, trial_seed)
            if zero is not None:
                targets.append(zero)
            for x in targets:
                c_f_x = cert_complexity_at(f, x).value if n <= BRUTE_MAX_N else -1
                for name in algorithms:
                    records.append(
                        _verified_record(f, x, name, trial_seed, c_f, c_f_x))
    return records


def to_csv(records: Iterable[BenchRecord]) -> str:
    lines = [CSV_HEADER]
    lines.extend(r.csv_row() for r in records)
    return "\n".join(lines) + "\n"


def adversary_csv(records) -> str:
    """Per-trial CSV for the hardness experiment; planted sets use '-'."""
    lines = [ADVERSARY_CSV_HEADER]
    for rec in records:
        planted = "-".join(str(i) for i in rec.planted.members)
        lines.append(f"{rec.trial},{rec.queries},{planted}")
    return "\n".join(lines) + "\n"
