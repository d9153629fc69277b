"""The verified benchmark sweep and its CSV surface."""

import pytest

from monocert import ContractError, ceil_log2, run_bench
from monocert.bench import ADVERSARY_CSV_HEADER, CSV_HEADER, adversary_csv, to_csv
from monocert import iter_hardness_trials


def strip_timing(csv: str) -> list[str]:
    return [line.rsplit(",", 1)[0] for line in csv.strip().splitlines()]


def test_sweep_shape_and_verification():
    records = run_bench([8], trials=2, seed=1)
    # 2 instances x (ones target + a zero target) x 2 algorithms
    assert len(records) == 8
    for r in records:
        assert r.n == 8
        assert r.repr == "dnf"
        assert r.valid and r.minimal
        assert r.algorithm in ("binary", "angluin")
        assert r.C_f >= r.C_f_x >= 0
        assert r.query_bound == r.cert_size * (1 + ceil_log2(r.n)) + 2
        if r.algorithm == "binary":
            assert r.queries_used <= r.query_bound
            assert r.cert_size <= r.C_f


def test_rows_pair_binary_with_baseline():
    records = run_bench([8, 9], trials=2, seed=3)
    by_key = {}
    for i, r in enumerate(records):
        by_key.setdefault((r.seed, r.n, i // 2), set()).add(r.algorithm)
    assert all(algos == {"binary", "angluin"} for algos in by_key.values())


def test_large_n_skips_ground_truth_columns():
    records = run_bench([16], trials=1, seed=2)
    assert records
    for r in records:
        assert r.C_f == -1 and r.C_f_x == -1
        assert r.valid and r.minimal


def test_deterministic_modulo_wall_time():
    a = to_csv(run_bench([8, 10], trials=2, seed=7))
    b = to_csv(run_bench([8, 10], trials=2, seed=7))
    assert strip_timing(a) == strip_timing(b)
    c = to_csv(run_bench([8, 10], trials=2, seed=8))
    assert strip_timing(a) != strip_timing(c)


def test_csv_header_and_booleans():
    csv = to_csv(run_bench([8], trials=1, seed=1))
    lines = csv.strip().splitlines()
    assert lines[0] == CSV_HEADER
    assert CSV_HEADER == ("seed,n,repr,algorithm,cert_size,C_f,C_f_x,"
                          "queries_used,query_bound,valid,minimal,wall_time_us")
    for line in lines[1:]:
        fields = line.split(",")
        assert len(fields) == 12
        assert fields[9] == "true" and fields[10] == "true"
    assert csv.endswith("\n")


def test_algorithm_subset():
    records = run_bench([8], trials=1, seed=1, algorithms=("binary",))
    assert {r.algorithm for r in records} == {"binary"}
    assert len(records) == 2


def test_bad_arguments_rejected():
    with pytest.raises(ContractError):
        run_bench([8], trials=1, seed=1, algorithms=("simplex",))
    with pytest.raises(ContractError):
        run_bench([8], trials=0, seed=1)


def test_adversary_csv_layout():
    records = list(iter_hardness_trials(8, 2, 5, seed=4))
    csv = adversary_csv(records)
    lines = csv.strip().splitlines()
    assert lines[0] == ADVERSARY_CSV_HEADER == "trial,queries,planted"
    assert len(lines) == 6
    first = lines[1].split(",")
    assert first[0] == "0"
    assert int(first[1]) >= 1
    planted = tuple(int(i) for i in first[2].split("-"))
    assert planted == records[0].planted.members
