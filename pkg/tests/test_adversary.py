"""Planted indicators and the shortest-certificate scan experiment."""

import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from monocert import (
    CapacityError,
    ContractError,
    CountingOracle,
    ExhaustionError,
    IndexSet,
    Point,
    cert_complexity_at,
    exhaustive_shortest_cert,
    hardness_experiment,
    is_certificate,
    is_monotone,
    iter_hardness_trials,
    make_planted_indicator,
    make_threshold,
    point_of,
    stats_from_trials,
)


class TestPlantedIndicator:
    def test_four_value_cases(self):
        f = make_planted_indicator(4, 2, [1, 3])
        assert f(Point.ones(4)) == 1
        assert f(Point.parse("1010")) == 1
        assert f(Point.parse("1100")) == 0
        assert f(Point.parse("1000")) == 0
        assert f(Point.zeros(4)) == 0

    def test_monotone_for_every_level(self):
        for k in range(1, 5):
            f = make_planted_indicator(5, k, list(range(1, k + 1)))
            assert is_monotone(f)

    def test_complexity_at_the_top_equals_the_level(self):
        f = make_planted_indicator(6, 3, [1, 4, 5])
        assert cert_complexity_at(f, Point.ones(6)).value == 3

    def test_level_bounds(self):
        with pytest.raises(ContractError):
            make_planted_indicator(5, 0, [])
        with pytest.raises(ContractError):
            make_planted_indicator(5, 5, [1, 2, 3, 4, 5])

    @given(st.integers(3, 10), st.data())
    @settings(max_examples=40)
    def test_unique_minimum_certificate_is_the_planted_set(self, n, data):
        k = data.draw(st.integers(1, n - 1))
        planted = data.draw(st.permutations(range(1, n + 1)))[:k]
        f = make_planted_indicator(n, k, planted)
        top = Point.ones(n)
        r = cert_complexity_at(f, top)
        assert r.value == k
        assert set(r.witness.members) == set(planted)
        assert is_certificate(f, top, r.witness, "exhaustive")


class TestShortestCertScan:
    def test_lexicographically_first_plant_costs_one_query(self):
        f = make_planted_indicator(5, 2, [1, 2])
        cert, queries = exhaustive_shortest_cert(f, Point.ones(5), 2)
        assert queries == 1
        assert cert.indices.members == (1, 2)
        assert cert.value == 1

    def test_lexicographically_last_plant_costs_everything(self):
        f = make_planted_indicator(5, 2, [4, 5])
        cert, queries = exhaustive_shortest_cert(f, Point.ones(5), 2)
        assert queries == math.comb(5, 2)
        assert cert.indices.members == (4, 5)

    def test_queries_counted_on_the_oracle(self):
        f = make_planted_indicator(6, 2, [3, 5])
        oracle = CountingOracle(f)
        _, queries = exhaustive_shortest_cert(oracle, Point.ones(6), 2)
        assert oracle.count == queries

    def test_scan_restricted_to_the_support(self):
        f = make_planted_indicator(6, 2, [2, 4])
        x = point_of(IndexSet.of([2, 3, 4], 6), 6)
        cert, queries = exhaustive_shortest_cert(f, x, 2)
        assert cert.indices.members == (2, 4)
        assert queries <= math.comb(3, 2)

    def test_shuffle_is_deterministic_in_the_seed(self):
        f = make_planted_indicator(8, 2, [3, 7])
        x = Point.ones(8)
        _, q1 = exhaustive_shortest_cert(f, x, 2, order=41)
        _, q2 = exhaustive_shortest_cert(f, x, 2, order=41)
        _, q3 = exhaustive_shortest_cert(f, x, 2, order=random.Random(41))
        assert q1 == q2 == q3

    def test_exhaustion_raises(self):
        f = make_threshold(4, 3)
        with pytest.raises(ExhaustionError):
            exhaustive_shortest_cert(f, Point.ones(4), 2)

    def test_subset_size_validated(self):
        f = make_planted_indicator(5, 2, [1, 2])
        with pytest.raises(ContractError):
            exhaustive_shortest_cert(f, Point.ones(5), -1)


class TestHardnessTrials:
    def test_records_are_deterministic(self):
        a = list(iter_hardness_trials(8, 2, 20, seed=9))
        b = list(iter_hardness_trials(8, 2, 20, seed=9))
        assert [(r.trial, r.queries, r.planted.members) for r in a] == \
            [(r.trial, r.queries, r.planted.members) for r in b]

    def test_record_shape(self):
        total = math.comb(8, 2)
        for rec in iter_hardness_trials(8, 2, 30, seed=5):
            assert rec.planted.size == 2
            assert 1 <= rec.queries <= total

    def test_different_seeds_move_the_plants(self):
        a = [r.planted.members for r in iter_hardness_trials(10, 2, 12, seed=1)]
        b = [r.planted.members for r in iter_hardness_trials(10, 2, 12, seed=2)]
        assert a != b

    def test_stats_ordering_invariant(self):
        stats = hardness_experiment(10, 2, 40, seed=3)
        assert 1 <= stats.min_queries <= stats.mean_queries \
            <= stats.max_queries <= stats.total_subsets
        assert stats.total_subsets == math.comb(10, 2)
        assert stats.trials == 40

    def test_single_trial_collapses_the_stats(self):
        stats = hardness_experiment(9, 2, 1, seed=11)
        assert stats.min_queries == stats.max_queries == stats.mean_queries

    def test_stats_from_records_match_experiment(self):
        records = list(iter_hardness_trials(9, 2, 25, seed=6))
        direct = stats_from_trials(9, 2, 6, records)
        assert direct == hardness_experiment(9, 2, 25, seed=6)

    def test_mean_tracks_the_uniform_reference(self):
        stats = hardness_experiment(12, 2, 400, seed=1)
        reference = (math.comb(12, 2) + 1) / 2  # 33.5
        assert abs(stats.mean_queries - reference) <= 0.15 * reference

    def test_level_validated(self):
        with pytest.raises(ContractError):
            list(iter_hardness_trials(8, 0, 5, seed=1))
        with pytest.raises(ContractError):
            list(iter_hardness_trials(8, 8, 5, seed=1))
        with pytest.raises(ContractError):
            list(iter_hardness_trials(8, 2, 0, seed=1))

    def test_capacity_on_huge_subset_spaces(self):
        with pytest.raises(CapacityError):
            list(iter_hardness_trials(50, 5, 1, seed=1))
