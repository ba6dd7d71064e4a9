from __future__ import annotations

import random
from collections import Counter

import pytest
from scipy.stats import chisquare

from permbox.twobyfour.class_sampler import (
    ConstructionTrace,
    TraceStep,
    build_dp,
    enumerate_traces,
    get_sampler_class,
    realize,
    sample,
    sample_many,
    sample_trace,
    slot_statistic,
    unimodal_block,
)
from permbox.twobyfour.enumeration_oracle import CountQuery, enumerate_class
from permbox.twobyfour.gf_catalog import coefficients
from permbox.twobyfour.perm_core import avoids_all


def _class_members(class_id: str, n: int) -> set[tuple[int, ...]]:
    basis = get_sampler_class(class_id).basis
    return {p.values for p in enumerate_class(CountQuery(basis=basis, n=n))}


def test_dp_small_marginals() -> None:
    assert build_dp('fan', 3).marginals() == [1, 1, 2, 6]
    assert build_dp('flag', 3).marginals() == [1, 1, 2, 6]


def test_dp_marginals_match_catalog_to_200() -> None:
    for class_id, entry_id in [('fan', 'A'), ('flag', 'J')]:
        dp = build_dp(class_id, 200)
        assert dp.marginals() == coefficients(entry_id, 200), class_id


def test_dp_structural_zeros() -> None:
    dp = build_dp('flag', 12)
    for n in range(13):
        assert all(dp.count(n, k) == 0 for k in range(n + 2, n + 5))
    assert dp.count(0, 1) == 1
    with pytest.raises(ValueError):
        build_dp('fan', -1)


@pytest.mark.parametrize('class_id', ['fan', 'flag'])
def test_traces_realize_bijectively_to_8(class_id: str) -> None:
    for n in range(0, 9):
        realized = [realize(trace, class_id).values for trace in enumerate_traces(class_id, n)]
        assert len(realized) == len(set(realized)), n
        assert set(realized) == _class_members(class_id, n), n


@pytest.mark.parametrize('class_id', ['fan', 'flag'])
def test_slot_table_is_distribution_of_slot_statistic(class_id: str) -> None:
    dp = build_dp(class_id, 8)
    for n in range(0, 9):
        stats = Counter(
            slot_statistic(realize(trace, class_id), class_id) for trace in enumerate_traces(class_id, n)
        )
        for k in range(n + 2):
            assert stats.get(k, 0) == dp.count(n, k), (n, k)


def test_flag_traces_at_3() -> None:
    realized = {realize(t, 'flag').values for t in enumerate_traces('flag', 3)}
    assert len(realized) == 6
    single = realize(ConstructionTrace(initial_size=0, steps=(TraceStep(j=0, size=3, config=0),)), 'flag')
    assert single.values == (1, 3, 2)
    mixed = realize(ConstructionTrace(initial_size=0, steps=(TraceStep(j=0, size=3, config=1),)), 'flag')
    assert mixed.values == (1, 2, 3)


def test_fan_examples() -> None:
    assert realize(ConstructionTrace(initial_size=1), 'fan').values == (1,)
    assert sample('fan', 1, seed=123).values == (1,)
    assert unimodal_block(3, 0b00) == [1, 2, 3]
    assert unimodal_block(3, 0b11) == [3, 2, 1]


def test_malformed_traces() -> None:
    with pytest.raises(ValueError):
        realize(ConstructionTrace(initial_size=2, initial_config=1), 'fan')
    with pytest.raises(ValueError):
        realize(ConstructionTrace(initial_size=1, steps=(TraceStep(j=1, size=1),)), 'fan')
    with pytest.raises(ValueError):
        realize(ConstructionTrace(initial_size=1), 'flag')
    with pytest.raises(ValueError):
        realize(ConstructionTrace(initial_size=0, steps=(TraceStep(j=0, size=2, config=1),)), 'flag')
    with pytest.raises(ValueError):
        get_sampler_class('mix')


def test_sampling_is_deterministic_given_seed() -> None:
    a = sample_many('flag', 40, 5, seed=11)
    b = sample_many('flag', 40, 5, seed=11)
    assert a == b
    assert sample('flag', 40, seed=11) == a[0]


def test_flag_length_two_is_balanced() -> None:
    seen = Counter(p.values for p in sample_many('flag', 2, 2000, seed=5))
    assert set(seen) == {(1, 2), (2, 1)}
    assert abs(seen[(1, 2)] - 1000) < 150


def test_sample_trace_lengths() -> None:
    dp = build_dp('fan', 30)
    rng = random.Random(2)
    for _ in range(50):
        assert sample_trace(dp, 30, rng).length == 30


@pytest.mark.parametrize(('class_id', 'expected'), [('fan', 924), ('flag', 1265)])
def test_uniformity_chi_square_at_7(class_id: str, expected: int) -> None:
    members = sorted(_class_members(class_id, 7))
    assert len(members) == expected
    seen = Counter(p.values for p in sample_many(class_id, 7, 100_000, seed=2024))
    assert set(seen) <= set(members)
    observed = [seen.get(m, 0) for m in members]
    assert chisquare(observed).pvalue > 0.001


@pytest.mark.parametrize('class_id', ['fan', 'flag'])
def test_large_samples_are_members(class_id: str) -> None:
    basis = get_sampler_class(class_id).basis
    for perm in sample_many(class_id, 200, 100, seed=99):
        assert len(perm) == 200
        assert avoids_all(perm, basis)


def test_oracle_backed_classes() -> None:
    perms = sample_many('P2', 6, 10, seed=1)
    assert len(perms) == 10
    with pytest.raises(ValueError):
        sample_many('P1', 11, 1, seed=1)
