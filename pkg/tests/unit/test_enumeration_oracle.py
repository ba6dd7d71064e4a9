from __future__ import annotations

from itertools import permutations

import pytest

from permbox.twobyfour.enumeration_oracle import (
    CountQuery,
    OracleOptions,
    blocked_values,
    count,
    count_frame,
    count_table,
    enumerate_class,
    extend,
    make_plans,
    sample_uniform_small,
)
from permbox.twobyfour.perm_core import avoids_all, contains, parse_basis, parse_pattern_list


def _brute(basis: str, n: int, must: str = '') -> list[tuple[int, ...]]:
    b = parse_basis(basis)
    m = parse_pattern_list(must)
    return [
        p
        for p in permutations(range(1, n + 1))
        if avoids_all(p, b) and all(contains(p, q) for q in m)
    ]


def test_query_validation() -> None:
    with pytest.raises(ValueError):
        CountQuery(basis=parse_basis('123'), n=-1)
    with pytest.raises(ValueError):
        OracleOptions(threads=0)
    q = CountQuery(basis=parse_basis('123'), n=3)
    assert q.with_n(5).n == 5


def test_extend_and_blocked_values() -> None:
    assert extend((1, 2), 1) == (2, 3, 1)
    assert extend((2, 1), 3) == (2, 1, 3)
    blocked = blocked_values((1, 2), make_plans([(1, 2, 3)]))
    assert blocked[1:] == [False, False, True]
    # длина 1 в базисе запрещает всё
    assert blocked_values((), make_plans([(1,)]))[1:] == [True]


def test_small_classic_counts() -> None:
    assert count(CountQuery(basis=parse_basis('123'), n=5)) == 42
    assert count(CountQuery(basis=parse_basis('12'), n=6)) == 1
    assert count_table(CountQuery(basis=parse_basis('1'), n=3)) == [1, 0, 0, 0]


def test_count_table_examples() -> None:
    table = count_table(CountQuery(basis=parse_basis('4123,1324'), n=6))
    assert table == [1, 1, 2, 6, 22, 87, 352]
    must = CountQuery(basis=parse_basis('4123,1243'), must_contain=parse_pattern_list('1423'), n=4)
    assert count_table(must)[-1] == 1
    assert count_table(CountQuery(basis=parse_basis('4123,1324'), n=0)) == [1]


def test_count_matches_brute_force() -> None:
    for basis, must in [('4123,1342', ''), ('4123,1243', '1423'), ('4123,1324', '2413'), ('231', '')]:
        for n in range(0, 8):
            query = CountQuery(basis=parse_basis(basis), must_contain=parse_pattern_list(must), n=n)
            assert count(query) == len(_brute(basis, n, must)), (basis, must, n)


def test_enumerate_is_sorted_and_exact() -> None:
    query = CountQuery(basis=parse_basis('4123,1342'), n=6)
    perms = enumerate_class(query)
    assert [p.values for p in perms] == _brute('4123,1342', 6)
    assert perms == sorted(perms)


def test_enumerate_cap() -> None:
    query = CountQuery(basis=parse_basis('132'), n=5)
    with pytest.raises(ValueError, match='count mode'):
        enumerate_class(query, OracleOptions(enumerate_cap=10))
    assert len(enumerate_class(query, OracleOptions(enumerate_cap=42))) == 42


def test_split_depth_does_not_change_results() -> None:
    query = CountQuery(basis=parse_basis('4123,1243'), n=8)
    base = count_table(query)
    for depth in (0, 1, 5, 12):
        assert count_table(query, OracleOptions(split_depth=depth)) == base


def test_threads_give_identical_results() -> None:
    query = CountQuery(basis=parse_basis('4123,1243'), n=8)
    assert count_table(query, OracleOptions(threads=2)) == count_table(query)
    small = query.with_n(6)
    assert enumerate_class(small, OracleOptions(threads=2)) == enumerate_class(small)


def test_sample_uniform_small() -> None:
    query = CountQuery(basis=parse_basis('4123,1342'), n=7)
    members = set(p.values for p in enumerate_class(query))
    first = sample_uniform_small(query, 25, seed=3)
    assert first == sample_uniform_small(query, 25, seed=3)
    assert all(p.values in members for p in first)
    with pytest.raises(ValueError):
        sample_uniform_small(query.with_n(11), 1, seed=0)


def test_count_frame() -> None:
    frame = count_frame(CountQuery(basis=parse_basis('123'), n=4))
    assert frame['count'].tolist() == [1, 1, 2, 5, 14]
