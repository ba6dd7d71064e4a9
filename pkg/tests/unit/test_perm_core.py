from __future__ import annotations

import random
from itertools import combinations, permutations

import pytest

from permbox.twobyfour.perm_core import (
    PatternBasis,
    Permutation,
    avoids_all,
    contains,
    format_pattern_list,
    format_permutation,
    grid_decompose,
    is_fan,
    left_to_right_minima,
    parse_basis,
    parse_pattern_list,
    parse_permutation,
    pattern_of,
    source_graph_decomposition,
    source_graph_patterns,
)
from permbox.twobyfour.perm_core.containment import ENDS_SEARCH_MIN_LENGTH, _embed_by_ends, _embed_dfs

FLAG_BASIS = parse_basis('4123,1243,1423')


def _naive_contains(values: tuple[int, ...], pattern: tuple[int, ...]) -> bool:
    return any(pattern_of(sub).values == pattern for sub in combinations(values, len(pattern)))


def test_permutation_validation() -> None:
    assert len(Permutation(())) == 0
    with pytest.raises(ValueError):
        Permutation((1, 1))
    with pytest.raises(ValueError):
        Permutation((0, 1))
    with pytest.raises(ValueError):
        Permutation((1, 3))


def test_permutation_symmetries() -> None:
    p = Permutation((3, 1, 5, 2, 4))
    assert p.inverse().values == (2, 4, 1, 5, 3)
    assert p.reverse().values == (4, 2, 5, 1, 3)
    assert p.complement().values == (3, 5, 1, 4, 2)
    assert p.inverse().inverse() == p


def test_notation_forms() -> None:
    assert parse_permutation('31524').values == (3, 1, 5, 2, 4)
    assert parse_permutation('3,1,5,2,4').values == (3, 1, 5, 2, 4)
    assert parse_permutation('').values == ()
    assert format_permutation(Permutation((3, 1, 2)), compact=True) == '312'
    assert format_permutation(Permutation((3, 1, 2))) == '3,1,2'
    ten = tuple(range(10, 0, -1))
    assert format_permutation(Permutation(ten), compact=True) == '10,9,8,7,6,5,4,3,2,1'

    pats = parse_pattern_list('4123, 1324')
    assert [p.values for p in pats] == [(4, 1, 2, 3), (1, 3, 2, 4)]
    long = parse_pattern_list('10,1,2,3,4,5,6,7,8,9;1,2')
    assert [len(p) for p in long] == [10, 2]
    assert format_pattern_list(pats) == '4123,1324'


def test_parse_errors() -> None:
    with pytest.raises(ValueError):
        parse_permutation('3,x,1')
    with pytest.raises(ValueError):
        parse_pattern_list('41a3')
    with pytest.raises(ValueError):
        parse_basis('')
    with pytest.raises(ValueError):
        parse_permutation('112')


def test_basis_is_minimized() -> None:
    basis = PatternBasis.of((1, 2, 3), (1, 2, 3, 4), (1, 2, 3))
    assert [p.values for p in basis] == [(1, 2, 3)]


def test_basis_keeps_written_order() -> None:
    basis = parse_basis('4123,1324')
    assert str(basis) == '4123,1324'
    assert basis == parse_basis('1324,4123')
    assert hash(basis) == hash(parse_basis('1324,4123'))
    assert str(parse_basis('4123,51234,1324')) == '4123,1324'


def test_pattern_of() -> None:
    assert pattern_of([40, 10, 30]).values == (3, 1, 2)
    with pytest.raises(ValueError):
        pattern_of([1, 1])


def test_contains_examples() -> None:
    assert contains((3, 1, 5, 2, 4), (1, 3, 2))
    assert not contains((3, 1, 5, 2, 4), (4, 1, 2, 3))
    assert contains((5, 1, 2, 3, 4), (4, 1, 2, 3))
    assert contains((1, 2), ())
    assert not contains((1, 2), (1, 2, 3))
    assert contains((2, 1), (1,))


def test_contains_matches_naive_on_s6() -> None:
    patterns = [(4, 1, 2, 3), (1, 3, 2, 4), (1, 4, 2, 3), (1, 3, 2), (2, 1)]
    for perm in permutations(range(1, 7)):
        for pat in patterns:
            assert contains(perm, pat) == _naive_contains(perm, pat), (perm, pat)


def test_ends_search_matches_dfs_on_long_inputs() -> None:
    rng = random.Random(20240101)
    patterns = [(4, 1, 2, 3), (1, 3, 2, 4), (1, 2, 4, 3), (3, 1, 5, 2, 4), (2, 1, 3)]
    n = ENDS_SEARCH_MIN_LENGTH + 4
    for _ in range(60):
        values = list(range(1, n + 1))
        rng.shuffle(values)
        perm = tuple(values)
        for pat in patterns:
            assert _embed_by_ends(perm, pat) == _embed_dfs(perm, pat), (perm, pat)


def test_ends_search_on_structured_members() -> None:
    # убывающая и возрастающая не содержат паттернов с подъёмом/спуском соответственно
    n = 24
    dec = tuple(range(n, 0, -1))
    inc = tuple(range(1, n + 1))
    assert not contains(dec, (1, 2, 3))
    assert contains(dec, (3, 2, 1))
    assert not contains(inc, (4, 1, 2, 3))
    assert contains(inc, (1, 2, 3, 4))


def test_avoids_all() -> None:
    assert avoids_all((1, 2, 3), FLAG_BASIS)
    assert not avoids_all((1, 4, 2, 3), FLAG_BASIS)


def test_left_to_right_minima_and_source_graphs() -> None:
    perm = (3, 1, 5, 2, 4)
    assert left_to_right_minima(perm) == (0, 1)
    decomposition = source_graph_decomposition(perm)
    assert decomposition.minima_positions == (0, 1)
    assert [g.positions for g in decomposition.graphs] == [(0, 2, 4), (1, 3)]
    assert [p.values for p in source_graph_patterns(perm)] == [(1, 3, 2), (1, 2)]
    assert is_fan((1, 3, 2))
    assert not is_fan((1, 2, 3))


def test_source_graphs_partition_positions() -> None:
    rng = random.Random(7)
    for n in range(1, 12):
        values = list(range(1, n + 1))
        rng.shuffle(values)
        graphs = source_graph_decomposition(values).graphs
        covered = sorted(p for g in graphs for p in g.positions)
        assert covered == list(range(n))
        for g in graphs:
            assert min(values[p] for p in g.positions) == values[g.minimum_position]


def test_grid_decompose_examples() -> None:
    ok = grid_decompose((3, 1, 2, 4, 5))
    assert ok.ok
    assert ok.split_value == 2
    bad = grid_decompose((1, 4, 2, 3))
    assert not bad.ok
    assert grid_decompose(()).ok


def test_grid_class_equals_flag_class_up_to_8() -> None:
    checked = 0
    for n in range(0, 9):
        for perm in permutations(range(1, n + 1)):
            assert grid_decompose(perm).ok == avoids_all(perm, FLAG_BASIS), perm
            checked += 1
    assert checked == 46234


def _random_perm(rng: random.Random, n: int) -> tuple[int, ...]:
    values = list(range(1, n + 1))
    rng.shuffle(values)
    return tuple(values)


def test_contains_is_transitive_on_random_triples() -> None:
    rng = random.Random(11)
    checked = 0
    for _ in range(3000):
        p = _random_perm(rng, rng.randint(0, 8))
        q = _random_perm(rng, rng.randint(0, len(p)))
        r = _random_perm(rng, rng.randint(0, len(q)))
        if contains(p, q) and contains(q, r):
            assert contains(p, r), (p, q, r)
            checked += 1
    assert checked > 0
