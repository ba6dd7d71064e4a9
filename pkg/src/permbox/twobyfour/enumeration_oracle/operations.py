"""
operations — подсчёт и перебор Av(B) с фильтром обязательных паттернов.

Все режимы идут через одну схему: префиксы длины split_depth строятся сразу,
затем поддеревья обходятся по одному (threads == 1) или пулом процессов.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from typing import Sequence

import pandas as pd
from tqdm.auto import tqdm

from permbox.twobyfour.enumeration_oracle.contracts import CountQuery, OracleOptions
from permbox.twobyfour.enumeration_oracle.search import (
    frontier,
    make_plans,
    to_permutations,
    walk_counts,
    walk_leaves,
)
from permbox.twobyfour.perm_core import Permutation

MAX_SAMPLE_LENGTH = 10

_Raw = tuple[tuple[int, ...], ...]


def _raw(query: CountQuery) -> tuple[_Raw, _Raw]:
    return (
        tuple(p.values for p in query.basis),
        tuple(p.values for p in query.must_contain),
    )


def _subtree_counts(args: tuple) -> list[int]:
    prefix, n_max, basis, must, count_from = args
    counts = [0] * (n_max + 1)
    walk_counts(prefix, n_max, make_plans(basis), must, counts, count_from)
    return counts


def _subtree_leaves(args: tuple) -> list[tuple[int, ...]]:
    prefix, n, basis, must, cap = args
    out: list[tuple[int, ...]] = []
    walk_leaves(prefix, n, make_plans(basis), must, out, cap)
    return out


def _run(worker, jobs: Sequence[tuple], options: OracleOptions, desc: str) -> list:
    pool: ProcessPoolExecutor | None = None
    if options.threads == 1 or len(jobs) <= 1:
        it = map(worker, jobs)
    else:
        pool = ProcessPoolExecutor(max_workers=options.threads)
        it = pool.map(worker, jobs, chunksize=max(1, len(jobs) // (4 * options.threads)))
    try:
        if options.show_progress:
            it = tqdm(it, total=len(jobs), desc=desc, unit="subtree")
        return list(it)
    finally:
        if pool is not None:
            pool.shutdown(cancel_futures=True)


def _counts(query: CountQuery, count_from: int, options: OracleOptions) -> list[int]:
    basis, must = _raw(query)
    n_max = query.n
    counts = [0] * (n_max + 1)
    depth = min(options.split_depth, n_max)
    prefixes = frontier(depth, make_plans(basis), must, counts, count_from)
    jobs = [(p, n_max, basis, must, count_from) for p in prefixes]
    for part in _run(_subtree_counts, jobs, options, f"count n<={n_max}"):
        for level, c in enumerate(part):
            counts[level] += c
    return counts


def count(query: CountQuery, options: OracleOptions | None = None) -> int:
    """|{sigma in S_n : sigma avoids B and contains every pattern of must_contain}|."""
    options = options or OracleOptions()
    return _counts(query, query.n, options)[query.n]


def count_table(query: CountQuery, options: OracleOptions | None = None) -> list[int]:
    """Счётчики для n = 0..query.n за один обход дерева."""
    options = options or OracleOptions()
    return _counts(query, 0, options)


def enumerate_class(query: CountQuery, options: OracleOptions | None = None) -> list[Permutation]:
    """Все перестановки запроса в лексикографическом порядке.

    ValueError, если их больше options.enumerate_cap.
    """
    options = options or OracleOptions()
    basis, must = _raw(query)
    depth = min(options.split_depth, query.n)
    prefixes = frontier(depth, make_plans(basis), must)
    cap = options.enumerate_cap
    jobs = [(p, query.n, basis, must, cap) for p in prefixes]
    rows: list[tuple[int, ...]] = []
    for part in _run(_subtree_leaves, jobs, options, f"enumerate n={query.n}"):
        rows.extend(part)
        if len(rows) > cap:
            raise ValueError(
                f"enumeration exceeds the cap of {cap} permutations; use count mode instead"
            )
    return to_permutations(rows)


def sample_uniform_small(query: CountQuery, count: int, seed: int | None = None) -> list[Permutation]:
    """Равномерная выборка с возвращением через полный перебор (n <= 10)."""
    if query.n > MAX_SAMPLE_LENGTH:
        raise ValueError(f"uniform sampling by enumeration supports n <= {MAX_SAMPLE_LENGTH}")
    if count < 0:
        raise ValueError("count must be >= 0")
    population = enumerate_class(query)
    if not population:
        raise ValueError(f"no permutations of length {query.n} in the class")
    rng = random.Random(seed)
    return [population[rng.randrange(len(population))] for _ in range(count)]


def count_frame(query: CountQuery, options: OracleOptions | None = None) -> pd.DataFrame:
    table = count_table(query, options)
    return pd.DataFrame({"n": range(len(table)), "count": table}, dtype=object)
