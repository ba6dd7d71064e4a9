"""
operations — точная равномерная выборка и полный перебор трасс.

Выборка: одно целое r = randrange(c_n) раскладывается по таблице сверху вниз.
Остаток после каждого выбора равномерен в поддереве, поэтому одного
случайного числа хватает на всю трассу.
"""

from __future__ import annotations

import random
from typing import Iterator

from tqdm.auto import tqdm

from permbox.twobyfour.class_sampler.contracts import ConstructionTrace, SlotDP, TraceStep, mixed_weight
from permbox.twobyfour.class_sampler.dp import cached_dp
from permbox.twobyfour.class_sampler.realize import realize
from permbox.twobyfour.class_sampler.registry import get_sampler_class, is_oracle_class
from permbox.twobyfour.perm_core import Permutation


def _pick(row: tuple[int, ...], start: int, r: int) -> tuple[int, int]:
    for k in range(start, len(row)):
        if r < row[k]:
            return k, r
        r -= row[k]
    raise RuntimeError("random index exceeds slot table row total")


def sample_trace(dp: SlotDP, n: int, rng: random.Random) -> ConstructionTrace:
    cls = get_sampler_class(dp.class_id)
    total = dp.marginal(n)
    if total == 0:
        raise ValueError(f"class {cls.id} has no permutations of length {n}")
    k, r = _pick(dp.table[n], 0, rng.randrange(total))

    steps: list[TraceStep] = []
    while True:
        seed = cls.seed_weight(n, k)
        if r < seed:
            break
        r -= seed
        for s in range(1, min(k, n) + 1):
            j = k - s
            pool = dp.suffix[n - s][j + 1]
            block = cls.step_weight(s) * pool
            if r < block:
                config, r = divmod(r, pool)
                steps.append(TraceStep(j=j, size=s, config=config))
                n = n - s
                k, r = _pick(dp.table[n], j + 1, r)
                break
            r -= block
        else:
            raise RuntimeError(f"slot table of {cls.id} is inconsistent at n={n}, k={k}")

    steps.reverse()
    return ConstructionTrace(initial_size=n, initial_config=r, steps=tuple(steps))


def sample_many(
    class_id: str,
    n: int,
    count: int,
    seed: int | None = None,
    show_progress: bool = False,
) -> list[Permutation]:
    """count независимых равномерных перестановок длины n из одного генератора random.Random(seed)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if count < 0:
        raise ValueError("count must be >= 0")
    if is_oracle_class(class_id):
        return _sample_by_enumeration(class_id, n, count, seed)

    cls = get_sampler_class(class_id)
    dp = cached_dp(cls.id, n)
    rng = random.Random(seed)
    out: list[Permutation] = []
    for _ in tqdm(range(count), desc=f"sample {cls.id} n={n}", leave=False, disable=not show_progress):
        out.append(realize(sample_trace(dp, n, rng), cls.id))
    return out


def sample(class_id: str, n: int, seed: int | None = None) -> Permutation:
    return sample_many(class_id, n, 1, seed)[0]


def _sample_by_enumeration(class_id: str, n: int, count: int, seed: int | None) -> list[Permutation]:
    from permbox.twobyfour.enumeration_oracle import sample_uniform_small
    from permbox.twobyfour.gf_catalog import get_entry, oracle_query

    return sample_uniform_small(oracle_query(get_entry(class_id), n), count, seed)


def enumerate_traces(class_id: str, n: int) -> Iterator[ConstructionTrace]:
    """Все взвешенные трассы суммарной длины n (по одной на конфигурацию)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    cls = get_sampler_class(class_id)

    def extend(slots: int, rest: int, steps: tuple[TraceStep, ...]) -> Iterator[tuple[TraceStep, ...]]:
        if rest == 0:
            yield steps
            return
        for s in range(1, rest + 1):
            for j in range(slots):
                for config in range(cls.step_weight(s)):
                    yield from extend(j + s, rest - s, steps + (TraceStep(j=j, size=s, config=config),))

    if cls.initial_block:
        starts = [(m, c) for m in range(n + 1) for c in range(mixed_weight(m))]
    else:
        starts = [(0, 0)]
    for m, config in starts:
        slots = m if cls.initial_block else cls.empty_slots
        for steps in extend(slots, n - m, ()):
            yield ConstructionTrace(initial_size=m, initial_config=config, steps=steps)
