"""
dp — таблица c[n][k] каталитической рекурсии по числу слотов.

    c[n][k] = seed(n, k) + sum_{s=1..min(k,n)} w(s) * sum_{k' > k-s} c[n-s][k']

Внутренняя сумма — суффиксная сумма строки n - s, поэтому построение O(n^3).
"""

from __future__ import annotations

from functools import lru_cache

from tqdm.auto import trange

from permbox.twobyfour.class_sampler.contracts import SlotDP
from permbox.twobyfour.class_sampler.registry import get_sampler_class


def build_dp(class_id: str, n_max: int, show_progress: bool = False) -> SlotDP:
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    cls = get_sampler_class(class_id)
    width = n_max + 2
    table: list[list[int]] = []
    suffix: list[list[int]] = []
    weights = [0] + [cls.step_weight(s) for s in range(1, n_max + 1)]

    for n in trange(n_max + 1, desc=f"slot table {cls.id}", leave=False, disable=not show_progress):
        row = [cls.seed_weight(n, k) for k in range(width)]
        for k in range(1, n + 2):
            acc = 0
            for s in range(1, min(k, n) + 1):
                acc += weights[s] * suffix[n - s][k - s + 1]
            row[k] += acc
        tail = [0] * (width + 1)
        for k in range(width - 1, -1, -1):
            tail[k] = tail[k + 1] + row[k]
        table.append(row)
        suffix.append(tail)

    return SlotDP(
        class_id=cls.id,
        n_max=n_max,
        table=tuple(tuple(r) for r in table),
        suffix=tuple(tuple(r) for r in suffix),
    )


@lru_cache(maxsize=16)
def cached_dp(class_id: str, n_max: int) -> SlotDP:
    return build_dp(class_id, n_max)
