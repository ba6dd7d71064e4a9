"""
containment — вложение классических паттернов.

Два пути поиска:
- _embed_dfs: поиск в глубину по позициям; окно значений для очередного элемента
  задают уже выбранные соседи по значению в паттерне. Эталонный путь.
- _embed_by_ends: для k >= 3 и длинных перестановок перебираются только средние
  элементы паттерна; крайние подбираются экстремальными запросами к
  отсортированным префиксам и суффиксам (bisect). Для k = 4 это O(n^2 log n).

Функции принимают Permutation или любую последовательность различных чисел:
сравниваются только относительные порядки.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right, insort
from typing import Iterable, Sequence

from permbox.twobyfour.perm_core.contracts import PatternBasis, Permutation

_NEG = float("-inf")
_POS = float("inf")

# начиная с этой длины перестановки используется перебор средних элементов
ENDS_SEARCH_MIN_LENGTH = 16


def _window_plan(pattern: Sequence[int]) -> list[tuple[int | None, int | None]]:
    """Для каждого j: ближайший снизу и ближайший сверху (по значению) среди pattern[:j]."""
    plan: list[tuple[int | None, int | None]] = []
    for j, pj in enumerate(pattern):
        lower: int | None = None
        upper: int | None = None
        for l in range(j):
            pl = pattern[l]
            if pl < pj and (lower is None or pl > pattern[lower]):
                lower = l
            elif pl > pj and (upper is None or pl < pattern[upper]):
                upper = l
        plan.append((lower, upper))
    return plan


def _tight_refs(pattern: Sequence[int], value: int) -> tuple[int | None, int | None]:
    lower: int | None = None
    upper: int | None = None
    for l, pl in enumerate(pattern):
        if pl < value and (lower is None or pl > pattern[lower]):
            lower = l
        elif pl > value and (upper is None or pl < pattern[upper]):
            upper = l
    return lower, upper


def _embed_dfs(values: Sequence[int], pattern: Sequence[int]) -> bool:
    n, k = len(values), len(pattern)
    plan = _window_plan(pattern)
    chosen = [0] * k

    def search(j: int, start: int) -> bool:
        if j == k:
            return True
        lower, upper = plan[j]
        lo = _NEG if lower is None else chosen[lower]
        hi = _POS if upper is None else chosen[upper]
        for pos in range(start, n - k + j + 1):
            v = values[pos]
            if lo < v < hi:
                chosen[j] = v
                if search(j + 1, pos + 1):
                    return True
        return False

    return search(0, 0)


def _smallest_in(sorted_values: list[int], lo: float, hi: float) -> int | None:
    idx = bisect_right(sorted_values, lo)
    if idx < len(sorted_values) and sorted_values[idx] < hi:
        return sorted_values[idx]
    return None


def _largest_in(sorted_values: list[int], lo: float, hi: float) -> int | None:
    idx = bisect_left(sorted_values, hi) - 1
    if idx >= 0 and sorted_values[idx] > lo:
        return sorted_values[idx]
    return None


def _embed_by_ends(values: Sequence[int], pattern: Sequence[int]) -> bool:
    n = len(values)
    middle = list(pattern[1:-1])
    m = len(middle)
    plan = _window_plan(middle)
    first_lo, first_hi = _tight_refs(middle, pattern[0])
    last_lo, last_hi = _tight_refs(middle, pattern[-1])
    first_below_last = pattern[0] < pattern[-1]

    # prefix[i] = sorted(values[:i]), suffix[i] = sorted(values[i+1:])
    prefix: list[list[int]] = []
    running: list[int] = []
    for v in values:
        prefix.append(running.copy())
        insort(running, v)
    suffix: list[list[int]] = [[] for _ in range(n)]
    running = []
    for i in range(n - 1, -1, -1):
        suffix[i] = running.copy()
        insort(running, values[i])

    chosen = [0] * m

    def bound(ref: int | None, default: float) -> float:
        return default if ref is None else chosen[ref]

    def close(first_pos: int, last_pos: int) -> bool:
        lo1, hi1 = bound(first_lo, _NEG), bound(first_hi, _POS)
        lo4, hi4 = bound(last_lo, _NEG), bound(last_hi, _POS)
        if first_below_last:
            x = _smallest_in(prefix[first_pos], lo1, hi1)
            if x is None:
                return False
            return _smallest_in(suffix[last_pos], max(lo4, x), hi4) is not None
        x = _largest_in(prefix[first_pos], lo1, hi1)
        if x is None:
            return False
        return _smallest_in(suffix[last_pos], lo4, min(hi4, x)) is not None

    def search(j: int, start: int, first_pos: int) -> bool:
        if j == m:
            return close(first_pos, start - 1)
        lower, upper = plan[j]
        lo = bound(lower, _NEG)
        hi = bound(upper, _POS)
        for pos in range(start, n - m + j):
            v = values[pos]
            if lo < v < hi:
                chosen[j] = v
                if search(j + 1, pos + 1, pos if j == 0 else first_pos):
                    return True
        return False

    return search(0, 1, 0)


def contains(perm: Iterable[int], pattern: Iterable[int]) -> bool:
    """True, если некоторая подпоследовательность perm порядково изоморфна pattern."""
    values = tuple(perm)
    pat = tuple(pattern)
    k, n = len(pat), len(values)
    if k == 0:
        return True
    if k > n:
        return False
    if k >= 3 and n >= ENDS_SEARCH_MIN_LENGTH:
        return _embed_by_ends(values, pat)
    return _embed_dfs(values, pat)


def avoids_all(perm: Iterable[int], basis: PatternBasis | Iterable[Permutation]) -> bool:
    values = tuple(perm)
    return not any(contains(values, p) for p in basis)
