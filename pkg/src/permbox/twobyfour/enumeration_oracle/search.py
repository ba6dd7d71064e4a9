"""
search — обход дерева префиксов для Av(B).

Узел дерева — перестановка-префикс длины m (значения 1..m). Ребёнок получается
дописыванием последнего элемента с относительным значением x in 1..m+1:
старые значения >= x сдвигаются на 1.

Отсечение: новый элемент может замкнуть вхождение паттерна p только как его
последний элемент. Для каждого вхождения головы p[:-1] в префикс запрещённые x
образуют отрезок [max(ниже) + 1, min(выше)], где "ниже/выше" — элементы головы,
которые в p меньше/больше последнего. Объединение отрезков по всем вхождениям
и всем паттернам даёт запрещённые x сразу для всех детей узла.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from permbox.twobyfour.perm_core import Permutation, contains


@dataclass(frozen=True, slots=True)
class TailPlan:
    head: tuple[int, ...]
    windows: tuple[tuple[int | None, int | None], ...]
    below_last: tuple[bool, ...]


def _windows(head: Sequence[int]) -> tuple[tuple[int | None, int | None], ...]:
    out: list[tuple[int | None, int | None]] = []
    for j, hj in enumerate(head):
        lower: int | None = None
        upper: int | None = None
        for l in range(j):
            hl = head[l]
            if hl < hj and (lower is None or hl > head[lower]):
                lower = l
            elif hl > hj and (upper is None or hl < head[upper]):
                upper = l
        out.append((lower, upper))
    return tuple(out)


def make_plans(patterns: Sequence[Sequence[int]]) -> tuple[TailPlan, ...]:
    plans: list[TailPlan] = []
    for p in patterns:
        p = tuple(p)
        head = p[:-1]
        plans.append(
            TailPlan(
                head=head,
                windows=_windows(head),
                below_last=tuple(h < p[-1] for h in head),
            )
        )
    return tuple(plans)


def _mark(prefix: Sequence[int], plan: TailPlan, blocked: list[bool]) -> None:
    m = len(prefix)
    k = len(plan.head)
    windows = plan.windows
    below = plan.below_last
    chosen = [0] * k

    def search(j: int, start: int, lo_x: int, hi_x: int) -> None:
        # допустимые x: lo_x < x <= hi_x
        if j == k:
            for x in range(lo_x + 1, hi_x + 1):
                blocked[x] = True
            return
        lower, upper = windows[j]
        lo = 0 if lower is None else chosen[lower]
        hi = m + 1 if upper is None else chosen[upper]
        is_below = below[j]
        if is_below:
            hi = min(hi, hi_x)
        else:
            lo = max(lo, lo_x)
        for pos in range(start, m - k + j + 1):
            v = prefix[pos]
            if lo < v < hi:
                chosen[j] = v
                if is_below:
                    search(j + 1, pos + 1, max(lo_x, v), hi_x)
                else:
                    search(j + 1, pos + 1, lo_x, min(hi_x, v))

    search(0, 0, 0, m + 1)


def blocked_values(prefix: Sequence[int], plans: Sequence[TailPlan]) -> list[bool]:
    """blocked[x] для x in 1..m+1 (индекс 0 не используется)."""
    m = len(prefix)
    blocked = [False] * (m + 2)
    for plan in plans:
        if len(plan.head) > m:
            continue
        _mark(prefix, plan, blocked)
    return blocked


def extend(prefix: tuple[int, ...], x: int) -> tuple[int, ...]:
    return tuple(v + 1 if v >= x else v for v in prefix) + (x,)


def _matches(prefix: tuple[int, ...], must: Sequence[Sequence[int]]) -> bool:
    return all(contains(prefix, p) for p in must)


def walk_counts(
    prefix: tuple[int, ...],
    n_max: int,
    plans: Sequence[TailPlan],
    must: Sequence[Sequence[int]],
    counts: list[int],
    count_from: int = 0,
) -> None:
    """Добавляет в counts[L] число допустимых потомков prefix на уровнях count_from..n_max."""
    m = len(prefix)
    if m >= count_from and (not must or _matches(prefix, must)):
        counts[m] += 1
    if m == n_max:
        return
    blocked = blocked_values(prefix, plans)
    if m + 1 == n_max and not must:
        # листья чистого избегания не материализуются
        counts[m + 1] += blocked.count(False) - 1
        return
    for x in range(1, m + 2):
        if not blocked[x]:
            walk_counts(extend(prefix, x), n_max, plans, must, counts, count_from)


def walk_leaves(
    prefix: tuple[int, ...],
    n: int,
    plans: Sequence[TailPlan],
    must: Sequence[Sequence[int]],
    out: list[tuple[int, ...]],
    cap: int,
) -> None:
    m = len(prefix)
    if m == n:
        if not must or _matches(prefix, must):
            out.append(prefix)
            if len(out) > cap:
                raise ValueError(
                    f"enumeration exceeds the cap of {cap} permutations; use count mode instead"
                )
        return
    blocked = blocked_values(prefix, plans)
    for x in range(1, m + 2):
        if not blocked[x]:
            walk_leaves(extend(prefix, x), n, plans, must, out, cap)


def frontier(
    depth: int,
    plans: Sequence[TailPlan],
    must: Sequence[Sequence[int]],
    counts: list[int] | None = None,
    count_from: int = 0,
) -> list[tuple[int, ...]]:
    """Допустимые префиксы длины depth в лексикографическом порядке расширения.

    Если передан counts, узлы уровней < depth учитываются в нём.
    """
    level: list[tuple[int, ...]] = [()]
    for m in range(depth):
        if counts is not None:
            for prefix in level:
                if m >= count_from and (not must or _matches(prefix, must)):
                    counts[m] += 1
        nxt: list[tuple[int, ...]] = []
        for prefix in level:
            blocked = blocked_values(prefix, plans)
            nxt.extend(extend(prefix, x) for x in range(1, m + 2) if not blocked[x])
        level = nxt
    return level


def to_permutations(rows: Sequence[tuple[int, ...]]) -> list[Permutation]:
    return [Permutation(r) for r in sorted(rows)]
