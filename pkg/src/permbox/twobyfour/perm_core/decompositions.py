"""
decompositions — структурные разбиения перестановки.

Исходные графы (source graphs):
- левосторонние минимумы m_1 > m_2 > ... делят перестановку на блоки
- граф минимума m_i: сам m_i и все более поздние элементы выше m_i,
  не занятые графами m_j, j < i
- элементы левее m_i всегда выше m_{i-1} и уже заняты, поэтому
  граф m_i — это ровно значения из [m_i, m_{i-1}); блоки — горизонтальные полосы

Решётка Av(21) над Av(123) (класс флагов):
- r — максимальное значение, перед которым стоит большее (r = 0 для возрастающей)
- верх: значения > r, низ: остальные
"""

from __future__ import annotations

from bisect import bisect_right
from typing import Iterable

from permbox.twobyfour.perm_core.containment import contains
from permbox.twobyfour.perm_core.contracts import (
    GridDecomposition,
    Permutation,
    SourceGraph,
    SourceGraphDecomposition,
)
from permbox.twobyfour.perm_core.notation import pattern_of


def left_to_right_minima(perm: Iterable[int]) -> tuple[int, ...]:
    """Позиции левосторонних минимумов."""
    out: list[int] = []
    current = None
    for pos, v in enumerate(perm):
        if current is None or v < current:
            out.append(pos)
            current = v
    return tuple(out)


def source_graph_decomposition(perm: Iterable[int]) -> SourceGraphDecomposition:
    values = tuple(perm)
    members: list[list[int]] = []
    # минимумы по убыванию; для bisect храним их с обратным знаком
    neg_minima: list[int] = []

    for pos, v in enumerate(values):
        if not neg_minima or v < -neg_minima[-1]:
            neg_minima.append(-v)
            members.append([pos])
            continue
        # первый граф, чей минимум ниже v
        idx = bisect_right(neg_minima, -v)
        members[idx].append(pos)

    graphs = tuple(SourceGraph(minimum_position=m[0], positions=tuple(m)) for m in members)
    return SourceGraphDecomposition(graphs=graphs)


def source_graph_patterns(perm: Iterable[int]) -> tuple[Permutation, ...]:
    """Паттерн значений каждого исходного графа."""
    values = tuple(perm)
    decomposition = source_graph_decomposition(values)
    return tuple(pattern_of(values[p] for p in g.positions) for g in decomposition.graphs)


def is_fan(graph: Iterable[int]) -> bool:
    """Веер — исходный граф, избегающий 123."""
    return not contains(tuple(graph), (1, 2, 3))


def grid_decompose(perm: Iterable[int]) -> GridDecomposition:
    values = tuple(perm)
    r = 0
    running_max = 0
    for v in values:
        if running_max > v and v > r:
            r = v
        if v > running_max:
            running_max = v

    top = tuple(pos for pos, v in enumerate(values) if v > r)
    bottom = tuple(pos for pos, v in enumerate(values) if v <= r)
    return GridDecomposition(
        split_value=r,
        top_positions=top,
        bottom_positions=bottom,
        top_avoids_21=not contains(tuple(values[p] for p in top), (2, 1)),
        bottom_avoids_123=not contains(tuple(values[p] for p in bottom), (1, 2, 3)),
    )
