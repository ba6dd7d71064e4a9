"""
realize — трасса построения -> конкретная перестановка.

Значения ведутся целыми ключами и стандартизуются в конце:
- новый минимум ниже всего предыдущего, ставится так, что правее него ровно j элементов
- веер: хвост из s - 1 элементов убывает сразу над новым минимумом
- флаг: первый элемент хвоста всегда нижний; остальные s - 2 по битам config
  либо продолжают спуск снизу, либо идут вверх над всем
- начальный блок веерного класса: минимум, затем унимодальная перестановка
  (пик, далее значения по убыванию слева или справа по битам config)
"""

from __future__ import annotations

from collections import deque
from typing import Callable

from permbox.twobyfour.class_sampler.contracts import ConstructionTrace, TraceStep, mixed_weight
from permbox.twobyfour.class_sampler.registry import get_sampler_class
from permbox.twobyfour.perm_core import Permutation, avoids_all, pattern_of

# (step, low, high) -> (tail, min_key, high)
TailBuilder = Callable[[TraceStep, int, int], tuple[list[int], int, int]]


def unimodal_block(size: int, config: int) -> list[int]:
    """Элемент Av(213,312) размера size; бит i отвечает за значение size-1-i."""
    if size == 0:
        return []
    block = deque([size])
    for i, value in enumerate(range(size - 1, 0, -1)):
        if config >> i & 1:
            block.append(value)
        else:
            block.appendleft(value)
    return list(block)


def _fan_tail(step: TraceStep, low: int, high: int) -> tuple[list[int], int, int]:
    tail = [low - i for i in range(1, step.size)]
    return tail, low - step.size, high


def _flag_tail(step: TraceStep, low: int, high: int) -> tuple[list[int], int, int]:
    tail: list[int] = []
    lows = 0
    for i in range(step.size - 1):
        if i == 0 or not step.config >> (i - 1) & 1:
            lows += 1
            tail.append(low - lows)
        else:
            high += 1
            tail.append(high)
    return tail, low - lows - 1, high


_TAILS: dict[str, TailBuilder] = {"fan": _fan_tail, "flag": _flag_tail}


def realize(trace: ConstructionTrace, class_id: str) -> Permutation:
    cls = get_sampler_class(class_id)
    keys: list[int] = []
    low = high = 0

    if cls.initial_block:
        m = trace.initial_size
        if m < 0 or not 0 <= trace.initial_config < mixed_weight(m):
            raise ValueError(f"malformed initial block: size={m}, config={trace.initial_config}")
        if m:
            keys = [0] + unimodal_block(m - 1, trace.initial_config)
            high = m - 1
        slots = m
    else:
        if trace.initial_size != 0 or trace.initial_config != 0:
            raise ValueError(f"{cls.id} traces start from the empty permutation")
        slots = cls.empty_slots

    build_tail = _TAILS[cls.id]
    for step in trace.steps:
        if step.size < 1:
            raise ValueError(f"step size must be >= 1, got {step.size}")
        if not 0 <= step.j < slots:
            raise ValueError(f"step position j={step.j} outside 0..{slots - 1}")
        if not 0 <= step.config < cls.step_weight(step.size):
            raise ValueError(f"step config {step.config} out of range for size {step.size}")
        tail, min_key, high = build_tail(step, low, high)
        keys.insert(len(keys) - step.j, min_key)
        keys.extend(tail)
        low = min_key
        slots = step.j + step.size

    perm = pattern_of(keys)
    if not avoids_all(perm, cls.basis):
        raise RuntimeError(f"realized permutation {perm} is outside Av({cls.basis})")
    return perm


def slot_statistic(perm: Permutation, class_id: str = "fan") -> int:
    """Число позиций от глобального минимума до конца; для пустой — стартовые слоты класса."""
    if len(perm) == 0:
        return get_sampler_class(class_id).empty_slots
    return len(perm) - perm.values.index(1)
