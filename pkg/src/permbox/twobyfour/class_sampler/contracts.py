"""
contracts — типы точного генератора: класс, шаг построения, трасса, таблица DP.

Слоты — промежутки правее текущего минимума. Шаг (j, s, config): новый минимум
встаёт так, что справа от него остаётся ровно j старых слотов, за ним в конец
дописывается блок из s - 1 элементов; после шага слотов j + s.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from permbox.twobyfour.perm_core import PatternBasis

Weight = Callable[[int], int]


def unit_weight(size: int) -> int:
    return 1


def mixed_weight(size: int) -> int:
    """1 для size <= 1, иначе 2^(size-2)."""
    return 1 if size <= 1 else 1 << (size - 2)


@dataclass(frozen=True, slots=True)
class SamplerClass:
    id: str
    title: str
    basis: PatternBasis
    catalog_id: str
    empty_slots: int
    initial_block: bool
    step_weight: Weight

    def seed_weight(self, n: int, k: int) -> int:
        """Вес начальных состояний (n, k): начальный блок размера n или пустая перестановка."""
        if self.initial_block:
            return mixed_weight(n) if k == n else 0
        return 1 if n == 0 and k == self.empty_slots else 0


@dataclass(frozen=True, slots=True)
class TraceStep:
    j: int
    size: int
    config: int = 0

    def to_dict(self) -> dict:
        return {"j": self.j, "size": self.size, "config": self.config}


@dataclass(frozen=True, slots=True)
class ConstructionTrace:
    """Начальный блок (размер и конфигурация) плюс шаги по порядку."""

    initial_size: int
    initial_config: int = 0
    steps: tuple[TraceStep, ...] = ()

    @property
    def length(self) -> int:
        return self.initial_size + sum(step.size for step in self.steps)

    def to_dict(self) -> dict:
        return {
            "initial_size": self.initial_size,
            "initial_config": self.initial_config,
            "steps": [step.to_dict() for step in self.steps],
        }


@dataclass(frozen=True, slots=True)
class SlotDP:
    """table[n][k] — число взвешенных трасс длины n с k слотами, k = 0..n_max+1."""

    class_id: str
    n_max: int
    table: tuple[tuple[int, ...], ...]
    suffix: tuple[tuple[int, ...], ...]

    def count(self, n: int, k: int) -> int:
        if not 0 <= n <= self.n_max:
            raise ValueError(f"n={n} outside table range 0..{self.n_max}")
        row = self.table[n]
        return row[k] if 0 <= k < len(row) else 0

    def marginal(self, n: int) -> int:
        if not 0 <= n <= self.n_max:
            raise ValueError(f"n={n} outside table range 0..{self.n_max}")
        return self.suffix[n][0]

    def marginals(self) -> list[int]:
        return [row[0] for row in self.suffix]
