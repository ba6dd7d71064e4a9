"""
contracts — типы данных слоя перестановок.

Соглашения:
- значения перестановки 1-based (однострочная запись), позиции 0-based (индексы Python)
- пустая перестановка допустима везде
- все контракты неизменяемы: их можно отдавать в воркеры и использовать как ключи
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Any, Iterable, Iterator


@dataclass(frozen=True, slots=True, order=True)
class Permutation:
    """Биекция на {1..n} в однострочной записи. Сравнение — лексикографическое."""

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        vals = tuple(int(v) for v in self.values)
        if sorted(vals) != list(range(1, len(vals) + 1)):
            raise ValueError(f"not a permutation of 1..{len(vals)}: {vals}")
        object.__setattr__(self, "values", vals)

    @classmethod
    def of(cls, values: Iterable[int]) -> "Permutation":
        return cls(tuple(values))

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    def __getitem__(self, i: int) -> int:
        return self.values[i]

    def __str__(self) -> str:
        return ",".join(str(v) for v in self.values)

    def inverse(self) -> "Permutation":
        out = [0] * len(self.values)
        for pos, v in enumerate(self.values):
            out[v - 1] = pos + 1
        return Permutation(tuple(out))

    def reverse(self) -> "Permutation":
        return Permutation(self.values[::-1])

    def complement(self) -> "Permutation":
        n = len(self.values)
        return Permutation(tuple(n + 1 - v for v in self.values))


@dataclass(frozen=True, slots=True, eq=False)
class PatternBasis:
    """Базис класса Av(B): непустой, без дублей, минимальный по вложению.

    Порядок паттернов сохраняется как в записи; равенство от порядка не зависит.
    """

    patterns: tuple[Permutation, ...]

    def __post_init__(self) -> None:
        from permbox.twobyfour.perm_core.containment import contains

        pats = [p if isinstance(p, Permutation) else Permutation(tuple(p)) for p in self.patterns]
        if not pats:
            raise ValueError("basis must contain at least one pattern")
        if any(len(p) == 0 for p in pats):
            raise ValueError("basis patterns must have length >= 1")

        unique = list(dict.fromkeys(pats))
        kept: set[Permutation] = set()
        for p in sorted(unique, key=len):
            # более длинный паттерн, содержащий уже взятый, ничего не добавляет к Av(B)
            if not any(contains(p, q) for q in kept):
                kept.add(p)
        object.__setattr__(self, "patterns", tuple(p for p in unique if p in kept))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PatternBasis):
            return NotImplemented
        return frozenset(self.patterns) == frozenset(other.patterns)

    def __hash__(self) -> int:
        return hash(frozenset(self.patterns))

    @classmethod
    def of(cls, *patterns: Iterable[int]) -> "PatternBasis":
        return cls(tuple(Permutation(tuple(p)) for p in patterns))

    def __len__(self) -> int:
        return len(self.patterns)

    def __iter__(self) -> Iterator[Permutation]:
        return iter(self.patterns)

    def __str__(self) -> str:
        from permbox.twobyfour.perm_core.notation import format_pattern_list

        return format_pattern_list(self.patterns)


@dataclass(frozen=True, slots=True)
class SourceGraph:
    minimum_position: int
    positions: tuple[int, ...]  # по возрастанию, минимум первым


@dataclass(frozen=True, slots=True)
class SourceGraphDecomposition:
    graphs: tuple[SourceGraph, ...]

    @property
    def minima_positions(self) -> tuple[int, ...]:
        return tuple(g.minimum_position for g in self.graphs)

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)


@dataclass(frozen=True, slots=True)
class GridDecomposition:
    """Разбиение по порогу r: сверху Av(21), снизу Av(123). Неуспех — результат, не исключение."""

    split_value: int
    top_positions: tuple[int, ...]
    bottom_positions: tuple[int, ...]
    top_avoids_21: bool
    bottom_avoids_123: bool

    @property
    def ok(self) -> bool:
        return self.top_avoids_21 and self.bottom_avoids_123

    def to_dict(self) -> dict[str, Any]:
        d = asdict(self)
        d["ok"] = self.ok
        return d
