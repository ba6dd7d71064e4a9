"""
contracts — запросы и настройки оракула перебора.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Iterable

from permbox.twobyfour.perm_core import PatternBasis, Permutation

DEFAULT_ENUMERATE_CAP = 10**7
DEFAULT_SPLIT_DEPTH = 3


@dataclass(frozen=True, slots=True)
class CountQuery:
    """Av(basis) длины n, дополнительно содержащие каждый паттерн из must_contain."""

    basis: PatternBasis
    must_contain: tuple[Permutation, ...] = ()
    n: int = 0

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("n must be >= 0")
        basis = self.basis if isinstance(self.basis, PatternBasis) else PatternBasis(tuple(self.basis))
        must: list[Permutation] = []
        for p in self.must_contain:
            q = p if isinstance(p, Permutation) else Permutation(tuple(p))
            if len(q) == 0:
                raise ValueError("must_contain patterns must have length >= 1")
            if q not in must:
                must.append(q)
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "must_contain", tuple(must))

    @classmethod
    def of(cls, basis: Iterable, n: int, must_contain: Iterable = ()) -> "CountQuery":
        return cls(basis=PatternBasis(tuple(basis)), must_contain=tuple(must_contain), n=n)

    def with_n(self, n: int) -> "CountQuery":
        return replace(self, n=n)


@dataclass(frozen=True, slots=True)
class OracleOptions:
    """threads > 1 — дерево делится на префиксы длины split_depth между процессами."""

    threads: int = 1
    split_depth: int = DEFAULT_SPLIT_DEPTH
    enumerate_cap: int = DEFAULT_ENUMERATE_CAP
    show_progress: bool = False

    def __post_init__(self) -> None:
        if self.threads < 1:
            raise ValueError("threads must be >= 1")
        if self.split_depth < 0:
            raise ValueError("split_depth must be >= 0")
        if self.enumerate_cap < 0:
            raise ValueError("enumerate_cap must be >= 0")
