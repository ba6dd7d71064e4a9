"""
contracts — типы каталога производящих функций.

CatalogEntry описывает одну именованную функцию:
- evaluator: order -> PowerSeries (основная замкнутая форма)
- basis / must_contain: комбинаторный смысл для сверки с оракулом
- nonempty: класс считается без пустой перестановки (коэффициент при z^0 равен 0)
- radical: радикальная форма, из которой выводится разложение Пюизо
- puiseux: готовые данные разложения, если радикальная форма для этого не годится
- reference_coeffs: опорные коэффициенты (источник — в reference_source)
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Any, Callable

from permbox.common.series import PowerSeries, PuiseuxData, RadicalForm
from permbox.twobyfour.perm_core import PatternBasis, Permutation, format_pattern_list


@dataclass(frozen=True, slots=True)
class CatalogEntry:
    id: str
    title: str
    evaluator: Callable[[int], PowerSeries]
    basis: PatternBasis | None = None
    must_contain: tuple[Permutation, ...] = ()
    nonempty: bool = False
    counts_permutations: bool = True
    radical: RadicalForm | None = None
    puiseux: PuiseuxData | None = None
    reference_coeffs: tuple[int, ...] = ()
    reference_source: str = ""
    archive_id: str | None = None
    also_counts: tuple[PatternBasis, ...] = ()

    def metadata(self) -> dict[str, Any]:
        """Метаданные для JSON-выгрузки (без вычислимых полей)."""
        return {
            "id": self.id,
            "title": self.title,
            "basis": str(self.basis) if self.basis is not None else None,
            "must_contain": format_pattern_list(self.must_contain) if self.must_contain else None,
            "nonempty": self.nonempty,
            "also_counts": [str(b) for b in self.also_counts],
            "archive_id": self.archive_id,
            "reference_coeffs": [str(c) for c in self.reference_coeffs],
            "reference_source": self.reference_source,
            "has_puiseux": self.puiseux is not None or self.radical is not None,
        }


@dataclass(frozen=True, slots=True)
class IdentityCheck:
    name: str
    first_failing_index: int | None = None

    @property
    def ok(self) -> bool:
        return self.first_failing_index is None


@dataclass(frozen=True, slots=True)
class IdentityReport:
    order: int
    checks: tuple[IdentityCheck, ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def failures(self) -> tuple[IdentityCheck, ...]:
        return tuple(c for c in self.checks if not c.ok)

    def to_dict(self) -> dict[str, Any]:
        d = asdict(self)
        d["ok"] = self.ok
        return d


@dataclass(frozen=True, slots=True)
class VerifyRow:
    n: int
    catalog: int
    oracle: int

    @property
    def ok(self) -> bool:
        return self.catalog == self.oracle


@dataclass(frozen=True, slots=True)
class VerifyReport:
    entry_id: str
    rows: tuple[VerifyRow, ...]

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.rows)

    def to_dict(self) -> dict[str, Any]:
        return {
            "entry": self.entry_id,
            "ok": self.ok,
            "rows": [
                {"n": r.n, "catalog": str(r.catalog), "oracle": str(r.oracle), "ok": r.ok}
                for r in self.rows
            ],
        }
