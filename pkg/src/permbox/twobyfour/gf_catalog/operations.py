"""
operations — публичные операции каталога.

- evaluate(id, N): ряд записи до z^N (кэшируется: записи неизменяемы)
- check_identities(N): отчёт по всем тождествам
- export_bfile(id, N): b-file "n a(n)"
- verify_against_oracle(id, max_n): сверка с перебором
"""

from __future__ import annotations

from functools import lru_cache
from typing import Mapping

import pandas as pd

from permbox.common.series import PowerSeries, format_coefficient
from permbox.twobyfour.enumeration_oracle import CountQuery, OracleOptions, count_table
from permbox.twobyfour.gf_catalog.contracts import (
    CatalogEntry,
    IdentityCheck,
    IdentityReport,
    VerifyReport,
    VerifyRow,
)
from permbox.twobyfour.gf_catalog.identities import IDENTITIES
from permbox.twobyfour.gf_catalog.registry import get_entry, resolve_entries


@lru_cache(maxsize=256)
def _evaluate_cached(entry_id: str, order: int) -> PowerSeries:
    entry = get_entry(entry_id)
    series = entry.evaluator(order)
    if series.order != order:
        raise RuntimeError(f"evaluator of {entry_id} returned order {series.order}, expected {order}")
    return series


def evaluate(entry_id: str, order: int) -> PowerSeries:
    if order < 0:
        raise ValueError("order must be >= 0")
    return _evaluate_cached(get_entry(entry_id).id, order)


def coefficients(entry_id: str, order: int) -> list[int]:
    """Целые коэффициенты z^0..z^order; ValueError для нецелых."""
    return evaluate(entry_id, order).to_integers()


def check_identities(order: int, overrides: Mapping[str, PowerSeries] | None = None) -> IdentityReport:
    """Проверяет все тождества до z^order. overrides подменяет ряды записей (по id)."""
    if order < 0:
        raise ValueError("order must be >= 0")
    subs = {k.upper(): v for k, v in (overrides or {}).items()}

    def lookup(entry_id: str, n: int) -> PowerSeries:
        if entry_id in subs:
            return subs[entry_id].truncate(n)
        return evaluate(entry_id, n)

    checks: list[IdentityCheck] = []
    for identity in IDENTITIES:
        residual = identity.lhs(lookup, order) - identity.rhs(lookup, order)
        checks.append(IdentityCheck(name=identity.name, first_failing_index=residual.valuation()))
    return IdentityReport(order=order, checks=tuple(checks))


def bfile_lines(entry_id: str, order: int) -> list[str]:
    series = evaluate(entry_id, order)
    if not series.is_integral():
        raise ValueError(f"{entry_id} has non-integer coefficients; b-file needs integers")
    values = series.to_integers()
    return [f"{n} {v}" for n, v in enumerate(values)]


def export_bfile(entry_id: str, order: int) -> str:
    """b-file: строки "n a(n)" для n = 0..order, с завершающим переводом строки."""
    return "".join(f"{line}\n" for line in bfile_lines(entry_id, order))


def entry_metadata(entry_id: str) -> dict:
    return get_entry(entry_id).metadata()


def count_frame(ids: str | list[str] | None, order: int) -> pd.DataFrame:
    """Таблица коэффициентов: колонка n и по колонке на запись (значения — строки)."""
    resolved = resolve_entries(ids)
    data: dict[str, list[str]] = {"n": [str(n) for n in range(order + 1)]}
    for entry_id in resolved:
        data[entry_id] = [format_coefficient(c) for c in evaluate(entry_id, order)]
    return pd.DataFrame(data, dtype=object)


def oracle_query(entry: CatalogEntry, n: int) -> CountQuery:
    if entry.basis is None:
        raise ValueError(f"entry {entry.id} has no avoidance basis; nothing to enumerate")
    return CountQuery(basis=entry.basis, must_contain=entry.must_contain, n=n)


def verify_against_oracle(
    entry_id: str,
    max_n: int,
    options: OracleOptions | None = None,
) -> VerifyReport:
    """Сравнивает коэффициенты записи с перебором для n = 0..max_n."""
    if max_n < 0:
        raise ValueError("max_n must be >= 0")
    entry = get_entry(entry_id)
    counts = count_table(oracle_query(entry, max_n), options=options)
    if entry.nonempty:
        counts[0] = 0
    catalog = coefficients(entry.id, max_n)
    rows = tuple(VerifyRow(n=n, catalog=catalog[n], oracle=counts[n]) for n in range(max_n + 1))
    return VerifyReport(entry_id=entry.id, rows=rows)
