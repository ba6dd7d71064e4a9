"""
identities — алгебраические тождества между записями каталога.

Каждое тождество проверяется как точное равенство усечённых рядов:
невязка lhs - rhs должна быть нулевым рядом до z^order.
Записи берутся через lookup, чтобы тесты могли подменить ряд (негативный контроль).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from permbox.common.series import PowerSeries, catalan_series
from permbox.twobyfour.gf_catalog import formulas as fm

Lookup = Callable[[str, int], PowerSeries]
Side = Callable[[Lookup, int], PowerSeries]


@dataclass(frozen=True, slots=True)
class Identity:
    name: str
    lhs: Side
    rhs: Side


def _entry(entry_id: str) -> Side:
    return lambda get, order: get(entry_id, order)


def _sum(*ids: str) -> Side:
    def side(get: Lookup, order: int) -> PowerSeries:
        total = PowerSeries.zero(order)
        for i in ids:
            total = total + get(i, order)
        return total

    return side


def _zero(get: Lookup, order: int) -> PowerSeries:
    return PowerSeries.zero(order)


def _catalan_kernel(get: Lookup, order: int) -> PowerSeries:
    t = catalan_series(order)
    return 1 - t + PowerSeries.z(order) * t * t


def _geometric_t(get: Lookup, order: int) -> PowerSeries:
    t = catalan_series(order)
    return 1 / (1 - t * PowerSeries.z(order))


def _composition(get: Lookup, order: int) -> PowerSeries:
    return fm.alternating_composition(order, get("L", order), get("M", order), get("N", order))


def _b_from_a(get: Lookup, order: int) -> PowerSeries:
    return fm.b_from_a(order, get("A", order))


def _kernel_at_j(get: Lookup, order: int) -> PowerSeries:
    return fm.flag_kernel_residual(order, get("J", order))


IDENTITIES: tuple[Identity, ...] = (
    Identity("P1 = H + I", _entry("P1"), _sum("H", "I")),
    Identity("H = B + F + G", _entry("H"), _sum("B", "F", "G")),
    Identity("P2 = J + K", _entry("P2"), _sum("J", "K")),
    Identity("N = N1 + N2 + N3 + N4", _entry("N"), _sum("N1", "N2", "N3", "N4")),
    Identity("P3 = 1 + zW/(1 - NW), W = (1+L)(1+M)/(1-LM)", _entry("P3"), _composition),
    Identity("A = 1 + tz(1-tz)/(1-2tz)", _entry("A"), lambda get, order: fm.fan_substitution(order)),
    Identity("1 - t + z t^2 = 0", _catalan_kernel, _zero),
    Identity("1/(1 - tz) = t", _geometric_t, lambda get, order: catalan_series(order)),
    Identity("B = A + t^4 z^4 (1-z)/((1-3z+z^2)√(1-4z))", _entry("B"), _b_from_a),
    Identity("I: t-form = radical form", _entry("I"), lambda get, order: fm.I_RADICAL.evaluate(order)),
    Identity("(2z - z^2) J^2 - (1+z) J + 1 = 0", _kernel_at_j, _zero),
)
