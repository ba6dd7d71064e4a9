"""
operations — асимптотика записей каталога.

- puiseux_data(id): данные записи или точное разложение её радикальной формы
- asymptotic_report(id, n, K): прогноз против точного коэффициента
- ratio_limit(num, den, n): отношение точных коэффициентов
"""

from __future__ import annotations

from fractions import Fraction

import mpmath

from permbox.common.series import PuiseuxData
from permbox.twobyfour.asymptotics.contracts import WORKING_DPS, AsymptoticReport
from permbox.twobyfour.asymptotics.transfer import fo_predict
from permbox.twobyfour.gf_catalog import coefficients, get_entry

EXPANSION_PROVENANCE = "exact expansion of the closed form at the dominant singularity"


def puiseux_data(entry_id: str) -> PuiseuxData:
    entry = get_entry(entry_id)
    if entry.puiseux is not None:
        return entry.puiseux
    if entry.radical is None:
        raise ValueError(f"entry {entry.id} has no Puiseux data")
    return entry.radical.puiseux(provenance=EXPANSION_PROVENANCE)


def dominant_singularity(entry_id: str) -> Fraction | None:
    """rho записи, если он известен из данных Пюизо."""
    try:
        return puiseux_data(entry_id).rho
    except ValueError:
        return None


def asymptotic_report(entry_id: str, n: int, order: int = 1) -> AsymptoticReport:
    entry = get_entry(entry_id)
    data = puiseux_data(entry.id)
    exact = coefficients(entry.id, n)[n]
    estimate = fo_predict(data.terms, data.rho, n, order)
    with mpmath.workdps(WORKING_DPS):
        if exact == 0:
            raise ValueError(f"coefficient {n} of {entry.id} is zero")
        error = abs(estimate.predicted / exact - 1)
    return AsymptoticReport(
        entry=entry.id,
        n=n,
        exact=exact,
        predicted=estimate.predicted,
        relative_error=error,
        order=order,
    )


def ratio_limit(num_id: str, den_id: str, n: int) -> mpmath.mpf:
    """[z^n]num / [z^n]den; записи должны иметь общую доминирующую особенность."""
    if n < 0:
        raise ValueError("n must be >= 0")
    num = get_entry(num_id)
    den = get_entry(den_id)
    rho_num = dominant_singularity(num.id)
    rho_den = dominant_singularity(den.id)
    if rho_num is not None and rho_den is not None and rho_num != rho_den:
        raise ValueError(
            f"entries {num.id} and {den.id} have different dominant singularities: {rho_num} vs {rho_den}"
        )
    a = coefficients(num.id, n)[n]
    b = coefficients(den.id, n)[n]
    if b == 0:
        raise ValueError(f"coefficient {n} of {den.id} is zero")
    with mpmath.workdps(WORKING_DPS):
        return mpmath.mpf(a) / b
