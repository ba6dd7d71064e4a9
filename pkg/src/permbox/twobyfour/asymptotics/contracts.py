"""
contracts — результаты анализа особенностей.
"""

from __future__ import annotations

from dataclasses import dataclass

import mpmath

from permbox.common.series import PuiseuxTerm

MAX_CORRECTION_ORDER = 3
WORKING_DPS = 30
MIN_GROWTH_TERMS = 20
GROWTH_METHODS = ("raw", "aitken", "richardson")


@dataclass(frozen=True, slots=True)
class AsymptoticEstimate:
    n: int
    predicted: mpmath.mpf
    order: int
    terms: tuple[PuiseuxTerm, ...]


@dataclass(frozen=True, slots=True)
class AsymptoticReport:
    entry: str
    n: int
    exact: int
    predicted: mpmath.mpf
    relative_error: mpmath.mpf
    order: int

    def to_dict(self) -> dict:
        return {
            "entry": self.entry,
            "n": self.n,
            "exact": str(self.exact),
            "predicted": mpmath.nstr(self.predicted, 20),
            "relative_error": mpmath.nstr(self.relative_error, 6),
            "K": self.order,
        }
