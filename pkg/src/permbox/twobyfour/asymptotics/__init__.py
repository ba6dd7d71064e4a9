"""
asymptotics — анализ особенностей: перенос членов Пюизо с поправками,
темп роста по коэффициентам, доминирующий корень, предельные отношения.
"""

from permbox.twobyfour.asymptotics.contracts import (
    GROWTH_METHODS,
    MAX_CORRECTION_ORDER,
    MIN_GROWTH_TERMS,
    WORKING_DPS,
    AsymptoticEstimate,
    AsymptoticReport,
)
from permbox.twobyfour.asymptotics.numeric import dominant_root, growth_rate
from permbox.twobyfour.asymptotics.operations import (
    asymptotic_report,
    dominant_singularity,
    puiseux_data,
    ratio_limit,
)
from permbox.twobyfour.asymptotics.transfer import (
    correction_e_k,
    fo_predict,
    gamma_half_integer,
    to_mpf,
)

__all__ = [
    "GROWTH_METHODS",
    "MAX_CORRECTION_ORDER",
    "MIN_GROWTH_TERMS",
    "WORKING_DPS",
    "AsymptoticEstimate",
    "AsymptoticReport",
    "asymptotic_report",
    "correction_e_k",
    "dominant_root",
    "dominant_singularity",
    "fo_predict",
    "gamma_half_integer",
    "growth_rate",
    "puiseux_data",
    "ratio_limit",
    "to_mpf",
]
