from permbox.common.series.bivariate import BivariateSeries, bivariate_correction_kernel
from permbox.common.series.power_series import (
    PowerSeries,
    add,
    catalan_series,
    div,
    format_coefficient,
    horner,
    mul,
    sqrt,
    sub,
)
from permbox.common.series.radical import PuiseuxData, PuiseuxTerm, RadicalForm

__all__ = [
    "PowerSeries",
    "add",
    "sub",
    "mul",
    "div",
    "sqrt",
    "horner",
    "catalan_series",
    "format_coefficient",
    "BivariateSeries",
    "bivariate_correction_kernel",
    "PuiseuxTerm",
    "PuiseuxData",
    "RadicalForm",
]
