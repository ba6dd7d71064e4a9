"""
enumeration_oracle — перебор Av(B) по дереву префиксов; эталон для проверки рядов.
"""

from permbox.twobyfour.enumeration_oracle.contracts import (
    DEFAULT_ENUMERATE_CAP,
    DEFAULT_SPLIT_DEPTH,
    CountQuery,
    OracleOptions,
)
from permbox.twobyfour.enumeration_oracle.operations import (
    MAX_SAMPLE_LENGTH,
    count,
    count_frame,
    count_table,
    enumerate_class,
    sample_uniform_small,
)
from permbox.twobyfour.enumeration_oracle.search import blocked_values, extend, make_plans

__all__ = [
    "DEFAULT_ENUMERATE_CAP",
    "DEFAULT_SPLIT_DEPTH",
    "MAX_SAMPLE_LENGTH",
    "CountQuery",
    "OracleOptions",
    "blocked_values",
    "count",
    "count_frame",
    "count_table",
    "enumerate_class",
    "extend",
    "make_plans",
    "sample_uniform_small",
]
