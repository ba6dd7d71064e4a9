"""
class_sampler — точная равномерная генерация для веерного класса Av(4123,1324,3124,1423)
и класса флагов Av(4123,1243,1423) через таблицу по числу слотов.
"""

from permbox.twobyfour.class_sampler.contracts import (
    ConstructionTrace,
    SamplerClass,
    SlotDP,
    TraceStep,
    mixed_weight,
    unit_weight,
)
from permbox.twobyfour.class_sampler.dp import build_dp, cached_dp
from permbox.twobyfour.class_sampler.operations import enumerate_traces, sample, sample_many, sample_trace
from permbox.twobyfour.class_sampler.realize import realize, slot_statistic, unimodal_block
from permbox.twobyfour.class_sampler.registry import (
    ORACLE_CLASSES,
    SAMPLER_CLASSES,
    available_classes,
    get_sampler_class,
    is_oracle_class,
)

__all__ = [
    "ORACLE_CLASSES",
    "SAMPLER_CLASSES",
    "ConstructionTrace",
    "SamplerClass",
    "SlotDP",
    "TraceStep",
    "available_classes",
    "build_dp",
    "cached_dp",
    "enumerate_traces",
    "get_sampler_class",
    "is_oracle_class",
    "mixed_weight",
    "realize",
    "sample",
    "sample_many",
    "sample_trace",
    "slot_statistic",
    "unimodal_block",
]
