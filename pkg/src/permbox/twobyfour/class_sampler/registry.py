"""
registry — классы с точным генератором и классы, доступные только через перебор.
"""

from __future__ import annotations

from permbox.twobyfour.class_sampler.contracts import SamplerClass, mixed_weight, unit_weight
from permbox.twobyfour.perm_core import parse_basis

SAMPLER_CLASSES: dict[str, SamplerClass] = {
    "fan": SamplerClass(
        id="fan",
        title="Av(4123,1324,3124,1423): initial source graph followed by fans",
        basis=parse_basis("4123,1324,3124,1423"),
        catalog_id="A",
        empty_slots=0,
        initial_block=True,
        step_weight=unit_weight,
    ),
    "flag": SamplerClass(
        id="flag",
        title="Av(4123,1243,1423): sequence of source flags",
        basis=parse_basis("4123,1243,1423"),
        catalog_id="J",
        empty_slots=1,
        initial_block=False,
        step_weight=mixed_weight,
    ),
}

# Полные классы: равномерная выборка только перебором при n <= 10
ORACLE_CLASSES: tuple[str, ...] = ("P1", "P2", "P3")


def get_sampler_class(class_id: str) -> SamplerClass:
    key = class_id.strip().lower()
    if key not in SAMPLER_CLASSES:
        raise ValueError(f"Unknown sampler class: {class_id!r}. Available: {sorted(SAMPLER_CLASSES)}")
    return SAMPLER_CLASSES[key]


def is_oracle_class(class_id: str) -> bool:
    return class_id.strip().upper() in ORACLE_CLASSES


def available_classes() -> list[str]:
    return list(SAMPLER_CLASSES) + list(ORACLE_CLASSES)
