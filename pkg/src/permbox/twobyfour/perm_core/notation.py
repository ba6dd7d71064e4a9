"""
notation — текстовый формат перестановок и списков паттернов.

Формы:
- "3,1,5,2,4" — основная, однозначна при любом n
- "31524"     — одна лексема из цифр, только n <= 9
- ""          — пустая перестановка

Списки паттернов (базис, --contains):
- "4123,1324" или "4123 1324" — лексемы из цифр
- "10,1,2,...;4,1,2,3" — через ";", если паттерны записаны через запятую
"""

from __future__ import annotations

import re
from typing import Iterable

from permbox.twobyfour.perm_core.contracts import PatternBasis, Permutation


def pattern_of(values: Iterable[int]) -> Permutation:
    """Стандартизация: последовательность различных чисел -> перестановка того же порядка."""
    vals = list(values)
    ranks = {v: r for r, v in enumerate(sorted(vals), start=1)}
    if len(ranks) != len(vals):
        raise ValueError(f"values must be distinct: {vals}")
    return Permutation(tuple(ranks[v] for v in vals))


def parse_permutation(text: str) -> Permutation:
    s = str(text).strip()
    if not s:
        return Permutation(())
    if "," in s:
        parts = [p.strip() for p in s.split(",")]
        if not all(p.isdigit() for p in parts):
            raise ValueError(f"cannot parse permutation: {text!r}")
        return Permutation(tuple(int(p) for p in parts))
    if s.isdigit():
        return Permutation(tuple(int(ch) for ch in s))
    raise ValueError(f"cannot parse permutation: {text!r}")


def parse_pattern_list(text: str) -> tuple[Permutation, ...]:
    """Список паттернов в порядке записи, без дублей и без нормализации по вложению."""
    s = str(text).strip()
    if not s:
        return ()
    if ";" in s:
        items = [x for x in (p.strip() for p in s.split(";")) if x]
    else:
        items = [x for x in re.split(r"[,\s]+", s) if x]
        bad = [x for x in items if not x.isdigit()]
        if bad:
            raise ValueError(f"cannot parse pattern list: {text!r} (bad items: {bad})")

    out: list[Permutation] = []
    for item in items:
        p = parse_permutation(item)
        if len(p) == 0:
            raise ValueError("patterns must have length >= 1")
        if p not in out:
            out.append(p)
    return tuple(out)


def parse_basis(text: str) -> PatternBasis:
    patterns = parse_pattern_list(text)
    if not patterns:
        raise ValueError("basis list is empty")
    return PatternBasis(patterns)


def format_permutation(perm: Iterable[int], compact: bool = False) -> str:
    vals = list(perm)
    if compact and len(vals) <= 9:
        return "".join(str(v) for v in vals)
    return ",".join(str(v) for v in vals)


def format_pattern_list(patterns: Iterable[Permutation]) -> str:
    pats = list(patterns)
    if all(len(p) <= 9 for p in pats):
        return ",".join(format_permutation(p, compact=True) for p in pats)
    return ";".join(format_permutation(p) for p in pats)
