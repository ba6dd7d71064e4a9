"""
numeric — оценки по точным коэффициентам: темп роста и доминирующий корень.

growth_rate: отношения r_n = a_{n+1}/a_n по хвосту ненулевых коэффициентов.
- raw        — последнее отношение
- aitken     — дельта-квадрат Эйткена по трём последним отношениям
- richardson — (n+1) r_{n+1} - n r_n, снимает поправку порядка 1/n

dominant_root: изоляция корня последовательностью Штурма и бисекция, всё в Fraction.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

import mpmath

from permbox.twobyfour.asymptotics.contracts import GROWTH_METHODS, MIN_GROWTH_TERMS, WORKING_DPS

ROOT_DIGITS = 12


def _trailing_nonzero(coeffs: Sequence[int]) -> int:
    run = 0
    for c in reversed(coeffs):
        if c == 0:
            break
        run += 1
    return run


def growth_rate(coeffs: Sequence[int], method: str = "richardson") -> mpmath.mpf:
    if method not in GROWTH_METHODS:
        raise ValueError(f"Unknown growth method: {method!r}. Available: {list(GROWTH_METHODS)}")
    run = _trailing_nonzero(coeffs)
    if run < MIN_GROWTH_TERMS:
        raise ValueError(
            f"growth rate needs at least {MIN_GROWTH_TERMS} nonzero trailing coefficients, got {run}"
        )
    last = len(coeffs) - 1

    with mpmath.workdps(WORKING_DPS):
        def ratio(n: int) -> mpmath.mpf:
            return mpmath.mpf(int(coeffs[n + 1])) / int(coeffs[n])

        if method == "raw":
            return ratio(last - 1)
        if method == "richardson":
            n = last - 2
            return (n + 1) * ratio(n + 1) - n * ratio(n)
        r0, r1, r2 = ratio(last - 3), ratio(last - 2), ratio(last - 1)
        denom = r2 - 2 * r1 + r0
        if denom == 0:
            return r2
        return r2 - (r2 - r1) ** 2 / denom


def _horner(poly: Sequence[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(poly):
        acc = acc * x + c
    return acc


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def _trim(poly: list[Fraction]) -> list[Fraction]:
    while poly and poly[-1] == 0:
        poly.pop()
    return poly


def _divmod(num: Sequence[Fraction], den: Sequence[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    rest = list(num)
    quot = [Fraction(0)] * max(len(num) - len(den) + 1, 0)
    while len(rest) >= len(den) and rest:
        shift = len(rest) - len(den)
        factor = rest[-1] / den[-1]
        quot[shift] = factor
        for i, c in enumerate(den):
            rest[shift + i] -= factor * c
        rest.pop()
        _trim(rest)
    return _trim(quot), rest


def sturm_sequence(poly: Sequence[Fraction | int]) -> list[list[Fraction]]:
    """p, p', затем -rem(p_{k-1}, p_k) до нулевого остатка; последний член — НОД(p, p')."""
    seq = [_trim([Fraction(c) for c in poly])]
    if not seq[0]:
        raise ValueError("polynomial is zero")
    nxt = _trim([i * c for i, c in enumerate(seq[0])][1:])
    while nxt:
        seq.append(nxt)
        nxt = [-c for c in _divmod(seq[-2], seq[-1])[1]]
    return seq


def _variations(seq: Sequence[Sequence[Fraction]], x: Fraction) -> int:
    signs = [s for s in (_sign(_horner(p, x)) for p in seq) if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def dominant_root(poly: Sequence[Fraction | int]) -> mpmath.mpf:
    """Наименьший вещественный корень на (0, 1], 12 значащих цифр.

    V(lo) - V(hi) по последовательности Штурма — число различных корней на (lo, hi].
    Отрезок делится пополам, сохраняя корень в (lo, hi] и отсутствие корней на (0, lo].
    """
    coeffs = _trim([Fraction(c) for c in poly])
    if not coeffs:
        raise ValueError("polynomial is zero")
    while coeffs[0] == 0:
        # корень z = 0 не положителен
        coeffs = coeffs[1:]

    seq = sturm_sequence(coeffs)
    if len(seq[-1]) > 1:
        # кратные корни: работаем со свободной от квадратов частью
        coeffs = _divmod(coeffs, seq[-1])[0]
        seq = sturm_sequence(coeffs)

    lo, hi = Fraction(0), Fraction(1)
    v_lo = _variations(seq, lo)
    if v_lo == _variations(seq, hi):
        raise ValueError("no sign change of the polynomial on (0, 1]")

    tolerance = Fraction(1, 10**ROOT_DIGITS)
    while hi - lo > hi * tolerance:
        mid = (lo + hi) / 2
        if v_lo > _variations(seq, mid):
            hi = mid
        else:
            lo = mid
    if _horner(coeffs, hi) == 0:
        root = hi
    else:
        root = (lo + hi) / 2
    with mpmath.workdps(WORKING_DPS):
        return mpmath.mpf(root.numerator) / root.denominator
