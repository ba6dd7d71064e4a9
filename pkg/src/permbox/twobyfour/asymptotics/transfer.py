"""
transfer — перенос членов lambda·(1 - z/rho)^alpha на асимптотику коэффициентов.

    [z^n] lambda (1 - z/rho)^alpha ~ lambda / Gamma(-alpha) · rho^(-n) · n^(-alpha-1) · (1 + sum_k e_k / n^k)
    e_k = sum_{l=k..2k} lambda_{k,l} prod_{j=1..l} (alpha + j)

Точные величины (e_k, рациональная часть Gamma) считаются в Fraction; в mpmath
переходим только при сборке итоговой суммы.
"""

from __future__ import annotations

import sys
from fractions import Fraction
from typing import Sequence

import mpmath

from permbox.common.series import PuiseuxTerm, bivariate_correction_kernel
from permbox.twobyfour.asymptotics.contracts import (
    MAX_CORRECTION_ORDER,
    WORKING_DPS,
    AsymptoticEstimate,
)


def to_mpf(value: Fraction | int) -> mpmath.mpf:
    value = Fraction(value)
    return mpmath.mpf(value.numerator) / value.denominator


def gamma_half_integer(x: Fraction | int) -> tuple[Fraction, bool]:
    """Gamma(x) = q · sqrt(pi)^e для целых и полуцелых x; возвращает (q, e == 1)."""
    x = Fraction(x)
    if x.denominator == 1:
        if x <= 0:
            raise ValueError(f"Gamma has a pole at {x}")
        q = Fraction(1)
        for m in range(1, x.numerator):
            q *= m
        return q, False
    if x.denominator != 2:
        raise ValueError(f"{x} is not a half-integer")
    q = Fraction(1)
    y = Fraction(1, 2)
    while y < x:
        q *= y
        y += 1
    while y > x:
        y -= 1
        q /= y
    return q, True


def correction_e_k(alpha: Fraction | int, k: int) -> Fraction:
    if k < 1:
        raise ValueError("k must be >= 1")
    alpha = Fraction(alpha)
    kernel = bivariate_correction_kernel(k, 2 * k)
    total = Fraction(0)
    rising = Fraction(1)
    for l in range(1, 2 * k + 1):
        rising *= alpha + l
        if l >= k:
            total += kernel.coefficient(k, l) * rising
    return total


def _reciprocal_gamma(x: Fraction) -> mpmath.mpf:
    if x.denominator <= 2:
        q, has_sqrt_pi = gamma_half_integer(x)
        value = to_mpf(q)
        if has_sqrt_pi:
            value *= mpmath.sqrt(mpmath.pi)
        return 1 / value
    return mpmath.rgamma(to_mpf(x))


def _lambda_value(term: PuiseuxTerm) -> mpmath.mpf:
    return to_mpf(term.lam_rational) + to_mpf(term.lam_surd) * mpmath.sqrt(term.radicand)


def fo_predict(
    terms: Sequence[PuiseuxTerm],
    rho: Fraction | int,
    n: int,
    order: int = 1,
) -> AsymptoticEstimate:
    """Сумма переносов по членам; члены с целым alpha >= 0 пропускаются (WARN)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if not 0 <= order <= MAX_CORRECTION_ORDER:
        raise ValueError(f"correction order must be in 0..{MAX_CORRECTION_ORDER}, got {order}")
    rho = Fraction(rho)
    if rho <= 0:
        raise ValueError("rho must be positive")

    used: list[PuiseuxTerm] = []
    with mpmath.workdps(WORKING_DPS):
        total = mpmath.mpf(0)
        growth = to_mpf(rho) ** (-n)
        for term in terms:
            alpha = term.alpha
            if alpha.denominator == 1 and alpha >= 0:
                print(f"WARN: skipping term with integer exponent alpha={alpha}", file=sys.stderr)
                continue
            used.append(term)
            if term.is_zero:
                continue
            correction = mpmath.mpf(1)
            for k in range(1, order + 1):
                correction += to_mpf(correction_e_k(alpha, k)) / mpmath.mpf(n) ** k
            total += (
                _lambda_value(term)
                * _reciprocal_gamma(-alpha)
                * growth
                * mpmath.mpf(n) ** to_mpf(-alpha - 1)
                * correction
            )
    return AsymptoticEstimate(n=n, predicted=total, order=order, terms=tuple(used))
