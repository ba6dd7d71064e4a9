"""
formulas — замкнутые формы производящих функций каталога.

Обозначения:
- z — переменная длины, t = (1 - √(1-4z))/(2z) — каталанов ряд (ядро 1 - t + z t^2 = 0)
- √(1-4z) = 1 - 2tz, поэтому t-формы и радикальные формы — одно и то же
- радикальные формы задаются RadicalForm: c + (P + Q·√R) / (D·√R^e)

Каждая функция вида f(order) -> PowerSeries строит ряд ровно до z^order.
"""

from __future__ import annotations

from functools import reduce
from typing import Sequence

from permbox.common.series import PowerSeries, RadicalForm, catalan_series, sqrt

# --- Многочлены ---


def poly_mul(*polys: Sequence[int]) -> tuple[int, ...]:
    """Произведение многочленов (коэффициенты по возрастанию степени)."""

    def _two(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                out[i + j] += x * y
        return tuple(out)

    return reduce(_two, polys, (1,))


def poly_neg(p: Sequence[int]) -> tuple[int, ...]:
    return tuple(-c for c in p)


ONE_MINUS_4Z = (1, -4)
ONE_MINUS_6Z_5Z2 = (1, -6, 5)
ONE_MINUS_Z = (1, -1)
ONE_MINUS_2Z = (1, -2)
TWO_MINUS_Z = (2, -1)
Z = (0, 1)
GOLDEN = (1, -3, 1)  # 1 - 3z + z^2
GOLDEN_SQ = poly_mul(GOLDEN, GOLDEN)

# 2 - 22z + 96z^2 - 220z^3 + 282z^4 - 196z^5 + 64z^6 - 8z^7: полюс Av(4123,1342)
P3_DENOMINATOR = (2, -22, 96, -220, 282, -196, 64, -8)


# --- Радикальные формы ---

A_RADICAL = RadicalForm(
    plain=Z,
    root=(),
    denominator=(1,),
    radicand=ONE_MINUS_4Z,
    root_power=1,
    constant=1,
)

B_RADICAL = RadicalForm(
    plain=(1, -3),
    root=(1, -3),
    denominator=poly_mul((2,), GOLDEN),
    radicand=ONE_MINUS_4Z,
    root_power=1,
)

H_RADICAL = RadicalForm(
    plain=(3, -22, 54, -54, 25, -4),
    root=poly_neg((1, -6, 14, -16, 5)),
    denominator=poly_mul((2,), GOLDEN_SQ),
    radicand=ONE_MINUS_4Z,
    root_power=1,
)

I_RADICAL = RadicalForm(
    plain=poly_mul(ONE_MINUS_Z, ONE_MINUS_Z, (1, -5, 5)),
    root=poly_neg(poly_mul(ONE_MINUS_Z, ONE_MINUS_Z, GOLDEN)),
    denominator=poly_mul((2,), GOLDEN_SQ),
    radicand=ONE_MINUS_4Z,
)

P1_RADICAL = RadicalForm(
    plain=(2, -13, 26, -17, 4),
    root=poly_neg(poly_mul(Z, (1, -2, -1))),
    denominator=poly_mul((2,), GOLDEN_SQ),
    radicand=ONE_MINUS_4Z,
    root_power=1,
)

J_RADICAL = RadicalForm(
    plain=(1, 1),
    root=(-1,),
    denominator=poly_mul((2,), (0, 2, -1)),
    radicand=ONE_MINUS_6Z_5Z2,
)

K_RADICAL = RadicalForm(
    plain=poly_mul(ONE_MINUS_Z, (1, -5, 4, -2)),
    root=poly_neg(poly_mul(ONE_MINUS_Z, ONE_MINUS_2Z)),
    denominator=poly_mul((2,), ONE_MINUS_2Z, GOLDEN, TWO_MINUS_Z, TWO_MINUS_Z),
    radicand=ONE_MINUS_6Z_5Z2,
)

P2_RADICAL = RadicalForm(
    plain=(2, -8, 2, 17, -15, 4),
    root=poly_neg((2, -10, 16, -9, 2)),
    denominator=poly_mul((2,), Z, TWO_MINUS_Z, TWO_MINUS_Z, ONE_MINUS_2Z, GOLDEN),
    radicand=ONE_MINUS_6Z_5Z2,
)

P3_RADICAL = RadicalForm(
    plain=poly_mul(Z, ONE_MINUS_Z, ONE_MINUS_2Z, (1, -7, 17, -16, 4)),
    root=poly_mul(Z, ONE_MINUS_Z, ONE_MINUS_2Z, (1, -3, 3)),
    denominator=P3_DENOMINATOR,
    radicand=ONE_MINUS_4Z,
    constant=1,
)


# --- t-формы ---


def _zt(order: int) -> tuple[PowerSeries, PowerSeries]:
    return PowerSeries.z(order), catalan_series(order)


def _p(coeffs: Sequence[int], order: int) -> PowerSeries:
    return PowerSeries.polynomial(coeffs, order)


def catalan(order: int) -> PowerSeries:
    return catalan_series(order)


def fan_substitution(order: int) -> PowerSeries:
    """A через подстановку t в функциональное уравнение: 1 + tz(1 - tz)/(1 - 2tz)."""
    z, t = _zt(order)
    tz = t * z
    return 1 + tz * (1 - tz) / (1 - 2 * tz)


def b_from_a(order: int, a: PowerSeries) -> PowerSeries:
    """B = A + t^4 z^4 (1-z) / ((1-3z+z^2) √(1-4z))."""
    z, t = _zt(order)
    root = sqrt(_p(ONE_MINUS_4Z, order))
    return a + (t * z) ** 4 * _p(ONE_MINUS_Z, order) / (_p(GOLDEN, order) * root)


def f_series(order: int) -> PowerSeries:
    z, t = _zt(order)
    return (
        t**2
        * z**4
        * _p(ONE_MINUS_Z, order) ** 2
        / (_p(GOLDEN_SQ, order) * (1 - 2 * t * z))
    )


def g_series(order: int) -> PowerSeries:
    z, t = _zt(order)
    return (
        (t * z) ** 6
        * _p(ONE_MINUS_Z, order)
        * (1 - z + t * z)
        / (_p(GOLDEN_SQ, order) * (1 - 2 * t * z))
    )


def i_series(order: int) -> PowerSeries:
    """I = t^5 z^5 (1-z)^2 / (1-3z+z^2)^2 — перестановки Av(4123,1324), содержащие 31524."""
    z, t = _zt(order)
    return (t * z) ** 5 * _p(ONE_MINUS_Z, order) ** 2 / _p(GOLDEN_SQ, order)


def l_series(order: int) -> PowerSeries:
    return catalan_series(order) - 1


def m_series(order: int) -> PowerSeries:
    """Непустые Av(4123,231)."""
    return _p((0, 1, -2, 2), order) / _p((1, -4, 5, -3), order)


def n1_series(order: int) -> PowerSeries:
    z, t = _zt(order)
    return t**4 * z**3


def n2_series(order: int) -> PowerSeries:
    z, t = _zt(order)
    return t**2 * z**4 / _p(poly_mul(ONE_MINUS_Z, ONE_MINUS_Z, ONE_MINUS_2Z), order)


def n3_series(order: int) -> PowerSeries:
    z, t = _zt(order)
    return t**3 * z**3 / _p(ONE_MINUS_Z, order)


def n4_series(order: int) -> PowerSeries:
    z, t = _zt(order)
    return t**3 * z**4 / _p(ONE_MINUS_Z, order) ** 3


def n_series(order: int) -> PowerSeries:
    """Смеси: t^2 z^3 (t^2 + z/((1-z)^2(1-2z)) + t/(1-z) + tz/(1-z)^3)."""
    z, t = _zt(order)
    one_minus_z = _p(ONE_MINUS_Z, order)
    inner = (
        t**2
        + z / _p(poly_mul(ONE_MINUS_Z, ONE_MINUS_Z, ONE_MINUS_2Z), order)
        + t / one_minus_z
        + t * z / one_minus_z**3
    )
    return t**2 * z**3 * inner


def alternating_composition(order: int, l: PowerSeries, m: PowerSeries, n: PowerSeries) -> PowerSeries:
    """1 + zW/(1 - NW), W = (1+L)(1+M)/(1 - LM): чередование сумм, косых сумм и смесей."""
    z = PowerSeries.z(order)
    w = (1 + l) * (1 + m) / (1 - l * m)
    return 1 + z * w / (1 - n * w)


def flag_kernel_residual(order: int, j: PowerSeries) -> PowerSeries:
    """(2z - z^2) J^2 - (1+z) J + 1: ядро уравнения для флагов в корне v = J."""
    return _p((0, 2, -1), order) * j * j - _p((1, 1), order) * j + 1
