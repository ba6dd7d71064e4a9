from __future__ import annotations

import random
from fractions import Fraction
from math import comb

import pytest

from permbox.common.series import (
    PowerSeries,
    RadicalForm,
    add,
    bivariate_correction_kernel,
    catalan_series,
    div,
    format_coefficient,
    mul,
    sqrt,
    sub,
)


def test_catalan_series_coefficients() -> None:
    t = catalan_series(30)
    assert t.to_integers() == [comb(2 * n, n) // (n + 1) for n in range(31)]


def test_sqrt_squares_back() -> None:
    w = sqrt(PowerSeries.polynomial([1, -6, 5], 40))
    assert w * w == PowerSeries.polynomial([1, -6, 5], 40)
    assert w[0] == 1


def test_division_by_z_power_drops_order() -> None:
    a = PowerSeries.polynomial([0, 1, 1], 10)
    b = PowerSeries.z(10)
    q = a / b
    assert q.order == 9
    assert q.to_integers()[:3] == [1, 1, 0]


def test_inverse_of_one_minus_z() -> None:
    geo = 1 / PowerSeries.polynomial([1, -1], 12)
    assert geo.to_integers() == [1] * 13


def test_errors() -> None:
    a = PowerSeries.one(5)
    b = PowerSeries.one(6)
    with pytest.raises(ValueError):
        a + b
    with pytest.raises(ZeroDivisionError):
        a / PowerSeries.zero(5)
    with pytest.raises(ValueError):
        PowerSeries.from_coeffs([Fraction(1, 2)], 0).to_integers()
    with pytest.raises(ValueError):
        a.truncate(7)
    with pytest.raises(ValueError):
        PowerSeries.polynomial([1, 1], 5) / PowerSeries.polynomial([0, 0, 1], 5)


def test_exact_rationals_survive() -> None:
    half = PowerSeries.constant(1, 4) / 2
    assert half[0] == Fraction(1, 2)
    assert not half.is_integral()
    assert format_coefficient(half[0]) == '1/2'
    assert format_coefficient(Fraction(-7)) == '-7'


def test_correction_kernel_low_entries() -> None:
    kernel = bivariate_correction_kernel(3, 6)
    assert kernel.coefficient(0, 0) == 1
    assert kernel.coefficient(1, 1) == -1
    assert kernel.coefficient(1, 2) == Fraction(1, 2)
    assert all(kernel.coefficient(0, l) == 0 for l in range(1, 7))
    with pytest.raises(ValueError):
        kernel.coefficient(4, 0)


def test_radical_form_puiseux_of_central_binomial() -> None:
    # z / sqrt(1 - 4z) + 1
    form = RadicalForm(plain=(0, 1), root=(), denominator=(1,), radicand=(1, -4), root_power=1, constant=1)
    series = form.evaluate(12)
    assert series.to_integers() == [1] + [comb(2 * n - 2, n - 1) for n in range(1, 13)]
    data = form.puiseux()
    assert data.rho == Fraction(1, 4)
    by_alpha = {t.alpha: t.lam_rational for t in data.terms}
    assert by_alpha[Fraction(-1, 2)] == Fraction(1, 4)
    assert by_alpha[Fraction(1, 2)] == Fraction(-1, 4)
    assert all(t.alpha.denominator == 2 for t in data.terms)


def _random_series(rng: random.Random, order: int, constant: int | None = None) -> PowerSeries:
    coeffs = [Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(order + 1)]
    if constant is not None:
        coeffs[0] = Fraction(constant)
    return PowerSeries.from_coeffs(coeffs, order)


def test_ring_axioms_on_random_series() -> None:
    rng = random.Random(50)
    order = 50
    zero = PowerSeries.zero(order)
    one = PowerSeries.one(order)
    for _ in range(5):
        a, b, c = (_random_series(rng, order) for _ in range(3))
        assert add(a, b) == add(b, a)
        assert add(add(a, b), c) == add(a, add(b, c))
        assert mul(a, b) == mul(b, a)
        assert mul(mul(a, b), c) == mul(a, mul(b, c))
        assert mul(a, add(b, c)) == add(mul(a, b), mul(a, c))
        assert add(a, zero) == a
        assert mul(a, one) == a
        assert sub(a, a) == zero


def test_division_undoes_multiplication() -> None:
    rng = random.Random(7)
    for _ in range(5):
        a = _random_series(rng, 50)
        b = _random_series(rng, 50, constant=rng.choice([-3, 1, 2]))
        assert div(mul(a, b), b) == a


def test_sqrt_of_square_is_identity() -> None:
    rng = random.Random(3)
    for _ in range(5):
        a = _random_series(rng, 50, constant=1)
        assert sqrt(mul(a, a)) == a


@pytest.mark.parametrize('order', [0, 1, 17, 600])
def test_catalan_kernel_residual_vanishes(order: int) -> None:
    t = catalan_series(order)
    residual = 1 - t + PowerSeries.z(order) * t * t
    assert residual.is_zero()
