"""
power_series — усечённые формальные степенные ряды с точными рациональными коэффициентами.

Принципы:
- коэффициенты хранятся как Fraction, плавающая точка сюда не попадает
- порядок усечения N (индекс последнего коэффициента) — часть значения ряда
- бинарные операции требуют равных N; сужение делается явно через truncate()
- деление на ряд с нулевым свободным членом допускается, только если делимое
  делится на ту же степень z; тогда порядок результата падает на эту степень

Скорость:
- умножение и деление идут в целых числах после приведения к общему знаменателю,
  Fraction собирается один раз на коэффициент
- корень — итерация Ньютона с удвоением числа верных коэффициентов
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import isqrt, lcm
from typing import Iterable, Sequence, Union

Scalar = Union[int, Fraction]


@dataclass(frozen=True, slots=True)
class PowerSeries:
    """Ряд c_0 + c_1 z + ... + c_N z^N + O(z^{N+1})."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if not self.coeffs:
            raise ValueError("series needs at least the constant coefficient")
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))

    # --- Конструкторы ---

    @classmethod
    def from_coeffs(cls, values: Iterable[Scalar], order: int) -> "PowerSeries":
        """Ряд порядка order: лишние коэффициенты отбрасываются, недостающие — нули."""
        _check_order(order)
        head = list(values)[: order + 1]
        head.extend([0] * (order + 1 - len(head)))
        return cls(tuple(head))

    @classmethod
    def polynomial(cls, coeffs: Sequence[Scalar], order: int) -> "PowerSeries":
        return cls.from_coeffs(coeffs, order)

    @classmethod
    def constant(cls, value: Scalar, order: int) -> "PowerSeries":
        return cls.from_coeffs([value], order)

    @classmethod
    def zero(cls, order: int) -> "PowerSeries":
        return cls.from_coeffs([], order)

    @classmethod
    def one(cls, order: int) -> "PowerSeries":
        return cls.from_coeffs([1], order)

    @classmethod
    def z(cls, order: int) -> "PowerSeries":
        return cls.from_coeffs([0, 1], order)

    # --- Доступ ---

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, n: int) -> Fraction:
        return self.coeffs[n]

    def __iter__(self):
        return iter(self.coeffs)

    def valuation(self) -> int | None:
        """Индекс первого ненулевого коэффициента; None для нулевого ряда."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return None

    def is_zero(self) -> bool:
        return self.valuation() is None

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def to_integers(self) -> list[int]:
        """Коэффициенты как int; ValueError, если есть дробные."""
        out: list[int] = []
        for n, c in enumerate(self.coeffs):
            if c.denominator != 1:
                raise ValueError(f"coefficient {n} is not an integer: {c}")
            out.append(c.numerator)
        return out

    # --- Явная смена порядка ---

    def truncate(self, order: int) -> "PowerSeries":
        _check_order(order)
        if order > self.order:
            raise ValueError(f"cannot truncate order {self.order} series to higher order {order}")
        return PowerSeries(self.coeffs[: order + 1])

    def extend(self, order: int) -> "PowerSeries":
        """Дополняет нулями до order (используется там, где старшие коэффициенты известны как нули)."""
        if order < self.order:
            raise ValueError(f"cannot extend order {self.order} series to lower order {order}")
        return PowerSeries(self.coeffs + (Fraction(0),) * (order - self.order))

    def divide_by_z_power(self, k: int) -> "PowerSeries":
        """Точное деление на z^k; порядок результата N - k."""
        if k < 0:
            raise ValueError("k must be >= 0")
        if k == 0:
            return self
        if k > self.order:
            raise ValueError(f"cannot divide order {self.order} series by z^{k}")
        if any(self.coeffs[:k]):
            raise ValueError(f"series is not divisible by z^{k}")
        return PowerSeries(self.coeffs[k:])

    # --- Арифметика ---

    def __add__(self, other: "PowerSeries | Scalar") -> "PowerSeries":
        return add(self, _coerce(other, self.order))

    def __radd__(self, other: Scalar) -> "PowerSeries":
        return add(_coerce(other, self.order), self)

    def __sub__(self, other: "PowerSeries | Scalar") -> "PowerSeries":
        return sub(self, _coerce(other, self.order))

    def __rsub__(self, other: Scalar) -> "PowerSeries":
        return sub(_coerce(other, self.order), self)

    def __neg__(self) -> "PowerSeries":
        return PowerSeries(tuple(-c for c in self.coeffs))

    def __mul__(self, other: "PowerSeries | Scalar") -> "PowerSeries":
        if isinstance(other, PowerSeries):
            return mul(self, other)
        k = Fraction(other)
        return PowerSeries(tuple(c * k for c in self.coeffs))

    def __rmul__(self, other: Scalar) -> "PowerSeries":
        return self.__mul__(other)

    def __truediv__(self, other: "PowerSeries | Scalar") -> "PowerSeries":
        if isinstance(other, PowerSeries):
            return div(self, other)
        k = Fraction(other)
        if k == 0:
            raise ZeroDivisionError("division of a series by zero")
        return PowerSeries(tuple(c / k for c in self.coeffs))

    def __rtruediv__(self, other: Scalar) -> "PowerSeries":
        return div(PowerSeries.constant(other, self.order), self)

    def __pow__(self, exponent: int) -> "PowerSeries":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = PowerSeries.one(self.order)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result


def _check_order(order: int) -> None:
    if order < 0:
        raise ValueError("truncation order must be >= 0")


def _coerce(value: "PowerSeries | Scalar", order: int) -> PowerSeries:
    if isinstance(value, PowerSeries):
        return value
    return PowerSeries.constant(value, order)


def _require_same_order(a: PowerSeries, b: PowerSeries) -> None:
    if a.order != b.order:
        raise ValueError(
            f"truncation orders differ: {a.order} vs {b.order}; truncate explicitly first"
        )


def _common_denominator(coeffs: Sequence[Fraction]) -> tuple[list[int], int]:
    """Приводит коэффициенты к виду (целые числители, общий знаменатель)."""
    den = 1
    for c in coeffs:
        if c.denominator != 1:
            den = lcm(den, c.denominator)
    if den == 1:
        return [c.numerator for c in coeffs], 1
    return [c.numerator * (den // c.denominator) for c in coeffs], den


def add(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    _require_same_order(a, b)
    return PowerSeries(tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))


def sub(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    _require_same_order(a, b)
    return PowerSeries(tuple(x - y for x, y in zip(a.coeffs, b.coeffs)))


def mul(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    """Произведение Коши, усечённое на общем порядке."""
    _require_same_order(a, b)
    n_max = a.order
    left, da = _common_denominator(a.coeffs)
    right, db = _common_denominator(b.coeffs)
    right_nz = [(j, bj) for j, bj in enumerate(right) if bj]

    out = [0] * (n_max + 1)
    for i, ai in enumerate(left):
        if not ai:
            continue
        limit = n_max - i
        for j, bj in right_nz:
            if j > limit:
                break
            out[i + j] += ai * bj

    den = da * db
    return PowerSeries(tuple(Fraction(c, den) for c in out))


def div(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    """Частное a/b.

    Если у b нулевой свободный член, обе части сокращаются на z^v (v — валюация b),
    что допустимо только при делимости a на z^v; порядок результата тогда N - v.
    """
    _require_same_order(a, b)
    vb = b.valuation()
    if vb is None:
        raise ZeroDivisionError("division by the zero series")
    if vb > 0:
        va = a.valuation()
        if va is not None and va < vb:
            raise ValueError(f"dividend valuation {va} is below divisor valuation {vb}")
        a = a.divide_by_z_power(vb)
        b = b.divide_by_z_power(vb)

    num, da = _common_denominator(a.coeffs)
    den, db = _common_denominator(b.coeffs)
    n_max = a.order
    b0 = den[0]
    den_nz = [(i, bi) for i, bi in enumerate(den) if i and bi]

    # Q_n = R_n / b0^(n+1), R целые: R_n = A_n b0^n - sum_i B_i b0^(i-1) R_(n-i)
    powers = [1] * (n_max + 2)
    for i in range(1, n_max + 2):
        powers[i] = powers[i - 1] * b0

    rest: list[int] = []
    for n in range(n_max + 1):
        acc = num[n] * powers[n]
        for i, bi in den_nz:
            if i > n:
                break
            acc -= bi * powers[i - 1] * rest[n - i]
        rest.append(acc)

    return PowerSeries(tuple(Fraction(rest[n] * db, da * powers[n + 1]) for n in range(n_max + 1)))


def _rational_sqrt(value: Fraction) -> Fraction:
    if value <= 0:
        raise ValueError(f"sqrt needs a positive constant term, got {value}")
    p, q = value.numerator, value.denominator
    rp, rq = isqrt(p), isqrt(q)
    if rp * rp != p or rq * rq != q:
        raise ValueError(f"constant term {value} is not the square of a rational")
    return Fraction(rp, rq)


def sqrt(a: PowerSeries) -> PowerSeries:
    """Корень с положительным свободным членом; Ньютон y <- (y + a/y)/2."""
    y = PowerSeries.constant(_rational_sqrt(a.coeffs[0]), 0)
    correct = 1
    while correct < a.order + 1:
        correct = min(2 * correct, a.order + 1)
        y = y.extend(correct - 1)
        y = (y + div(a.truncate(correct - 1), y)) / 2
    return y


def horner(coeffs: Sequence[Scalar], x: PowerSeries) -> PowerSeries:
    """Значение многочлена с коэффициентами coeffs (по возрастанию степени) в ряде x."""
    result = PowerSeries.zero(x.order)
    for c in reversed(coeffs):
        result = result * x + c
    return result


@lru_cache(maxsize=None)
def catalan_series(order: int) -> PowerSeries:
    """t = (1 - sqrt(1 - 4z)) / (2z), корень 1 - t + z t^2 = 0."""
    _check_order(order)
    root = sqrt(PowerSeries.polynomial([1, -4], order + 1))
    return ((1 - root) / 2).divide_by_z_power(1)


def format_coefficient(value: Fraction) -> str:
    """Точная десятичная запись: "p" для целых, "p/q" для дробей."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"
