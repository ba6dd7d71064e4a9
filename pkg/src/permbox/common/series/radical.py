"""
radical — замкнутые формы вида  c + (P(z) + Q(z)·√R(z)) / (D(z)·√R(z)^e)  и их разложения Пюизо.

Такой шаблон покрывает все квадратично-иррациональные производящие функции стенда:
R = 1 - 4z (классы с каталановым ядром) и R = 1 - 6z + 5z^2.

Разложение в доминирующей особенности делается только для линейного R = 1 - z/rho:
подстановка z = rho(1 - s^2) превращает форму в ряд Лорана по s = √(1 - z/rho),
и коэффициент при s^j даёт член lambda·(1 - z/rho)^(j/2).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from permbox.common.series.power_series import PowerSeries, horner, sqrt


@dataclass(frozen=True, slots=True)
class PuiseuxTerm:
    """Член lambda·(1 - z/rho)^alpha, lambda = a + b·√c."""

    alpha: Fraction
    lam_rational: Fraction = Fraction(0)
    lam_surd: Fraction = Fraction(0)
    radicand: int = 1

    def __post_init__(self) -> None:
        object.__setattr__(self, "alpha", Fraction(self.alpha))
        object.__setattr__(self, "lam_rational", Fraction(self.lam_rational))
        object.__setattr__(self, "lam_surd", Fraction(self.lam_surd))
        if self.radicand < 0:
            raise ValueError("surd radicand must be >= 0")

    @property
    def is_zero(self) -> bool:
        return self.lam_rational == 0 and (self.lam_surd == 0 or self.radicand == 0)


@dataclass(frozen=True, slots=True)
class PuiseuxData:
    """Особенность rho и список членов разложения; provenance — откуда данные."""

    rho: Fraction
    terms: tuple[PuiseuxTerm, ...]
    provenance: str = ""


def _as_fractions(values: Sequence) -> tuple[Fraction, ...]:
    return tuple(Fraction(v) for v in values)


def _poly_valuation(coeffs: Sequence[Fraction]) -> int:
    for i, c in enumerate(coeffs):
        if c:
            return i
    raise ValueError("denominator polynomial is zero")


@dataclass(frozen=True, slots=True)
class RadicalForm:
    plain: tuple[Fraction, ...]
    root: tuple[Fraction, ...]
    denominator: tuple[Fraction, ...]
    radicand: tuple[Fraction, ...]
    root_power: int = 0
    constant: Fraction = field(default=Fraction(0))

    def __post_init__(self) -> None:
        for name in ("plain", "root", "denominator", "radicand"):
            object.__setattr__(self, name, _as_fractions(getattr(self, name)))
        object.__setattr__(self, "constant", Fraction(self.constant))
        if not self.radicand or self.radicand[0] != 1:
            raise ValueError("radicand must have constant term 1")
        if self.root_power < 0:
            raise ValueError("root_power must be >= 0")

    def evaluate(self, order: int) -> PowerSeries:
        """Ряд формы до z^order (с запасом на сокращение z в знаменателе)."""
        work = order + _poly_valuation(self.denominator)
        w = sqrt(PowerSeries.polynomial(self.radicand, work))
        num = PowerSeries.polynomial(self.plain, work) + PowerSeries.polynomial(self.root, work) * w
        den = PowerSeries.polynomial(self.denominator, work) * w**self.root_power
        return (num / den).truncate(order) + self.constant

    @property
    def singularity(self) -> Fraction:
        """rho для линейного R = 1 - z/rho."""
        if len(self.radicand) != 2 or self.radicand[1] >= 0:
            raise ValueError("Puiseux expansion needs a radicand of the form 1 - z/rho")
        return -1 / self.radicand[1]

    def puiseux(self, max_alpha: Fraction = Fraction(5, 2), provenance: str = "") -> PuiseuxData:
        """Члены с alpha <= max_alpha, кроме целых неотрицательных (они аналитичны)."""
        rho = self.singularity
        top = int(2 * Fraction(max_alpha)) + self.root_power
        if top < 0:
            raise ValueError("max_alpha is below the leading exponent")
        z_of_s = PowerSeries.polynomial([rho, 0, -rho], top)
        s = PowerSeries.z(top)
        num = horner(self.plain, z_of_s) + horner(self.root, z_of_s) * s
        den = horner(self.denominator, z_of_s)
        if den[0] == 0:
            raise ValueError(f"denominator vanishes at the singularity z = {rho}")
        expansion = num / den

        terms: list[PuiseuxTerm] = []
        for j, c in enumerate(expansion):
            power = j - self.root_power
            if c == 0 or (power >= 0 and power % 2 == 0):
                continue
            terms.append(PuiseuxTerm(alpha=Fraction(power, 2), lam_rational=c))
        return PuiseuxData(rho=rho, terms=tuple(terms), provenance=provenance)
