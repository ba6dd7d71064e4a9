"""
bivariate — прямоугольные ряды от двух переменных (nu, t) и ядро поправок переноса.

Ядро: lambda_{k,l} = [nu^k t^l] e^t (1 + nu t)^(-1 - 1/nu).

Выкладка (все степени nu неотрицательны):
    e^t (1 + nu t)^(-1-1/nu) = exp(Q),
    Q = sum_{m>=1} (-1)^m nu^m t^m / m + sum_{m>=2} (-1)^m nu^(m-1) t^m / m
(член -t второй суммы при m = 1 сокращается с e^t).
exp(Q) считается рекуррентно по t: l F_l = sum_{i=1..l} i Q_i F_{l-i},
где каждый F_l — многочлен от nu, усечённый на степени K.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache


@dataclass(frozen=True, slots=True)
class BivariateSeries:
    """Коэффициенты rows[k][l] при nu^k t^l, k <= K, l <= L."""

    rows: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        if not self.rows or not self.rows[0]:
            raise ValueError("bivariate series needs at least one coefficient")
        width = len(self.rows[0])
        if any(len(r) != width for r in self.rows):
            raise ValueError("bivariate series must be rectangular")

    @property
    def k_max(self) -> int:
        return len(self.rows) - 1

    @property
    def l_max(self) -> int:
        return len(self.rows[0]) - 1

    def coefficient(self, k: int, l: int) -> Fraction:
        if not (0 <= k <= self.k_max and 0 <= l <= self.l_max):
            raise ValueError(f"index ({k}, {l}) outside truncation ({self.k_max}, {self.l_max})")
        return self.rows[k][l]


def _poly_mul(a: list[Fraction], b: list[Fraction], k_max: int) -> list[Fraction]:
    out = [Fraction(0)] * (k_max + 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j in range(k_max + 1 - i):
            if b[j]:
                out[i + j] += x * b[j]
    return out


@lru_cache(maxsize=None)
def bivariate_correction_kernel(k_max: int, l_max: int) -> BivariateSeries:
    if k_max < 0 or l_max < 0:
        raise ValueError("K and L must be >= 0")

    # q[l]: коэффициент Q при t^l как многочлен от nu
    q = [[Fraction(0)] * (k_max + 1) for _ in range(l_max + 1)]
    for m in range(1, l_max + 1):
        sign = 1 if m % 2 == 0 else -1
        if m <= k_max:
            q[m][m] += Fraction(sign, m)
        if m >= 2 and m - 1 <= k_max:
            q[m][m - 1] += Fraction(sign, m)

    f = [[Fraction(0)] * (k_max + 1) for _ in range(l_max + 1)]
    f[0][0] = Fraction(1)
    for l in range(1, l_max + 1):
        acc = [Fraction(0)] * (k_max + 1)
        for i in range(1, l + 1):
            term = _poly_mul(q[i], f[l - i], k_max)
            for k in range(k_max + 1):
                acc[k] += i * term[k]
        f[l] = [c / l for c in acc]

    rows = tuple(tuple(f[l][k] for l in range(l_max + 1)) for k in range(k_max + 1))
    return BivariateSeries(rows=rows)
