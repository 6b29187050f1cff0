"""Hilbert series and Hilbert function of the Pluecker-embedded Grassmannian.

The series of ``Gr(k, n)`` in ``P^(binom(n,k)-1)`` is

    N_k(r; t) / (1 - t)^(k(n-k)+1),   r = n - k,

where the numerator coefficients ``c_k(r, j)`` (the k-Narayana numbers,
an alternating sum of binomial ratios) form the h-vector of
``Gr(k, k + r)``.  The Hilbert function can be read off either by the
closed sum or by dividing the series out term by term; both are exposed
and cross-checked in the tests against the hook-content dimension of the
``k x m`` rectangular GL_n representation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .scalars import DomainError, binomial

__all__ = [
    "HilbertSeries",
    "c_coefficient",
    "hilbert_series",
    "hilbert_value",
    "hilbert_even_sum",
    "fs_leading_coefficient",
]


@lru_cache(maxsize=None)
def c_coefficient(k: int, r: int, j: int) -> int:
    if k < 1 or r < 0 or j < 0:
        raise DomainError(f"c_coefficient needs k >= 1, r >= 0, j >= 0, got {(k, r, j)}")
    total = Fraction(0)
    base = [math.comb(r + i, r) for i in range(k)]
    for l in range(j + 1):
        ratio = Fraction(1)
        for i in range(k):
            ratio *= Fraction(math.comb(r + i + l, r), base[i])
        total += (-1) ** (j - l) * math.comb(k * r + 1, j - l) * ratio
    if total.denominator != 1:
        raise ArithmeticError(f"c_{k}({r}, {j}) = {total} is not an integer")
    return total.numerator


@dataclass(frozen=True)
class HilbertSeries:
    """``numerator(t) / (1 - t^denom_period)^denom_exponent``."""

    numerator: tuple[int, ...]
    denom_exponent: int
    denom_period: int

    def denominator(self) -> list[int]:
        e, k = self.denom_exponent, self.denom_period
        den = [0] * (k * e + 1)
        for q in range(e + 1):
            den[k * q] = (-1) ** q * math.comb(e, q)
        return den

    def expand(self, degree: int) -> list[int]:
        """Power-series coefficients up to ``t^degree`` by long division."""
        den = self.denominator()
        num = self.numerator
        out: list[int] = []
        for m in range(degree + 1):
            acc = num[m] if m < len(num) else 0
            for j in range(1, min(m, len(den) - 1) + 1):
                if den[j]:
                    acc -= den[j] * out[m - j]
            out.append(acc)  # den[0] == 1
        return out


def hilbert_series(k: int, n: int) -> HilbertSeries:
    _check_kn(k, n)
    r = n - k
    top = max(0, (r - 1) * (k - 1))
    numerator = tuple(c_coefficient(k, r, j) for j in range(top + 1))
    return HilbertSeries(numerator, k * (n - k) + 1, 1)


def _check_kn(k: int, n: int) -> None:
    if not 1 <= k <= n:
        raise DomainError(f"need 1 <= k <= n, got k={k}, n={n}")


def hilbert_value(k: int, n: int, m: int, method: str = "closed") -> int:
    """Hilbert function of ``Gr(k, n)`` under the Pluecker embedding at degree ``m``."""
    _check_kn(k, n)
    if m < 0:
        raise DomainError("degree must be non-negative")
    if method == "series":
        return hilbert_series(k, n).expand(m)[m]
    if method != "closed":
        raise DomainError(f"unknown method {method!r}")
    r = n - k
    dim = k * (n - k)
    total = 0
    for j in range(min(m, max(0, (r - 1) * (k - 1))) + 1):
        total += c_coefficient(k, r, j) * binomial(dim + m - j, m - j)
    return total


def hilbert_even_sum(k: int, n: int, s: int) -> int:
    """``sum_{i=1}^s H(2i)``."""
    if s < 1:
        raise DomainError("s must be positive")
    return sum(hilbert_value(k, n, 2 * i) for i in range(1, s + 1))


def fs_leading_coefficient(k: int, s: int) -> Fraction:
    """``prod_{j=1}^{2s} (j-1)! / (j+k-1)!``, the ``n^(2ks)`` coefficient."""
    if k < 1 or s < 1:
        raise DomainError("k and s must be positive")
    out = Fraction(1)
    for j in range(1, 2 * s + 1):
        out *= Fraction(math.factorial(j - 1), math.factorial(j + k - 1))
    return out
