"""Exact rationals with a power-of-sqrt(pi) grading.

Gamma values at integers and half-integers are rational multiples of
``sqrt(pi)**e``.  :class:`ExactScalar` keeps the rational part and the
exponent ``e`` separately so that products of Gamma values can be
accumulated without floating point and the final pi-power checked.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

__all__ = [
    "DomainError",
    "ExactScalar",
    "binomial",
    "factorial",
    "double_factorial",
    "gamma_half",
    "gamma_ratio_half_shift",
    "format_rational",
]


class DomainError(ValueError):
    """Raised when an argument lies outside an operation's domain."""


@dataclass(frozen=True)
class ExactScalar:
    """The number ``coeff * sqrt(pi)**sqrt_pi_exp``.

    ``sqrt_pi_exp`` is 0 or 1 for single Gamma values, -1 for reciprocals
    such as ``1/Gamma(3/2)``; inside long products it may transiently hold
    any integer (2 is one factor of pi).  Zero is always stored with
    exponent 0.
    """

    coeff: Fraction
    sqrt_pi_exp: int = 0

    def __post_init__(self):
        object.__setattr__(self, "coeff", Fraction(self.coeff))
        if self.coeff == 0 and self.sqrt_pi_exp != 0:
            object.__setattr__(self, "sqrt_pi_exp", 0)

    @classmethod
    def one(cls) -> ExactScalar:
        return cls(Fraction(1), 0)

    @property
    def is_rational(self) -> bool:
        return self.sqrt_pi_exp == 0

    def __mul__(self, other: ExactScalar | int | Fraction) -> ExactScalar:
        if not isinstance(other, ExactScalar):
            return ExactScalar(self.coeff * other, self.sqrt_pi_exp)
        return ExactScalar(self.coeff * other.coeff, self.sqrt_pi_exp + other.sqrt_pi_exp)

    __rmul__ = __mul__

    def __truediv__(self, other: ExactScalar | int | Fraction) -> ExactScalar:
        if not isinstance(other, ExactScalar):
            return ExactScalar(self.coeff / other, self.sqrt_pi_exp)
        if other.coeff == 0:
            raise ZeroDivisionError("division by zero ExactScalar")
        return ExactScalar(self.coeff / other.coeff, self.sqrt_pi_exp - other.sqrt_pi_exp)

    def __add__(self, other: ExactScalar) -> ExactScalar:
        if self.coeff == 0:
            return other
        if other.coeff == 0:
            return self
        if self.sqrt_pi_exp != other.sqrt_pi_exp:
            raise DomainError(
                f"cannot add sqrt(pi)^{self.sqrt_pi_exp} and sqrt(pi)^{other.sqrt_pi_exp} terms"
            )
        return ExactScalar(self.coeff + other.coeff, self.sqrt_pi_exp)

    def to_fraction(self) -> Fraction:
        """Return the value as a Fraction; only valid when no pi factor remains."""
        if not self.is_rational:
            raise DomainError(f"residual sqrt(pi) exponent {self.sqrt_pi_exp}")
        return self.coeff

    def __float__(self) -> float:
        return float(self.coeff) * math.pi ** (self.sqrt_pi_exp / 2)

    def __str__(self) -> str:
        c = format_rational(self.coeff)
        if self.sqrt_pi_exp == 0:
            return c
        return f"{c}*sqrt(pi)^{self.sqrt_pi_exp}"


def format_rational(q: Fraction | int) -> str:
    """Serialize as ``"p/q"``, or ``"p"`` when the denominator is 1."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def binomial(n: int, k: int) -> int:
    if n < 0:
        raise DomainError(f"binomial({n}, {k}): negative n is not supported")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def factorial(n: int) -> int:
    if n < 0:
        raise DomainError(f"factorial of negative integer {n}")
    return math.factorial(n)


def double_factorial(m: int) -> int:
    """``m!! = m (m-2) (m-4) ...`` with ``0!! = (-1)!! = 1``."""
    if m < -1:
        raise DomainError(f"double factorial undefined at {m}")
    out = 1
    while m > 1:
        out *= m
        m -= 2
    return out


@lru_cache(maxsize=None)
def gamma_half(two_x: int) -> ExactScalar:
    """Exact ``Gamma(two_x / 2)`` for a positive integer ``two_x``."""
    if two_x <= 0:
        raise DomainError(f"Gamma has a pole at {Fraction(two_x, 2)}")
    if two_x % 2 == 0:
        return ExactScalar(Fraction(math.factorial(two_x // 2 - 1)), 0)
    # Gamma(m + 1/2) = (2m)! / (4^m m!) sqrt(pi)
    m = (two_x - 1) // 2
    return ExactScalar(Fraction(math.factorial(2 * m), 4**m * math.factorial(m)), 1)


def gamma_ratio_half_shift(two_x: int, num_shift_halves: int, den_shift_halves: int) -> ExactScalar:
    """``Gamma((two_x + num_shift_halves)/2) / Gamma((two_x + den_shift_halves)/2)``."""
    num = two_x + num_shift_halves
    den = two_x + den_shift_halves
    if num <= 0 or den <= 0:
        raise DomainError(f"Gamma pole in ratio Gamma({Fraction(num, 2)})/Gamma({Fraction(den, 2)})")
    return gamma_half(num) / gamma_half(den)
