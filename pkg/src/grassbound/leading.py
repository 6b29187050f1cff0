"""Leading coefficient of the Hilbert polynomial of the projection embedding.

``Gr(k, n)`` sits in symmetric matrices as the variety of rank-``k``
projections.  Its affine Hilbert function grows like
``d(k, n) / (k(n-k))! * t^(k(n-k))`` where

    d(k, n) = alpha_{k,n} * sum_lambda A_{lambda,k} B_{lambda,k} C_{lambda,k}.

The sum runs over the support of the Jack expansion of
``prod_{i<j}(x_i + x_j)``.  The Gamma products carry powers of sqrt(pi)
that must cancel in the total; a leftover power is reported as an error.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .scalars import DomainError, ExactScalar, gamma_half, gamma_ratio_half_shift
from .symfun import Partition, jack_expansion_coeffs

__all__ = [
    "InvariantViolation",
    "LeadingTermReport",
    "alpha_coefficient",
    "gamma_product_A",
    "gamma_product_B",
    "d_kn",
    "d_kn_scalar",
    "leading_term_report",
    "chordal_leading_term",
]


class InvariantViolation(ArithmeticError):
    """An internal invariant failed; ``name`` identifies which one."""

    def __init__(self, name: str, message: str):
        super().__init__(message)
        self.name = name


def alpha_coefficient(k: int, n: int) -> Fraction:
    if k < 1 or 2 * k > n:
        raise DomainError(f"alpha_coefficient needs 1 <= k <= n/2, got k={k}, n={n}; dualize first")
    den = 1
    if n == 2 * k:
        for i in range(1, k + 1):
            for j in range(i + 1, k + 1):
                den *= (j - i) * (2 * k - j - i)
        return Fraction(2 ** (k * (k - 1) + 1), den)
    if n % 2 == 0:
        for i in range(1, k + 1):
            for j in range(i + 1, n // 2 + 1):
                den *= (j - i) * (n - j - i)
        return Fraction(2 ** (k * (n - k - 1)), den)
    for i in range(1, k + 1):
        for j in range(i + 1, (n - 1) // 2 + 1):
            den *= (j - i) * (n - i - j)
        den *= n - 2 * i
    return Fraction(2 ** (k * (n - k)), den)


def gamma_product_A(lam, k: int, n: int) -> ExactScalar:
    """``prod_{i=1}^k Gamma(n - 2k + 1 + lambda_i + (k-i)/2)``."""
    parts = Partition(lam).padded(k)
    out = ExactScalar.one()
    for i in range(1, k + 1):
        two_x = 2 * (n - 2 * k + 1 + parts[i - 1]) + (k - i)
        if two_x <= 0:
            raise DomainError(f"Gamma pole in A at i={i} (k={k}, n={n})")
        out = out * gamma_half(two_x)
    return out


def gamma_product_B(lam, k: int) -> ExactScalar:
    """``prod_{i<j} Gamma(l_i - l_j + (j-i+1)/2) / Gamma(l_i - l_j + (j-i)/2)``."""
    parts = Partition(lam).padded(k)
    out = ExactScalar.one()
    for i in range(1, k + 1):
        for j in range(i + 1, k + 1):
            two_x = 2 * (parts[i - 1] - parts[j - 1]) + (j - i)
            out = out * gamma_ratio_half_shift(two_x, 1, 0)
    return out


def d_kn_scalar(k: int, n: int) -> ExactScalar:
    """``alpha * sum A B C`` without forcing the pi power to vanish (``k <= n/2``)."""
    total = ExactScalar(Fraction(0))
    for lam, c in jack_expansion_coeffs(k).items():
        total = total + gamma_product_A(lam, k, n) * gamma_product_B(lam, k) * c
    return total * alpha_coefficient(k, n)


@lru_cache(maxsize=None)
def d_kn(k: int, n: int) -> Fraction:
    """The constant ``d(k, n)``; for ``k > n/2`` this is ``d(n-k, n)``."""
    if not 1 <= k <= n - 1:
        raise DomainError(f"d(k, n) needs 1 <= k <= n-1, got k={k}, n={n}")
    if 2 * k > n:
        k = n - k
    value = d_kn_scalar(k, n)
    if not value.is_rational:
        raise InvariantViolation(
            "pi_cancellation", f"d({k},{n}) kept a sqrt(pi)^{value.sqrt_pi_exp} factor"
        )
    if value.coeff <= 0:
        raise InvariantViolation("positivity", f"d({k},{n}) = {value.coeff} is not positive")
    return value.coeff


@dataclass(frozen=True)
class LeadingTermReport:
    k: int
    n: int
    d_kn: Fraction
    dim: int
    leading_coeff: Fraction


def leading_term_report(k: int, n: int) -> LeadingTermReport:
    d = d_kn(k, n)
    dim = k * (n - k)
    return LeadingTermReport(k, n, d, dim, d / math.factorial(dim))


def chordal_leading_term(k: int, n: int, s: int) -> Fraction:
    """``d(k,n) / (k(n-k))! * s^(k(n-k))``."""
    if s < 1:
        raise DomainError("s must be positive")
    rep = leading_term_report(k, n)
    return rep.leading_coeff * s**rep.dim
