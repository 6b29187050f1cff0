"""Evaluators for the s-distance bounds and the prior bounds they improve."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .hilbert import hilbert_even_sum
from .leading import InvariantViolation, chordal_leading_term
from .scalars import DomainError, binomial, format_rational

__all__ = [
    "BoundReport",
    "BOUND_KINDS",
    "bound_fs_exact",
    "bound_lines_spherical",
    "bound_equiangular",
    "baseline_balla",
    "baseline_chs",
    "baseline_fs_balla",
    "compare",
    "valid_parameters",
]

EXACT = "exact_finite_n"
ASYMPTOTIC = "leading_term_asymptotic"
BOUND_KINDS = ("fs", "lines", "equiangular", "chordal-leading")


def _pairs(s: int) -> int:
    return binomial(s, 2)


def bound_fs_exact(k: int, n: int, s: int) -> int:
    """``sum_{i=1}^s H(2i)`` for the Pluecker-embedded ``Gr(k, n)``."""
    return hilbert_even_sum(k, n, s)


def bound_lines_spherical(n: int, s: int) -> int:
    """Bound on s-distance lines via spherical 2s-distance sets."""
    if n < 1 or s < 1:
        raise DomainError("n and s must be positive")
    return binomial(n + 2 * s - 1, n - 1) + binomial(n + 2 * s - 2, n - 1)


def bound_equiangular(k: int, n: int) -> int:
    """Equiangular k-subspaces under any angle distance, ``2 <= k <= n``."""
    if not 2 <= k <= n:
        raise DomainError(f"equiangular bound needs 2 <= k <= n, got k={k}, n={n}")
    m_next = _pairs(n + 1)
    top = binomial(m_next + k - 1, k)
    if k == 2:
        return top - m_next
    m_n = _pairs(n)
    return top - m_n * binomial(m_n - 1, k - 3) - n * binomial(m_n, k - 3)


def baseline_balla(k: int, n: int) -> int:
    if not 1 <= k <= n:
        raise DomainError(f"need 1 <= k <= n, got k={k}, n={n}")
    return binomial(_pairs(n + 1) + k - 1, k)


def baseline_chs(n: int) -> int:
    if n < 1:
        raise DomainError("n must be positive")
    return binomial(n + 1, 2)


def baseline_fs_balla(k: int, n: int) -> int:
    if not 1 <= k <= n:
        raise DomainError(f"need 1 <= k <= n, got k={k}, n={n}")
    return binomial(binomial(n, k) + 1, 2)


@dataclass(frozen=True)
class BoundReport:
    bound: str
    k: int
    n: int
    s: int
    value: int | Fraction
    kind: str
    baseline_name: str | None = None
    baseline_value: int | None = None

    @property
    def improvement(self) -> int | Fraction | None:
        if self.baseline_value is None:
            return None
        return self.baseline_value - self.value

    def to_dict(self) -> dict:
        out = {
            "bound": self.bound,
            "k": self.k,
            "n": self.n,
            "s": self.s,
            "value": _json_number(self.value),
            "kind": self.kind,
        }
        if self.baseline_value is not None:
            out["baseline_name"] = self.baseline_name
            out["baseline"] = self.baseline_value
            out["improvement"] = _json_number(self.improvement)
        return out


def _json_number(x):
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else format_rational(x)
    return x


def valid_parameters(bound: str, k: int, n: int, s: int) -> bool:
    if s < 1 or k < 1 or n < 1:
        return False
    if bound == "fs":
        return k <= n
    if bound == "lines":
        return k == 1
    if bound == "equiangular":
        return 2 <= k <= n and s == 1
    if bound == "chordal-leading":
        return k <= n - 1
    raise DomainError(f"unknown bound {bound!r}; choose from {BOUND_KINDS}")


def compare(bound: str, k: int, n: int, s: int = 1) -> BoundReport:
    """Evaluate a bound together with the prior bound it is measured against.

    Baselines: FS at s=1 against ``binom(binom(n,k)+1, 2)``; equiangular
    against ``binom(M_{n+1}+k-1, k)``; lines at s=1 against
    ``binom(n+1, 2)``.  The first two improvements must be non-negative.
    """
    if not valid_parameters(bound, k, n, s):
        raise DomainError(f"invalid parameters for bound {bound!r}: k={k}, n={n}, s={s}")
    if bound == "fs":
        value = bound_fs_exact(k, n, s)
        rep = BoundReport(bound, k, n, s, value, EXACT)
        if s == 1:
            rep = BoundReport(bound, k, n, s, value, EXACT, "fs_prior_binom_binom", baseline_fs_balla(k, n))
            _assert_improves(rep)
        return rep
    if bound == "lines":
        value = bound_lines_spherical(n, s)
        if s == 1:
            return BoundReport(bound, k, n, s, value, EXACT, "chordal_lines_binom", baseline_chs(n))
        return BoundReport(bound, k, n, s, value, EXACT)
    if bound == "equiangular":
        rep = BoundReport(bound, k, n, s, bound_equiangular(k, n), EXACT, "angle_prior_binom", baseline_balla(k, n))
        _assert_improves(rep)
        return rep
    return BoundReport(bound, k, n, s, chordal_leading_term(k, n, s), ASYMPTOTIC)


def _assert_improves(rep: BoundReport) -> None:
    if rep.improvement < 0:
        raise InvariantViolation(
            "improvement_nonnegative",
            f"{rep.bound} bound {rep.value} exceeds baseline {rep.baseline_value} at k={rep.k}, n={rep.n}",
        )
