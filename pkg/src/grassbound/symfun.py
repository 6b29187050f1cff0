"""Partitions, monomial symmetric polynomials and Jack polynomials.

Jack polynomials are computed in the monomial basis as eigenvectors of the
Laplace-Beltrami type operator

    D = (alpha/2) sum_i x_i^2 d_i^2 + sum_{i != j} x_i^2 / (x_i - x_j) d_i

acting on symmetric polynomials in a fixed number of variables.  ``D`` is
upper triangular in the dominance order on monomial symmetric polynomials,
so the coefficients of ``J_lambda`` follow from a triangular recursion with
exact rationals.  The matrix entries of ``D`` are read off from explicit
polynomial expansions rather than from a closed formula.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterator

from .scalars import DomainError

__all__ = [
    "Partition",
    "SymPoly",
    "dominates",
    "partitions",
    "enumerate_dominating",
    "enumerate_dominated",
    "staircase",
    "product_offdiag_expand",
    "jack_in_monomials",
    "jack_expansion_coeffs",
]

Monomial = tuple  # exponent vector of fixed length


class Partition(tuple):
    """Weakly decreasing tuple of positive integers (trailing zeros dropped)."""

    def __new__(cls, parts=()):
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(p < 0 for p in parts):
            raise DomainError(f"negative part in {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise DomainError(f"parts not weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def padded(self, size: int) -> tuple:
        if len(self) > size:
            raise DomainError(f"{tuple(self)} has more than {size} parts")
        return tuple(self) + (0,) * (size - len(self))

    def conjugate(self) -> Partition:
        if not self:
            return Partition()
        return Partition(sum(1 for p in self if p > j) for j in range(self[0]))

    def __repr__(self) -> str:
        return f"Partition({tuple(self)})"


def staircase(k: int) -> Partition:
    """The staircase ``(k-1, k-2, ..., 1, 0)``."""
    return Partition(range(k - 1, -1, -1))


def dominates(lhs: Partition, rhs: Partition) -> bool:
    """True iff every partial sum of ``lhs`` is at least that of ``rhs``."""
    lhs, rhs = Partition(lhs), Partition(rhs)
    if lhs.weight != rhs.weight:
        raise DomainError(f"dominance needs equal weights, got {lhs.weight} and {rhs.weight}")
    a = b = 0
    for i in range(max(len(lhs), len(rhs))):
        a += lhs[i] if i < len(lhs) else 0
        b += rhs[i] if i < len(rhs) else 0
        if a < b:
            return False
    return True


def partitions(weight: int, max_parts: int | None = None, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of ``weight`` in decreasing lexicographic order."""
    if max_parts is None:
        max_parts = weight
    if max_part is None:
        max_part = weight

    def rec(remaining, cap, slots):
        if remaining == 0:
            yield ()
            return
        if slots == 0:
            return
        for first in range(min(cap, remaining), 0, -1):
            if first * slots < remaining:
                break
            for rest in rec(remaining - first, first, slots - 1):
                yield (first,) + rest

    for parts in rec(weight, max_part, max_parts):
        yield Partition(parts)


def enumerate_dominating(weight: int, max_parts: int, floor: Partition) -> list[Partition]:
    floor = Partition(floor)
    if floor.weight != weight:
        raise DomainError(f"floor {tuple(floor)} does not have weight {weight}")
    return [p for p in partitions(weight, max_parts) if dominates(p, floor)]


def enumerate_dominated(weight: int, max_parts: int, ceiling: Partition) -> list[Partition]:
    ceiling = Partition(ceiling)
    if ceiling.weight != weight:
        raise DomainError(f"ceiling {tuple(ceiling)} does not have weight {weight}")
    return [p for p in partitions(weight, max_parts) if dominates(ceiling, p)]


@dataclass
class SymPoly:
    """Homogeneous symmetric polynomial in the monomial basis ``{m_lambda}``."""

    degree: int
    num_vars: int
    coeffs: dict[Partition, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for lam, c in self.coeffs.items():
            lam = Partition(lam)
            if lam.weight != self.degree or len(lam) > self.num_vars:
                raise DomainError(f"m_{tuple(lam)} does not belong to degree {self.degree} in {self.num_vars} vars")
            c = Fraction(c)
            if c != 0:
                clean[lam] = c
        self.coeffs = clean

    def __getitem__(self, lam) -> Fraction:
        return self.coeffs.get(Partition(lam), Fraction(0))

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymPoly):
            return NotImplemented
        return (self.degree, self.num_vars, self.coeffs) == (other.degree, other.num_vars, other.coeffs)

    def support(self) -> list[Partition]:
        return sorted(self.coeffs, reverse=True)

    def evaluate(self, point) -> Fraction:
        """Evaluate at a point given as a sequence of ``num_vars`` numbers."""
        if len(point) != self.num_vars:
            raise DomainError("point has the wrong number of coordinates")
        total = Fraction(0)
        for lam, c in self.coeffs.items():
            for mono in _monomial_orbit(lam, self.num_vars):
                term = Fraction(1)
                for x, e in zip(point, mono):
                    if e:
                        term *= Fraction(x) ** e
                total += c * term
        return total

    @classmethod
    def from_polynomial(cls, poly: dict[Monomial, Fraction], degree: int, num_vars: int) -> SymPoly:
        """Read a symmetric explicit polynomial off its dominant monomials."""
        coeffs = {}
        for mono, c in poly.items():
            if all(mono[i] >= mono[i + 1] for i in range(len(mono) - 1)):
                coeffs[Partition(mono)] = c
        return cls(degree, num_vars, coeffs)


@lru_cache(maxsize=None)
def _monomial_orbit(lam: Partition, num_vars: int) -> tuple:
    return tuple(sorted(set(itertools.permutations(lam.padded(num_vars)))))


def product_offdiag_expand(k: int) -> SymPoly:
    """``prod_{1 <= i < j <= k} (x_i + x_j)`` in the monomial basis."""
    if k < 1:
        raise DomainError("k must be positive")
    poly = {(0,) * k: Fraction(1)}
    for i, j in itertools.combinations(range(k), 2):
        nxt: dict = {}
        for mono, c in poly.items():
            for pos in (i, j):
                m = list(mono)
                m[pos] += 1
                m = tuple(m)
                nxt[m] = nxt.get(m, 0) + c
        poly = nxt
    return SymPoly.from_polynomial(poly, k * (k - 1) // 2, k)


def _apply_operator(lam: Partition, alpha: Fraction, num_vars: int) -> dict[Partition, Fraction]:
    """Coefficients of ``D m_lam`` in the monomial basis."""
    out: dict[Monomial, Fraction] = {}

    def add(mono, c):
        out[mono] = out.get(mono, 0) + c

    half_alpha = alpha / 2
    for a in _monomial_orbit(lam, num_vars):
        add(a, half_alpha * sum(e * (e - 1) for e in a))
        for i, j in itertools.combinations(range(num_vars), 2):
            p, q = a[i], a[j]
            if p < q:
                # the swapped monomial (same coefficient) covers this pair
                continue
            if p == q:
                add(a, Fraction(p))
                continue
            # (x^2 d_x - y^2 d_y)(x^p y^q + x^q y^p) / (x - y)
            for l in range(p - q + 1):
                m = list(a)
                m[i], m[j] = p - l, q + l
                add(tuple(m), Fraction(p))
            for l in range(p - q - 1):
                m = list(a)
                m[i], m[j] = p - 1 - l, q + 1 + l
                add(tuple(m), Fraction(-q))
    sym = SymPoly.from_polynomial(out, lam.weight, num_vars)
    return sym.coeffs


def _hook_product(lam: Partition, alpha: Fraction) -> Fraction:
    conj = lam.conjugate()
    out = Fraction(1)
    for i, row in enumerate(lam):
        for j in range(row):
            arm = row - j - 1
            leg = conj[j] - i - 1
            out *= alpha * arm + leg + 1
    return out


@lru_cache(maxsize=None)
def _jack_cached(lam: Partition, alpha: Fraction, num_vars: int) -> tuple:
    lower = enumerate_dominated(lam.weight, num_vars, lam)
    # D is triangular: D m_nu = sum_{mu <= nu} d[nu][mu] m_mu
    d = {nu: _apply_operator(nu, alpha, num_vars) for nu in lower}
    eig = d[lam].get(lam, Fraction(0))
    coeffs = {lam: Fraction(1)}
    # decreasing lex order is a linear extension of dominance
    for mu in lower[1:]:
        acc = Fraction(0)
        for nu, c in coeffs.items():
            entry = d[nu].get(mu)
            if entry:
                acc += c * entry
        gap = eig - d[mu].get(mu, Fraction(0))
        if gap == 0:
            if acc != 0:
                raise ArithmeticError(f"degenerate eigenvalue at {tuple(mu)} for J_{tuple(lam)}")
            continue
        if acc:
            coeffs[mu] = acc / gap
    return tuple(coeffs.items())


def jack_in_monomials(lam, alpha, num_vars: int, normalization: str = "J") -> SymPoly:
    """Jack polynomial ``J_lambda^(alpha)`` in ``num_vars`` variables.

    ``normalization="J"`` scales so that the coefficient of ``m_(1^n)`` is
    ``n!`` (``n = |lambda|``); ``"P"`` gives the monic polynomial whose
    coefficient of ``m_lambda`` is 1.  The two differ by the hook product
    ``prod_s (alpha*arm(s) + leg(s) + 1)``.
    """
    lam = Partition(lam)
    if len(lam) > num_vars:
        raise DomainError(f"{tuple(lam)} has more than {num_vars} parts")
    alpha = Fraction(alpha)
    if alpha <= 0:
        raise DomainError("alpha must be positive")
    coeffs = dict(_jack_cached(lam, alpha, num_vars))
    if normalization == "J":
        scale = _hook_product(lam, alpha)
        coeffs = {mu: c * scale for mu, c in coeffs.items()}
    elif normalization != "P":
        raise DomainError(f"unknown normalization {normalization!r}")
    return SymPoly(lam.weight, num_vars, coeffs)


@lru_cache(maxsize=None)
def _jack_expansion_cached(k: int) -> tuple:
    target = dict(product_offdiag_expand(k).coeffs)
    top = staircase(k)
    basis = enumerate_dominated(top.weight, k, top)
    result = {}
    # peel off leading terms from the top of the dominance order
    for lam in basis:
        c = target.get(lam, Fraction(0))
        if c == 0:
            continue
        jack = jack_in_monomials(lam, 2, k, normalization="P")
        result[lam] = c
        for mu, v in jack.coeffs.items():
            target[mu] = target.get(mu, Fraction(0)) - c * v
    if any(target.values()):
        raise ArithmeticError("Jack expansion of the staircase product did not terminate")
    return tuple(sorted(result.items(), reverse=True))


def jack_expansion_coeffs(k: int) -> dict[Partition, Fraction]:
    """Coefficients ``C_lambda`` in ``prod_{i<j}(x_i + x_j) = sum C_lambda P_lambda^(2)``.

    Everything lives in exactly ``k`` variables, and the Jack polynomials
    are the monic ones.  The product has leading monomial ``m_delta`` for
    the staircase ``delta = (k-1, ..., 1, 0)``, so the support consists of
    partitions dominated by ``delta``.  This is the normalization under
    which ``d(3, n)`` reproduces its known closed form.
    """
    if k < 1:
        raise DomainError("k must be positive")
    return dict(_jack_expansion_cached(k))
