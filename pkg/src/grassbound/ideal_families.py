"""Explicit polynomials in the ideal of the projection-embedded Grassmannian.

Polynomials live in ``Q[x_ij : 1 <= i <= j <= n]`` and are stored as dicts
from exponent tuples to integers; variables are ordered lexicographically
by ``(i, j)``.  The ideal is generated by ``tr(X) - k`` and ``X^2 - X``.

Families:

* ``f_ij = tr(X) x_ij - k sum_l x_il x_jl`` (quadrics, ``(i,j)`` with i <= j)
* ``g_ij = tr(E_ij X)`` (linear) and ``h_ij = x_ij f_ij`` (cubics)
* ``P_I = h_a g_b1 ... g_b(d-3)`` for a head ``a`` (any i <= j) and a set of
  ``d - 3`` off-diagonal tails distinct from the head.

Indices are 1-based in the public API.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .linalg import exact_inverse, exact_matmul, exact_rank
from .scalars import DomainError, binomial

__all__ = [
    "index_pairs",
    "offdiag_pairs",
    "quadric_f",
    "linear_g",
    "cubic_h",
    "family_index",
    "family",
    "family_count",
    "coefficient_matrix",
    "quadrics_rank",
    "family_rank",
    "evaluate",
    "selector_matrix",
    "random_rational_projection",
]

Poly = dict  # exponent tuple -> int


def index_pairs(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(1, n + 1) for j in range(i, n + 1)]


def offdiag_pairs(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i, j in index_pairs(n) if i < j]


@lru_cache(maxsize=None)
def _var_index(n: int) -> dict:
    return {pair: t for t, pair in enumerate(index_pairs(n))}


def _var(n: int, i: int, j: int) -> Poly:
    if i > j:
        i, j = j, i
    e = [0] * binomial(n + 1, 2)
    e[_var_index(n)[(i, j)]] = 1
    return {tuple(e): 1}


def _add(a: Poly, b: Poly, scale: int = 1) -> Poly:
    out = dict(a)
    for m, c in b.items():
        v = out.get(m, 0) + scale * c
        if v:
            out[m] = v
        else:
            out.pop(m, None)
    return out


def _mul(a: Poly, b: Poly) -> Poly:
    out: Poly = {}
    for ma, ca in a.items():
        for mb, cb in b.items():
            m = tuple(x + y for x, y in zip(ma, mb))
            v = out.get(m, 0) + ca * cb
            if v:
                out[m] = v
            else:
                out.pop(m, None)
    return out


def _trace(n: int) -> Poly:
    out: Poly = {}
    for i in range(1, n + 1):
        out = _add(out, _var(n, i, i))
    return out


def quadric_f(n: int, k: int, i: int, j: int) -> Poly:
    out = _mul(_trace(n), _var(n, i, j))
    for l in range(1, n + 1):
        out = _add(out, _mul(_var(n, i, l), _var(n, j, l)), scale=-k)
    return out


def linear_g(n: int, i: int, j: int) -> Poly:
    """``tr(E_ij X)``: ``2 x_ij`` off the diagonal, ``x_ii`` on it."""
    v = _var(n, i, j)
    return v if i == j else {m: 2 * c for m, c in v.items()}


def cubic_h(n: int, k: int, i: int, j: int) -> Poly:
    return _mul(_var(n, i, j), quadric_f(n, k, i, j))


def family_count(n: int, d: int) -> int:
    """Number of polynomials in the degree-``d`` family: ``p_d(n)``."""
    m_n = binomial(n, 2)
    if d == 2:
        return binomial(n + 1, 2)
    if 3 <= d <= m_n + 2:
        return m_n * binomial(m_n - 1, d - 3) + n * binomial(m_n, d - 3)
    raise DomainError(f"family defined for d = 2 or 3 <= d <= {m_n + 2}, got d={d}")


def family_index(n: int, d: int) -> list[tuple]:
    """Index tuples ``(head, tail_1, ..., tail_{d-3})``, tails sorted."""
    if d == 2:
        return [(pair,) for pair in index_pairs(n)]
    family_count(n, d)  # range check
    off = offdiag_pairs(n)
    out = []
    for head in index_pairs(n):
        rest = [p for p in off if p != head]
        for tails in itertools.combinations(rest, d - 3):
            out.append((head,) + tails)
    return out


def family(n: int, d: int, k: int) -> list[Poly]:
    """The degree-``d`` polynomials in the ideal, one per :func:`family_index` entry."""
    if not 2 <= k <= n:
        raise DomainError(f"need 2 <= k <= n, got k={k}, n={n}")
    if d == 2:
        return [quadric_f(n, k, i, j) for (i, j), in family_index(n, d)]
    polys = []
    for head, *tails in family_index(n, d):
        p = cubic_h(n, k, *head)
        for t in tails:
            p = _mul(p, linear_g(n, *t))
        polys.append(p)
    return polys


def _monomials(n: int, d: int) -> list[tuple]:
    nvars = binomial(n + 1, 2)
    out = []
    for combo in itertools.combinations_with_replacement(range(nvars), d):
        e = [0] * nvars
        for v in combo:
            e[v] += 1
        out.append(tuple(e))
    return out


def coefficient_matrix(polys: Sequence[Poly], n: int, d: int) -> list[list[int]]:
    cols = {m: c for c, m in enumerate(_monomials(n, d))}
    rows = []
    for p in polys:
        row = [0] * len(cols)
        for m, c in p.items():
            if m not in cols:
                raise DomainError(f"polynomial is not homogeneous of degree {d}")
            row[cols[m]] = c
        rows.append(row)
    return rows


def quadrics_rank(n: int, k: int) -> int:
    """Exact rank of the quadrics ``f_ij``; expected ``binom(n+1, 2)``."""
    if n < 2:
        raise DomainError("n must be at least 2")
    return exact_rank(coefficient_matrix(family(n, 2, k), n, 2))


def family_rank(n: int, d: int, k: int) -> int:
    """Exact rank of the degree-``d`` family; expected ``p_d(n)``."""
    if d < 3:
        raise DomainError("family_rank needs d >= 3; use quadrics_rank for d = 2")
    return exact_rank(coefficient_matrix(family(n, d, k), n, d))


def evaluate(poly: Poly, mat: Sequence[Sequence]) -> Fraction:
    """Evaluate at a symmetric matrix (exact when entries are rational)."""
    n = len(mat)
    values = [Fraction(mat[i - 1][j - 1]) for i, j in index_pairs(n)]
    total = Fraction(0)
    for m, c in poly.items():
        term = Fraction(c)
        for v, e in zip(values, m):
            if e:
                term *= v**e
        total += term
    return total


def selector_matrix(index: tuple, n: int) -> list[list[int]]:
    """Test matrix ``(1 - [head diagonal]) E_11 + sum_{a in index} E_a``."""
    mat = [[0] * n for _ in range(n)]
    head = index[0]
    if head[0] != head[1]:
        mat[0][0] += 1
    for i, j in index:
        mat[i - 1][j - 1] += 1
        if i != j:
            mat[j - 1][i - 1] += 1
    return mat


def random_rational_projection(n: int, k: int, rng: random.Random, spread: int = 3) -> list[list[Fraction]]:
    """``A (A^T A)^{-1} A^T`` for a random integer ``n x k`` matrix ``A`` of full rank."""
    while True:
        a = [[rng.randint(-spread, spread) for _ in range(k)] for _ in range(n)]
        at = [list(col) for col in zip(*a)]
        try:
            inv = exact_inverse(exact_matmul(at, a))
        except ZeroDivisionError:
            continue
        return exact_matmul(exact_matmul(a, inv), at)
