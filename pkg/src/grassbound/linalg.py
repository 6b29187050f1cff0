"""Exact rational and numeric rank routines."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

import numpy as np

__all__ = ["exact_rank", "exact_inverse", "exact_matmul", "numeric_rank", "DEFAULT_RANK_FACTOR"]

DEFAULT_RANK_FACTOR = 1e-10


def _integer_rows(rows: Sequence[Sequence]) -> list[list[int]]:
    out = []
    for row in rows:
        fr = [Fraction(x) for x in row]
        lcm = 1
        for x in fr:
            lcm = lcm * x.denominator // math.gcd(lcm, x.denominator)
        out.append([int(x * lcm) for x in fr])
    return out


def exact_rank(rows: Sequence[Sequence]) -> int:
    """Rank over Q by fraction-free (Bareiss) elimination.

    Entries may be ints or Fractions; each row is scaled to integers first.
    """
    m = _integer_rows(rows)
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(m)) if m[r][col] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        p = m[rank][col]
        for r in range(rank + 1, len(m)):
            a = m[r][col]
            row_r, row_p = m[r], m[rank]
            # exact division by the previous pivot keeps entries integral
            m[r] = [(p * row_r[c] - a * row_p[c]) // prev if c >= col else 0 for c in range(ncols)]
        prev = p
        rank += 1
        if rank == len(m):
            break
    return rank


def exact_matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> list[list[Fraction]]:
    inner = len(b)
    cols = len(b[0])
    return [[sum((Fraction(row[t]) * b[t][j] for t in range(inner)), Fraction(0)) for j in range(cols)] for row in a]


def exact_inverse(a: Sequence[Sequence]) -> list[list[Fraction]]:
    """Gauss-Jordan inverse over Q; raises ZeroDivisionError when singular."""
    n = len(a)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(a)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise ZeroDivisionError("matrix is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def numeric_rank(mat, factor: float = DEFAULT_RANK_FACTOR) -> int:
    """Count singular values above ``max(rows, cols) * sigma_max * factor``."""
    mat = np.asarray(mat, dtype=float)
    if mat.size == 0:
        return 0
    sv = np.linalg.svd(mat, compute_uv=False)
    if sv[0] == 0:
        return 0
    return int(np.sum(sv > max(mat.shape) * sv[0] * factor))
