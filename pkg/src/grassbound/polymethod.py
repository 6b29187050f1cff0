"""Executable versions of the polynomial-method arguments.

For a finite s-distance set of subspaces each construction builds one
polynomial per subspace that vanishes at every other member and not at its
own.  The evaluation matrix is therefore diagonal with nonzero diagonal and
its rank (= number of subspaces) is bounded by the dimension of the space
the polynomials live in.  :func:`verify_prop31` computes both sides.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .bounds import bound_equiangular, bound_lines_spherical
from .config import DEFAULT_TOLERANCES
from .geometry import (
    DistanceSpectrum,
    Metric,
    SubspaceFrame,
    distance_spectrum,
    parse_metric,
    plucker_coordinates,
    principal_angles,
    projection_matrix,
)
from .hilbert import hilbert_even_sum
from .ideal_families import family_count, family_rank, quadrics_rank
from .linalg import numeric_rank
from .scalars import DomainError, binomial

__all__ = [
    "EvaluationMatrix",
    "RankReport",
    "RankUnsaturated",
    "chordal_eval_matrix",
    "fs_eval_matrix",
    "equiangular_eval_matrix",
    "monomial_exponents",
    "sampled_hilbert_rank",
    "verify_prop31",
    "lemma51_quadrics_rank",
    "lemma51_family_rank",
    "lemma51_count",
]


class RankUnsaturated(ArithmeticError):
    """The sampled rank changed when the sample count was doubled."""


@dataclass
class EvaluationMatrix:
    entries: np.ndarray
    construction: str  # chordal_p, fs_f or equiangular_f
    spectrum: DistanceSpectrum | None

    @property
    def size(self) -> int:
        return self.entries.shape[0]

    def off_diagonal_max(self) -> float:
        if self.size < 2:
            return 0.0
        off = self.entries - np.diag(np.diag(self.entries))
        return float(np.max(np.abs(off)))

    def diagonal(self) -> np.ndarray:
        return np.diag(self.entries).copy()

    def is_diagonal(self, tol_diag: float = DEFAULT_TOLERANCES.tol_diag) -> bool:
        return self.off_diagonal_max() <= tol_diag and bool(np.all(np.abs(self.diagonal()) > tol_diag))

    def rank(self, factor: float = DEFAULT_TOLERANCES.rank_factor) -> int:
        return numeric_rank(self.entries, factor)


@dataclass(frozen=True)
class RankReport:
    matrix_rank: int
    bound: int
    bound_source: str  # hilbert_even_sum, sampled_hilbert, thm52_formula, prop46_formula
    construction: str
    size: int
    off_diagonal_max: float

    @property
    def satisfied(self) -> bool:
        return self.matrix_rank <= self.bound

    def to_dict(self) -> dict:
        return {
            "construction": self.construction,
            "size": self.size,
            "rank": self.matrix_rank,
            "bound": self.bound,
            "bound_source": self.bound_source,
            "satisfied": self.satisfied,
            "off_diagonal_max": self.off_diagonal_max,
        }


def _require_metric(spectrum: DistanceSpectrum | None, name: str) -> None:
    if spectrum is not None and spectrum.metric.name != name:
        raise DomainError(f"spectrum was computed for {spectrum.metric}, construction needs {name}")


def chordal_eval_matrix(frames: list[SubspaceFrame], spectrum: DistanceSpectrum | None) -> EvaluationMatrix:
    """Entries ``prod_t (tr(P_i P_j) + a_t^2 - k)``."""
    _require_metric(spectrum, "chordal")
    values = spectrum.values if spectrum is not None else ()
    k = frames[0].k
    projs = [projection_matrix(f) for f in frames]
    m = len(frames)
    out = np.empty((m, m))
    for i in range(m):
        for j in range(m):
            tr = float(np.sum(projs[i] * projs[j]))
            out[i, j] = math.prod(tr + a * a - k for a in values)
    return EvaluationMatrix(out, "chordal_p", spectrum)


def fs_eval_matrix(frames: list[SubspaceFrame], spectrum: DistanceSpectrum | None, route: str = "det") -> EvaluationMatrix:
    """Entries ``prod_t (det(U_i^T U_j)^2 - cos^2 a_t)``.

    ``route="plucker"`` computes ``det(U_i^T U_j)`` as the inner product of
    Pluecker vectors instead of a ``k x k`` determinant.
    """
    _require_metric(spectrum, "fs")
    cos2 = [math.cos(a) ** 2 for a in (spectrum.values if spectrum is not None else ())]
    m = len(frames)
    if route == "det":
        gram = np.array([[np.linalg.det(u.columns.T @ v.columns) for v in frames] for u in frames])
    elif route == "plucker":
        pl = np.array([plucker_coordinates(f) for f in frames])
        gram = pl @ pl.T
    else:
        raise DomainError(f"unknown route {route!r}")
    out = np.empty((m, m))
    for i in range(m):
        for j in range(m):
            out[i, j] = math.prod(gram[i, j] ** 2 - c for c in cos2)
    return EvaluationMatrix(out, "fs_f", spectrum)


def equiangular_eval_matrix(
    frames: list[SubspaceFrame],
    alpha: float,
    selector_index: int,
    tol: float = DEFAULT_TOLERANCES.tol_diag,
) -> EvaluationMatrix:
    """Entries ``det(U_i^T P_j U_i - cos^2(alpha) tr(P_j)/k I_k)``.

    ``f_i(P_j) = prod_l (cos^2 theta_l(U_i, U_j) - cos^2 alpha)``, which
    vanishes as soon as one principal angle equals ``alpha`` and equals
    ``sin(alpha)^(2k)`` on the diagonal.
    """
    k = frames[0].k
    if not 1 <= selector_index <= k:
        raise DomainError(f"selector index {selector_index} outside 1..{k}")
    for u, v in itertools.combinations(frames, 2):
        theta = principal_angles(u, v)[selector_index - 1]
        if abs(theta - alpha) > tol:
            raise DomainError(
                f"input is not equiangular at {alpha:.12g} under angle:{selector_index} (found {theta:.12g})"
            )
    c2 = math.cos(alpha) ** 2
    projs = [projection_matrix(f) for f in frames]
    m = len(frames)
    out = np.empty((m, m))
    for i, u in enumerate(frames):
        for j in range(m):
            inner = u.columns.T @ projs[j] @ u.columns
            out[i, j] = np.linalg.det(inner - c2 * np.trace(projs[j]) / k * np.eye(k))
    spectrum = None
    if m >= 2:
        spectrum = distance_spectrum(frames, Metric("angle", selector_index), max(tol, DEFAULT_TOLERANCES.tol_cluster))
    return EvaluationMatrix(out, "equiangular_f", spectrum)


def monomial_exponents(nvars: int, degree: int) -> list[tuple[int, ...]]:
    """All monomials of total degree ``<= degree``, graded lexicographic."""
    out = []
    for d in range(degree + 1):
        for combo in itertools.combinations_with_replacement(range(nvars), d):
            e = [0] * nvars
            for v in combo:
                e[v] += 1
            out.append(tuple(e))
    return out


def _sample_matrix(k: int, n: int, degree: int, count: int, rng: np.random.Generator) -> np.ndarray:
    iu = np.triu_indices(n)
    exps = np.array(monomial_exponents(len(iu[0]), degree))
    pts = np.array(
        [projection_matrix(f)[iu] for f in _random_frames(n, k, count, rng)]
    )
    # rows: sample points, cols: monomials
    return np.prod(pts[:, None, :] ** exps[None, :, :], axis=2)


def _random_frames(n: int, k: int, count: int, rng: np.random.Generator) -> list[SubspaceFrame]:
    frames = []
    for _ in range(count):
        q, _r = np.linalg.qr(rng.standard_normal((n, k)))
        frames.append(SubspaceFrame(q))
    return frames


def sampled_hilbert_rank(
    k: int,
    n: int,
    degree: int,
    num_samples: int | None = None,
    seed: int = 0,
    rank_factor: float = DEFAULT_TOLERANCES.rank_factor,
) -> int:
    """Dimension of polynomials of degree ``<= degree`` restricted to ``Gr(k, n)``.

    Evaluates every monomial in the entries ``x_ij`` (``i <= j``) of the
    projection matrix at random points of the Grassmannian and returns the
    numeric rank.  The default sample count is three times the number of
    monomials; the rank must not change when the samples are doubled, or
    :class:`RankUnsaturated` is raised.
    """
    if not 1 <= k <= n or degree < 0:
        raise DomainError(f"need 1 <= k <= n and degree >= 0, got k={k}, n={n}, degree={degree}")
    nmono = binomial(binomial(n + 1, 2) + degree, degree)
    if num_samples is None:
        num_samples = 3 * nmono
    if num_samples < nmono:
        raise DomainError(
            f"{num_samples} samples cannot resolve {nmono} monomials; use at least {nmono} (3x recommended)"
        )
    rng = np.random.default_rng(seed)
    first = _sample_matrix(k, n, degree, num_samples, rng)
    r1 = numeric_rank(first, rank_factor)
    more = _sample_matrix(k, n, degree, num_samples, rng)
    r2 = numeric_rank(np.vstack([first, more]), rank_factor)
    if r1 != r2:
        raise RankUnsaturated(f"rank {r1} with {num_samples} samples but {r2} with {2 * num_samples}")
    return r1


def _construction_for(metric: Metric) -> str:
    return {"chordal": "chordal", "fs": "fs", "angle": "equiangular"}[metric.name]


def verify_prop31(
    frames: list[SubspaceFrame],
    metric,
    spectrum: DistanceSpectrum | None = None,
    tol_cluster: float = DEFAULT_TOLERANCES.tol_cluster,
    tol_diag: float = DEFAULT_TOLERANCES.tol_diag,
    rank_factor: float = DEFAULT_TOLERANCES.rank_factor,
    seed: int = 0,
) -> RankReport:
    """Rank of the evaluation matrix against the matching dimension bound.

    chordal: sampled affine Hilbert function at degree ``s``;
    fs: ``sum_{i<=s} H(2i)`` of the Pluecker embedding;
    angle:i: the equiangular bound (requires ``s = 1``; for lines the
    spherical-code bound at ``s = 1`` is used).
    """
    metric = parse_metric(metric)
    if spectrum is None:
        spectrum = distance_spectrum(frames, metric, tol_cluster)
    elif spectrum.metric != metric:
        raise DomainError(f"spectrum metric {spectrum.metric} does not match {metric}")
    k, n = frames[0].k, frames[0].n
    construction = _construction_for(metric)
    if construction == "chordal":
        mat = chordal_eval_matrix(frames, spectrum)
        bound, source = sampled_hilbert_rank(k, n, spectrum.s, seed=seed, rank_factor=rank_factor), "sampled_hilbert"
    elif construction == "fs":
        mat = fs_eval_matrix(frames, spectrum)
        bound, source = hilbert_even_sum(k, n, spectrum.s), "hilbert_even_sum"
    else:
        if spectrum.s != 1:
            raise DomainError(f"input is not equiangular under {metric}: {spectrum.s} distinct angles")
        mat = equiangular_eval_matrix(frames, spectrum.values[0], metric.index, tol=max(tol_diag, tol_cluster))
        if k >= 2:
            bound, source = bound_equiangular(k, n), "thm52_formula"
        else:
            bound, source = bound_lines_spherical(n, 1), "prop46_formula"
    if mat.off_diagonal_max() > tol_diag:
        raise DomainError(
            f"evaluation matrix is not diagonal (max off-diagonal {mat.off_diagonal_max():.3g} > {tol_diag:g}); "
            "the distance spectrum does not certify this set"
        )
    return RankReport(mat.rank(rank_factor), bound, source, mat.construction, mat.size, mat.off_diagonal_max())


def lemma51_count(n: int, d: int) -> int:
    return family_count(n, d)


def lemma51_quadrics_rank(n: int, k: int = 2) -> int:
    return quadrics_rank(n, k)


def lemma51_family_rank(n: int, d: int, k: int = 2) -> int:
    return family_rank(n, d, k)
