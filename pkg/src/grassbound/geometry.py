"""Concrete subspaces of R^n: frames, principal angles, distances, embeddings."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .config import DEFAULT_TOLERANCES
from .scalars import DomainError

__all__ = [
    "SubspaceFrame",
    "Metric",
    "DistanceSpectrum",
    "parse_metric",
    "principal_angles",
    "chordal_distance",
    "chordal_distance_from_angles",
    "fubini_study_distance",
    "fubini_study_from_angles",
    "angle_distance",
    "distance",
    "plucker_coordinates",
    "projection_matrix",
    "distance_spectrum",
    "generate_configuration",
]

REJECT_DEFECT = 1e-6


class SubspaceFrame:
    """An ``n x k`` matrix with orthonormal columns.

    Columns whose orthonormality defect lies between ``tol_orth`` and
    ``1e-6`` are re-orthonormalized (rounded user input); larger defects are
    rejected.
    """

    def __init__(self, columns, tol_orth: float = DEFAULT_TOLERANCES.tol_orth):
        cols = np.array(columns, dtype=float)
        if cols.ndim == 1:
            cols = cols[:, None]
        if cols.ndim != 2:
            raise DomainError("frame must be a 2-d array")
        n, k = cols.shape
        if not 1 <= k <= n:
            raise DomainError(f"frame shape {cols.shape} needs 1 <= k <= n")
        defect = float(np.max(np.abs(cols.T @ cols - np.eye(k))))
        if defect > REJECT_DEFECT:
            raise DomainError(f"columns are not orthonormal (defect {defect:.3g})")
        if defect > tol_orth:
            cols = _orthonormalize(cols)
        self.columns = cols
        self.columns.setflags(write=False)

    @classmethod
    def from_span(cls, basis) -> SubspaceFrame:
        """Frame for the column span of any full-rank ``n x k`` matrix."""
        basis = np.array(basis, dtype=float)
        if basis.ndim == 1:
            basis = basis[:, None]
        if np.linalg.matrix_rank(basis) < basis.shape[1]:
            raise DomainError("basis is rank deficient")
        return cls(_orthonormalize(basis))

    @property
    def n(self) -> int:
        return self.columns.shape[0]

    @property
    def k(self) -> int:
        return self.columns.shape[1]

    def __repr__(self) -> str:
        return f"SubspaceFrame(n={self.n}, k={self.k})"


def _orthonormalize(mat: np.ndarray) -> np.ndarray:
    q, r = np.linalg.qr(mat)
    signs = np.sign(np.diag(r))
    signs[signs == 0] = 1
    return q * signs


def _check_pair(u: SubspaceFrame, v: SubspaceFrame) -> None:
    if (u.n, u.k) != (v.n, v.k):
        raise DomainError(f"dimension mismatch: Gr({u.k},{u.n}) vs Gr({v.k},{v.n})")


def principal_angles(u: SubspaceFrame, v: SubspaceFrame) -> np.ndarray:
    """Angles ``arccos(sigma_i(U^T V))``, in order of descending cosine.

    Angles below ``pi/4`` are taken from the sines (singular values of
    ``V - U U^T V``) instead, since arccos loses half the digits near 1.
    """
    _check_pair(u, v)
    g = u.columns.T @ v.columns
    cosines = np.clip(np.linalg.svd(g, compute_uv=False), 0.0, 1.0)
    sines = np.clip(np.sort(np.linalg.svd(v.columns - u.columns @ g, compute_uv=False)), 0.0, 1.0)
    return np.where(cosines > math.sqrt(0.5), np.arcsin(sines), np.arccos(cosines))


def chordal_distance(u: SubspaceFrame, v: SubspaceFrame) -> float:
    """``sqrt(k - tr(U U^T V V^T))``.

    Evaluated as ``||V - U U^T V||_F``, which is the same quantity for
    orthonormal frames but keeps full precision near zero distance.
    """
    _check_pair(u, v)
    resid = v.columns - u.columns @ (u.columns.T @ v.columns)
    return float(np.linalg.norm(resid))


def chordal_distance_from_angles(u: SubspaceFrame, v: SubspaceFrame) -> float:
    return float(np.sqrt(np.sum(np.sin(principal_angles(u, v)) ** 2)))


def fubini_study_distance(u: SubspaceFrame, v: SubspaceFrame) -> float:
    """``arccos |det(U^T V)|``."""
    _check_pair(u, v)
    det = abs(float(np.linalg.det(u.columns.T @ v.columns)))
    return math.acos(min(1.0, det))


def fubini_study_from_angles(u: SubspaceFrame, v: SubspaceFrame) -> float:
    return math.acos(min(1.0, float(np.prod(np.cos(principal_angles(u, v))))))


def angle_distance(u: SubspaceFrame, v: SubspaceFrame, index: int) -> float:
    """The ``index``-th principal angle (1-based, smallest angle first)."""
    if not 1 <= index <= u.k:
        raise DomainError(f"angle index {index} outside 1..{u.k}")
    return float(principal_angles(u, v)[index - 1])


@dataclass(frozen=True)
class Metric:
    name: str  # "chordal", "fs" or "angle"
    index: int | None = None

    def __str__(self) -> str:
        return f"angle:{self.index}" if self.name == "angle" else self.name


def parse_metric(text: str | Metric) -> Metric:
    if isinstance(text, Metric):
        return text
    text = text.strip().lower()
    if text in ("chordal", "c"):
        return Metric("chordal")
    if text in ("fs", "fubini_study", "fubini-study"):
        return Metric("fs")
    if text.startswith("angle"):
        _, _, idx = text.partition(":")
        if not idx.isdigit() or int(idx) < 1:
            raise DomainError(f"angle metric needs a positive index, got {text!r}")
        return Metric("angle", int(idx))
    raise DomainError(f"unknown metric {text!r}")


def distance(u: SubspaceFrame, v: SubspaceFrame, metric) -> float:
    metric = parse_metric(metric)
    if metric.name == "chordal":
        return chordal_distance(u, v)
    if metric.name == "fs":
        return fubini_study_distance(u, v)
    return angle_distance(u, v, metric.index)


def plucker_coordinates(u: SubspaceFrame) -> np.ndarray:
    """All ``k x k`` minors, rows indexed by ``k``-subsets in lexicographic order."""
    cols = u.columns
    return np.array([np.linalg.det(cols[list(rows), :]) for rows in itertools.combinations(range(u.n), u.k)])


def projection_matrix(u: SubspaceFrame) -> np.ndarray:
    """``U U^T``, the orthogonal projection onto the subspace."""
    return u.columns @ u.columns.T


@dataclass(frozen=True)
class DistanceSpectrum:
    metric: Metric
    values: tuple[float, ...]
    multiplicities: tuple[int, ...]
    tol_cluster: float

    @property
    def s(self) -> int:
        return len(self.values)

    def to_dict(self) -> dict:
        return {
            "metric": str(self.metric),
            "s": self.s,
            "values": list(self.values),
            "multiplicities": list(self.multiplicities),
            "tol_cluster": self.tol_cluster,
        }


def pairwise_distances(frames: list[SubspaceFrame], metric) -> np.ndarray:
    metric = parse_metric(metric)
    return np.array([distance(frames[i], frames[j], metric) for i, j in itertools.combinations(range(len(frames)), 2)])


def distance_spectrum(frames: list[SubspaceFrame], metric, tol_cluster: float = DEFAULT_TOLERANCES.tol_cluster) -> DistanceSpectrum:
    """Cluster pairwise distances by single linkage with an absolute threshold."""
    metric = parse_metric(metric)
    if len(frames) < 2:
        raise DomainError("need at least two frames")
    if tol_cluster <= 0:
        raise DomainError("tol_cluster must be positive")
    shapes = {(f.n, f.k) for f in frames}
    if len(shapes) != 1:
        raise DomainError(f"frames have mixed shapes {sorted(shapes)}")
    if metric.name == "angle" and not 1 <= metric.index <= frames[0].k:
        raise DomainError(f"angle index {metric.index} outside 1..{frames[0].k}")
    dists = np.sort(pairwise_distances(frames, metric))
    clusters: list[list[float]] = [[dists[0]]]
    for x in dists[1:]:
        if x - clusters[-1][-1] > tol_cluster:
            clusters.append([x])
        else:
            clusters[-1].append(x)
    values, mults = [], []
    for members in clusters:
        rep = 0.5 * (members[0] + members[-1])
        if members[-1] - rep > tol_cluster:
            raise DomainError(
                f"distances chain over [{members[0]:.12g}, {members[-1]:.12g}], wider than tol_cluster allows"
            )
        values.append(float(rep))
        mults.append(len(members))
    return DistanceSpectrum(metric, tuple(values), tuple(mults), tol_cluster)


PHI = (1 + math.sqrt(5)) / 2


def generate_configuration(name: str, n: int, *, count: int | None = None, seed: int = 0, k: int = 1) -> list[SubspaceFrame]:
    """Classical fixtures: ``coordinate_axes``, ``simplex_lines``,
    ``icosahedron_lines`` (n = 3) and seeded ``random_frames``."""
    if name == "coordinate_axes":
        return [SubspaceFrame(np.eye(n)[:, [i]]) for i in range(n)]
    if name == "simplex_lines":
        # vertices of the centered simplex in the sum-zero hyperplane of R^(n+1)
        verts = np.eye(n + 1) - 1.0 / (n + 1)
        basis = _orthonormalize(verts[:, :n])
        return [SubspaceFrame.from_span(basis.T @ verts[:, i]) for i in range(n + 1)]
    if name == "icosahedron_lines":
        if n != 3:
            raise DomainError("icosahedron_lines exists only in R^3")
        pts = []
        for a, b in ((1, PHI), (1, -PHI)):
            base = (0.0, a, b)
            for shift in range(3):
                pts.append(np.roll(base, shift))
        return [SubspaceFrame.from_span(p) for p in pts]
    if name == "random_frames":
        if count is None or count < 1:
            raise DomainError("random_frames needs a positive count")
        if not 1 <= k <= n:
            raise DomainError(f"random_frames needs 1 <= k <= n, got k={k}")
        rng = np.random.default_rng(seed)
        return [SubspaceFrame(_orthonormalize(rng.standard_normal((n, k)))) for _ in range(count)]
    raise DomainError(f"unknown configuration {name!r}")
