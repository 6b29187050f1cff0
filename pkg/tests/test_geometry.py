import math
from itertools import combinations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from grassbound.geometry import (
    Metric,
    SubspaceFrame,
    angle_distance,
    chordal_distance,
    chordal_distance_from_angles,
    distance_spectrum,
    fubini_study_distance,
    fubini_study_from_angles,
    generate_configuration,
    parse_metric,
    plucker_coordinates,
    principal_angles,
    projection_matrix,
)
from grassbound.scalars import DomainError

E = np.eye(3)


def line(*v):
    return SubspaceFrame.from_span(np.array(v, dtype=float))


def random_pair(rng, n, k):
    return [SubspaceFrame.from_span(rng.standard_normal((n, k))) for _ in range(2)]


def random_orthogonal(rng, size):
    q, r = np.linalg.qr(rng.standard_normal((size, size)))
    return q * np.sign(np.diag(r))


def test_principal_angle_examples():
    u = line(1, 0)
    assert np.allclose(principal_angles(u, u), 0)
    assert principal_angles(u, line(0, 1))[0] == pytest.approx(math.pi / 2)
    assert principal_angles(u, line(1, 1))[0] == pytest.approx(math.pi / 4)
    with pytest.raises(DomainError):
        principal_angles(u, line(1, 0, 0))


def test_distance_examples():
    a, b = line(1, 0, 0), line(0, 1, 0)
    assert chordal_distance(a, a) == pytest.approx(0, abs=1e-12)
    assert chordal_distance(a, b) == pytest.approx(1)
    assert fubini_study_distance(a, a) == pytest.approx(0, abs=1e-7)
    assert fubini_study_distance(a, b) == pytest.approx(math.pi / 2)
    ico = generate_configuration("icosahedron_lines", 3)
    assert chordal_distance(ico[0], ico[1]) == pytest.approx(math.sqrt(4 / 5), abs=1e-12)
    c = math.cos(math.pi / 3)
    p = SubspaceFrame(np.array([[1, 0], [0, 1], [0, 0], [0, 0]], dtype=float))
    q = SubspaceFrame(np.array([[1, 0], [0, c], [0, math.sin(math.pi / 3)], [0, 0]]))
    assert fubini_study_distance(p, q) == pytest.approx(math.pi / 3)
    assert angle_distance(p, q, 2) == pytest.approx(math.pi / 3)
    assert angle_distance(p, q, 1) == pytest.approx(0, abs=1e-7)


def test_plucker_and_projection_examples():
    u = SubspaceFrame(np.eye(4)[:, :2])
    assert np.allclose(plucker_coordinates(u), [1, 0, 0, 0, 0, 0])
    assert np.allclose(plucker_coordinates(line(1, 0, 0)), [1, 0, 0])
    assert np.allclose(projection_matrix(line(1, 0)), [[1, 0], [0, 0]])
    assert np.allclose(projection_matrix(line(1, 1)), [[0.5, 0.5], [0.5, 0.5]])


def test_frame_validation():
    with pytest.raises(DomainError):
        SubspaceFrame([[1.0, 0.0], [0.0, 2.0]])
    with pytest.raises(DomainError):
        SubspaceFrame(np.ones((2, 3)) / 2)
    # rounded input within 1e-6 is cleaned up
    f = SubspaceFrame([[1.0 + 1e-8], [0.0]])
    assert abs(f.columns[0, 0] - 1.0) < 1e-12


def test_metric_axioms():
    rng = np.random.default_rng(1)
    for _ in range(100):
        u, v = random_pair(rng, 5, 2)
        for dist in (chordal_distance, fubini_study_distance):
            assert dist(u, v) == pytest.approx(dist(v, u), abs=1e-12)
            assert dist(u, u) < 1e-7
            assert dist(u, v) > 1e-7
    for _ in range(50):
        u, v, w = [SubspaceFrame.from_span(rng.standard_normal((5, 2))) for _ in range(3)]
        assert chordal_distance(u, w) <= chordal_distance(u, v) + chordal_distance(v, w) + 1e-8


@pytest.mark.parametrize("k, n", [(1, 3), (2, 4), (2, 5), (3, 6)])
def test_cross_formula_consistency(k, n):
    rng = np.random.default_rng(100 * k + n)
    for _ in range(100):
        u, v = random_pair(rng, n, k)
        assert abs(chordal_distance(u, v) - chordal_distance_from_angles(u, v)) <= 1e-8
        assert abs(fubini_study_distance(u, v) - fubini_study_from_angles(u, v)) <= 1e-8
        assert abs(np.linalg.norm(plucker_coordinates(u)) - 1) <= 1e-10


@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), n=st.integers(2, 6), data=st.data())
def test_invariance(seed, n, data):
    # k = n makes every pair coincide; arccos is ill-conditioned there
    k = data.draw(st.integers(1, n - 1))
    rng = np.random.default_rng(seed)
    u, v = random_pair(rng, n, k)
    rot = random_orthogonal(rng, n)
    right = random_orthogonal(rng, k)
    u2 = SubspaceFrame(u.columns @ right)
    ru, rv = SubspaceFrame(rot @ u.columns), SubspaceFrame(rot @ v.columns)
    for metric in ("chordal", "fs", "angle:1"):
        base = _d(u, v, metric)
        assert abs(_d(u2, v, metric) - base) <= 1e-9
        assert abs(_d(ru, rv, metric) - base) <= 1e-9


def _d(u, v, metric):
    from grassbound.geometry import distance

    return distance(u, v, metric)


def test_parse_metric():
    assert parse_metric("chordal") == Metric("chordal")
    assert parse_metric("FS") == Metric("fs")
    assert parse_metric("angle:2") == Metric("angle", 2)
    for bad in ("angle", "angle:0", "euclid"):
        with pytest.raises(DomainError):
            parse_metric(bad)


def test_spectrum_examples():
    axes = generate_configuration("coordinate_axes", 3)
    sp = distance_spectrum(axes, "chordal")
    assert sp.s == 1 and sp.values[0] == pytest.approx(1) and sp.multiplicities == (3,)
    ico = generate_configuration("icosahedron_lines", 3)
    sp = distance_spectrum(ico, "fs")
    assert sp.s == 1 and sp.values[0] == pytest.approx(math.acos(1 / math.sqrt(5)), abs=1e-12)
    sp = distance_spectrum([line(1, 0), line(0, 1), line(1, 1)], "chordal")
    assert sp.s == 2
    assert sp.values == pytest.approx((math.sin(math.pi / 4), 1.0))
    assert sp.multiplicities == (2, 1)


def test_spectrum_errors():
    axes = generate_configuration("coordinate_axes", 3)
    with pytest.raises(DomainError):
        distance_spectrum(axes[:1], "chordal")
    with pytest.raises(DomainError):
        distance_spectrum(axes, "chordal", tol_cluster=0)
    with pytest.raises(DomainError):
        distance_spectrum(axes + [SubspaceFrame(np.eye(3)[:, :2])], "chordal")
    with pytest.raises(DomainError):
        distance_spectrum(axes, "angle:2")


def test_spectrum_rejects_wide_chain():
    # consecutive gaps 0.3, 0.3 + 0.9e-9, 0.3 + 1.8e-9, 0.3 + 2.7e-9 link into one
    # single-linkage cluster that is wider than 2 * tol_cluster
    offsets = [0.0, 0.0, 0.9e-9, 2.7e-9, 5.4e-9]
    frames = [line(math.cos(0.3 * i + e), math.sin(0.3 * i + e)) for i, e in enumerate(offsets)]
    with pytest.raises(DomainError, match="chain"):
        distance_spectrum(frames, "angle:1", tol_cluster=1e-9)
    assert distance_spectrum(frames, "angle:1", tol_cluster=1e-8).values[0] == pytest.approx(0.3, abs=1e-8)


def test_generators():
    axes = generate_configuration("coordinate_axes", 4)
    assert len(axes) == 4 and distance_spectrum(axes, "chordal").s == 1
    simplex = generate_configuration("simplex_lines", 3)
    assert len(simplex) == 4
    for u, v in combinations(simplex, 2):
        assert abs(float(u.columns[:, 0] @ v.columns[:, 0])) == pytest.approx(1 / 3, abs=1e-12)
    ico = generate_configuration("icosahedron_lines", 3)
    assert len(ico) == 6
    cosines = [abs(float(u.columns[:, 0] @ v.columns[:, 0])) for u, v in combinations(ico, 2)]
    assert len(cosines) == 15
    assert np.allclose(cosines, 1 / math.sqrt(5), atol=1e-12)
    r1 = generate_configuration("random_frames", 5, count=3, seed=7, k=2)
    r2 = generate_configuration("random_frames", 5, count=3, seed=7, k=2)
    assert all(np.array_equal(a.columns, b.columns) for a, b in zip(r1, r2))
    with pytest.raises(DomainError):
        generate_configuration("icosahedron_lines", 4)
    with pytest.raises(DomainError):
        generate_configuration("random_frames", 4)
