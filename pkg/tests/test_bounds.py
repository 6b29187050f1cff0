from fractions import Fraction

import pytest

from grassbound.bounds import (
    ASYMPTOTIC,
    EXACT,
    baseline_balla,
    baseline_chs,
    baseline_fs_balla,
    bound_equiangular,
    bound_fs_exact,
    bound_lines_spherical,
    compare,
    valid_parameters,
)
from grassbound.hilbert import hilbert_even_sum
from grassbound.scalars import DomainError


def test_examples():
    assert bound_fs_exact(1, 3, 1) == 6
    assert bound_fs_exact(2, 4, 1) == 20
    assert bound_fs_exact(1, 4, 2) == 45
    assert [bound_lines_spherical(3, 1), bound_lines_spherical(3, 2), bound_lines_spherical(2, 1)] == [9, 25, 5]
    assert [bound_equiangular(2, 3), bound_equiangular(3, 3), bound_equiangular(2, 4)] == [15, 50, 45]
    assert [baseline_balla(2, 3), baseline_balla(3, 3)] == [21, 56]
    assert all(baseline_balla(1, n) == n * (n + 1) // 2 for n in range(1, 10))
    assert [baseline_chs(3), baseline_chs(4), baseline_chs(7)] == [6, 10, 28]
    assert [baseline_fs_balla(1, 3), baseline_fs_balla(2, 4), baseline_fs_balla(1, 2)] == [6, 21, 3]


def test_compare_examples():
    assert compare("equiangular", 2, 3).improvement == 6
    assert compare("fs", 2, 4, 1).improvement == 1
    assert compare("equiangular", 3, 3).improvement == 6
    rep = compare("chordal-leading", 2, 4, 1)
    assert rep.kind == ASYMPTOTIC and rep.value == Fraction(1, 2)
    assert rep.to_dict()["value"] == "1/2"
    assert compare("lines", 1, 3, 1).baseline_value == 6


def test_errors():
    with pytest.raises(DomainError):
        bound_equiangular(1, 3)
    with pytest.raises(DomainError):
        compare("lines", 2, 4, 1)
    with pytest.raises(DomainError):
        compare("equiangular", 2, 4, 2)
    with pytest.raises(DomainError):
        valid_parameters("nope", 1, 2, 1)


def test_equiangular_improvement():
    for n in range(2, 11):
        for k in range(2, n + 1):
            assert bound_equiangular(k, n) < baseline_balla(k, n)


def test_fs_improvement():
    for n in range(1, 9):
        for k in range(1, n + 1):
            value, base = bound_fs_exact(k, n, 1), baseline_fs_balla(k, n)
            assert value <= base
            if 2 <= k <= n - 2:
                assert value < base


def test_consistency():
    for n in range(1, 9):
        assert bound_fs_exact(1, n, 1) == hilbert_even_sum(1, n, 1)
    for n in range(1, 13):
        assert bound_lines_spherical(n, 1) >= baseline_chs(n)


def test_exact_values_are_positive_integers():
    for bound in ("fs", "lines", "equiangular"):
        for k in range(1, 5):
            for n in range(k, 8):
                for s in (1, 2):
                    if valid_parameters(bound, k, n, s):
                        rep = compare(bound, k, n, s)
                        assert rep.kind == EXACT
                        assert isinstance(rep.value, int) and rep.value > 0


def test_exact_bounds_monotone():
    for k in range(1, 4):
        for n in range(max(k, 2), 8):
            for s in (1, 2, 3):
                assert bound_fs_exact(k, n, s + 1) >= bound_fs_exact(k, n, s)
                assert bound_fs_exact(k, n + 1, s) >= bound_fs_exact(k, n, s)
    for n in range(2, 10):
        for s in (1, 2, 3):
            assert bound_lines_spherical(n, s + 1) >= bound_lines_spherical(n, s)
            assert bound_lines_spherical(n + 1, s) >= bound_lines_spherical(n, s)
    for k in range(2, 6):
        for n in range(k, 10):
            assert bound_equiangular(k, n + 1) >= bound_equiangular(k, n)


def test_leading_term_monotone_in_s_only():
    for k, n in [(1, 3), (2, 4), (2, 5)]:
        vals = [compare("chordal-leading", k, n, s).value for s in range(1, 6)]
        assert vals == sorted(vals)
    # not monotone in n: 2^(n-1)/(n-1)! decreases for n >= 3
    assert compare("chordal-leading", 1, 6, 1).value < compare("chordal-leading", 1, 5, 1).value
