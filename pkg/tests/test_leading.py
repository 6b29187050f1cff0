import math
from fractions import Fraction

import pytest

import oracles
from grassbound.leading import (
    alpha_coefficient,
    chordal_leading_term,
    d_kn,
    d_kn_scalar,
    gamma_product_A,
    gamma_product_B,
    leading_term_report,
)
from grassbound.scalars import DomainError, ExactScalar, double_factorial


def d3_closed(n: int) -> Fraction:
    return Fraction((8 * n - 25) * double_factorial(2 * n - 9) * 2 ** (2 * n - 6), math.factorial(n - 2))


def test_alpha_examples():
    assert alpha_coefficient(1, 2) == 2
    assert alpha_coefficient(1, 3) == 4
    assert alpha_coefficient(1, 4) == 4
    with pytest.raises(DomainError):
        alpha_coefficient(3, 5)


def test_gamma_product_examples():
    assert gamma_product_A((0,), 1, 3) == ExactScalar(1)
    assert gamma_product_A((0,), 1, 2) == ExactScalar(1)
    assert gamma_product_A((1, 0), 2, 4) == ExactScalar(Fraction(3, 4), 1)
    assert gamma_product_B((5,), 1) == ExactScalar(1)
    assert gamma_product_B((1, 0), 2) == ExactScalar(Fraction(2), -1)
    assert gamma_product_B((2, 0), 2) == ExactScalar(Fraction(8, 3), -1)


def test_closed_forms():
    for n in range(2, 13):
        assert d_kn(1, n) == 2 ** (n - 1)
    for n in range(4, 13):
        assert d_kn(2, n) == 2 * math.comb(2 * n - 4, n - 2)
    for n in range(6, 13):
        assert d_kn(3, n) == d3_closed(n)
    assert d_kn(2, 6) == 140


def test_pi_cancels_and_positive():
    for n in range(2, 11):
        for k in range(1, n // 2 + 1):
            val = d_kn_scalar(k, n)
            assert val.sqrt_pi_exp == 0
            assert val.coeff > 0


def test_duality():
    for n in range(2, 11):
        for k in range(1, n):
            assert d_kn(k, n) == d_kn(n - k, n)


@pytest.mark.parametrize("k, n", [(1, 3), (1, 5), (2, 4), (2, 5), (2, 6), (3, 6), (3, 7), (4, 7), (4, 8)])
def test_against_orthogonal_group_oracle(k, n):
    assert d_kn(k, n) == oracles.projection_leading(k, n)


def test_oracle_matches_sampled_values():
    # low-degree values of the orthogonal-group Hilbert function
    assert oracles.projection_hilbert(1, 3, 1) == 6
    assert oracles.projection_hilbert(2, 4, 1) == 10
    assert oracles.projection_hilbert(1, 3, 2) == 15


def test_d_kn_domain():
    for k, n in [(0, 3), (3, 3), (4, 3)]:
        with pytest.raises(DomainError):
            d_kn(k, n)


def test_chordal_leading_examples():
    assert chordal_leading_term(1, 3, 2) == 8
    assert chordal_leading_term(1, 2, 5) == 10
    assert chordal_leading_term(2, 4, 1) == Fraction(1, 2)
    with pytest.raises(DomainError):
        chordal_leading_term(1, 3, 0)


def test_report_fields():
    rep = leading_term_report(2, 5)
    assert rep.dim == 6
    assert rep.leading_coeff == rep.d_kn / math.factorial(6)
