# tests/test_oracle.py

from fractions import Fraction

import pytest

from src.dirac import rank1_matrix_oracle
from src.errors import ResourceCapError, ValidationError


@pytest.mark.parametrize("n", range(6))
def test_matrix_dirac_operator_matches_formulas(n):
    report = rank1_matrix_oracle(n)
    assert report.clifford_ok
    assert report.casimir_formula_ok
    assert report.d_squared_diagonal
    assert report.spectrum_ok
    assert report.dimension == 2 * (n + 1)
    assert report.kernel_dimension == 2
    assert report.kernel_weights == (Fraction(-n - 1), Fraction(n + 1))
    assert report.passed
    assert not report.notes


def test_standard_module_eigenvalues():
    report = rank1_matrix_oracle(1)
    assert report.eigenvalues == (-2, -2, 0, 0)


def test_eigenvalues_follow_closed_form():
    n = 4
    report = rank1_matrix_oracle(n)
    expected = sorted(Fraction(-2 * k * (n + 1 - k)) for k in range(n + 1) for _ in range(2))
    assert list(report.eigenvalues) == expected


def test_bounds():
    with pytest.raises(ValidationError):
        rank1_matrix_oracle(-1)
    with pytest.raises(ResourceCapError):
        rank1_matrix_oracle(51)
