# tests/test_lifting.py

from fractions import Fraction

import numpy as np
import pytest

from src.charring import irreducible_character, multiply
from src.errors import ValidationError
from src.lifting import (
    HCParameter,
    build_endoscopic_datum,
    discrete_series_dirac_cohomology,
    finite_dim_lift,
    lift_discrete_series,
    limit_parameters,
    random_parameters,
    verify_lift_identity,
)
from src.rootsys import build_root_system, coset_representatives, validate_subsystem
from src.spinmod import transfer_factor


@pytest.fixture
def split_datum():
    """C2 with k = the short simple root, h = the two orthogonal long roots; k and h share no roots."""
    return build_endoscopic_datum("C2", [[1, 0]], [[0, 1], [2, 1]])


@pytest.fixture
def nested_datum():
    """C2 with k inside the coroot-closed h = {a1, a1 + a2}."""
    return build_endoscopic_datum("C2", [[1, 0]], [[1, 0], [1, 1]])


def test_datum_structure(split_datum, nested_datum):
    assert split_datum.kh.positive_roots == ()
    assert len(coset_representatives(split_datum.k, split_datum.kh)) == 2
    assert nested_datum.kh.root_set == nested_datum.k.root_set
    assert len(coset_representatives(nested_datum.k, nested_datum.kh)) == 1
    assert split_datum.sign_q == 1


def test_lift_of_regular_parameter(split_datum):
    terms = lift_discrete_series(split_datum, (1, 1))
    assert sorted((t.parameter, t.sign) for t in terms) == [((-1, 2), -1), ((1, 1), 1)]


def test_lift_inside_h_is_the_parameter_itself(nested_datum):
    terms = lift_discrete_series(nested_datum, (1, 1))
    assert [(t.sign, t.parameter) for t in terms] == [(1, (1, 1))]


def test_lift_rejects_singular_parameter(split_datum):
    with pytest.raises(ValidationError, match="singular"):
        lift_discrete_series(split_datum, (0, 1))


@pytest.mark.parametrize("lam", [(1, 1), (Fraction(1, 2), Fraction(3, 4)), (-3, 5)])
def test_lift_identity(split_datum, nested_datum, lam):
    for datum in (split_datum, nested_datum):
        check = verify_lift_identity(datum, lam)
        assert check.holds
        assert check.lhs_terms == check.rhs_terms


def test_trivial_datum():
    datum = build_endoscopic_datum("A1", [], [])
    terms = lift_discrete_series(datum, (Fraction(3, 2),))
    assert [(t.sign, t.parameter) for t in terms] == [(1, (Fraction(3, 2),))]
    assert verify_lift_identity(datum, (Fraction(3, 2),)).holds


def test_random_and_limit_parameters(split_datum):
    rng = np.random.default_rng(7)
    for p in random_parameters(split_datum, 20, rng):
        assert p.is_regular_for(split_datum.k)
        assert verify_lift_identity(split_datum, p).holds

    for p in limit_parameters(split_datum, 5, rng):
        assert p.is_regular_for(split_datum.k)
        assert len(p.singular_roots(split_datum.g)) == 1
        assert verify_lift_identity(split_datum, p).holds


def test_random_parameters_are_seeded(split_datum):
    a = random_parameters(split_datum, 5, np.random.default_rng(11))
    b = random_parameters(split_datum, 5, np.random.default_rng(11))
    assert a == b


def test_discrete_series_cohomology(split_datum):
    hd = discrete_series_dirac_cohomology(split_datum, HCParameter((Fraction(-1), Fraction(2))))
    assert hd.conjugate_ok
    assert hd.w.act(hd.parameter) == tuple(k + r for k, r in zip(hd.k_type, split_datum.k.rho))


def test_finite_dimensional_lift():
    rs = build_root_system("B2")
    sub_system = validate_subsystem(rs, [[1, 0], [1, 2]])
    lam = (Fraction(0), Fraction(1))
    lifted = finite_dim_lift(rs, sub_system, lam).reconstruct(sub_system)
    assert lifted == multiply(irreducible_character(rs, lam), transfer_factor(rs, sub_system))


def test_sign_must_be_unit():
    with pytest.raises(ValidationError):
        build_endoscopic_datum("C2", [[1, 0]], [[0, 1], [2, 1]], sign_q=2)
