# tests/test_spinmod.py

from fractions import Fraction

import pytest

from src.charring import FormalCharacter, multiply, weyl_numerator
from src.errors import ValidationError
from src.rootsys import build_root_system, validate_subsystem
from src.spinmod import (
    noncompact_positive_roots,
    normalized_transfer_factor,
    rho_n,
    spin_characters,
    transfer_factor,
)

half = Fraction(1, 2)

PAIRS = [
    ("A1", []),
    ("A2", []),
    ("A2", [[1, 0]]),
    ("B2", [[1, 0]]),
    ("B2", [[1, 0], [1, 2]]),
    ("C2", [[1, 0]]),
    ("G2", [[0, 1], [3, 1]]),
    ("G2", [[1, 0], [3, 2]]),
]


def _pair(name, simple):
    rs = build_root_system(name)
    return rs, validate_subsystem(rs, simple)


def test_transfer_factor_for_a2_levi():
    rs, levi = _pair("A2", [[1, 0]])
    assert rho_n(rs, levi) == (0, 3 * half)
    tf = transfer_factor(rs, levi)
    assert tf == FormalCharacter({
        (0, 3 * half): 1,
        (-1, half): -1,
        (1, -half): -1,
        (0, -3 * half): 1,
    })


@pytest.mark.parametrize("name, simple", PAIRS)
def test_spin_characters(name, simple):
    rs, sub_system = _pair(name, simple)
    n = len(noncompact_positive_roots(rs, sub_system))
    spin = spin_characters(rs, sub_system)

    assert spin.s_plus.mass() + spin.s_minus.mass() == 2 ** n
    assert spin.s_plus.coefficient(spin.rho_n) == 1
    assert spin.s_plus - spin.s_minus == transfer_factor(rs, sub_system)
    assert spin.s_plus.is_invariant(sub_system)
    assert spin.s_minus.is_invariant(sub_system)


@pytest.mark.parametrize("name, simple", PAIRS)
def test_transfer_factor_divides_the_denominator(name, simple):
    rs, sub_system = _pair(name, simple)
    tf = transfer_factor(rs, sub_system)
    assert multiply(tf, weyl_numerator(sub_system, sub_system.rho)) == weyl_numerator(rs, rs.rho)
    assert normalized_transfer_factor(rs, sub_system).shift(rho_n(rs, sub_system)) == tf


def test_foreign_subsystem_rejected():
    a2 = build_root_system("A2")
    _, b2_sub = _pair("B2", [[1, 0]])
    with pytest.raises(ValidationError):
        transfer_factor(a2, b2_sub)
