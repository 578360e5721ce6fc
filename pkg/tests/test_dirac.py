# tests/test_dirac.py

from fractions import Fraction
from types import SimpleNamespace

import pytest

from src.dirac import (
    check_infinitesimal_character,
    dirac_index,
    dirac_inequality,
    dsquared_spectrum,
    kernel_multiplicities,
    kernel_types,
    kostant_hd,
    kostant_index,
)
from src.errors import ValidationError
from src.rootsys import build_root_system, validate_subsystem
from src.weights import zero_weight

half = Fraction(1, 2)


def _pair(name, simple):
    rs = build_root_system(name)
    return rs, validate_subsystem(rs, simple)


def test_sl2_torus_trivial_module():
    rs, torus = _pair("A1", [])
    index = dirac_index(rs, torus, (0,)).decomposition
    assert index.as_multiset() == {(1,): 1, (-1,): -1}

    components = kostant_hd(rs, torus, (0,))
    assert [(c.mu, c.parity) for c in components] == [((1,), 1), ((-1,), -1)]


def test_a2_levi_trivial_module():
    rs, levi = _pair("A2", [[1, 0]])
    expected = {(0, 3 * half): 1, (1, -half): -1, (0, -3 * half): 1}

    index = dirac_index(rs, levi, (0, 0)).decomposition
    assert index.as_multiset() == expected
    assert kostant_index(kostant_hd(rs, levi, (0, 0))) == expected


@pytest.mark.parametrize(
    "name, simple",
    [
        ("A2", []),
        ("A2", [[1, 0]]),
        ("B2", [[0, 1]]),
        ("B2", [[1, 0], [1, 2]]),
        ("C2", [[1, 0]]),
        ("G2", [[0, 1], [3, 1]]),
        ("G2", [[1, 0], [3, 2]]),
    ],
)
@pytest.mark.parametrize("lam", [(0, 0), (1, 0), (0, 1)])
def test_index_equals_kostant_cohomology(name, simple, lam):
    rs, sub_system = _pair(name, simple)
    index = dirac_index(rs, sub_system, lam).decomposition
    components = kostant_hd(rs, sub_system, lam)

    assert index.as_multiset() == kostant_index(components)
    assert len(components) * sub_system.weyl_order == rs.weyl_order

    kernel = {e.mu for e in kernel_types(dsquared_spectrum(rs, sub_system, lam))}
    assert {c.mu for c in components} <= kernel
    assert check_infinitesimal_character(rs, sub_system, lam, components).passed


def test_sl2_spectrum_on_standard_module():
    rs, torus = _pair("A1", [])
    entries = {e.mu: (e.mult, e.eigenvalue) for e in dsquared_spectrum(rs, torus, (1,))}
    assert entries == {(2,): (1, 0), (0,): (2, -2), (-2,): (1, 0)}
    assert kernel_multiplicities(rs, torus, (1,)) == {(2,): 1, (-2,): 1}


def test_spectrum_is_non_positive():
    rs, sub_system = _pair("B2", [[1, 0]])
    for entry in dsquared_spectrum(rs, sub_system, (1, 1)):
        assert entry.eigenvalue <= 0
        assert entry.mult > 0


def test_infinitesimal_character_witnesses():
    rs, sub_system = _pair("B2", [[1, 0], [1, 2]])
    lam = (Fraction(1), Fraction(0))
    components = kostant_hd(rs, sub_system, lam)
    report = check_infinitesimal_character(rs, sub_system, lam, components)
    target = (Fraction(2), Fraction(1))
    for mu, w in report.witnesses:
        assert w.act(target) == tuple(m + r for m, r in zip(mu, sub_system.rho))
    assert not report.failures


def test_infinitesimal_character_flags_foreign_type():
    rs, torus = _pair("A1", [])
    lam = (Fraction(1),)
    stray = SimpleNamespace(mu=(Fraction(5),))
    report = check_infinitesimal_character(rs, torus, lam, kostant_hd(rs, torus, lam) + [stray])
    assert not report.passed
    assert report.failures == ((5,),)
    assert sorted(mu for mu, _ in report.witnesses) == [(-2,), (2,)]


@pytest.mark.parametrize("name, simple, norm", [("A2", [[1, 0]], 2), ("B2", [[1, 0]], Fraction(5, 2))])
def test_dirac_inequality_equality_for_trivial_module(name, simple, norm):
    rs, sub_system = _pair(name, simple)
    result = dirac_inequality(rs, sub_system, rs.rho, zero_weight(rs.rank))
    assert result.holds
    assert result.equality
    assert result.lhs == result.rhs == norm
    assert result.witness is not None


def test_non_dominant_module_rejected():
    rs, torus = _pair("A2", [])
    with pytest.raises(ValidationError):
        dirac_index(rs, torus, (-1, 0))
    with pytest.raises(ValidationError):
        kostant_hd(rs, torus, (Fraction(1, 2), 0))
