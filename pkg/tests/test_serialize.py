# tests/test_serialize.py

import json
from fractions import Fraction

import pytest

from src.charring import decompose, irreducible_character
from src.cli import main
from src.dirac import (
    check_infinitesimal_character,
    dirac_index,
    dsquared_spectrum,
    kernel_types,
    kostant_hd,
    rank1_matrix_oracle,
)
from src.errors import ValidationError
from src.lifting import build_endoscopic_datum, lift_discrete_series, lift_terms_sorted, verify_lift_identity
from src.rootsys import build_root_system, coset_representatives, enumerate_weyl, validate_subsystem
from src.serialize import (
    character_from_json,
    character_to_json,
    conjugacy_from_json,
    decomposition_from_json,
    decomposition_to_json,
    dumps,
    index_from_json,
    index_report,
    kostant_from_json,
    kostant_to_json,
    lift_check_from_json,
    lift_from_json,
    lift_to_json,
    oracle_from_json,
    oracle_to_json,
    roots_from_json,
    roots_payload,
    spectrum_from_json,
    spin_from_json,
    weyl_element_from_json,
    weyl_element_to_json,
    weyl_elements_from_json,
)
from src.spinmod import spin_characters, transfer_factor


def _reparse(payload):
    return json.loads(dumps(payload))


def test_rationals_are_lowest_terms_strings():
    rs = build_root_system("A2")
    levi = validate_subsystem(rs, [[1, 0]])
    items = _reparse(decomposition_to_json(dirac_index(rs, levi, (0, 0)).decomposition))
    assert {tuple(item["weight"]) for item in items} == {("0", "3/2"), ("1", "-1/2"), ("0", "-3/2")}


def test_character_and_decomposition_reparse():
    rs = build_root_system("B2")
    chi = irreducible_character(rs, (1, 1))
    assert character_from_json(_reparse(character_to_json(chi))) == chi

    dec = decompose(chi * chi, rs)
    assert decomposition_from_json(_reparse(decomposition_to_json(dec))) == dec


def test_weyl_elements_reparse():
    rs = build_root_system("G2")
    for w in enumerate_weyl(rs):
        item = _reparse(weyl_element_to_json(w))
        assert weyl_element_from_json(rs, item) == w
        assert item["length"] == len(item["word"])


def test_kostant_words_are_one_based():
    rs = build_root_system("A1")
    torus = validate_subsystem(rs, [])
    items = kostant_to_json(kostant_hd(rs, torus, (0,)))
    assert [item["w"]["word"] for item in items] == [[], [1]]
    assert [item["parity"] for item in items] == [1, -1]


def test_lift_reparse_sorted_by_parameter():
    datum = build_endoscopic_datum("C2", [[1, 0]], [[0, 1], [2, 1]])
    terms = lift_discrete_series(datum, (Fraction(1, 2), Fraction(1)))
    items = _reparse(lift_to_json(terms))
    assert [item["parameter"] for item in items] == [["-1/2", "3/2"], ["1/2", "1"]]
    assert sorted(lift_from_json(items), key=lambda t: t.parameter) == sorted(terms, key=lambda t: t.parameter)


def test_dumps_is_deterministic():
    rs = build_root_system("G2")
    assert dumps(roots_payload(rs)) == dumps(roots_payload(build_root_system("G2")))
    assert dumps({"b": 1, "a": 2}).index('"a"') < dumps({"b": 1, "a": 2}).index('"b"')


def test_oracle_payload():
    data = _reparse(oracle_to_json(rank1_matrix_oracle(2)))
    assert data["passed"] is True
    assert data["kernel_weights"] == ["-3", "3"]
    assert data["dimension"] == 6


def test_oracle_reparse():
    report = rank1_matrix_oracle(3)
    assert oracle_from_json(_reparse(oracle_to_json(report))) == report


# ----------------------------------------------------------
# COMMAND PAYLOADS PARSE BACK
# ----------------------------------------------------------
def _payload(capsys, *argv):
    assert main(list(argv)) == 0
    out, _ = capsys.readouterr()
    return json.loads(out)


def test_roots_payload_rebuilds(capsys):
    data = _payload(capsys, "roots", "G2")
    rs = roots_from_json(data)
    assert roots_payload(rs) == data
    assert rs.positive_roots == build_root_system("G2").positive_roots


def test_roots_payload_mismatch():
    data = _reparse(roots_payload(build_root_system("B2")))
    data["rho"] = ["1", "2"]
    with pytest.raises(ValidationError):
        roots_from_json(data)


def test_weyl_payload_reparses(capsys):
    rs = build_root_system("G2")
    sub_system = validate_subsystem(rs, [[1, 0], [3, 2]])
    parsed = weyl_elements_from_json(rs, _payload(capsys, "weyl", "G2", "1,0;3,2"))
    expected = coset_representatives(rs, sub_system)
    assert parsed == expected
    assert [w.word for w in parsed] == [w.word for w in expected]


def test_char_payload_reparses(capsys):
    rs = build_root_system("B2")
    data = _payload(capsys, "char", "B2", "1,1")
    assert character_from_json(data["character"]) == irreducible_character(rs, (1, 1))


def test_spin_payload_reparses(capsys):
    rs = build_root_system("B2")
    sub_system = validate_subsystem(rs, [[1, 0]])
    pair, tf = spin_from_json(_payload(capsys, "spin", "B2", "1,0"))
    assert pair == spin_characters(rs, sub_system)
    assert tf == transfer_factor(rs, sub_system)


def test_index_payload_reparses(capsys):
    rs = build_root_system("A2")
    levi = validate_subsystem(rs, [[1, 0]])
    lam = (Fraction(1), Fraction(1))
    data = _payload(capsys, "index", "A2", "1,0", "1,1")
    parsed = index_from_json(rs, data)
    assert index_report(**parsed) == data
    assert parsed["lam"] == lam
    assert parsed["index"] == dirac_index(rs, levi, lam).decomposition
    assert parsed["kostant"] == kostant_hd(rs, levi, lam)
    assert parsed["kernel"] == kernel_types(dsquared_spectrum(rs, levi, lam))


def test_hd_payload_reparses(capsys):
    rs = build_root_system("B2")
    sub_system = validate_subsystem(rs, [[1, 0], [1, 2]])
    lam = (Fraction(1), Fraction(1))
    data = _payload(capsys, "hd", "B2", "1,0;1,2", "1,1")
    components = kostant_hd(rs, sub_system, lam)
    assert kostant_from_json(rs, data["kostant"]) == components
    assert conjugacy_from_json(rs, data["infinitesimal_character"]) == check_infinitesimal_character(
        rs, sub_system, lam, components
    )


def test_spectrum_payload_reparses(capsys):
    rs = build_root_system("A1")
    torus = validate_subsystem(rs, [])
    data = _payload(capsys, "spectrum", "A1", "", "1")
    entries = dsquared_spectrum(rs, torus, (Fraction(1),))
    assert spectrum_from_json(data["spectrum"]) == entries
    assert spectrum_from_json(data["kernel"]) == kernel_types(entries)


def test_lift_payload_reparses(capsys):
    datum = build_endoscopic_datum("C2", [[1, 0]], [[0, 1], [2, 1]])
    lam = (Fraction(1), Fraction(1))
    data = _payload(capsys, "lift", "C2", "1,0", "0,1;2,1", "1,1")
    assert lift_from_json(data["terms"]) == lift_terms_sorted(lift_discrete_series(datum, lam))
    assert lift_check_from_json(data["check"]) == verify_lift_identity(datum, lam)
