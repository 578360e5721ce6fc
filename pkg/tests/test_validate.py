from src.validate import CatalogValidator, validate_catalog


def _codes(errors):
    return {e["code"] for e in errors}


def test_missing_and_unknown_keys():
    raw = {"pair": []}

    validator = CatalogValidator()
    errors = validator.validate(raw)

    assert any(e["code"] == "MISSING_KEY" and e["field"] == "pairs" for e in errors)
    assert any(e["code"] == "UNKNOWN_KEY" and e["field"] == "pair" for e in errors)


def test_not_an_object():
    errors = CatalogValidator().validate([1, 2, 3])
    assert _codes(errors) == {"NOT_AN_OBJECT"}


def test_invalid_cartan_type():
    raw = {"pairs": [{"type": "E9", "subsystem": []}]}

    errors = CatalogValidator().validate(raw)

    assert any(e["code"] == "INVALID_TYPE" and e["entry"] == "pairs[0]" for e in errors)


def test_root_vectors_must_be_integer_lists():
    raw = {
        "pairs": [
            {"type": "A2", "subsystem": [[1, 0, 0]]},
            {"type": "A2", "subsystem": [[1.5, 0]]},
            {"type": "A2", "subsystem": "1,0"},
        ]
    }

    errors = CatalogValidator().validate(raw)

    entries = {e["entry"] for e in errors if e["code"] == "INVALID_ROOT_VECTOR"}
    assert entries == {"pairs[0]", "pairs[1]", "pairs[2]"}


def test_subsystem_is_revalidated():
    raw = {"pairs": [{"type": "B2", "subsystem": [[0, 1], [1, 1]]}]}

    errors = CatalogValidator().validate(raw)

    assert any(e["code"] == "INVALID_SUBSYSTEM" and "not closed" in e["message"] for e in errors)


def test_endoscopy_entries():
    raw = {
        "pairs": [{"type": "C2", "subsystem": [[1, 0]]}],
        "endoscopy": [
            {"type": "C2", "k_simple": [[1, 0]], "h_simple": [[1, 0], [1, 1]], "sign_q": 3},
            {"type": "C2", "k_simple": [[1, 0], [1, 1]], "h_simple": []},
        ],
    }

    errors = CatalogValidator().validate(raw)

    assert any(e["code"] == "INVALID_SIGN" and e["entry"] == "endoscopy[0]" for e in errors)
    # the two short roots of C2 are not closed under addition
    assert any(e["code"] == "INVALID_SUBSYSTEM" and e["field"] == "k_simple" for e in errors)


def test_caps_seed_duplicates_and_empty():
    raw = {
        "pairs": [],
        "caps": {"max_rank": 0, "max_colour": 3},
        "seed": -1,
    }

    codes = _codes(CatalogValidator().validate(raw))

    assert {"INVALID_CAP", "UNKNOWN_KEY", "INVALID_SEED", "EMPTY_CATALOG"} <= codes


def test_duplicate_pairs_warn():
    raw = {"pairs": [{"type": "A2", "subsystem": [[1, 0]]}, {"type": "A2", "subsystem": [[1, 0]]}]}

    errors = CatalogValidator().validate(raw)

    assert [(e["code"], e["severity"]) for e in errors] == [("DUPLICATE_ENTRY", "WARNING")]


def test_no_errors_for_good_catalog():
    raw = {
        "pairs": [{"type": "G2", "subsystem": [[0, 1], [3, 1]]}],
        "endoscopy": [{"type": "C2", "k_simple": [[1, 0]], "h_simple": [[0, 1], [2, 1]], "sign_q": -1}],
        "seed": 3,
    }

    errors_df = validate_catalog(raw, verbose=False)
    assert errors_df.empty
