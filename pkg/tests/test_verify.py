# tests/test_verify.py

import pytest

from src.catalog import build_catalog, load_default_catalog
from src.verify import CHECK_COLUMNS, CheckLog, run_verification


@pytest.fixture(scope="module")
def default_catalog():
    return build_catalog(load_default_catalog(), verbose=False)


@pytest.fixture
def small_catalog():
    raw = {
        "pairs": [
            {"type": "A1", "subsystem": []},
            {"type": "A2", "subsystem": [[1, 0]]},
            {"type": "B2", "subsystem": [[1, 0], [1, 2]]},
        ],
        "endoscopy": [{"type": "C2", "k_simple": [[1, 0]], "h_simple": [[0, 1], [2, 1]]}],
        "seed": 5,
    }
    return build_catalog(raw, verbose=False)


def _errors(frame):
    return frame[(~frame["passed"]) & (frame["severity"] == "ERROR")]


def test_check_log_records_and_counts():
    log = CheckLog()
    log.record("identities", "weyl_order", "A2", True, detail="enumerated 6")
    log.count("weyl_elements", 6)
    log.count("weyl_elements", 2)

    frame = log.to_frame()
    assert list(frame.columns) == CHECK_COLUMNS
    assert frame.loc[0, "severity"] == "ERROR"
    assert log.counters == {"weyl_elements": 8}


def test_identities_suite_passes(small_catalog):
    frame = run_verification(small_catalog, suite="identities", verbose=False).to_frame()

    assert not frame.empty
    assert set(frame["suite"]) == {"identities"}
    assert _errors(frame).empty
    for check in ["weyl_character_formula", "coset_count", "index_equals_kostant", "decompose_reconstruct"]:
        assert check in set(frame["check"])


def test_lifting_suite_passes(small_catalog):
    log = run_verification(small_catalog, suite="lifting", verbose=False)
    frame = log.to_frame()

    assert _errors(frame).empty
    assert log.counters["lift_trials"] == 100
    assert log.counters["limit_trials"] == 10


def test_oracle_suite_passes(small_catalog):
    frame = run_verification(small_catalog, suite="oracle", verbose=False).to_frame()
    assert len(frame) == 6
    assert frame["passed"].all()


def test_runs_are_reproducible(small_catalog):
    a = run_verification(small_catalog, suite="lifting", seed=11, verbose=False).to_frame()
    b = run_verification(small_catalog, suite="lifting", seed=11, verbose=False).to_frame()
    assert a.equals(b)


def test_default_catalog_passes_every_suite(default_catalog):
    frame = run_verification(default_catalog, suite="all", verbose=False).to_frame()
    assert set(frame["suite"]) == {"identities", "lifting", "oracle"}
    assert _errors(frame).empty
