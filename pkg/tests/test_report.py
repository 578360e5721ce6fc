# tests/test_report.py

import json
from fractions import Fraction

import pandas as pd

from src.charring import FormalCharacter
from src.report import RunReport, render_character, render_report_text, write_checks_csv, write_report
from src.verify import CHECK_COLUMNS


def _sample_checks():
    return pd.DataFrame(
        [
            {"suite": "identities", "check": "weyl_order", "subject": "A2", "input": "",
             "passed": True, "severity": "ERROR", "detail": ""},
            {"suite": "identities", "check": "kernel_multiplicity_one", "subject": "A2/{}", "input": "[1,1]",
             "passed": False, "severity": "REPORT", "detail": "[0,0]:2"},
            {"suite": "lifting", "check": "lift_identity", "subject": "C2", "input": "[1,1]",
             "passed": False, "severity": "ERROR", "detail": "mock failure"},
        ],
        columns=CHECK_COLUMNS,
    )


def test_summary_counts_failures_and_reports():
    report = RunReport(command=["verify", "catalog.json"], seed=7, checks=_sample_checks())

    assert report.summary() == {"checks": 3, "failed": 1, "reported": 1}
    assert not report.passed


def test_report_without_checks_passes():
    report = RunReport(command=["roots", "A2"])
    assert report.passed
    assert report.summary() == {"checks": 0, "failed": 0, "reported": 0}
    assert report.to_dict()["checks"] == []


def test_to_dict_is_deterministic():
    report = RunReport(command=["verify"], seed=7, checks=_sample_checks(), wall_time=1.25)

    data = report.to_dict()
    assert "wall_time" not in data
    assert data == RunReport(command=["verify"], seed=7, checks=_sample_checks(), wall_time=9.0).to_dict()
    assert data["checks"][0]["check"] == "weyl_order"
    assert report.to_dict(include_wall_time=True)["wall_time"] == 1.25


def test_render_report_text():
    text = render_report_text(RunReport(command=["verify", "x.json"], seed=3, checks=_sample_checks()))

    assert "Seed: 3" in text
    assert "[lifting] lift_identity: 0/1 passed" in text
    assert "- lift_identity on C2 [1,1]: mock failure" in text
    assert text.endswith("FAILED")


def test_render_character():
    chi = FormalCharacter({(Fraction(1, 2),): 1, (Fraction(-1, 2),): -1})
    assert render_character(chi) == "-1 · e^[-1/2] + 1 · e^[1/2]"
    assert render_character(FormalCharacter()) == "0"


def test_write_report_and_checks(tmp_path):
    report = RunReport(command=["verify"], seed=7, checks=_sample_checks(), wall_time=0.5)

    json_path = write_report(report, tmp_path / "out" / "report.json")
    csv_path = write_checks_csv(report, tmp_path / "out" / "checks.csv")

    data = json.loads(json_path.read_text())
    assert data["wall_time"] == 0.5
    assert data["summary"]["failed"] == 1
    assert list(pd.read_csv(csv_path).columns) == CHECK_COLUMNS
