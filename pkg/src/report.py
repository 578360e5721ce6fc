# src/report.py

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional

import pandas as pd

from src.charring import FormalCharacter
from src.verify import CHECK_COLUMNS
from src.weights import format_weight


@dataclass
class RunReport:
    """
    What one invocation did: the command, its check records (empty for single
    computations), counters, the seed and the wall time.
    """

    command: List[str]
    seed: Optional[int] = None
    checks: pd.DataFrame = field(default_factory=lambda: pd.DataFrame(columns=CHECK_COLUMNS))
    counters: Dict[str, int] = field(default_factory=dict)
    wall_time: float = 0.0
    payload: Any = None

    @property
    def failures(self) -> pd.DataFrame:
        if self.checks.empty:
            return self.checks
        mask = (~self.checks["passed"].astype(bool)) & (self.checks["severity"] == "ERROR")
        return self.checks[mask]

    @property
    def passed(self) -> bool:
        return self.failures.empty

    def summary(self) -> Dict[str, int]:
        n_reported = 0
        if not self.checks.empty:
            n_reported = int(((self.checks["severity"] == "REPORT") & ~self.checks["passed"].astype(bool)).sum())
        return {
            "checks": int(len(self.checks)),
            "failed": int(len(self.failures)),
            "reported": n_reported,
        }

    def to_dict(self, include_wall_time: bool = False) -> Dict[str, Any]:
        """
        Deterministic unless include_wall_time is set; standard output never
        includes it.
        """
        data: Dict[str, Any] = {
            "command": list(self.command),
            "seed": self.seed,
            "passed": self.passed,
            "summary": self.summary(),
            "counters": dict(sorted(self.counters.items())),
            "checks": json.loads(self.checks.to_json(orient="records")) if not self.checks.empty else [],
        }
        if self.payload is not None:
            data["payload"] = self.payload
        if include_wall_time:
            data["wall_time"] = round(self.wall_time, 3)
        return data


# ----------------------------------------------------------
# TEXT RENDERING
# ----------------------------------------------------------
def render_character(chi: FormalCharacter) -> str:
    """Sum of m · e^[w], sorted by weight."""
    if chi.is_zero():
        return "0"
    return " + ".join(f"{m} · e^{format_weight(w)}" for w, m in chi.items())


def render_report_text(report: RunReport) -> str:
    s = report.summary()
    lines = [
        "Verification Report",
        "",
        f"Command: {' '.join(report.command)}",
        f"Seed: {report.seed}",
        f"Checks: {s['checks']}",
        f"Failed: {s['failed']}",
        f"Reported (non-fatal): {s['reported']}",
    ]

    if report.counters:
        lines.append("")
        lines.extend(f"{key}: {value}" for key, value in sorted(report.counters.items()))

    if not report.checks.empty:
        lines.append("")
        grouped = report.checks.groupby(["suite", "check"], sort=True)["passed"].agg(["count", "sum"])
        for (suite, check), row in grouped.iterrows():
            lines.append(f"[{suite}] {check}: {int(row['sum'])}/{int(row['count'])} passed")

    if not report.failures.empty:
        lines.append("")
        lines.append("Failed checks:")
        for _, row in report.failures.iterrows():
            lines.append(f"- {row['check']} on {row['subject']} {row['input']}: {row['detail']}")

    lines.append("")
    lines.append("PASSED" if report.passed else "FAILED")
    return "\n".join(lines)


# ----------------------------------------------------------
# FILES
# ----------------------------------------------------------
def write_report(report: RunReport, output_path) -> Path:
    """Full report as JSON, wall time included."""
    output_path = Path(output_path)
    output_path.parent.mkdir(parents=True, exist_ok=True)
    output_path.write_text(json.dumps(report.to_dict(include_wall_time=True), sort_keys=True, indent=2), encoding="utf-8")
    return output_path


def write_checks_csv(report: RunReport, output_path) -> Path:
    output_path = Path(output_path)
    output_path.parent.mkdir(parents=True, exist_ok=True)
    report.checks.to_csv(output_path, index=False)
    return output_path
