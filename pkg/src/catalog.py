"""
catalog.py
----------
Loading the catalog of (g, r) pairs and endoscopic data.

Schema:
    {
      "pairs":     [{"type": "A2", "subsystem": [[1, 0]]}, ...],
      "endoscopy": [{"type": "C2", "k_simple": [[1, 0]], "h_simple": [[0, 1], [2, 1]], "sign_q": 1}, ...],
      "caps":      {"max_rank": 6, "max_weyl_order": 200000, "max_terms": 1000000},   (optional)
      "seed":      7                                                                   (optional)
    }
"""

import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

import pandas as pd

from src.config import DEFAULT_CAPS, DEFAULT_SEED, Caps
from src.errors import ValidationError
from src.lifting import EndoscopicDatum, build_endoscopic_datum
from src.rootsys import RootSubsystem, RootSystem, build_root_system, validate_subsystem
from src.validate import CAP_KEYS, validate_catalog


@dataclass(frozen=True)
class CatalogPair:
    label: str
    rs: RootSystem
    sub: RootSubsystem


@dataclass(frozen=True)
class Catalog:
    pairs: Tuple[CatalogPair, ...]
    endoscopy: Tuple[EndoscopicDatum, ...]
    caps: Caps
    seed: int
    issues: pd.DataFrame


def load_catalog(path) -> Dict[str, Any]:
    """
    Load a catalog JSON file.

    - Raises FileNotFoundError if the file doesn't exist.
    - Raises ValueError if the file exists but is empty or not JSON.
    """
    path = Path(path)

    if not path.exists():
        raise FileNotFoundError(f"Catalog file not found: {path}")

    text = path.read_text(encoding="utf-8")
    if not text.strip():
        raise ValueError(f"Catalog file '{path}' is empty.")

    try:
        raw = json.loads(text)
    except json.JSONDecodeError as e:
        raise ValueError(f"Failed to read catalog file '{path}': {e}") from e

    return raw


def default_catalog_path() -> Path:
    """project_root / data / catalog.json"""
    return Path(__file__).resolve().parents[1] / "data" / "catalog.json"


def load_default_catalog() -> Dict[str, Any]:
    return load_catalog(default_catalog_path())


def pair_label(type_name: str, subsystem: List[List[int]]) -> str:
    inner = ";".join(",".join(str(x) for x in vec) for vec in subsystem)
    return f"{type_name}/{{{inner}}}"


def _catalog_caps(raw: Dict[str, Any], overrides: Optional[Dict[str, int]]) -> Caps:
    """Defaults, then the catalog `caps` block, then command-line overrides."""
    caps = DEFAULT_CAPS
    given = raw.get("caps") if isinstance(raw, dict) else None
    if isinstance(given, dict):
        values = {
            k: v for k, v in given.items()
            if k in CAP_KEYS and isinstance(v, int) and not isinstance(v, bool) and v > 0
        }
        caps = caps.merged(**values)
    return caps.merged(**(overrides or {}))


def build_catalog(
    raw: Dict[str, Any],
    cap_overrides: Optional[Dict[str, int]] = None,
    verbose: bool = True,
) -> Catalog:
    """
    Validate a parsed catalog and build its root data. Any ERROR issue aborts
    with a ValidationError carrying every offending message.
    """
    caps = _catalog_caps(raw, cap_overrides)
    issues = validate_catalog(raw, caps=caps, verbose=verbose)
    errors = issues[issues["severity"] == "ERROR"] if not issues.empty else issues
    if not errors.empty:
        lines = [f"{row['entry'] or 'catalog'}: {row['message']}" for _, row in errors.iterrows()]
        raise ValidationError("Invalid catalog:\n  " + "\n  ".join(lines))

    pairs = []
    for item in raw["pairs"]:
        rs = build_root_system(item["type"], caps)
        sub_system = validate_subsystem(rs, item["subsystem"])
        pairs.append(CatalogPair(label=pair_label(rs.name, item["subsystem"]), rs=rs, sub=sub_system))

    endoscopy = [
        build_endoscopic_datum(item["type"], item["k_simple"], item["h_simple"], item.get("sign_q"), caps)
        for item in raw.get("endoscopy", [])
    ]

    if verbose:
        print(f"[catalog] Loaded {len(pairs)} pairs and {len(endoscopy)} endoscopic data", file=sys.stderr)

    return Catalog(
        pairs=tuple(pairs),
        endoscopy=tuple(endoscopy),
        caps=caps,
        seed=int(raw.get("seed", DEFAULT_SEED)),
        issues=issues,
    )
