"""
validate.py
-----------
Validation layer for catalog files.

Loading = make sure the file parses.
Validation = make sure every entry IS a valid pair or endoscopic datum.

This module checks:
- top-level schema / unknown keys
- pair entries (Cartan type, subsystem root vectors)
- endoscopy entries (k, h, sign_q)
- caps and seed
- duplicates
- the root combinatorics of every entry (re-validated, never trusted)
and returns a structured list/DataFrame of issues.
"""

import sys
from typing import Any, Dict, List, Optional

import pandas as pd

from src.config import DEFAULT_CAPS, Caps
from src.errors import DiracError, ValidationError
from src.rootsys import CartanType, build_root_system, validate_subsystem

ISSUE_COLUMNS = ["entry", "field", "severity", "code", "message"]

TOP_LEVEL_KEYS = {"pairs", "endoscopy", "caps", "seed"}
PAIR_KEYS = {"type", "subsystem"}
ENDOSCOPY_KEYS = {"type", "k_simple", "h_simple", "sign_q"}
CAP_KEYS = {"max_rank", "max_weyl_order", "max_terms"}


class CatalogValidator:
    """
    Performs structural and mathematical checks on a parsed catalog.

    Usage:
        validator = CatalogValidator()
        issues = validator.validate(raw)
    """

    def __init__(self, caps: Caps = DEFAULT_CAPS):
        # each issue is a dict: {entry, field, severity, code, message}
        self.errors: List[dict] = []
        self.caps = caps

    # ----------------------------------------------------------
    # Helper: record an issue
    # ----------------------------------------------------------
    def add_error(
        self,
        *,
        code: str,
        message: str,
        severity: str = "ERROR",
        entry: Optional[str] = None,
        field: Optional[str] = None,
    ):
        self.errors.append(
            {
                "entry": entry,
                "field": field,
                "severity": severity,
                "code": code,
                "message": message,
            }
        )

    # ----------------------------------------------------------
    # 1. TOP-LEVEL KEYS
    # ----------------------------------------------------------
    def check_top_level(self, raw: Dict[str, Any]):
        if not isinstance(raw, dict):
            self.add_error(code="NOT_AN_OBJECT", message="Catalog must be a JSON object")
            return

        for key in sorted(set(raw) - TOP_LEVEL_KEYS):
            self.add_error(code="UNKNOWN_KEY", message=f"Unknown top-level key: {key}", field=key)

        if "pairs" not in raw:
            self.add_error(code="MISSING_KEY", message="Missing required key: pairs", field="pairs")

        for key in ("pairs", "endoscopy"):
            if key in raw and not isinstance(raw[key], list):
                self.add_error(code="INVALID_LIST", message=f"'{key}' must be a list", field=key)

    # ----------------------------------------------------------
    # 2. ROOT VECTORS
    # ----------------------------------------------------------
    def _check_vectors(self, entry: str, field: str, vectors: Any, rank: int) -> bool:
        if not isinstance(vectors, list):
            self.add_error(code="INVALID_ROOT_VECTOR", message=f"'{field}' must be a list of vectors", entry=entry, field=field)
            return False
        ok = True
        for vec in vectors:
            if (
                not isinstance(vec, list)
                or len(vec) != rank
                or not all(isinstance(x, int) and not isinstance(x, bool) for x in vec)
            ):
                self.add_error(
                    code="INVALID_ROOT_VECTOR",
                    message=f"Root vector {vec!r} must be {rank} integers",
                    entry=entry,
                    field=field,
                )
                ok = False
        return ok

    def _parse_type(self, entry: str, value: Any) -> Optional[CartanType]:
        try:
            return CartanType.parse(value)
        except DiracError as e:
            self.add_error(code="INVALID_TYPE", message=str(e), entry=entry, field="type")
            return None

    def _check_keys(self, entry: str, item: Any, allowed: set, required: set) -> bool:
        if not isinstance(item, dict):
            self.add_error(code="NOT_AN_OBJECT", message=f"{entry} must be an object", entry=entry)
            return False
        for key in sorted(set(item) - allowed):
            self.add_error(code="UNKNOWN_KEY", message=f"Unknown key: {key}", entry=entry, field=key)
        missing = sorted(required - set(item))
        for key in missing:
            self.add_error(code="MISSING_KEY", message=f"Missing required key: {key}", entry=entry, field=key)
        return not missing

    # ----------------------------------------------------------
    # 3. PAIRS
    # ----------------------------------------------------------
    def check_pairs(self, raw: Dict[str, Any]):
        pairs = raw.get("pairs")
        if not isinstance(pairs, list):
            return

        for i, item in enumerate(pairs):
            entry = f"pairs[{i}]"
            if not self._check_keys(entry, item, PAIR_KEYS, PAIR_KEYS):
                continue
            cartan_type = self._parse_type(entry, item["type"])
            if cartan_type is None:
                continue
            if not self._check_vectors(entry, "subsystem", item["subsystem"], cartan_type.rank):
                continue
            try:
                rs = build_root_system(cartan_type, self.caps)
                validate_subsystem(rs, item["subsystem"])
            except ValidationError as e:
                self.add_error(code="INVALID_SUBSYSTEM", message=str(e), entry=entry, field="subsystem")

    # ----------------------------------------------------------
    # 4. ENDOSCOPY
    # ----------------------------------------------------------
    def check_endoscopy(self, raw: Dict[str, Any]):
        data = raw.get("endoscopy", [])
        if not isinstance(data, list):
            return

        for i, item in enumerate(data):
            entry = f"endoscopy[{i}]"
            if not self._check_keys(entry, item, ENDOSCOPY_KEYS, ENDOSCOPY_KEYS - {"sign_q"}):
                continue
            if item.get("sign_q", 1) not in (1, -1) or isinstance(item.get("sign_q"), bool):
                self.add_error(code="INVALID_SIGN", message=f"sign_q must be 1 or -1, got {item.get('sign_q')!r}", entry=entry, field="sign_q")
            cartan_type = self._parse_type(entry, item["type"])
            if cartan_type is None:
                continue
            ok = self._check_vectors(entry, "k_simple", item["k_simple"], cartan_type.rank)
            ok = self._check_vectors(entry, "h_simple", item["h_simple"], cartan_type.rank) and ok
            if not ok:
                continue
            try:
                rs = build_root_system(cartan_type, self.caps)
                validate_subsystem(rs, item["k_simple"], closure="roots")
            except ValidationError as e:
                self.add_error(code="INVALID_SUBSYSTEM", message=str(e), entry=entry, field="k_simple")
                continue
            try:
                validate_subsystem(rs, item["h_simple"], closure="either")
            except ValidationError as e:
                self.add_error(code="INVALID_SUBSYSTEM", message=str(e), entry=entry, field="h_simple")

    # ----------------------------------------------------------
    # 5. CAPS AND SEED
    # ----------------------------------------------------------
    def check_caps_and_seed(self, raw: Dict[str, Any]):
        caps = raw.get("caps")
        if caps is not None:
            if not isinstance(caps, dict):
                self.add_error(code="NOT_AN_OBJECT", message="'caps' must be an object", field="caps")
            else:
                for key in sorted(set(caps) - CAP_KEYS):
                    self.add_error(code="UNKNOWN_KEY", message=f"Unknown cap: {key}", entry="caps", field=key)
                for key in sorted(set(caps) & CAP_KEYS):
                    value = caps[key]
                    if not isinstance(value, int) or isinstance(value, bool) or value <= 0:
                        self.add_error(code="INVALID_CAP", message=f"Cap {key} must be a positive integer, got {value!r}", entry="caps", field=key)

        if "seed" in raw:
            seed = raw["seed"]
            if not isinstance(seed, int) or isinstance(seed, bool) or seed < 0:
                self.add_error(code="INVALID_SEED", message=f"seed must be a non-negative integer, got {seed!r}", field="seed")

    # ----------------------------------------------------------
    # 6. DUPLICATES
    # ----------------------------------------------------------
    def check_duplicates(self, raw: Dict[str, Any]):
        for key in ("pairs", "endoscopy"):
            items = raw.get(key)
            if not isinstance(items, list):
                continue
            seen = {}
            for i, item in enumerate(items):
                marker = repr(sorted(item.items())) if isinstance(item, dict) else repr(item)
                if marker in seen:
                    self.add_error(
                        code="DUPLICATE_ENTRY",
                        message=f"{key}[{i}] repeats {key}[{seen[marker]}]",
                        entry=f"{key}[{i}]",
                        severity="WARNING",
                    )
                else:
                    seen[marker] = i

    # ----------------------------------------------------------
    # 7. CATALOG-LEVEL CHECKS
    # ----------------------------------------------------------
    def check_catalog_level(self, raw: Dict[str, Any]):
        if isinstance(raw.get("pairs"), list) and not raw["pairs"]:
            self.add_error(code="EMPTY_CATALOG", message="Catalog has no pairs", field="pairs")

    # ----------------------------------------------------------
    # MAIN VALIDATION ORCHESTRATOR
    # ----------------------------------------------------------
    def validate(self, raw: Dict[str, Any]) -> List[dict]:
        self.errors = []

        self.check_top_level(raw)
        if not isinstance(raw, dict):
            return self.errors
        self.check_caps_and_seed(raw)
        self.check_pairs(raw)
        self.check_endoscopy(raw)
        self.check_duplicates(raw)
        self.check_catalog_level(raw)

        return self.errors


# ----------------------------------------------------------
# PIPELINE-FACING HELPER
# ----------------------------------------------------------
def validate_catalog(raw: Dict[str, Any], caps: Caps = DEFAULT_CAPS, verbose: bool = True) -> pd.DataFrame:
    """
    Wrapper for pipeline integration.
    Returns a DataFrame of catalog issues.
    """
    validator = CatalogValidator(caps)
    errors = validator.validate(raw)

    if not errors:
        if verbose:
            print("[validate] No catalog issues found", file=sys.stderr)
        return pd.DataFrame(columns=ISSUE_COLUMNS)

    errors_df = pd.DataFrame(errors, columns=ISSUE_COLUMNS)
    if verbose:
        print(f"[validate] Catalog validation completed with {len(errors_df)} issues.", file=sys.stderr)
    return errors_df
