"""
serialize.py
------------
JSON payloads for every computation.

Rules:
- rationals are lowest-terms strings ("p" or "p/q")
- characters are lists of {"weight", "mult"} sorted by weight
- lift terms are sorted by parameter
- every `*_to_json` / payload builder has a `*_from_json` inverse; Weyl words
  need the root system they index into
- `dumps` sorts keys, so identical inputs give byte-identical output
"""

import json
from typing import Any, Dict, List, Sequence, Tuple

from src.charring import FormalCharacter, VirtualDecomposition
from src.config import DEFAULT_CAPS, Caps
from src.dirac import ConjugacyReport, KostantComponent, OracleReport, SpectrumEntry
from src.errors import ValidationError
from src.lifting import LiftCheck, LiftTerm, lift_terms_sorted
from src.rootsys import RootData, RootSystem, WeylElement, build_root_system
from src.spinmod import SpinPair
from src.weights import format_rational, parse_rational, weight_from_strings, weight_to_strings


def dumps(payload: Any) -> str:
    return json.dumps(payload, sort_keys=True, indent=2)


# ----------------------------------------------------------
# BUILDING BLOCKS
# ----------------------------------------------------------
def character_to_json(chi: FormalCharacter) -> List[Dict[str, Any]]:
    return [{"weight": weight_to_strings(w), "mult": c} for w, c in chi.items()]


def character_from_json(items: Sequence[Dict[str, Any]]) -> FormalCharacter:
    return FormalCharacter({weight_from_strings(item["weight"]): int(item["mult"]) for item in items})


def decomposition_to_json(dec: VirtualDecomposition) -> List[Dict[str, Any]]:
    return [{"weight": weight_to_strings(w), "coeff": c} for w, c in dec.components]


def decomposition_from_json(items: Sequence[Dict[str, Any]]) -> VirtualDecomposition:
    return VirtualDecomposition(tuple((weight_from_strings(item["weight"]), int(item["coeff"])) for item in items))


def weyl_element_to_json(w: WeylElement) -> Dict[str, Any]:
    # word letters are 1-based, matching s1, s2, ...
    return {
        "word": [i + 1 for i in w.word],
        "length": w.length,
        "det": w.det,
        "matrix": [[int(x) for x in row] for row in w.matrix],
    }


def weyl_element_from_json(system: RootData, item: Dict[str, Any]) -> WeylElement:
    return system.element_from_word(tuple(i - 1 for i in item["word"]))


# ----------------------------------------------------------
# PAYLOADS
# ----------------------------------------------------------
def roots_payload(rs: RootSystem) -> Dict[str, Any]:
    return {
        "type": rs.name,
        "rank": rs.rank,
        "cartan_matrix": [[int(x) for x in row] for row in rs.cartan_matrix],
        "root_lengths": [format_rational(d) for d in rs.root_lengths],
        "gram": [[format_rational(x) for x in row] for row in rs.gram],
        "positive_roots": [list(rc) for rc in rs.positive_root_coords],
        "positive_roots_omega": [weight_to_strings(a) for a in rs.positive_roots],
        "rho": weight_to_strings(rs.rho),
        "weyl_order": rs.weyl_order,
    }


def roots_from_json(payload: Dict[str, Any], caps: Caps = DEFAULT_CAPS) -> RootSystem:
    """Rebuild the system named by `type`; the rest of the payload must match it."""
    rs = build_root_system(payload["type"], caps)
    if roots_payload(rs) != payload:
        raise ValidationError(f"Root data payload does not match a rebuilt {rs.name}")
    return rs


def weyl_payload(system_name: str, elements: Sequence[WeylElement], coset: bool) -> Dict[str, Any]:
    return {
        "system": system_name,
        "kind": "coset_representatives" if coset else "weyl_group",
        "order": len(elements),
        "elements": [weyl_element_to_json(w) for w in elements],
    }


def weyl_elements_from_json(system: RootData, payload: Dict[str, Any]) -> List[WeylElement]:
    return [weyl_element_from_json(system, item) for item in payload["elements"]]


def spin_payload(pair: SpinPair, transfer: FormalCharacter) -> Dict[str, Any]:
    return {
        "s_plus": character_to_json(pair.s_plus),
        "s_minus": character_to_json(pair.s_minus),
        "rho_n": weight_to_strings(pair.rho_n),
        "pos_noncompact": [weight_to_strings(a) for a in pair.pos_noncompact],
        "transfer_factor": character_to_json(transfer),
    }


def spin_from_json(payload: Dict[str, Any]) -> Tuple[SpinPair, FormalCharacter]:
    pair = SpinPair(
        s_plus=character_from_json(payload["s_plus"]),
        s_minus=character_from_json(payload["s_minus"]),
        rho_n=weight_from_strings(payload["rho_n"]),
        pos_noncompact=tuple(weight_from_strings(a) for a in payload["pos_noncompact"]),
    )
    return pair, character_from_json(payload["transfer_factor"])


def kostant_to_json(components: Sequence[KostantComponent]) -> List[Dict[str, Any]]:
    return [
        {"mu": weight_to_strings(c.mu), "parity": c.parity, "w": weyl_element_to_json(c.w)}
        for c in components
    ]


def kostant_from_json(system: RootData, items: Sequence[Dict[str, Any]]) -> List[KostantComponent]:
    return [
        KostantComponent(
            w=weyl_element_from_json(system, item["w"]),
            mu=weight_from_strings(item["mu"]),
            parity=int(item["parity"]),
        )
        for item in items
    ]


def spectrum_to_json(entries: Sequence[SpectrumEntry]) -> List[Dict[str, Any]]:
    return [
        {"mu": weight_to_strings(e.mu), "mult": e.mult, "eigenvalue": format_rational(e.eigenvalue)}
        for e in entries
    ]


def spectrum_from_json(items: Sequence[Dict[str, Any]]) -> List[SpectrumEntry]:
    return [
        SpectrumEntry(
            mu=weight_from_strings(item["mu"]),
            mult=int(item["mult"]),
            eigenvalue=parse_rational(item["eigenvalue"]),
        )
        for item in items
    ]


def conjugacy_to_json(report: ConjugacyReport) -> Dict[str, Any]:
    return {
        "passed": report.passed,
        "witnesses": [{"mu": weight_to_strings(mu), "w": weyl_element_to_json(w)} for mu, w in report.witnesses],
        "failures": [weight_to_strings(mu) for mu in report.failures],
    }


def conjugacy_from_json(system: RootData, item: Dict[str, Any]) -> ConjugacyReport:
    return ConjugacyReport(
        witnesses=tuple(
            (weight_from_strings(w["mu"]), weyl_element_from_json(system, w["w"])) for w in item["witnesses"]
        ),
        failures=tuple(weight_from_strings(mu) for mu in item["failures"]),
    )


def index_report(
    pair: str,
    lam,
    index: VirtualDecomposition,
    kostant: Sequence[KostantComponent],
    kernel: Sequence[SpectrumEntry],
    agreements: Dict[str, bool],
) -> Dict[str, Any]:
    return {
        "pair": pair,
        "lambda": weight_to_strings(lam),
        "index": decomposition_to_json(index),
        "kostant": kostant_to_json(kostant),
        "kernel": spectrum_to_json(kernel),
        "agreements": dict(agreements),
    }


def index_from_json(system: RootData, payload: Dict[str, Any]) -> Dict[str, Any]:
    """The keyword arguments of `index_report`, parsed back."""
    return {
        "pair": payload["pair"],
        "lam": weight_from_strings(payload["lambda"]),
        "index": decomposition_from_json(payload["index"]),
        "kostant": kostant_from_json(system, payload["kostant"]),
        "kernel": spectrum_from_json(payload["kernel"]),
        "agreements": {k: bool(v) for k, v in payload["agreements"].items()},
    }


def lift_to_json(terms: Sequence[LiftTerm]) -> List[Dict[str, Any]]:
    return [{"sign": t.sign, "parameter": weight_to_strings(t.parameter)} for t in lift_terms_sorted(terms)]


def lift_from_json(items: Sequence[Dict[str, Any]]) -> List[LiftTerm]:
    return [LiftTerm(sign=int(item["sign"]), parameter=weight_from_strings(item["parameter"])) for item in items]


def lift_check_to_json(check: LiftCheck) -> Dict[str, Any]:
    return {
        "parameter": weight_to_strings(check.parameter),
        "holds": check.holds,
        "lhs_terms": check.lhs_terms,
        "rhs_terms": check.rhs_terms,
        "coset_size": check.coset_size,
        "sign_q": check.sign_q,
    }


def lift_check_from_json(item: Dict[str, Any]) -> LiftCheck:
    return LiftCheck(
        parameter=weight_from_strings(item["parameter"]),
        holds=bool(item["holds"]),
        lhs_terms=int(item["lhs_terms"]),
        rhs_terms=int(item["rhs_terms"]),
        coset_size=int(item["coset_size"]),
        sign_q=int(item["sign_q"]),
    )


def oracle_to_json(report: OracleReport) -> Dict[str, Any]:
    return {
        "n": report.n,
        "dimension": report.dimension,
        "clifford_ok": report.clifford_ok,
        "casimir_formula_ok": report.casimir_formula_ok,
        "d_squared_diagonal": report.d_squared_diagonal,
        "eigenvalues": [format_rational(x) for x in report.eigenvalues],
        "spectrum_ok": report.spectrum_ok,
        "kernel_dimension": report.kernel_dimension,
        "kernel_weights": [format_rational(x) for x in report.kernel_weights],
        "kernel_ok": report.kernel_ok,
        "kostant_ok": report.kostant_ok,
        "notes": list(report.notes),
        "passed": report.passed,
    }


def oracle_from_json(item: Dict[str, Any]) -> OracleReport:
    return OracleReport(
        n=int(item["n"]),
        dimension=int(item["dimension"]),
        clifford_ok=bool(item["clifford_ok"]),
        casimir_formula_ok=bool(item["casimir_formula_ok"]),
        d_squared_diagonal=bool(item["d_squared_diagonal"]),
        eigenvalues=tuple(parse_rational(x) for x in item["eigenvalues"]),
        spectrum_ok=bool(item["spectrum_ok"]),
        kernel_dimension=int(item["kernel_dimension"]),
        kernel_weights=tuple(parse_rational(x) for x in item["kernel_weights"]),
        kernel_ok=bool(item["kernel_ok"]),
        kostant_ok=bool(item["kostant_ok"]),
        notes=tuple(item["notes"]),
    )
