"""
verify.py
---------
Acceptance suites over a catalog.

Suites:
- identities : root data, character ring, transfer factors, Dirac index / Kostant / kernel
- lifting    : endoscopic lifting identity on seeded random and limit parameters
- oracle     : rank-1 explicit Dirac matrices

Every check is a record {suite, check, subject, input, passed, severity, detail};
a failed identity is data, never an exception. Records with severity "REPORT"
are measurements and do not fail the run.
"""

import json
import sys
from typing import Dict, List, Optional, Sequence

import numpy as np
import pandas as pd

from src.catalog import Catalog, CatalogPair
from src.charring import (
    FormalCharacter,
    decompose,
    irreducible_character,
    multiply,
    weyl_denominator,
    weyl_dimension,
    weyl_numerator,
)
from src.config import LIFT_TRIALS, LIMIT_TRIALS, ORACLE_RANGE, RANDOM_CHARACTER_TRIALS
from src.dirac import (
    check_infinitesimal_character,
    dirac_index,
    dirac_inequality,
    dsquared_spectrum,
    kernel_types,
    kostant_hd,
    kostant_index,
    rank1_matrix_oracle,
)
from src.lifting import (
    EndoscopicDatum,
    discrete_series_dirac_cohomology,
    finite_dim_lift,
    lift_discrete_series,
    limit_parameters,
    random_parameters,
    verify_lift_identity,
)
from src.rootsys import (
    RootData,
    RootSystem,
    coset_representatives,
    dominant_conjugate,
    enumerate_weyl,
    inversion_count,
    validate_subsystem,
)
from src.serialize import oracle_to_json
from src.spinmod import noncompact_positive_roots, spin_characters, transfer_factor
from src.weights import add, format_weight, make_weight, zero_weight

SUITES = ("identities", "lifting", "oracle")
CHECK_COLUMNS = ["suite", "check", "subject", "input", "passed", "severity", "detail"]


class CheckLog:
    """Collects check records."""

    def __init__(self):
        self.records: List[dict] = []
        self.counters: Dict[str, int] = {}

    def record(
        self,
        suite: str,
        check: str,
        subject: str,
        passed: bool,
        *,
        input: str = "",
        detail: str = "",
        severity: str = "ERROR",
    ):
        self.records.append(
            {
                "suite": suite,
                "check": check,
                "subject": subject,
                "input": input,
                "passed": bool(passed),
                "severity": severity,
                "detail": detail,
            }
        )

    def count(self, key: str, amount: int = 1):
        self.counters[key] = self.counters.get(key, 0) + amount

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(self.records, columns=CHECK_COLUMNS)


def sample_weights(rs: RootSystem):
    """0, every fundamental weight and rho."""
    return [zero_weight(rs.rank)] + list(rs.fundamental_weights) + [rs.rho]


# ----------------------------------------------------------
# 1. ROOT DATA AND CHARACTER RING
# ----------------------------------------------------------
def check_root_system(log: CheckLog, rs: RootSystem):
    suite = "identities"
    elements = enumerate_weyl(rs)
    log.count("weyl_elements", len(elements))
    log.record(suite, "weyl_order", rs.name, len(elements) == rs.weyl_order,
               detail=f"enumerated {len(elements)}, expected {rs.weyl_order}")

    if rs.rank <= 4:
        bad = [w for w in elements if inversion_count(rs, w) != w.length or w.det != (-1) ** w.length]
        log.record(suite, "length_and_det", rs.name, not bad,
                   detail=f"{len(bad)} elements with length or det mismatch")

    images = {w.act(rs.rho) for w in elements}
    log.record(suite, "rho_regular", rs.name, len(images) == len(elements))

    for lam in sample_weights(rs):
        chi = irreducible_character(rs, lam)
        log.count("character_terms", len(chi))
        lhs = multiply(chi, weyl_numerator(rs, rs.rho), rs.caps)
        rhs = weyl_numerator(rs, add(lam, rs.rho))
        log.record(suite, "weyl_character_formula", rs.name, lhs == rhs, input=format_weight(lam))
        log.record(suite, "weyl_dimension", rs.name, chi.mass() == weyl_dimension(rs, lam),
                   input=format_weight(lam), detail=f"mass {chi.mass()}")
        log.record(suite, "character_invariance", rs.name, chi.is_invariant(rs), input=format_weight(lam))

    log.record(suite, "denominator_identity", rs.name, weyl_denominator(rs) == weyl_numerator(rs, rs.rho))


def _random_virtual(system: RootData, rng: np.random.Generator):
    expected: Dict = {}
    chi = FormalCharacter()
    for _ in range(int(rng.integers(1, 6))):
        coeff = int(rng.choice([-3, -2, -1, 1, 2, 3]))
        raw = make_weight(int(x) for x in rng.integers(-2, 3, size=system.rank))
        hw, _ = dominant_conjugate(system, raw)
        chi = chi + irreducible_character(system, hw) * coeff
        expected[hw] = expected.get(hw, 0) + coeff
    return chi, {w: c for w, c in expected.items() if c}


def check_random_decompositions(log: CheckLog, systems: Sequence[RootData], rng: np.random.Generator):
    for i in range(RANDOM_CHARACTER_TRIALS):
        system = systems[i % len(systems)]
        chi, expected = _random_virtual(system, rng)
        dec = decompose(chi, system)
        log.record("identities", "decompose_reconstruct", system.name, dec.as_multiset() == expected,
                   input=f"trial {i}", detail=f"{len(expected)} components")


def check_subsystem(log: CheckLog, pair: CatalogPair):
    suite = "identities"
    rs, sub_system = pair.rs, pair.sub

    reps = coset_representatives(rs, sub_system)
    log.record(suite, "coset_count", pair.label, len(reps) * sub_system.weyl_order == rs.weyl_order,
               detail=f"|W^1| = {len(reps)}, |W_r| = {sub_system.weyl_order}, |W| = {rs.weyl_order}")

    products = {w.key() for w in _factor_products(rs, sub_system, reps)}
    log.record(suite, "coset_factorization", pair.label, len(products) == rs.weyl_order)

    again = validate_subsystem(rs, [list(rc) for rc in sub_system.simple_root_coords])
    log.record(suite, "closure_idempotent", pair.label, again.root_set == sub_system.root_set)

    tf = transfer_factor(rs, sub_system)
    log.count("transfer_terms", len(tf))
    lhs = multiply(tf, weyl_numerator(sub_system, sub_system.rho), rs.caps)
    log.record(suite, "denominator_quotient", pair.label, lhs == weyl_numerator(rs, rs.rho))

    n_noncompact = len(noncompact_positive_roots(rs, sub_system))
    log.record(suite, "self_conjugacy_sign", pair.label, tf.conjugate() == tf * (-1) ** n_noncompact,
               detail=f"|Delta+(s)| = {n_noncompact}")

    spin = spin_characters(rs, sub_system)
    log.record(suite, "spin_mass", pair.label, (spin.s_plus + spin.s_minus).mass() == 2 ** n_noncompact)
    log.record(suite, "spin_invariance", pair.label,
               spin.s_plus.is_invariant(sub_system) and spin.s_minus.is_invariant(sub_system))

    trivial = dirac_inequality(rs, sub_system, rs.rho, zero_weight(rs.rank))
    log.record(suite, "dirac_inequality_trivial", pair.label, trivial.holds and trivial.equality,
               detail=f"lhs {trivial.lhs}, rhs {trivial.rhs}")

    for lam in sample_weights(rs):
        check_dirac(log, pair, lam)


def _factor_products(rs, sub_system, reps):
    return [u.compose(tau) for u in enumerate_weyl(sub_system) for tau in reps]


def check_dirac(log: CheckLog, pair: CatalogPair, lam):
    suite = "identities"
    rs, sub_system = pair.rs, pair.sub
    shown = format_weight(lam)

    index = dirac_index(rs, sub_system, lam).decomposition
    kostant = kostant_hd(rs, sub_system, lam)
    kostant_signed = kostant_index(kostant)
    log.record(suite, "index_equals_kostant", pair.label, index.as_multiset() == kostant_signed, input=shown,
               detail=f"{len(index)} index components, {len(kostant)} Kostant components")

    infinitesimal = [add(c.mu, sub_system.rho) for c in kostant]
    log.record(suite, "kostant_distinct", pair.label, len(set(infinitesimal)) == len(kostant), input=shown)

    spectrum = dsquared_spectrum(rs, sub_system, lam)
    kernel = kernel_types(spectrum)
    kernel_weights = {e.mu for e in kernel}
    log.record(suite, "kernel_contains_kostant", pair.label, set(kostant_signed) <= kernel_weights, input=shown)
    log.record(suite, "index_inside_kernel", pair.label, set(index.as_multiset()) <= kernel_weights, input=shown)

    multiplicities = {e.mu: e.mult for e in kernel}
    ones = all(m == 1 for m in multiplicities.values())
    log.record(suite, "kernel_multiplicity_one", pair.label, ones, input=shown, severity="REPORT",
               detail=", ".join(f"{format_weight(mu)}:{m}" for mu, m in sorted(multiplicities.items())))

    report = check_infinitesimal_character(rs, sub_system, lam, kernel)
    log.record(suite, "infinitesimal_character", pair.label, report.passed, input=shown,
               detail=f"{len(report.witnesses)} witnesses; failures {[format_weight(m) for m in report.failures]}")

    tf = transfer_factor(rs, sub_system)
    lifted = finite_dim_lift(rs, sub_system, lam).reconstruct(sub_system)
    log.record(suite, "finite_dim_lift_reconstruct", pair.label,
               lifted == multiply(irreducible_character(rs, lam), tf, rs.caps), input=shown)


# ----------------------------------------------------------
# 2. LIFTING
# ----------------------------------------------------------
def check_datum(log: CheckLog, datum: EndoscopicDatum, rng: np.random.Generator):
    suite = "lifting"
    expected_size = datum.k.weyl_order // datum.kh.weyl_order

    for p in random_parameters(datum, LIFT_TRIALS, rng):
        shown = format_weight(p.lam)
        check = verify_lift_identity(datum, p)
        log.count("lift_trials")
        log.record(suite, "lift_identity", datum.name, check.holds, input=shown,
                   detail=f"lhs {check.lhs_terms} terms, rhs {check.rhs_terms} terms, sign_q {check.sign_q}")
        terms = lift_discrete_series(datum, p)
        log.record(suite, "lift_size", datum.name, len(terms) == expected_size, input=shown)
        log.record(suite, "lift_distinct", datum.name, len({t.parameter for t in terms}) == len(terms), input=shown)
        hd = discrete_series_dirac_cohomology(datum, p)
        log.record(suite, "discrete_series_cohomology", datum.name, hd.conjugate_ok, input=shown,
                   detail=f"K-type {format_weight(hd.k_type)}")

    for p in limit_parameters(datum, LIMIT_TRIALS, rng):
        log.count("limit_trials")
        check = verify_lift_identity(datum, p)
        log.record(suite, "limit_identity", datum.name, check.holds, input=format_weight(p.lam))


# ----------------------------------------------------------
# 3. ORACLE
# ----------------------------------------------------------
def check_oracle(log: CheckLog):
    for n in ORACLE_RANGE:
        report = rank1_matrix_oracle(n)
        log.record("oracle", "rank1_matrix", "A1", report.passed, input=f"n={n}",
                   detail=json.dumps(oracle_to_json(report), sort_keys=True))


# ----------------------------------------------------------
# MAIN ORCHESTRATOR
# ----------------------------------------------------------
def run_verification(
    catalog: Catalog,
    suite: str = "all",
    seed: Optional[int] = None,
    verbose: bool = True,
) -> CheckLog:
    suites = SUITES if suite == "all" else (suite,)
    seed = catalog.seed if seed is None else seed
    rng = np.random.default_rng(seed)
    log = CheckLog()

    def say(message):
        if verbose:
            print(f"[verify] {message}", file=sys.stderr)

    for step, name in enumerate(suites, start=1):
        say(f"Step {step}/{len(suites)}: {name}")
        if name == "identities":
            systems = []
            for pair in catalog.pairs:
                if all(pair.rs.name != s.name for s in systems):
                    systems.append(pair.rs)
            for rs in systems:
                check_root_system(log, rs)
            check_random_decompositions(log, systems + [p.sub for p in catalog.pairs], rng)
            for pair in catalog.pairs:
                say(f"   {pair.label}")
                check_subsystem(log, pair)
        elif name == "lifting":
            for datum in catalog.endoscopy:
                say(f"   {datum.name}")
                check_datum(log, datum, rng)
        elif name == "oracle":
            check_oracle(log)

    failed = sum(1 for r in log.records if not r["passed"] and r["severity"] == "ERROR")
    say(f"{len(log.records)} checks, {failed} failed")
    return log
