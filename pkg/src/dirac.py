"""
dirac.py
--------
Dirac index, Kostant's Dirac cohomology, the D^2 spectrum and the rank-1 matrix
check.

For a finite-dimensional V_lam of g and an equal-rank subsystem r:

    index      = decompose(ch V_lam * (ch S+ - ch S-), r)
    H_D        = sum over w in W^1 of E_{w(lam+rho) - rho_r}, parity det(w)
    D^2 on the r-type E_mu of V_lam (x) S acts by
               B(mu+rho_r, mu+rho_r) - B(lam+rho, lam+rho)

The rank-1 check builds D for g = sl2, r = Cartan, as an explicit matrix with
sympy and compares it with the formulas above.
"""

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

import sympy as sp
from sympy.physics.quantum import TensorProduct

from src.charring import VirtualDecomposition, decompose, irreducible_character, multiply
from src.config import ORACLE_MAX_N
from src.errors import ConsistencyError, ResourceCapError, ValidationError
from src.rootsys import (
    RootSubsystem,
    RootSystem,
    WeylElement,
    build_root_system,
    coset_representatives,
    dominant_conjugate,
    inverse,
    validate_subsystem,
)
from src.spinmod import rho_n, spin_characters, transfer_factor
from src.weights import Weight, add, format_weight, make_weight, sub


# ----------------------------------------------------------
# RESULT TYPES
# ----------------------------------------------------------
@dataclass(frozen=True)
class KostantComponent:
    w: WeylElement
    mu: Weight
    parity: int


@dataclass(frozen=True)
class SpectrumEntry:
    mu: Weight
    mult: int
    eigenvalue: Fraction


@dataclass(frozen=True)
class DiracIndex:
    decomposition: VirtualDecomposition


@dataclass(frozen=True)
class ConjugacyReport:
    """Result of the infinitesimal-character check: witnesses w with w(lam+rho) = mu+rho_r."""

    witnesses: Tuple[Tuple[Weight, WeylElement], ...]
    failures: Tuple[Weight, ...]

    @property
    def passed(self) -> bool:
        return not self.failures


@dataclass(frozen=True)
class DiracInequality:
    Lambda: Weight
    mu: Weight
    w: WeylElement
    shifted: Weight
    lhs: Fraction
    rhs: Fraction
    equality: bool
    witness: Optional[WeylElement]

    @property
    def holds(self) -> bool:
        return self.lhs >= self.rhs


def _require_g_dominant(rs: RootSystem, lam: Weight):
    if len(lam) != rs.rank or not rs.is_dominant_integral(lam):
        raise ValidationError(f"Weight {format_weight(lam)} is not dominant integral for {rs.name}")


# ----------------------------------------------------------
# 1. INDEX
# ----------------------------------------------------------
def dirac_index(rs: RootSystem, sub_system: RootSubsystem, lam: Weight) -> DiracIndex:
    lam = make_weight(lam)
    _require_g_dominant(rs, lam)
    chi = multiply(irreducible_character(rs, lam), transfer_factor(rs, sub_system), rs.caps)
    return DiracIndex(decompose(chi, sub_system))


# ----------------------------------------------------------
# 2. KOSTANT'S DIRAC COHOMOLOGY
# ----------------------------------------------------------
def kostant_hd(rs: RootSystem, sub_system: RootSubsystem, lam: Weight) -> List[KostantComponent]:
    lam = make_weight(lam)
    _require_g_dominant(rs, lam)
    shifted = add(lam, rs.rho)
    components = []
    for w in coset_representatives(rs, sub_system):
        mu = sub(w.act(shifted), sub_system.rho)
        if not sub_system.is_dominant_integral(mu):
            raise ConsistencyError(f"Kostant weight {format_weight(mu)} is not dominant for {sub_system.name}")
        components.append(KostantComponent(w=w, mu=mu, parity=w.det))
    return components


def kostant_index(components: Sequence[KostantComponent]) -> Dict[Weight, int]:
    """The alternating sum of the Kostant components, as {mu: parity}."""
    return {c.mu: c.parity for c in components}


# ----------------------------------------------------------
# 3. D^2 SPECTRUM
# ----------------------------------------------------------
def dsquared_spectrum(rs: RootSystem, sub_system: RootSubsystem, lam: Weight) -> List[SpectrumEntry]:
    lam = make_weight(lam)
    _require_g_dominant(rs, lam)
    spin = spin_characters(rs, sub_system)
    chi = multiply(irreducible_character(rs, lam), spin.s_plus + spin.s_minus, rs.caps)
    decomposition = decompose(chi, sub_system)
    if not decomposition.is_genuine():
        raise ConsistencyError(f"V{format_weight(lam)} (x) S decomposed with a negative multiplicity over {sub_system.name}")

    top = rs.norm(add(lam, rs.rho))
    entries = []
    for mu, mult in decomposition.components:
        shifted = add(mu, sub_system.rho)
        entries.append(SpectrumEntry(mu=mu, mult=mult, eigenvalue=rs.norm(shifted) - top))
    return entries


def kernel_types(entries: Sequence[SpectrumEntry]) -> List[SpectrumEntry]:
    return [e for e in entries if e.eigenvalue == 0]


def kernel_multiplicities(rs: RootSystem, sub_system: RootSubsystem, lam: Weight) -> Dict[Weight, int]:
    """Multiplicity in V_lam (x) S of every r-type on which D^2 vanishes."""
    return {e.mu: e.mult for e in kernel_types(dsquared_spectrum(rs, sub_system, lam))}


# ----------------------------------------------------------
# 4. INFINITESIMAL CHARACTER
# ----------------------------------------------------------
def check_infinitesimal_character(
    rs: RootSystem,
    sub_system: RootSubsystem,
    lam: Weight,
    components: Sequence,
) -> ConjugacyReport:
    """
    For every component (anything with a `mu`), check mu + rho_r in W (lam + rho)
    and record the witness w with w(lam + rho) = mu + rho_r.
    """
    target = add(make_weight(lam), rs.rho)
    target_dom, t = dominant_conjugate(rs, target)
    witnesses = []
    failures = []
    for component in components:
        x = add(component.mu, sub_system.rho)
        dom, u = dominant_conjugate(rs, x)
        if dom != target_dom:
            failures.append(component.mu)
            continue
        witness = inverse(rs, u).compose(t)
        if witness.act(target) != x:
            failures.append(component.mu)
            continue
        witnesses.append((component.mu, witness))
    return ConjugacyReport(witnesses=tuple(witnesses), failures=tuple(failures))


def dirac_inequality(rs: RootSystem, sub_system: RootSubsystem, Lambda: Weight, mu: Weight) -> DiracInequality:
    """
    Equality case of the extended Dirac inequality: with w in W_r making
    mu - rho_n dominant, compare |w(mu - rho_n) + rho_r|^2 with |Lambda|^2 and
    test whether the shifted weight is W-conjugate to Lambda.
    """
    Lambda = make_weight(Lambda)
    mu = make_weight(mu)
    dom, w = dominant_conjugate(sub_system, sub(mu, rho_n(rs, sub_system)))
    shifted = add(dom, sub_system.rho)
    shifted_dom, u = dominant_conjugate(rs, shifted)
    lambda_dom, v = dominant_conjugate(rs, Lambda)
    equality = shifted_dom == lambda_dom
    witness = inverse(rs, u).compose(v) if equality else None
    return DiracInequality(
        Lambda=Lambda,
        mu=mu,
        w=w,
        shifted=shifted,
        lhs=rs.norm(shifted),
        rhs=rs.norm(Lambda),
        equality=equality,
        witness=witness,
    )


# ----------------------------------------------------------
# 5. RANK-1 MATRIX CHECK
# ----------------------------------------------------------
@dataclass(frozen=True)
class OracleReport:
    n: int
    dimension: int
    clifford_ok: bool
    casimir_formula_ok: bool
    d_squared_diagonal: bool
    eigenvalues: Tuple[Fraction, ...]
    spectrum_ok: bool
    kernel_dimension: int
    kernel_weights: Tuple[Fraction, ...]
    kernel_ok: bool
    kostant_ok: bool
    notes: Tuple[str, ...] = field(default=())

    @property
    def passed(self) -> bool:
        return (
            self.clifford_ok
            and self.casimir_formula_ok
            and self.d_squared_diagonal
            and self.spectrum_ok
            and self.kernel_ok
            and self.kostant_ok
        )


def _fraction(x) -> Fraction:
    x = sp.expand(x)
    if not x.is_Rational:
        raise ConsistencyError(f"Expected a rational entry, got {x}")
    return Fraction(int(x.p), int(x.q))


def _kron(a, b) -> sp.Matrix:
    return sp.Matrix(TensorProduct(a, b))


def _sl2_module(n: int):
    """h v_k = (n-2k) v_k, f v_k = v_{k+1}, e v_k = k(n-k+1) v_{k-1}."""
    dim = n + 1
    H = sp.diag(*[n - 2 * k for k in range(dim)])
    E = sp.zeros(dim, dim)
    F = sp.zeros(dim, dim)
    for k in range(dim):
        if k + 1 < dim:
            F[k + 1, k] = 1
        if k >= 1:
            E[k - 1, k] = k * (n - k + 1)
    return H, E, F


def rank1_matrix_oracle(n: int) -> OracleReport:
    """
    g = sl2 with B(h,h) = 2, B(e,f) = 1; r = Cartan; s = span(e, f).
    Orthonormal basis of s: Z1 = (e+f)/sqrt(2), Z2 = i(e-f)/sqrt(2).
    D = Z1 (x) Z1 + Z2 (x) Z2 acting on V_n (x) S, S the 2-dimensional Clifford
    module with u u' + u' u = -2 B(u, u').
    """
    if n < 0:
        raise ValidationError(f"n must be non-negative, got {n}")
    if n > ORACLE_MAX_N:
        raise ResourceCapError(f"n = {n} exceeds the matrix check bound {ORACLE_MAX_N}")

    H, E, F = _sl2_module(n)
    dim = n + 1
    one_v = sp.eye(dim)
    one_s = sp.eye(2)

    # Clifford module: e_C, f_C
    e_c = sp.Matrix([[0, 1], [0, 0]])
    f_c = sp.Matrix([[0, 0], [-2, 0]])
    clifford_ok = (
        e_c * e_c == sp.zeros(2, 2)
        and f_c * f_c == sp.zeros(2, 2)
        and e_c * f_c + f_c * e_c == -2 * one_s
    )

    root2 = sp.sqrt(2)
    z_v = [(E + F) / root2, sp.I * (E - F) / root2]
    z_c = [(e_c + f_c) / root2, sp.I * (e_c - f_c) / root2]
    D = (_kron(z_v[0], z_c[0]) + _kron(z_v[1], z_c[1])).applyfunc(sp.expand)

    # alpha(h) = -1/4 sum_j [h, Z_j] Z_j in C(s); [h, e] = 2e, [h, f] = -2f
    h_bracket = [(2 * e_c - 2 * f_c) / root2, sp.I * (2 * e_c + 2 * f_c) / root2]
    alpha_h = (-sp.Rational(1, 4) * (h_bracket[0] * z_c[0] + h_bracket[1] * z_c[1])).applyfunc(sp.expand)

    h_delta = _kron(H, one_s) + _kron(one_v, alpha_h)
    omega_g = E * F + F * E + H * H / 2
    omega_r = h_delta * h_delta / 2
    rho_norm = sp.Rational(1, 2)

    d_squared = (D * D).applyfunc(sp.expand)
    formula = (-_kron(omega_g, one_s) + omega_r - rho_norm * sp.eye(2 * dim)).applyfunc(sp.expand)
    casimir_formula_ok = d_squared == formula
    d_squared_diagonal = d_squared.is_diagonal()

    weights = [_fraction(h_delta[i, i]) for i in range(2 * dim)]
    eigenvalues = [_fraction(d_squared[i, i]) for i in range(2 * dim)]

    rs = build_root_system("A1")
    torus = validate_subsystem(rs, [])
    lam = (Fraction(n),)
    expected = Counter()
    for entry in dsquared_spectrum(rs, torus, lam):
        expected[(entry.mu[0], entry.eigenvalue)] += entry.mult
    observed = Counter(zip(weights, eigenvalues))
    spectrum_ok = d_squared_diagonal and observed == expected

    notes = []
    kernel = D.nullspace()
    kernel_weights = []
    for vec in kernel:
        image = h_delta * vec
        support = [i for i in range(2 * dim) if vec[i] != 0]
        c = h_delta[support[0], support[0]]
        if (image - c * vec).applyfunc(sp.expand) != sp.zeros(2 * dim, 1):
            notes.append(f"kernel vector {list(vec)} is not a weight vector")
            continue
        kernel_weights.append(_fraction(c))

    kernel_weights.sort()
    kernel_ok = len(kernel) == 2 and kernel_weights == [Fraction(-n - 1), Fraction(n + 1)]
    kostant = sorted(c.mu[0] for c in kostant_hd(rs, torus, lam))
    kostant_ok = kernel_weights == kostant

    return OracleReport(
        n=n,
        dimension=2 * dim,
        clifford_ok=bool(clifford_ok),
        casimir_formula_ok=bool(casimir_formula_ok),
        d_squared_diagonal=bool(d_squared_diagonal),
        eigenvalues=tuple(sorted(eigenvalues)),
        spectrum_ok=bool(spectrum_ok),
        kernel_dimension=len(kernel),
        kernel_weights=tuple(kernel_weights),
        kernel_ok=kernel_ok,
        kostant_ok=kostant_ok,
        notes=tuple(notes),
    )
