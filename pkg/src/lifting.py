"""
lifting.py
----------
Endoscopic data and lifting of discrete-series parameters.

An endoscopic datum is three subsystems of one root system g sharing its
Cartan: the compact subsystem k, the endoscopic subsystem h and their
intersection kh. A Harish-Chandra parameter lam lifts to the signed family

    { (det w, w lam) : w in W_K^1 },   W_K^1 = minimal reps of W_{H cap K} \\ W_K

and the character identity is checked in division-free form:

    numerator(k, lam) = sum_{w in W_K^1} det(w) numerator(kh, w lam)
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Union

import numpy as np

from src.charring import FormalCharacter, VirtualDecomposition, weyl_numerator
from src.config import DEFAULT_CAPS, DEN_BOUND, NUM_BOUND, Caps
from src.dirac import dirac_index
from src.errors import ConsistencyError, ValidationError
from src.rootsys import (
    CartanType,
    RootSubsystem,
    RootSystem,
    WeylElement,
    build_root_system,
    coset_representatives,
    dominant_conjugate,
    subsystem_from_roots,
    validate_subsystem,
)
from src.weights import Weight, add, format_weight, make_weight, scale, sub


# ----------------------------------------------------------
# TYPES
# ----------------------------------------------------------
@dataclass(frozen=True, eq=False)
class EndoscopicDatum:
    g: RootSystem
    k: RootSubsystem
    h: RootSubsystem
    kh: RootSubsystem
    sign_q: int = 1

    @property
    def name(self) -> str:
        return f"{self.g.name}; k={self.k.name}; h={self.h.name}"


@dataclass(frozen=True)
class HCParameter:
    lam: Weight

    def singular_roots(self, system) -> List[Weight]:
        """Positive roots of the system whose coroot pairing with lam vanishes."""
        rs = system.ambient
        return [b for b in system.positive_roots if rs.coroot_pairing(self.lam, b) == 0]

    def is_regular_for(self, system) -> bool:
        return not self.singular_roots(system)


@dataclass(frozen=True)
class LiftTerm:
    sign: int
    parameter: Weight


@dataclass(frozen=True)
class LiftCheck:
    parameter: Weight
    holds: bool
    lhs_terms: int
    rhs_terms: int
    coset_size: int
    sign_q: int


@dataclass(frozen=True)
class DiscreteSeriesCohomology:
    """The K-type E_{w lam - rho_k} carrying the Dirac cohomology of the discrete series."""

    parameter: Weight
    w: WeylElement
    k_type: Weight
    conjugate_ok: bool


# ----------------------------------------------------------
# 1. DATA
# ----------------------------------------------------------
def build_endoscopic_datum(
    cartan_type: Union[CartanType, str],
    k_simple: Sequence[Sequence[int]],
    h_simple: Sequence[Sequence[int]],
    sign_q: Optional[int] = None,
    caps: Caps = DEFAULT_CAPS,
) -> EndoscopicDatum:
    sign_q = 1 if sign_q is None else int(sign_q)
    if sign_q not in (1, -1):
        raise ValidationError(f"sign_q must be +1 or -1, got {sign_q}")

    rs = build_root_system(cartan_type, caps)
    k = validate_subsystem(rs, k_simple, closure="roots")
    h = validate_subsystem(rs, h_simple, closure="either")
    kh = subsystem_from_roots(rs, k.root_set & h.root_set, closure="none")

    return EndoscopicDatum(g=rs, k=k, h=h, kh=kh, sign_q=sign_q)


def _as_parameter(param) -> HCParameter:
    if isinstance(param, HCParameter):
        return param
    return HCParameter(make_weight(param))


# ----------------------------------------------------------
# 2. LIFTING
# ----------------------------------------------------------
def lift_discrete_series(datum: EndoscopicDatum, param) -> List[LiftTerm]:
    param = _as_parameter(param)
    singular = param.singular_roots(datum.k)
    if singular:
        roots = [[int(x) for x in datum.g.to_root_coords(b)] for b in singular]
        raise ValidationError(
            f"Parameter {format_weight(param.lam)} is singular for the compact roots {roots}: "
            "the pairing with their coroots vanishes"
        )
    return [LiftTerm(sign=w.det, parameter=w.act(param.lam)) for w in coset_representatives(datum.k, datum.kh)]


def verify_lift_identity(datum: EndoscopicDatum, param) -> LiftCheck:
    param = _as_parameter(param)
    reps = coset_representatives(datum.k, datum.kh)
    lhs = weyl_numerator(datum.k, param.lam)
    rhs = FormalCharacter()
    for w in reps:
        rhs = rhs + weyl_numerator(datum.kh, w.act(param.lam)) * w.det
    return LiftCheck(
        parameter=param.lam,
        holds=lhs == rhs,
        lhs_terms=len(lhs),
        rhs_terms=len(rhs),
        coset_size=len(reps),
        sign_q=datum.sign_q,
    )


def finite_dim_lift(rs: RootSystem, sub_system: RootSubsystem, lam: Weight) -> VirtualDecomposition:
    """The lift of a finite-dimensional character is its Dirac index over the subsystem."""
    return dirac_index(rs, sub_system, lam).decomposition


def discrete_series_dirac_cohomology(datum: EndoscopicDatum, param) -> DiscreteSeriesCohomology:
    param = _as_parameter(param)
    if not param.is_regular_for(datum.k):
        raise ValidationError(f"Parameter {format_weight(param.lam)} is singular for {datum.k.name}")
    dom, w = dominant_conjugate(datum.k, param.lam)
    k_type = sub(dom, datum.k.rho)
    rs = datum.g
    conjugate_ok = dominant_conjugate(rs, add(k_type, datum.k.rho))[0] == dominant_conjugate(rs, param.lam)[0]
    return DiscreteSeriesCohomology(parameter=param.lam, w=w, k_type=k_type, conjugate_ok=conjugate_ok)


# ----------------------------------------------------------
# 3. TRIAL PARAMETERS
# ----------------------------------------------------------
def _random_weight(rank: int, rng: np.random.Generator) -> Weight:
    nums = rng.integers(-NUM_BOUND, NUM_BOUND + 1, size=rank)
    dens = rng.integers(1, DEN_BOUND + 1, size=rank)
    return tuple(Fraction(int(p), int(q)) for p, q in zip(nums, dens))


def random_parameters(datum: EndoscopicDatum, count: int, rng: np.random.Generator) -> List[HCParameter]:
    """W_K-regular rational parameters, numerators in [-12, 12], denominators in [1, 4]."""
    params = []
    attempts = 0
    while len(params) < count:
        attempts += 1
        if attempts > 1000 * max(count, 1):
            raise ConsistencyError(f"Could not draw {count} regular parameters for {datum.name}")
        p = HCParameter(_random_weight(datum.g.rank, rng))
        if p.is_regular_for(datum.k):
            params.append(p)
    return params


def limit_parameters(datum: EndoscopicDatum, count: int, rng: np.random.Generator) -> List[HCParameter]:
    """
    K-regular parameters on exactly one wall of g: a random weight projected
    onto the wall of a random noncompact positive root.
    """
    rs = datum.g
    noncompact = [b for b in rs.positive_roots if b not in datum.k.positive_root_set]
    if not noncompact:
        return []
    params = []
    attempts = 0
    while len(params) < count:
        attempts += 1
        if attempts > 1000 * max(count, 1):
            raise ConsistencyError(f"Could not draw {count} limit parameters for {datum.name}")
        lam = _random_weight(rs.rank, rng)
        beta = noncompact[int(rng.integers(0, len(noncompact)))]
        lam = sub(lam, scale(rs.coroot_pairing(lam, beta) / 2, beta))
        p = HCParameter(lam)
        if p.is_regular_for(datum.k) and len(p.singular_roots(rs)) == 1:
            params.append(p)
    return params


def lift_terms_sorted(terms: Sequence[LiftTerm]) -> List[LiftTerm]:
    return sorted(terms, key=lambda t: t.parameter)
