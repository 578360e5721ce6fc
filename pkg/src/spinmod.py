"""
spinmod.py
----------
Spin-module characters for s = g / r and the transfer factor.

Weights of S are rho_n minus subset sums of the positive roots of s. Instead of
enumerating subsets, both products

    P_sum  = prod (e^{alpha/2} + e^{-alpha/2})
    P_diff = prod (e^{alpha/2} - e^{-alpha/2})

are built factor by factor, and S+ = (P_sum + P_diff)/2, S- = (P_sum - P_diff)/2.
The empty subset (weight rho_n) is even, so it lies in S+.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

from src.charring import FormalCharacter, product
from src.rootsys import RootSubsystem, RootSystem, contains
from src.errors import ValidationError
from src.weights import Weight, neg, scale, sub, zero_weight


@dataclass(frozen=True)
class SpinPair:
    s_plus: FormalCharacter
    s_minus: FormalCharacter
    rho_n: Weight
    pos_noncompact: Tuple[Weight, ...]


def noncompact_positive_roots(rs: RootSystem, sub_system: RootSubsystem) -> List[Weight]:
    """Delta+(s) = Delta+(g) minus Delta+(r)."""
    if not contains(rs, sub_system):
        raise ValidationError(f"{sub_system.name} is not a subsystem of {rs.name}")
    return [a for a in rs.positive_roots if a not in sub_system.positive_root_set]


def rho_n(rs: RootSystem, sub_system: RootSubsystem) -> Weight:
    return sub(rs.rho, sub_system.rho)


def _binomials(roots: List[Weight], sign: int) -> List[FormalCharacter]:
    factors = []
    for alpha in roots:
        half = scale(Fraction(1, 2), alpha)
        factors.append(FormalCharacter({half: 1, neg(half): sign}))
    return factors


def spin_characters(rs: RootSystem, sub_system: RootSubsystem) -> SpinPair:
    noncompact = noncompact_positive_roots(rs, sub_system)
    p_sum = product(_binomials(noncompact, 1), rs.rank, rs.caps)
    p_diff = product(_binomials(noncompact, -1), rs.rank, rs.caps)
    return SpinPair(
        s_plus=(p_sum + p_diff).halve(),
        s_minus=(p_sum - p_diff).halve(),
        rho_n=rho_n(rs, sub_system),
        pos_noncompact=tuple(noncompact),
    )


def transfer_factor(rs: RootSystem, sub_system: RootSubsystem) -> FormalCharacter:
    """ch S+ - ch S- = prod_{alpha in Delta+(s)} (e^{alpha/2} - e^{-alpha/2})."""
    return product(_binomials(noncompact_positive_roots(rs, sub_system), -1), rs.rank, rs.caps)


def normalized_transfer_factor(rs: RootSystem, sub_system: RootSubsystem) -> FormalCharacter:
    """prod_{alpha in Delta+(s)} (1 - e^{-alpha}); transfer_factor = e^{rho_n} * this."""
    zero = zero_weight(rs.rank)
    factors = [FormalCharacter({zero: 1, neg(a): -1}) for a in noncompact_positive_roots(rs, sub_system)]
    return product(factors, rs.rank, rs.caps)
