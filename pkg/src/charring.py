"""
charring.py
-----------
The formal character ring Z[weights].

A FormalCharacter is a finite map weight -> nonzero integer. Weights may have
rational (half-integral) coordinates, so spin weights and their shifts live in
the same ring.

This module provides:
- irreducible characters (Freudenthal, over dominant weights, then orbits)
- the Weyl dimension formula
- Weyl numerators and denominators
- decomposition of a virtual character into irreducibles of a (sub)system
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Mapping, Optional, Tuple

from src.config import CHARACTER_CACHE_SIZE, DEFAULT_CAPS, Caps
from src.errors import ConsistencyError, ResourceCapError, ValidationError
from src.rootsys import RootData, dominant_conjugate, weyl_orbit
from src.weights import Weight, add, format_weight, neg, scale, sub, zero_weight


# ----------------------------------------------------------
# FORMAL CHARACTERS
# ----------------------------------------------------------
class FormalCharacter:
    """Finite integer combination of formal exponentials e^mu."""

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Mapping[Weight, int]] = None):
        self.terms: Dict[Weight, int] = {}
        for w, c in (terms or {}).items():
            c = int(c)
            if c:
                self.terms[tuple(Fraction(x) for x in w)] = c

    @classmethod
    def monomial(cls, w: Weight, coeff: int = 1) -> "FormalCharacter":
        return cls({w: coeff})

    @classmethod
    def one(cls, rank: int) -> "FormalCharacter":
        return cls.monomial(zero_weight(rank))

    # ----- arithmetic -----
    def __add__(self, other: "FormalCharacter") -> "FormalCharacter":
        terms = dict(self.terms)
        for w, c in other.terms.items():
            terms[w] = terms.get(w, 0) + c
        return FormalCharacter(terms)

    def __neg__(self) -> "FormalCharacter":
        return FormalCharacter({w: -c for w, c in self.terms.items()})

    def __sub__(self, other: "FormalCharacter") -> "FormalCharacter":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return FormalCharacter({w: c * other for w, c in self.terms.items()})
        return multiply(self, other)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, FormalCharacter) and self.terms == other.terms

    __hash__ = None

    def __len__(self) -> int:
        return len(self.terms)

    def __repr__(self) -> str:
        body = " + ".join(f"{c}*e^{format_weight(w)}" for w, c in self.items())
        return f"FormalCharacter({body or '0'})"

    # ----- queries -----
    def coefficient(self, w: Weight) -> int:
        return self.terms.get(tuple(w), 0)

    def items(self) -> List[Tuple[Weight, int]]:
        """Terms sorted lexicographically by weight."""
        return sorted(self.terms.items())

    def support(self) -> List[Weight]:
        return sorted(self.terms)

    def mass(self) -> int:
        return sum(self.terms.values())

    def is_zero(self) -> bool:
        return not self.terms

    def conjugate(self) -> "FormalCharacter":
        """mu -> -mu"""
        return FormalCharacter({neg(w): c for w, c in self.terms.items()})

    def shift(self, w: Weight) -> "FormalCharacter":
        """Multiply by e^w."""
        return FormalCharacter({add(mu, w): c for mu, c in self.terms.items()})

    def halve(self) -> "FormalCharacter":
        odd = [w for w, c in self.terms.items() if c % 2]
        if odd:
            raise ConsistencyError(f"Character has odd coefficients at {[format_weight(w) for w in odd[:3]]}")
        return FormalCharacter({w: c // 2 for w, c in self.terms.items()})

    def is_invariant(self, system: RootData) -> bool:
        for i in range(len(system.simple_roots)):
            for w, c in self.terms.items():
                if self.coefficient(system.reflect_simple(w, i)) != c:
                    return False
        return True


def multiply(a: FormalCharacter, b: FormalCharacter, caps: Caps = DEFAULT_CAPS) -> FormalCharacter:
    """Convolution product e^mu * e^nu = e^(mu+nu); zero terms pruned."""
    if len(a) * len(b) > caps.max_terms:
        raise ResourceCapError(
            f"Character product of {len(a)} x {len(b)} terms exceeds the configured cap {caps.max_terms}"
        )
    terms: Dict[Weight, int] = {}
    for mu, c in a.terms.items():
        for nu, d in b.terms.items():
            w = add(mu, nu)
            terms[w] = terms.get(w, 0) + c * d
    return FormalCharacter(terms)


def product(factors: Iterable[FormalCharacter], rank: int, caps: Caps = DEFAULT_CAPS) -> FormalCharacter:
    result = FormalCharacter.one(rank)
    for f in factors:
        result = multiply(result, f, caps)
    return result


# ----------------------------------------------------------
# VIRTUAL DECOMPOSITIONS
# ----------------------------------------------------------
@dataclass(frozen=True)
class VirtualDecomposition:
    """sum coeff * ch E_hw, in the order the components were extracted."""

    components: Tuple[Tuple[Weight, int], ...]

    def __len__(self) -> int:
        return len(self.components)

    def as_multiset(self) -> Dict[Weight, int]:
        return dict(self.components)

    def reconstruct(self, system: RootData) -> FormalCharacter:
        total = FormalCharacter()
        for hw, coeff in self.components:
            total = total + irreducible_character(system, hw) * coeff
        return total

    def is_genuine(self) -> bool:
        return all(c > 0 for _, c in self.components)


# ----------------------------------------------------------
# IRREDUCIBLE CHARACTERS
# ----------------------------------------------------------
def _require_dominant_integral(system: RootData, lam: Weight):
    if len(lam) != system.rank:
        raise ValidationError(f"Weight {format_weight(lam)} has {len(lam)} coordinates, expected {system.rank}")
    if not system.is_dominant_integral(lam):
        pairings = [str(p) for p in system.simple_pairings(lam)]
        raise ValidationError(
            f"Weight {format_weight(lam)} is not dominant integral for {system.name} "
            f"(simple coroot pairings {pairings})"
        )


def _dominant_weights(system: RootData, lam: Weight) -> List[Weight]:
    """Dominant mu in lam - N(positive roots), ascending by depth (lam - mu, rho)."""
    found = {lam}
    frontier = [lam]
    while frontier:
        nxt = []
        for mu in frontier:
            for alpha in system.positive_roots:
                nu = sub(mu, alpha)
                if nu not in found and system.is_dominant(nu):
                    found.add(nu)
                    nxt.append(nu)
        frontier = nxt
    rho = system.rho
    return sorted(found, key=lambda mu: (system.pairing(sub(lam, mu), rho), mu))


@lru_cache(maxsize=CHARACTER_CACHE_SIZE)
def _dominant_multiplicities(system: RootData, lam: Weight) -> Tuple[Tuple[Weight, int], ...]:
    rho = system.rho
    lam_rho = add(lam, rho)
    top = system.pairing(lam_rho, lam_rho)
    dominant = _dominant_weights(system, lam)
    dominant_set = set(dominant)
    mult: Dict[Weight, int] = {}

    def lookup(nu: Weight) -> int:
        dom, _ = dominant_conjugate(system, nu)
        if dom not in dominant_set:
            return 0
        return mult.get(dom, 0)

    for mu in dominant:
        if mu == lam:
            mult[mu] = 1
            continue
        numerator = Fraction(0)
        for alpha in system.positive_roots:
            k = 1
            while True:
                nu = add(mu, scale(k, alpha))
                m = lookup(nu)
                if not m:
                    break
                numerator += m * system.pairing(nu, alpha)
                k += 1
        mu_rho = add(mu, rho)
        denominator = top - system.pairing(mu_rho, mu_rho)
        value = 2 * numerator / denominator
        if value.denominator != 1 or value < 0:
            raise ConsistencyError(f"Freudenthal multiplicity {value} at {format_weight(mu)} is not a natural number")
        if value:
            mult[mu] = int(value)
    return tuple(sorted(mult.items()))


def irreducible_character(system: RootData, lam: Weight) -> FormalCharacter:
    """
    Character of the irreducible module of highest weight lam for the system
    (g itself, or the reductive subalgebra of a subsystem). lam must pair to a
    non-negative integer with every simple coroot; coordinates in directions the
    system does not see are carried along unchanged.
    """
    lam = tuple(Fraction(x) for x in lam)
    _require_dominant_integral(system, lam)
    terms: Dict[Weight, int] = {}
    for mu, m in _dominant_multiplicities(system, lam):
        for nu in weyl_orbit(system, mu):
            terms[nu] = m
    return FormalCharacter(terms)


def weyl_dimension(system: RootData, lam: Weight) -> int:
    """prod_{alpha > 0} B(lam + rho, alpha) / B(rho, alpha)"""
    lam = tuple(Fraction(x) for x in lam)
    _require_dominant_integral(system, lam)
    lam_rho = add(lam, system.rho)
    value = Fraction(1)
    for alpha in system.positive_roots:
        value *= system.pairing(lam_rho, alpha) / system.pairing(system.rho, alpha)
    if value.denominator != 1:
        raise ConsistencyError(f"Weyl dimension {value} of {format_weight(lam)} is not an integer")
    return int(value)


# ----------------------------------------------------------
# NUMERATORS AND DENOMINATORS
# ----------------------------------------------------------
def _signed_orbit(system: RootData, dom: Weight) -> FormalCharacter:
    """sum_w det(w) e^{w dom} for a regular dominant weight (orbit has |W| points)."""
    cap = system.caps.max_weyl_order
    signs = {dom: 1}
    frontier = [dom]
    while frontier:
        nxt = []
        for x in frontier:
            for i in range(len(system.simple_roots)):
                y = system.reflect_simple(x, i)
                if y not in signs:
                    signs[y] = -signs[x]
                    nxt.append(y)
        if len(signs) > cap:
            raise ResourceCapError(f"Weyl orbit in {system.name} exceeds the configured cap {cap}")
        frontier = nxt
    return FormalCharacter(signs)


def weyl_numerator(system: RootData, lam: Weight) -> FormalCharacter:
    """
    sum_{w in W} det(w) e^{w lam}. lam need not be dominant; the result is zero
    exactly when lam is singular for the system.
    """
    lam = tuple(Fraction(x) for x in lam)
    dom, u = dominant_conjugate(system, lam)
    if any(p == 0 for p in system.simple_pairings(dom)):
        return FormalCharacter()
    return _signed_orbit(system, dom) * u.det


def weyl_denominator(system: RootData, normalized: bool = False) -> FormalCharacter:
    """
    prod_{alpha > 0} (e^{alpha/2} - e^{-alpha/2}), or with normalized=True
    prod_{alpha > 0} (1 - e^{-alpha}).
    """
    zero = zero_weight(system.rank)
    factors = []
    for alpha in system.positive_roots:
        if normalized:
            factors.append(FormalCharacter({zero: 1, neg(alpha): -1}))
        else:
            half = scale(Fraction(1, 2), alpha)
            factors.append(FormalCharacter({half: 1, neg(half): -1}))
    return product(factors, system.rank, system.caps)


# ----------------------------------------------------------
# DECOMPOSITION
# ----------------------------------------------------------
def decompose(chi: FormalCharacter, system: RootData) -> VirtualDecomposition:
    """
    Write a W-invariant virtual character as sum coeff * ch E_mu.

    The support weight maximizing B(mu + rho, mu + rho) (ties: the
    lexicographically largest) is always a highest weight; subtract its
    irreducible character and repeat.
    """
    rho = system.rho
    remaining = chi
    components: List[Tuple[Weight, int]] = []
    cap = max(1, len(chi)) * system.weyl_order
    steps = 0
    while not remaining.is_zero():
        steps += 1
        if steps > cap:
            raise ValidationError(f"Decomposition over {system.name} did not terminate: not a virtual character")

        def key(mu):
            shifted = add(mu, rho)
            return system.pairing(shifted, shifted), mu

        mu = max(remaining.terms, key=key)
        if not system.is_dominant_integral(mu):
            raise ValidationError(
                f"Extreme weight {format_weight(mu)} is not dominant for {system.name}: "
                "character is not in the character ring of the system"
            )
        coeff = remaining.terms[mu]
        remaining = remaining - irreducible_character(system, mu) * coeff
        components.append((mu, coeff))
    return VirtualDecomposition(tuple(components))
