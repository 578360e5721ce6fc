"""
rootsys.py
----------
Root systems, Weyl groups and equal-rank root subsystems.

Conventions:
- every weight lives in the fundamental-weight (omega) basis of g, with
  exact `Fraction` coordinates;
- the Cartan matrix is C_ij = <alpha_j, alpha_i^vee>, so alpha_j in
  omega-coordinates is the j-th column of C;
- the invariant form B is scaled per simple factor so that long roots have
  squared length 2; on omega-coordinates its Gram matrix is D C^{-1} with
  D = diag(|alpha_i|^2 / 2);
- roots cross the CLI boundary in simple-root integer coordinates.

A RootSubsystem shares the Cartan of its ambient RootSystem, so the same
weights serve both; only the simple roots (and hence dominance, Weyl group,
rho) change.
"""

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from math import factorial
from typing import Dict, FrozenSet, List, Sequence, Tuple, Union

import numpy as np
import sympy as sp

from src.config import DEFAULT_CAPS, WEYL_CACHE_SIZE, Caps
from src.errors import CartanTypeError, ConsistencyError, ResourceCapError, ValidationError
from src.weights import Weight, add, neg, scale, sub

# minimum rank per series; E, F, G have a fixed set of allowed ranks
SERIES_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3}
SERIES_FIXED_RANKS = {"E": {6}, "F": {4}, "G": {2}}

CLOSURE_MODES = ("roots", "coroots", "either", "none")


# ----------------------------------------------------------
# CARTAN TYPES
# ----------------------------------------------------------
@dataclass(frozen=True)
class CartanType:
    """An ordered product of simple types, e.g. (("A", 1), ("A", 1))."""

    factors: Tuple[Tuple[str, int], ...]

    def __post_init__(self):
        if not self.factors:
            raise CartanTypeError("A Cartan type needs at least one simple factor")
        for series, rank in self.factors:
            _check_factor(series, rank)

    @property
    def rank(self) -> int:
        return sum(rank for _, rank in self.factors)

    @classmethod
    def parse(cls, text: str) -> "CartanType":
        """Parse "A2", "G2" or products such as "A1xA1"."""
        factors = []
        for chunk in str(text).strip().split("x"):
            match = re.fullmatch(r"\s*([A-Za-z])\s*(\d+)\s*", chunk)
            if not match:
                raise CartanTypeError(f"Invalid Cartan type factor {chunk!r} in {text!r}")
            factors.append((match.group(1).upper(), int(match.group(2))))
        return cls(tuple(factors))

    def __str__(self) -> str:
        return "x".join(f"{series}{rank}" for series, rank in self.factors)


def _check_factor(series: str, rank: int):
    name = f"{series}{rank}"
    if series in SERIES_MIN_RANK:
        if rank < SERIES_MIN_RANK[series]:
            raise CartanTypeError(
                f"Unsupported Cartan type {name}: series {series} needs rank >= {SERIES_MIN_RANK[series]}"
            )
    elif series in SERIES_FIXED_RANKS:
        if rank not in SERIES_FIXED_RANKS[series]:
            allowed = ", ".join(f"{series}{r}" for r in sorted(SERIES_FIXED_RANKS[series]))
            raise CartanTypeError(f"Unsupported Cartan type {name}: only {allowed} is supported")
    else:
        raise CartanTypeError(f"Unknown Cartan series {series!r} in factor {name}")


def _factor_cartan_matrix(series: str, n: int) -> np.ndarray:
    c = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        c[i, i] = 2
        if i + 1 < n:
            c[i, i + 1] = c[i + 1, i] = -1

    if series == "B":
        # alpha_n short
        c[n - 1, n - 2] = -2
    elif series == "C":
        # alpha_n long
        c[n - 2, n - 1] = -2
    elif series == "D":
        c[n - 2, n - 1] = c[n - 1, n - 2] = 0
        c[n - 3, n - 1] = c[n - 1, n - 3] = -1
    elif series == "E":
        # Bourbaki labels: chain 1-3-4-5-6, node 2 attached to 4
        c[:] = 0
        for i in range(n):
            c[i, i] = 2
        for i, j in [(0, 2), (2, 3), (3, 4), (4, 5), (1, 3)]:
            c[i, j] = c[j, i] = -1
    elif series == "F":
        # alpha_1, alpha_2 long; alpha_3, alpha_4 short
        c[2, 1] = -2
    elif series == "G":
        # alpha_1 short
        c[0, 1] = -3
    return c


def _factor_root_lengths(c: np.ndarray) -> List[Fraction]:
    """
    Half squared lengths d_i, from the symmetrization (alpha_i, alpha_j) = C_ij d_i,
    normalized so that the long roots of the factor have d = 1.
    """
    n = c.shape[0]
    d: List[Fraction] = [Fraction(0)] * n
    d[0] = Fraction(1)
    pending = [0]
    while pending:
        i = pending.pop()
        for j in range(n):
            if c[i, j] != 0 and j != i and d[j] == 0:
                d[j] = d[i] * Fraction(int(c[i, j]), int(c[j, i]))
                pending.append(j)
    top = max(d)
    return [x / top for x in d]


def weyl_order(cartan_type: CartanType) -> int:
    order = 1
    for series, n in cartan_type.factors:
        if series == "A":
            order *= factorial(n + 1)
        elif series in ("B", "C"):
            order *= 2 ** n * factorial(n)
        elif series == "D":
            order *= 2 ** (n - 1) * factorial(n)
        elif series == "E":
            order *= 51840
        elif series == "F":
            order *= 1152
        elif series == "G":
            order *= 12
    return order


def positive_root_count(cartan_type: CartanType) -> int:
    count = 0
    for series, n in cartan_type.factors:
        if series == "A":
            count += n * (n + 1) // 2
        elif series in ("B", "C"):
            count += n * n
        elif series == "D":
            count += n * (n - 1)
        elif series == "E":
            count += 36
        elif series == "F":
            count += 24
        elif series == "G":
            count += 6
    return count


# ----------------------------------------------------------
# WEYL GROUP ELEMENTS
# ----------------------------------------------------------
@dataclass(frozen=True, eq=False)
class WeylElement:
    """
    w = s_{word[0]} s_{word[1]} ... acting on omega-coordinates by `matrix`.
    Word letters index the simple roots of the system the element came from.
    """

    matrix: np.ndarray
    word: Tuple[int, ...]
    det: int

    @property
    def length(self) -> int:
        return len(self.word)

    def act(self, w: Weight) -> Weight:
        m = self.matrix
        return tuple(
            sum((int(m[i, j]) * w[j] for j in range(len(w)) if m[i, j]), Fraction(0))
            for i in range(len(w))
        )

    def compose(self, other: "WeylElement") -> "WeylElement":
        """self * other. The word is the concatenation and need not be reduced."""
        return WeylElement(self.matrix @ other.matrix, self.word + other.word, self.det * other.det)

    def key(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(tuple(int(x) for x in row) for row in self.matrix)

    def __eq__(self, other) -> bool:
        return isinstance(other, WeylElement) and self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        letters = "".join(f"s{i + 1}" for i in self.word) or "e"
        return f"WeylElement({letters})"


# ----------------------------------------------------------
# SHARED ROOT DATA BEHAVIOUR
# ----------------------------------------------------------
class _RootData:
    """
    Behaviour shared by RootSystem and RootSubsystem. Subclasses provide
    `ambient`, `simple_roots`, `positive_roots`, `rho`, `simple_coroots`
    (coroot pairings as integer linear functionals on omega-coordinates)
    and `weyl_order`.
    """

    @property
    def rank(self) -> int:
        return len(self.rho)

    @cached_property
    def positive_root_set(self) -> FrozenSet[Weight]:
        return frozenset(self.positive_roots)

    @cached_property
    def root_set(self) -> FrozenSet[Weight]:
        return frozenset(self.positive_roots) | frozenset(neg(a) for a in self.positive_roots)

    def pairing(self, a: Weight, b: Weight) -> Fraction:
        return self.ambient.pairing(a, b)

    def simple_pairings(self, lam: Weight) -> List[Fraction]:
        return [sum((k * x for k, x in zip(functional, lam) if k), Fraction(0)) for functional in self.simple_coroots]

    def is_dominant(self, lam: Weight, strict: bool = False) -> bool:
        if strict:
            return all(p > 0 for p in self.simple_pairings(lam))
        return all(p >= 0 for p in self.simple_pairings(lam))

    def is_dominant_integral(self, lam: Weight) -> bool:
        return all(p >= 0 and p.denominator == 1 for p in self.simple_pairings(lam))

    def reflect_simple(self, lam: Weight, i: int) -> Weight:
        functional = self.simple_coroots[i]
        p = sum((k * x for k, x in zip(functional, lam) if k), Fraction(0))
        return sub(lam, scale(p, self.simple_roots[i]))

    @cached_property
    def simple_reflection_matrices(self) -> List[np.ndarray]:
        mats = []
        for beta, functional in zip(self.simple_roots, self.simple_coroots):
            m = np.eye(self.rank, dtype=np.int64)
            for i in range(self.rank):
                for j in range(self.rank):
                    m[i, j] -= int(beta[i] * functional[j])
            mats.append(m)
        return mats

    def element_from_word(self, word: Sequence[int]) -> WeylElement:
        m = np.eye(self.rank, dtype=np.int64)
        for i in word:
            m = m @ self.simple_reflection_matrices[i]
        return WeylElement(m, tuple(word), -1 if len(word) % 2 else 1)


# ----------------------------------------------------------
# ROOT SYSTEM
# ----------------------------------------------------------
@dataclass(frozen=True, eq=False)
class RootSystem(_RootData):
    cartan_type: CartanType
    cartan_matrix: np.ndarray
    cartan_inverse: Tuple[Tuple[Fraction, ...], ...]
    root_lengths: Tuple[Fraction, ...]
    gram: Tuple[Tuple[Fraction, ...], ...]
    simple_roots: Tuple[Weight, ...]
    positive_roots: Tuple[Weight, ...]
    positive_root_coords: Tuple[Tuple[int, ...], ...]
    rho: Weight
    caps: Caps = field(default=DEFAULT_CAPS)

    @property
    def ambient(self) -> "RootSystem":
        return self

    @property
    def name(self) -> str:
        return str(self.cartan_type)

    @cached_property
    def simple_coroots(self) -> List[Tuple[int, ...]]:
        return [tuple(1 if i == j else 0 for j in range(self.rank)) for i in range(self.rank)]

    @cached_property
    def weyl_order(self) -> int:
        return weyl_order(self.cartan_type)

    @cached_property
    def coroot_set(self) -> FrozenSet[Weight]:
        return frozenset(self.coroot(a) for a in self.root_set)

    def simple_pairings(self, lam: Weight) -> List[Fraction]:
        return list(lam)

    def pairing(self, a: Weight, b: Weight) -> Fraction:
        total = Fraction(0)
        for i, x in enumerate(a):
            if not x:
                continue
            row = self.gram[i]
            for j, y in enumerate(b):
                if y:
                    total += x * row[j] * y
        return total

    def norm(self, a: Weight) -> Fraction:
        return self.pairing(a, a)

    def coroot_pairing(self, lam: Weight, beta: Weight) -> Fraction:
        return 2 * self.pairing(lam, beta) / self.pairing(beta, beta)

    def coroot(self, beta: Weight) -> Weight:
        """beta^vee = 2 beta / (beta, beta), as a vector in the same coordinates."""
        return scale(Fraction(2) / self.pairing(beta, beta), beta)

    def coroot_functional(self, beta: Weight) -> Tuple[Fraction, ...]:
        """Coefficients k with <lam, beta^vee> = sum_i k_i lam_i."""
        bb = self.pairing(beta, beta)
        return tuple(
            2 * sum((self.gram[i][j] * beta[j] for j in range(self.rank)), Fraction(0)) / bb
            for i in range(self.rank)
        )

    def reflect(self, lam: Weight, beta: Weight) -> Weight:
        return sub(lam, scale(self.coroot_pairing(lam, beta), beta))

    def to_weight(self, root_coords: Sequence[int]) -> Weight:
        c = self.cartan_matrix
        return tuple(
            Fraction(int(sum(int(c[i, j]) * int(root_coords[j]) for j in range(self.rank))))
            for i in range(self.rank)
        )

    def to_root_coords(self, w: Weight) -> Tuple[Fraction, ...]:
        return tuple(
            sum((self.cartan_inverse[i][j] * w[j] for j in range(self.rank)), Fraction(0))
            for i in range(self.rank)
        )

    def is_root(self, w: Weight) -> bool:
        return w in self.root_set

    @cached_property
    def fundamental_weights(self) -> List[Weight]:
        return [tuple(Fraction(1 if i == j else 0) for j in range(self.rank)) for i in range(self.rank)]


def build_root_system(cartan_type: Union[CartanType, str], caps: Caps = DEFAULT_CAPS) -> RootSystem:
    """
    Build the root system of a (product of) simple type(s).

    Positive roots are generated from the simple roots by root strings: for a
    positive root beta and a simple root alpha_i, beta + alpha_i is a root iff
    p - <beta, alpha_i^vee> > 0, where p is the length of the alpha_i-string
    below beta.
    """
    if isinstance(cartan_type, str):
        cartan_type = CartanType.parse(cartan_type)
    if cartan_type.rank > caps.max_rank:
        raise ResourceCapError(
            f"Cartan type {cartan_type} has rank {cartan_type.rank}, above the configured cap {caps.max_rank}"
        )

    n = cartan_type.rank
    c = np.zeros((n, n), dtype=np.int64)
    lengths: List[Fraction] = []
    offset = 0
    for series, rank in cartan_type.factors:
        block = _factor_cartan_matrix(series, rank)
        c[offset:offset + rank, offset:offset + rank] = block
        lengths.extend(_factor_root_lengths(block))
        offset += rank

    inv = sp.Matrix(c.tolist()).inv()
    cartan_inverse = tuple(
        tuple(Fraction(int(sp.fraction(inv[i, j])[0]), int(sp.fraction(inv[i, j])[1])) for j in range(n))
        for i in range(n)
    )
    gram = tuple(tuple(lengths[i] * cartan_inverse[i][j] for j in range(n)) for i in range(n))

    # positive roots in simple-root coordinates, level by level (= by height)
    units = [tuple(1 if i == j else 0 for j in range(n)) for i in range(n)]
    found = set(units)
    ordered = list(units)
    level = list(units)
    while level:
        nxt = set()
        for beta in level:
            pairings = [sum(int(c[i, j]) * beta[j] for j in range(n)) for i in range(n)]
            for i in range(n):
                p = 0
                while True:
                    lower = tuple(b - (p + 1) * (1 if k == i else 0) for k, b in enumerate(beta))
                    if lower in found:
                        p += 1
                    else:
                        break
                if p - pairings[i] > 0:
                    cand = tuple(b + (1 if k == i else 0) for k, b in enumerate(beta))
                    if cand not in found:
                        nxt.add(cand)
        level = sorted(nxt)
        found.update(level)
        ordered.extend(level)

    def as_weight(rc):
        return tuple(Fraction(int(sum(int(c[i, j]) * rc[j] for j in range(n)))) for i in range(n))

    positive = tuple(as_weight(rc) for rc in ordered)
    rs = RootSystem(
        cartan_type=cartan_type,
        cartan_matrix=c,
        cartan_inverse=cartan_inverse,
        root_lengths=tuple(lengths),
        gram=gram,
        simple_roots=tuple(as_weight(u) for u in units),
        positive_roots=positive,
        positive_root_coords=tuple(ordered),
        rho=tuple(Fraction(1) for _ in range(n)),
        caps=caps,
    )

    expected = positive_root_count(cartan_type)
    if len(positive) != expected:
        raise ConsistencyError(f"{cartan_type} has {len(positive)} positive roots, expected {expected}")
    half_sum = scale(Fraction(1, 2), _vector_sum(positive, n))
    if half_sum != rs.rho:
        raise ConsistencyError(f"rho of {cartan_type} is {half_sum}, expected the all-ones vector")
    return rs


def _vector_sum(vectors, rank: int) -> Weight:
    total = tuple(Fraction(0) for _ in range(rank))
    for v in vectors:
        total = add(total, v)
    return total


# ----------------------------------------------------------
# ROOT SUBSYSTEMS
# ----------------------------------------------------------
@dataclass(frozen=True, eq=False)
class RootSubsystem(_RootData):
    ambient: RootSystem
    simple_roots: Tuple[Weight, ...]
    simple_root_coords: Tuple[Tuple[int, ...], ...]
    positive_roots: Tuple[Weight, ...]
    rho: Weight
    closure: str = "roots"

    @cached_property
    def simple_coroots(self) -> List[Tuple[Fraction, ...]]:
        return [self.ambient.coroot_functional(beta) for beta in self.simple_roots]

    @cached_property
    def weyl_order(self) -> int:
        # rho_r is regular for W_r, so its orbit has |W_r| elements
        return len(weyl_orbit(self, self.rho))

    @property
    def caps(self) -> Caps:
        return self.ambient.caps

    @property
    def name(self) -> str:
        inner = ";".join(",".join(str(x) for x in rc) for rc in self.simple_root_coords)
        return f"{self.ambient.name}[{inner}]"


RootData = Union[RootSystem, RootSubsystem]


def validate_subsystem(
    rs: RootSystem,
    simple_roots_in_root_coords: Sequence[Sequence[int]],
    closure: str = "roots",
) -> RootSubsystem:
    """
    Validate a set of simple roots (in simple-root integer coordinates of g) and
    build the equal-rank subsystem they generate.

    closure:
        "roots"   - Delta(r) closed under addition inside Delta(g) (quadratic subalgebras)
        "coroots" - closed inside the dual root system
        "either"  - one of the two (endoscopic subsystems)
        "none"    - only reflection-closed (intersections)
    """
    if closure not in CLOSURE_MODES:
        raise ValueError(f"closure must be one of {CLOSURE_MODES}, got {closure!r}")

    given_coords = [tuple(int(x) for x in v) for v in simple_roots_in_root_coords]
    given: List[Weight] = []
    for rc in given_coords:
        if len(rc) != rs.rank:
            raise ValidationError(f"Root vector {list(rc)} has {len(rc)} coordinates, expected {rs.rank}")
        w = rs.to_weight(rc)
        if not rs.is_root(w):
            raise ValidationError(f"{list(rc)} is not a root of {rs.name}")
        given.append(w)

    if len(set(given)) != len(given):
        raise ValidationError(f"Repeated roots in subsystem {[list(rc) for rc in given_coords]}")

    if given_coords and sp.Matrix(given_coords).rank() != len(given_coords):
        raise ValidationError(f"Roots {[list(rc) for rc in given_coords]} are linearly dependent")

    for i, a in enumerate(given):
        for j, b in enumerate(given):
            if i != j and rs.coroot_pairing(a, b) > 0:
                raise ValidationError(
                    f"Roots {list(given_coords[i])} and {list(given_coords[j])} have positive pairing: "
                    "not simple for the generated subsystem"
                )

    # reflection closure of the given roots
    roots = set(given) | {neg(a) for a in given}
    frontier = list(roots)
    while frontier:
        nxt = []
        for x in frontier:
            for beta in given:
                y = rs.reflect(x, beta)
                if y not in roots:
                    roots.add(y)
                    nxt.append(y)
        frontier = nxt

    def _not_closed(vectors, universe):
        vectors = set(vectors)
        for a in vectors:
            for b in vectors:
                s = add(a, b)
                if s in universe and s not in vectors:
                    return a, b
        return None

    root_gap = None
    coroot_gap = None
    if closure in ("roots", "either"):
        root_gap = _not_closed(roots, rs.root_set)
    if closure in ("coroots", "either"):
        coroot_gap = _not_closed({rs.coroot(a) for a in roots}, rs.coroot_set)
        if coroot_gap:
            # report the offending pair as roots
            coroot_gap = tuple(rs.coroot(x) for x in coroot_gap)

    failed = (
        (closure == "roots" and root_gap)
        or (closure == "coroots" and coroot_gap)
        or (closure == "either" and root_gap and coroot_gap)
    )
    if failed:
        a, b = root_gap or coroot_gap
        ra = [int(x) for x in rs.to_root_coords(a)]
        rb = [int(x) for x in rs.to_root_coords(b)]
        kind = "roots" if root_gap else "coroots"
        raise ValidationError(
            f"Subsystem {[list(rc) for rc in given_coords]} of {rs.name} is not closed under {kind}: "
            f"{ra} + {rb} is missing"
        )

    positive = [a for a in rs.positive_roots if a in roots]
    positive_set = set(positive)
    decomposable = {add(a, b) for a in positive for b in positive} & positive_set
    simple = [a for a in positive if a not in decomposable]
    if set(simple) != set(given):
        raise ValidationError(
            f"Vectors {[list(rc) for rc in given_coords]} are not the simple roots of the subsystem they "
            f"generate in {rs.name} (its simple roots are "
            f"{[[int(x) for x in rs.to_root_coords(a)] for a in simple]})"
        )

    return RootSubsystem(
        ambient=rs,
        simple_roots=tuple(given),
        simple_root_coords=tuple(given_coords),
        positive_roots=tuple(positive),
        rho=scale(Fraction(1, 2), _vector_sum(positive, rs.rank)),
        closure=closure,
    )


def subsystem_from_roots(rs: RootSystem, root_set, closure: str = "none") -> RootSubsystem:
    """Build the subsystem whose root set is `root_set` (reflection-closed, e.g. an intersection)."""
    positive = [a for a in rs.positive_roots if a in root_set]
    decomposable = {add(a, b) for a in positive for b in positive} & set(positive)
    simple = [a for a in positive if a not in decomposable]
    coords = [[int(x) for x in rs.to_root_coords(a)] for a in simple]
    result = validate_subsystem(rs, coords, closure=closure)
    if result.root_set != frozenset(root_set):
        raise ConsistencyError(f"Root set {sorted(root_set)} is not generated by its simple roots {coords}")
    return result


def contains(system: RootData, sub_system: RootData) -> bool:
    return sub_system.root_set <= system.root_set


# ----------------------------------------------------------
# WEYL GROUP ENUMERATION
# ----------------------------------------------------------
@lru_cache(maxsize=WEYL_CACHE_SIZE)
def _enumerate_cached(system: RootData) -> Tuple[WeylElement, ...]:
    cap = system.caps.max_weyl_order
    if isinstance(system, RootSystem) and system.weyl_order > cap:
        raise ResourceCapError(
            f"|W({system.name})| = {system.weyl_order} exceeds the configured cap {cap}"
        )

    identity = WeylElement(np.eye(system.rank, dtype=np.int64), (), 1)
    seen: Dict[Weight, WeylElement] = {system.rho: identity}
    elements = [identity]
    frontier = [identity]
    mats = system.simple_reflection_matrices
    while frontier:
        nxt = []
        for w in frontier:
            for i, m in enumerate(mats):
                prod = w.matrix @ m
                elt = WeylElement(prod, w.word + (i,), -w.det)
                image = elt.act(system.rho)
                if image in seen:
                    continue
                seen[image] = elt
                nxt.append(elt)
                if len(seen) > cap:
                    raise ResourceCapError(
                        f"Weyl group of {system.name} has more than {cap} elements (configured cap)"
                    )
        nxt.sort(key=lambda e: e.word)
        elements.extend(nxt)
        frontier = nxt
    return tuple(elements)


def enumerate_weyl(system: RootData) -> List[WeylElement]:
    """
    All elements of the Weyl group, breadth-first from the identity and keyed by
    the image of rho; sorted by (length, word). Words are the lexicographically
    smallest reduced words.
    """
    return list(_enumerate_cached(system))


def inversion_count(system: RootData, w: WeylElement) -> int:
    """#{alpha > 0 : w(alpha) < 0} for the positive roots of the system."""
    return sum(1 for a in system.positive_roots if w.act(a) not in system.positive_root_set)


def inverse(system: RootData, w: WeylElement) -> WeylElement:
    return system.element_from_word(tuple(reversed(w.word)))


def weyl_orbit(system: RootData, mu: Weight) -> List[Weight]:
    """The W-orbit of mu, by closure under simple reflections; sorted."""
    cap = system.caps.max_weyl_order
    orbit = {mu}
    frontier = [mu]
    while frontier:
        nxt = []
        for x in frontier:
            for i in range(len(system.simple_roots)):
                y = system.reflect_simple(x, i)
                if y not in orbit:
                    orbit.add(y)
                    nxt.append(y)
        if len(orbit) > cap:
            raise ResourceCapError(f"Weyl orbit in {system.name} exceeds the configured cap {cap}")
        frontier = nxt
    return sorted(orbit)


# ----------------------------------------------------------
# DOMINANCE AND COSETS
# ----------------------------------------------------------
def dominant_conjugate(system: RootData, mu: Weight) -> Tuple[Weight, WeylElement]:
    """
    Return (dominant weight, w) with w(mu) dominant for the system.
    Deterministic: always reflect at the lowest-index negative pairing.
    """
    applied: List[int] = []
    current = tuple(mu)
    while True:
        pairings = system.simple_pairings(current)
        negative = next((i for i, p in enumerate(pairings) if p < 0), None)
        if negative is None:
            break
        current = system.reflect_simple(current, negative)
        applied.append(negative)
    return current, system.element_from_word(tuple(reversed(applied)))


def coset_representatives(system: RootData, sub_system: RootSubsystem) -> List[WeylElement]:
    """
    W^1 = {w in W : w(rho) is Delta+(sub)-dominant}: minimal representatives of
    W_sub \\ W. Strict dominance; a zero pairing means rho was not regular and is
    reported as a ConsistencyError.
    """
    if not contains(system, sub_system):
        raise ValidationError(f"{sub_system.name} is not a subsystem of {system.name}")

    elements = enumerate_weyl(system)
    reps = []
    for w in elements:
        pairings = sub_system.simple_pairings(w.act(system.rho))
        if any(p == 0 for p in pairings):
            raise ConsistencyError(f"w(rho) is singular for {sub_system.name} at {w!r}")
        if all(p > 0 for p in pairings):
            reps.append(w)

    if len(reps) * sub_system.weyl_order != len(elements):
        raise ConsistencyError(
            f"|W^1| * |W_sub| = {len(reps)} * {sub_system.weyl_order} != |W| = {len(elements)}"
        )
    return reps


def factorize(system: RootData, sub_system: RootSubsystem, w: WeylElement) -> Tuple[WeylElement, WeylElement]:
    """Write w = u * tau with u in W_sub and tau in W^1."""
    image = w.act(system.rho)
    _, u_inv = dominant_conjugate(sub_system, image)
    target = u_inv.act(image)
    tau = next(t for t in coset_representatives(system, sub_system) if t.act(system.rho) == target)
    return inverse(sub_system, u_inv), tau
