"""
weights.py
----------
Exact weight vectors.

A weight is a tuple of `Fraction` coordinates in the fundamental-weight basis
of g. Tuples keep weights hashable, so they can key formal characters.
Serialization uses lowest-terms strings: "p/q", or "p" for integers.
"""

from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple

from src.errors import ValidationError

Weight = Tuple[Fraction, ...]


def make_weight(coords: Iterable) -> Weight:
    return tuple(Fraction(c) for c in coords)


def zero_weight(rank: int) -> Weight:
    return tuple(Fraction(0) for _ in range(rank))


def add(a: Weight, b: Weight) -> Weight:
    return tuple(x + y for x, y in zip(a, b))


def sub(a: Weight, b: Weight) -> Weight:
    return tuple(x - y for x, y in zip(a, b))


def neg(a: Weight) -> Weight:
    return tuple(-x for x in a)


def scale(c, a: Weight) -> Weight:
    c = Fraction(c)
    return tuple(c * x for x in a)


# ---------------------------------------------------------
# TEXT / JSON FORMS
# ---------------------------------------------------------
def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError) as e:
        raise ValidationError(f"Not a rational number: {text!r}") from e


def weight_to_strings(w: Weight) -> List[str]:
    return [format_rational(x) for x in w]


def weight_from_strings(items: Sequence[str]) -> Weight:
    return tuple(parse_rational(s) for s in items)


def format_weight(w: Weight) -> str:
    return "[" + ",".join(weight_to_strings(w)) + "]"


def parse_weight(text: str, rank: int) -> Weight:
    """
    Parse "1,1/2,-3" into a weight of the given rank.
    An empty string is the zero weight.
    """
    text = text.strip()
    if not text:
        return zero_weight(rank)
    w = tuple(parse_rational(part) for part in text.split(","))
    if len(w) != rank:
        raise ValidationError(f"Weight {text!r} has {len(w)} coordinates, expected {rank}")
    return w


def parse_root_vectors(text: str, rank: int) -> List[Tuple[int, ...]]:
    """
    Parse "1,0;1,2" (semicolon-separated simple-root coordinates) into integer
    vectors. An empty string is the empty list (r = Cartan subalgebra).
    """
    text = text.strip()
    if not text:
        return []
    vectors = []
    for chunk in text.split(";"):
        try:
            vec = tuple(int(part) for part in chunk.split(","))
        except ValueError as e:
            raise ValidationError(f"Root vector {chunk!r} is not a list of integers") from e
        if len(vec) != rank:
            raise ValidationError(f"Root vector {chunk!r} has {len(vec)} coordinates, expected {rank}")
        vectors.append(vec)
    return vectors
