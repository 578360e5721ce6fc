"""
errors.py
---------
Exception hierarchy shared by every stage.

The CLI maps these onto exit codes:
    CartanTypeError  -> 2 (usage)
    ValidationError  -> 3
    ResourceCapError -> 4
"""


class DiracError(Exception):
    """Base class for all errors raised by this package."""


class CartanTypeError(DiracError, ValueError):
    """Malformed or unsupported Cartan type string / factor."""


class ValidationError(DiracError, ValueError):
    """Input that is well-formed but mathematically invalid."""


class ResourceCapError(DiracError, RuntimeError):
    """A configured cap (rank, Weyl order, character terms) was exceeded."""


class ConsistencyError(DiracError, AssertionError):
    """An identity that holds by construction failed: an implementation bug."""
