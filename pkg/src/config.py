"""
config.py
---------
Caps and run defaults.

Nothing here is read from the environment; the CLI flags and the optional
`caps` / `seed` keys of a catalog file are the only overrides.
"""

from dataclasses import dataclass, replace
from typing import Optional


@dataclass(frozen=True)
class Caps:
    max_rank: int = 6
    max_weyl_order: int = 200_000
    max_terms: int = 1_000_000

    def merged(
        self,
        *,
        max_rank: Optional[int] = None,
        max_weyl_order: Optional[int] = None,
        max_terms: Optional[int] = None,
    ) -> "Caps":
        """Return a copy with every non-None override applied."""
        changes = {
            key: value
            for key, value in {
                "max_rank": max_rank,
                "max_weyl_order": max_weyl_order,
                "max_terms": max_terms,
            }.items()
            if value is not None
        }
        return replace(self, **changes)


DEFAULT_CAPS = Caps()

DEFAULT_SEED = 7

# verification suite sizes
LIFT_TRIALS = 100
LIMIT_TRIALS = 10
RANDOM_CHARACTER_TRIALS = 50
ORACLE_RANGE = range(0, 6)
ORACLE_MAX_N = 50

# random rational parameters: numerator in [-NUM_BOUND, NUM_BOUND], denominator in [1, DEN_BOUND]
NUM_BOUND = 12
DEN_BOUND = 4

# memo sizes; subsystems hash by identity, so every validation adds a key
WEYL_CACHE_SIZE = 128
CHARACTER_CACHE_SIZE = 512
