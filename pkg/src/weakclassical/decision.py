from dataclasses import dataclass
from typing import Any


@dataclass(frozen=True)
class Decision:
    """Outcome of a decision procedure.

    Truthiness follows ``holds``. When ``holds`` is false, ``witness`` carries
    the lexicographically first violating data (scalars and/or elements as
    canonical labels).
    """

    holds: bool
    witness: Any = None

    def __bool__(self):
        return self.holds
