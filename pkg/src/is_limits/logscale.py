"""Positive scalars carried in natural-log scale.

Ratios of Gaussian normalizing constants routinely exceed 1e300 in the
singular regimes this package studies, so they are stored and combined as
logs and only exponentiated on demand.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True, order=True)
class LogScalar:
    """log of a positive quantity; ``math.inf`` marks a genuinely infinite value."""

    log_value: float

    @classmethod
    def infinite(cls) -> "LogScalar":
        return cls(math.inf)

    @property
    def is_finite(self) -> bool:
        return math.isfinite(self.log_value)

    def exp(self) -> float:
        """Linear-scale value; overflow to ``math.inf`` is legitimate here."""
        try:
            return math.exp(self.log_value)
        except OverflowError:
            return math.inf
