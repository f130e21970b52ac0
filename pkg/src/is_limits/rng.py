"""Reproducible counter-based random streams.

Every stochastic routine in this package takes an explicit generator, and
parallel work units derive their own stream from ``(base_seed, key...)``.
Distinct keys give statistically independent streams; the same key replays
the same stream, so replicates can run in any order and on any number of
threads without changing results.
"""

from __future__ import annotations

import numpy as np


def stream(base_seed: int, *key: int) -> np.random.Generator:
    """Philox generator keyed by ``(base_seed, key...)``."""
    seq = np.random.SeedSequence(int(base_seed), spawn_key=tuple(int(k) for k in key))
    return np.random.Generator(np.random.Philox(seq))
