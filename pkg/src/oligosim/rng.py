"""Portable seeded random streams.

Streams come from numpy's PCG64 bit generator seeded through
``SeedSequence``; both are specified algorithms with fixed output across
platforms and numpy releases. Doubles are built from the top 53 bits of each
64-bit draw, so the float conversion does not depend on numpy's
``Generator`` either.
"""

from __future__ import annotations

import numpy as np

PRNG_ID = "pcg64+seedsequence/u53"
_TWO_POW_MINUS_53 = 1.0 / 9007199254740992.0


class Stream:
    """Deterministic uniform stream for one simulation run."""

    def __init__(self, seed: int) -> None:
        if seed < 0:
            raise ValueError(f"seed must be non-negative, got {seed}")
        self.seed = seed
        self._bits = np.random.PCG64(np.random.SeedSequence(seed))

    def random(self) -> float:
        """Uniform double on [0, 1)."""
        return (int(self._bits.random_raw()) >> 11) * _TWO_POW_MINUS_53

    def uniform(self, low: float, high: float) -> float:
        return low + (high - low) * self.random()


def derive_seed(base_seed: int, cell: tuple[int, ...], replicate: int) -> int:
    """Child seed for replicate ``replicate`` of the grid cell keyed by ``cell``.

    Mixes ``(base_seed, *cell, replicate)`` through ``SeedSequence`` spawn keys
    and returns the first 64-bit word of the resulting state. Appending cells
    or replicates leaves every existing child seed unchanged.
    """
    ss = np.random.SeedSequence(base_seed, spawn_key=(*cell, replicate))
    return int(ss.generate_state(1, np.uint64)[0])
