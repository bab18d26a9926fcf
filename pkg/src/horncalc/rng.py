"""Deterministic, splittable random streams.

Every randomized routine takes a ``random.Random`` handle.  Parallel or
repeated tasks derive child streams from a master seed with ``spawn``, so
results are reproducible regardless of scheduling and never depend on
Python's per-process hash randomization.
"""

from __future__ import annotations

import random

_MASK = (1 << 64) - 1


def _splitmix64(x: int) -> int:
    # Steele/Lea/Flood mixer; plain integer ops keep it platform-stable.
    x = (x + 0x9E3779B97F4A7C15) & _MASK
    z = x
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return (z ^ (z >> 31)) & _MASK


def derive_seed(master: int, *indices: int) -> int:
    """Mix a master seed with stream indices into a fresh 64-bit seed."""
    x = _splitmix64(master & _MASK)
    for i in indices:
        x = _splitmix64(x ^ ((i & _MASK) * 0xD1B54A32D192ED03 & _MASK))
    return x


def spawn(master: int, *indices: int) -> random.Random:
    """Independent ``random.Random`` stream for task ``indices``."""
    return random.Random(derive_seed(master, *indices))
