"""Deterministic seed derivation.

Every randomized operation in this package draws from a ``random.Random``
instance seeded through :func:`mix64`, so results depend only on the
configured global seed plus a stream index (sentence ordinal, sampling
stage, ...) and never on process scheduling or corpus chunking.
"""

from __future__ import annotations

import random

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


def mix64(seed: int, stream: int) -> int:
    """Hash (seed, stream) into a well-mixed 64-bit value (splitmix64 finalizer)."""
    z = (seed + (stream + 1) * _GOLDEN) & _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


def stream_rng(seed: int, stream: int) -> random.Random:
    """A fresh RNG for one independent stream of the given global seed."""
    return random.Random(mix64(seed, stream))
