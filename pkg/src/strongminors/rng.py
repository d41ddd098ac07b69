"""Deterministic randomness for generators and sampling loops.

Every random choice in the package flows through numpy's Philox bit
generator, a 64-bit counter-based PRNG with a documented, version-stable
bit stream.  Streams are split by key: stream `i` of seed `s` is
``Philox(key=[s, i])``.  Stream 0 belongs to the operation itself (e.g.
orienting the pairs of a random tournament); operations that run several
independent attempts or trials give attempt/trial `i` stream `i`.

Golden seeds used in the test suite are stable within a major version.
"""

from __future__ import annotations

import numpy as np

_MASK64 = (1 << 64) - 1


def stream(seed: int, index: int = 0) -> np.random.Generator:
    """Generator for sub-stream `index` of `seed`."""
    key = [seed & _MASK64, index & _MASK64]
    return np.random.Generator(np.random.Philox(key=key))
