"""Deterministic seed derivation.

Every random stream in the package is derived from a 64-bit master seed
through ``derive_key(seed, tag, counter)``, which hashes
``seed || tag || counter`` with SHA-256 and keeps the low 64 bits.  Signal
randomness and scheme randomness therefore never share a stream, and any
sub-stream can be reproduced from (master seed, tag, counter) alone.
"""

from __future__ import annotations

import hashlib

import numpy as np


def derive_key(seed: int, tag: str, counter: int = 0) -> int:
    """Map (seed, tag, counter) to a 64-bit key."""
    payload = b"%d|%s|%d" % (int(seed), tag.encode("utf-8"), int(counter))
    digest = hashlib.sha256(payload).digest()
    return int.from_bytes(digest[:8], "little")


def spawn(seed: int, tag: str, counter: int = 0) -> np.random.Generator:
    """Create an independent PCG64 generator for a named sub-stream."""
    return np.random.Generator(np.random.PCG64(derive_key(seed, tag, counter)))


def generator(seed: int) -> np.random.Generator:
    """Generator directly from a raw 64-bit key."""
    return np.random.Generator(np.random.PCG64(int(seed)))
