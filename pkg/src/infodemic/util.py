"""Shared helpers: seeded PRNG construction and light input validation."""

from __future__ import annotations

from typing import Sequence

import numpy as np

U64_MAX = 2**64 - 1


def check_seed(seed: int) -> int:
    if not isinstance(seed, int) or isinstance(seed, bool) or not 0 <= seed <= U64_MAX:
        raise ValueError(f"seed must be an unsigned 64-bit integer, got {seed!r}")
    return seed


def make_rng(seed: int) -> np.random.Generator:
    """PCG64 generator seeded directly with the given 64-bit seed.

    PCG64 is pinned (rather than whatever numpy's default happens to be)
    so that shuffles reproduce bit-for-bit across platforms and versions.
    """
    return np.random.Generator(np.random.PCG64(check_seed(seed)))


def fisher_yates(n: int, rng: np.random.Generator) -> list[int]:
    """Seeded Fisher-Yates permutation of range(n), spelled out explicitly
    so the draw sequence is part of this package's contract."""
    idx = list(range(n))
    for i in range(n - 1, 0, -1):
        j = int(rng.integers(0, i + 1))
        idx[i], idx[j] = idx[j], idx[i]
    return idx


def check_equal_lengths(name_a: str, a: Sequence, name_b: str, b: Sequence) -> None:
    if len(a) != len(b):
        raise ValueError(
            f"{name_a} and {name_b} must have equal lengths, got {len(a)} != {len(b)}"
        )
