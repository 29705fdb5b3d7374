"""Seed derivation for independent per-replicate random streams.

Seeds are hashed with numpy's ``SeedSequence``, whose mixing function is
documented and stable across platforms, so a ``(master, *keys)`` tuple always
maps to the same 64-bit seed.
"""
import numpy as np

UINT64_MAX = 2**64 - 1


def check_seed(seed):
    seed = int(seed)
    if not 0 <= seed <= UINT64_MAX:
        raise ValueError(f"seed must be an unsigned 64-bit integer, got {seed}")
    return seed


def derive_seed(master, *keys):
    """Return a 64-bit seed derived from ``master`` and a path of integer keys."""
    ss = np.random.SeedSequence(check_seed(master), spawn_key=tuple(int(k) for k in keys))
    return int(ss.generate_state(1, dtype=np.uint64)[0])


def make_rng(seed):
    return np.random.Generator(np.random.PCG64(check_seed(seed)))
