"""Seeded generators for synthetic clusterings.

Reproducibility contract: all randomness flows through numpy's PCG64
generator seeded from a ``SeedSequence``.  Parallel or repeated trials
derive independent substreams as ``SeedSequence([seed, trial_index])``,
so results are identical across runs and platforms for a fixed seed.
"""

from __future__ import annotations

import numpy as np

from .errors import InvalidK, InvalidSize
from .metrics import Labeling, canonicalize

__all__ = ["block_clustering", "random_clustering", "trial_rng"]


def trial_rng(seed: int, *stream: int) -> np.random.Generator:
    """Independent PCG64 substream for (seed, stream indices)."""
    return np.random.default_rng(np.random.SeedSequence([int(seed), *map(int, stream)]))


def block_clustering(n: int, s: int) -> Labeling:
    """Clusters of s consecutive samples; the last may be shorter.

    Sample t gets label floor(t / s): s=1 yields all singletons, s=n a
    single cluster.
    """
    if not 1 <= s <= n:
        raise InvalidSize(f"block size {s} outside [1, {n}]")
    return Labeling(np.arange(n, dtype=np.int64) // s)


def _draw_random_clustering(n: int, k: int, rng: np.random.Generator):
    """Raw multinomial assignment plus the drawn category distribution.

    Category probabilities are proportional to k i.i.d. uniforms on
    [0, 1]; each sample is assigned independently.  Categories that come
    out empty are kept here and removed by canonicalization in the
    public wrapper.
    """
    while True:
        u = rng.random(k)
        total = u.sum()
        if total > 0:  # all-zero draw is measure zero, guarded anyway
            break
    p = u / total
    raw = rng.choice(k, size=n, p=p)
    return raw, p


def random_clustering(n: int, k: int, seed) -> Labeling:
    """n samples assigned to k clusters at random, deterministic in seed.

    ``seed`` may be an int or a ready ``numpy.random.Generator``.
    """
    if not 1 <= k <= n:
        raise InvalidK(f"k={k} outside [1, {n}]")
    rng = seed if isinstance(seed, np.random.Generator) else trial_rng(seed)
    raw, _ = _draw_random_clustering(n, k, rng)
    return canonicalize(raw)
