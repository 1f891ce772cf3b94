import itertools

import numpy as np
import pytest


def restricted_growth_strings(n):
    """All canonical labelings (set partitions) of n samples."""
    def extend(prefix, k):
        if len(prefix) == n:
            yield list(prefix)
            return
        for label in range(k + 1):
            yield from extend(prefix + [label], max(k, label + 1))

    yield from extend([0], 1)


def random_labeling_pair(rng, n):
    ka = int(rng.integers(1, n + 1))
    kb = int(rng.integers(1, n + 1))
    return rng.integers(0, ka, n), rng.integers(0, kb, n)


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)
