import math

import numpy as np
import pytest

from pamikit import InvalidK, InvalidSize
from pamikit.synthetic import (
    _draw_random_clustering,
    block_clustering,
    random_clustering,
    trial_rng,
)


class TestBlockClustering:
    def test_single_cluster(self):
        assert block_clustering(100, 100).labels.tolist() == [0] * 100

    def test_all_singletons(self):
        assert block_clustering(100, 1).labels.tolist() == list(range(100))

    def test_uneven_last_block(self):
        assert block_clustering(5, 2).labels.tolist() == [0, 0, 1, 1, 2]

    def test_cluster_count_and_sizes(self):
        for n, s in [(100, 7), (30, 10), (13, 13), (9, 4)]:
            lab = block_clustering(n, s)
            sizes = lab.cluster_sizes()
            assert sizes.size == math.ceil(n / s)
            assert (sizes[:-1] == s).all()
            assert sizes[-1] == n - s * (sizes.size - 1)

    def test_refinement(self):
        # every size-s block lies inside one size-(m*s) block
        fine = block_clustering(100, 10)
        coarse = block_clustering(100, 30)
        for label in range(fine.k):
            members = np.nonzero(fine.labels == label)[0]
            assert np.unique(coarse.labels[members]).size == 1

    def test_invalid_size(self):
        with pytest.raises(InvalidSize):
            block_clustering(10, 0)
        with pytest.raises(InvalidSize):
            block_clustering(10, 11)


class TestRandomClustering:
    def test_k1(self):
        assert random_clustering(20, 1, 123).labels.tolist() == [0] * 20

    def test_deterministic(self):
        a = random_clustering(300, 7, 99)
        b = random_clustering(300, 7, 99)
        assert np.array_equal(a.labels, b.labels)

    def test_different_seeds_differ(self):
        a = random_clustering(300, 7, 1)
        b = random_clustering(300, 7, 2)
        assert not np.array_equal(a.labels, b.labels)

    def test_invalid_k(self):
        with pytest.raises(InvalidK):
            random_clustering(10, 0, 0)
        with pytest.raises(InvalidK):
            random_clustering(10, 11, 0)

    def test_frequencies_match_drawn_distribution(self):
        # chi-squared against the recorded p vector, same substream
        n, k = 10000, 5
        raw, p = _draw_random_clustering(n, k, trial_rng(424242))
        observed = np.bincount(raw, minlength=k)
        expected = n * p
        chi2 = float(np.sum((observed - expected) ** 2 / expected))
        # df = k (p is fixed, not fitted); mean k, sd sqrt(2k): allow 3 sigma
        assert chi2 < k + 3 * math.sqrt(2 * k)

    def test_canonicalized_output(self):
        lab = random_clustering(500, 12, 5)
        seen = np.unique(lab.labels)
        assert seen.tolist() == list(range(seen.size))


class TestTrialRng:
    def test_substreams_independent_and_stable(self):
        a1 = trial_rng(7, 0).random(4)
        a2 = trial_rng(7, 0).random(4)
        b = trial_rng(7, 1).random(4)
        assert np.array_equal(a1, a2)
        assert not np.array_equal(a1, b)
