"""Acceptance gate: one test per top-level criterion, each printing a
PASS/FAIL line (visible with pytest -s or in captured output)."""

import math
import statistics

import numpy as np
import pytest

from pamikit import (
    ContingencyTable,
    Labeling,
    adjusted_entropy,
    ami,
    build_contingency,
    canonicalize,
    pairwise_adjusted_entropy,
    pami,
    pami_dense,
    pami_sparse,
    sparsify,
)
from pamikit.experiments import (
    PrecisionConfig,
    candidate_ordering_study,
    precision_experiment,
    similarity_profile,
    timing_experiment,
)
from pamikit.oracle import ami_bruteforce, pami_bruteforce

from conftest import random_labeling_pair, restricted_growth_strings


def _report(name: str, ok: bool, detail: str = ""):
    status = "PASS" if ok else "FAIL"
    print(f"ACCEPTANCE {name}: {status} {detail}".rstrip())
    assert ok, f"{name} failed: {detail}"


def test_pairwise_oracle_equivalence():
    rng = np.random.default_rng(7)
    worst = 0.0
    for _ in range(1000):
        n = int(rng.integers(2, 61))
        ra, rb = random_labeling_pair(rng, n)
        a, b = canonicalize(ra), canonicalize(rb)
        diff = abs(pami(build_contingency(a, b)) - pami_bruteforce(a, b))
        worst = max(worst, diff)
    _report("pairwise-oracle-equivalence", worst <= 1e-10, f"worst |diff| = {worst:.3e}")


def test_full_permutation_oracle_equivalence():
    worst = 0.0
    for n in range(1, 7):
        partitions = [Labeling(np.array(p)) for p in restricted_growth_strings(n)]
        for a in partitions:
            for b in partitions:
                diff = abs(ami(build_contingency(a, b)) - ami_bruteforce(a, b))
                worst = max(worst, diff)
    rng = np.random.default_rng(11)
    for _ in range(50):
        ra, rb = random_labeling_pair(rng, 7)
        a, b = canonicalize(ra), canonicalize(rb)
        worst = max(worst, abs(ami(build_contingency(a, b)) - ami_bruteforce(a, b)))
    _report("full-permutation-oracle-equivalence", worst <= 1e-10, f"worst |diff| = {worst:.3e}")


def test_corollary_agreement():
    rng = np.random.default_rng(13)
    worst_sparse = 0.0
    done = 0
    while done < 1000:
        k = int(rng.integers(1, 21))
        l = int(rng.integers(1, 21))
        density = rng.choice([1.0, 0.5, 0.1])
        counts = rng.integers(1, 10, (k, l)) * (rng.random((k, l)) < density)
        if (counts.sum(axis=1) == 0).any() or (counts.sum(axis=0) == 0).any():
            continue
        t = ContingencyTable(counts)
        worst_sparse = max(worst_sparse, abs(pami_dense(t) - pami_sparse(sparsify(t))))
        done += 1

    worst_entropy = 0.0
    for _ in range(1000):
        n = int(rng.integers(1, 120))
        a = canonicalize(rng.integers(0, int(rng.integers(1, n + 1)), n))
        diag = ContingencyTable(np.diag(a.cluster_sizes()))
        worst_entropy = max(
            worst_entropy, abs(pairwise_adjusted_entropy(a) - pami(diag))
        )
    ok = worst_sparse <= 1e-12 and worst_entropy <= 1e-12
    _report(
        "corollary-agreement",
        ok,
        f"sparse-vs-dense {worst_sparse:.3e}, entropy-vs-pami {worst_entropy:.3e}",
    )


def test_trivial_clustering_zeros():
    worst = 0.0
    for n in range(1, 101):
        single = canonicalize([0] * n)
        singletons = canonicalize(range(n))
        other = canonicalize(np.arange(n) // 2)
        for trivial in (single, singletons):
            worst = max(worst, abs(adjusted_entropy(trivial)))
            worst = max(worst, abs(pairwise_adjusted_entropy(trivial)))
            for pair in ((trivial, other), (other, trivial)):
                t = build_contingency(*pair)
                worst = max(worst, abs(ami(t)), abs(pami(t)))
    _report("trivial-clustering-zeros", worst <= 1e-12, f"worst |value| = {worst:.3e}")


def test_similarity_profile_shape():
    ok = True
    details = []
    for metric in ("ami", "pami"):
        report = similarity_profile(100, 10, metric)
        sims = report.similarities
        endpoints = abs(sims[0]) <= 1e-10 and abs(sims[99]) <= 1e-10
        argmax = 1 + max(range(100), key=sims.__getitem__) == 10
        peaks = all(
            sims[s - 1] > sims[s - 2] and sims[s - 1] > sims[s]
            for s in [5, 20, 30, 40, 50, 60, 70, 80, 90]
        )
        ok = ok and endpoints and argmax and peaks
        details.append(f"{metric}: endpoints={endpoints} argmax={argmax} peaks={peaks}")
    _report("figure1-profile-shape", ok, "; ".join(details))


TABLE1_ROWS = [
    (100, 2, 0.972),
    (100, 5, 0.952),
    (100, 10, 0.943),
    (100, 20, 0.955),
    (500, 20, 0.936),
    (1000, 20, 0.933),
    (1000, 50, 0.949),
]


def test_table1_precision_scores():
    ok = True
    details = []
    for n, k, paper_mean in TABLE1_ROWS:
        cfg = PrecisionConfig(n=n, k=k, triplets_per_run=1000, runs=20, seed=42)
        report = precision_experiment(cfg)
        row_ok = abs(report.mean - paper_mean) <= 0.02
        ok = ok and row_ok
        details.append(f"({n},{k}): {report.mean:.4f} vs {paper_mean}")
    _report("table1-precision-scores", ok, "; ".join(details))


def test_complexity_separation():
    report = timing_experiment([10**3, 10**6], k=10, repetitions=5, seed=0)
    med = {
        (row.n, row.metric_name): row.median_seconds for row in report.per_size
    }
    pami_flat = med[(10**6, "pami")] <= 3 * med[(10**3, "pami")]
    ami_slower = med[(10**6, "ami")] >= 10 * med[(10**6, "pami")]
    _report(
        "complexity-separation",
        pami_flat and ami_slower,
        f"pami 1e6/1e3 = {med[(10**6, 'pami')] / med[(10**3, 'pami')]:.2f}x, "
        f"ami/pami at 1e6 = {med[(10**6, 'ami')] / med[(10**6, 'pami')]:.0f}x",
    )


def test_spearman_ordering_analogue():
    values = candidate_ordering_study(n=500, k=5, trials=100, seed=3)
    defined = [v for v in values if v is not None]
    median = statistics.median(defined)
    _report(
        "spearman-ordering-analogue",
        len(defined) == len(values) and median >= 0.9,
        f"median = {median:.4f} over {len(defined)} trials",
    )
