"""Synthetic-clustering experiment harnesses.

Three studies: the block-clustering similarity profile, the precision
score comparing full and pairwise adjustment on random-clustering
triplets, and wall-clock timing of the metrics as n grows.  All
stochastic procedures derive per-trial substreams from the configured
seed (see :mod:`pamikit.synthetic`), so reports are reproducible.
"""

from __future__ import annotations

import csv
import io
import math
import statistics
import time
from dataclasses import asdict, dataclass, field

import numpy as np
from scipy import stats as sstats

from . import __version__ as _version
from .errors import LengthMismatch
from .metrics import (
    Labeling,
    ami,
    build_contingency,
    pami,
    pami_sparse,
    sparsify,
)
from .synthetic import block_clustering, random_clustering, trial_rng

__all__ = [
    "ProfileReport",
    "PrecisionConfig",
    "PrecisionReport",
    "TimingReport",
    "TimingRow",
    "OrderingReport",
    "similarity_profile",
    "precision_experiment",
    "timing_experiment",
    "spearman",
    "ordering_agreement",
    "candidate_ordering_study",
    "report_envelope",
    "profile_csv",
    "timing_csv",
]

_METRICS = {"ami": ami, "pami": pami}


@dataclass(frozen=True)
class ProfileReport:
    """Similarity of block clusterings A^(ref) vs A^(s) for s = 1..n."""

    metric_name: str
    s_values: list
    similarities: list

    def to_dict(self) -> dict:
        return asdict(self)


def similarity_profile(n: int, reference_s: int, metric: str = "pami") -> ProfileReport:
    fn = _METRICS[metric]
    ref = block_clustering(n, reference_s)
    sims = [fn(build_contingency(ref, block_clustering(n, s))) for s in range(1, n + 1)]
    return ProfileReport(metric_name=metric, s_values=list(range(1, n + 1)), similarities=sims)


@dataclass(frozen=True)
class PrecisionConfig:
    n: int
    k: int
    triplets_per_run: int = 1000
    runs: int = 100
    seed: int = 0

    def __post_init__(self):
        for name in ("n", "k", "triplets_per_run", "runs"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be >= 1")


@dataclass(frozen=True)
class PrecisionReport:
    """Fraction of triplets on which both adjustments agree on ordering."""

    config: PrecisionConfig
    per_run_scores: list
    mean: float
    std: float

    def to_dict(self) -> dict:
        return asdict(self)


def precision_experiment(cfg: PrecisionConfig) -> PrecisionReport:
    """Agreement rate of the two adjusted metrics on random triplets.

    Per triplet, A, B, C are random clusterings from independent
    substreams; agreement means (s(A,B) - s(A,C)) and (s_p(A,B) -
    s_p(A,C)) do not have strictly opposite signs (ties count as
    agreement).
    """
    scores = []
    for run in range(cfg.runs):
        hits = 0
        for t in range(cfg.triplets_per_run):
            labelings = [
                random_clustering(cfg.n, cfg.k, trial_rng(cfg.seed, run, t, which))
                for which in range(3)
            ]
            a, b, c = labelings
            t_ab = build_contingency(a, b)
            t_ac = build_contingency(a, c)
            full = ami(t_ab) - ami(t_ac)
            pairwise = pami(t_ab) - pami(t_ac)
            if full * pairwise >= 0:
                hits += 1
        scores.append(hits / cfg.triplets_per_run)
    mean = statistics.fmean(scores)
    std = statistics.stdev(scores) if len(scores) > 1 else 0.0
    return PrecisionReport(config=cfg, per_run_scores=scores, mean=mean, std=std)


@dataclass(frozen=True)
class TimingRow:
    n: int
    metric_name: str
    mean_seconds: float
    std_seconds: float
    median_seconds: float
    repetitions: int


@dataclass(frozen=True)
class TimingReport:
    k: int
    repetitions: int
    seed: int
    per_size: list

    def to_dict(self) -> dict:
        return asdict(self)


def _time_call(fn, repetitions: int, min_block: float = 0.02):
    """Wall-clock stats for fn(), warm-up excluded.

    Cheap calls are repeated in an inner loop until each timed block
    lasts at least ``min_block`` seconds, so per-call times stay
    meaningful down to the microsecond range.
    """
    fn()  # warm-up, excluded
    start = time.perf_counter()
    fn()
    once = time.perf_counter() - start
    loops = max(1, int(math.ceil(min_block / max(once, 1e-9))))
    loops = min(loops, 1_000_000)
    samples = []
    for _ in range(repetitions):
        start = time.perf_counter()
        for _ in range(loops):
            fn()
        samples.append((time.perf_counter() - start) / loops)
    return (
        statistics.fmean(samples),
        statistics.stdev(samples) if len(samples) > 1 else 0.0,
        statistics.median(samples),
    )


def timing_experiment(sizes, k: int, repetitions: int = 5, seed: int = 0) -> TimingReport:
    """Time ami/pami/pami_sparse for each n, given the table and end-to-end.

    A is k equal-size blocks, B a random clustering with the same k.
    Rows suffixed ``_e2e`` include contingency-table construction from
    the label arrays.
    """
    if not sizes:
        raise ValueError("sizes must be non-empty")
    if k < 1 or repetitions < 3:
        raise ValueError("need k >= 1 and repetitions >= 3")
    rows = []
    for idx, n in enumerate(sizes):
        n = int(n)
        a = block_clustering(n, max(1, math.ceil(n / k)))
        b = random_clustering(n, min(k, n), trial_rng(seed, idx))
        table = build_contingency(a, b)
        sparse = sparsify(table)
        timed = {
            "ami": lambda: ami(table),
            "pami": lambda: pami(table),
            "pami_sparse": lambda: pami_sparse(sparse),
            "ami_e2e": lambda: ami(build_contingency(a, b)),
            "pami_e2e": lambda: pami(build_contingency(a, b)),
        }
        for name, fn in timed.items():
            mean, std, median = _time_call(fn, repetitions)
            rows.append(
                TimingRow(
                    n=n,
                    metric_name=name,
                    mean_seconds=mean,
                    std_seconds=std,
                    median_seconds=median,
                    repetitions=repetitions,
                )
            )
    return TimingReport(k=k, repetitions=repetitions, seed=seed, per_size=rows)


def spearman(xs, ys):
    """Spearman rank correlation with average ranks for ties.

    Returns None (explicit undefined marker) when either sequence is
    constant; never returns NaN.
    """
    xs = np.asarray(xs, dtype=np.float64)
    ys = np.asarray(ys, dtype=np.float64)
    if xs.shape != ys.shape or xs.ndim != 1 or xs.size < 2:
        raise LengthMismatch("spearman needs two equal-length sequences of length >= 2")
    if np.all(xs == xs[0]) or np.all(ys == ys[0]):
        return None
    rx = sstats.rankdata(xs)
    ry = sstats.rankdata(ys)
    return float(np.corrcoef(rx, ry)[0, 1])


@dataclass(frozen=True)
class OrderingReport:
    spearman: object
    ami_scores: list
    pami_scores: list

    def to_dict(self) -> dict:
        return asdict(self)


def ordering_agreement(ground_truth: Labeling, candidates) -> OrderingReport:
    """Score each candidate against the ground truth with both metrics
    and correlate the two orderings."""
    if len(candidates) < 2:
        raise LengthMismatch("need at least two candidate labelings")
    ami_scores, pami_scores = [], []
    for cand in candidates:
        table = build_contingency(ground_truth, cand)
        ami_scores.append(ami(table))
        pami_scores.append(pami(table))
    return OrderingReport(
        spearman=spearman(ami_scores, pami_scores),
        ami_scores=ami_scores,
        pami_scores=pami_scores,
    )


def _perturb(labels: Labeling, rate: float, k: int, rng: np.random.Generator) -> Labeling:
    out = np.array(labels.labels)
    flip = rng.random(out.size) < rate
    out[flip] = rng.integers(0, k, size=int(flip.sum()))
    return Labeling(_compact(out))


def _compact(arr: np.ndarray) -> np.ndarray:
    _, first, inv = np.unique(arr, return_index=True, return_inverse=True)
    order = np.empty(first.size, dtype=np.int64)
    order[np.argsort(first, kind="stable")] = np.arange(first.size)
    return order[inv]


def candidate_ordering_study(n: int = 500, k: int = 5, trials: int = 100, seed: int = 0):
    """Spearman correlation of ami- and pami-orderings over candidate pools.

    Each trial builds a random ground truth and ten candidates (perturbed
    copies, block clusterings, fresh random clusterings) and records the
    correlation of the two score vectors.  Returns the per-trial values;
    None entries (fully tied orderings) are kept as-is.
    """
    values = []
    for t in range(trials):
        rng = trial_rng(seed, t)
        gt = random_clustering(n, k, rng)
        candidates = [_perturb(gt, rate, k, rng) for rate in (0.05, 0.15, 0.3, 0.5, 0.8)]
        for kk in (max(2, k // 2), k, 2 * k):
            candidates.append(random_clustering(n, min(kk, n), rng))
        candidates.append(block_clustering(n, max(1, n // k)))
        candidates.append(block_clustering(n, max(1, n // (3 * k))))
        values.append(ordering_agreement(gt, candidates).spearman)
    return values


def report_envelope(config: dict, results, seed) -> dict:
    """Common JSON report wrapper: config echo, results, seed, version."""
    return {"config": config, "results": results, "seed": seed, "tool_version": _version}


def profile_csv(report: ProfileReport) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["s", "similarity"])
    for s, value in zip(report.s_values, report.similarities):
        writer.writerow([s, repr(value)])
    return buf.getvalue()


def timing_csv(report: TimingReport) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["n", "metric", "mean_s", "std_s", "median_s", "repetitions"])
    for row in report.per_size:
        writer.writerow(
            [row.n, row.metric_name, repr(row.mean_seconds), repr(row.std_seconds),
             repr(row.median_seconds), row.repetitions]
        )
    return buf.getvalue()
