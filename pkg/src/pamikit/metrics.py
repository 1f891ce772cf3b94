"""Information-theoretic clustering metrics on contingency tables.

All values are in nats. The central objects are:

* ``Labeling`` -- a canonicalized assignment of n samples to clusters.
* ``ContingencyTable`` / ``SparseContingencyTable`` -- the k x l count
  matrix with marginals, the input to every metric.

Metrics: entropy, mutual information (MI), variation of information (VI),
expected MI under the full label-permutation model (EMI), adjusted MI
(AMI = MI - EMI), pairwise adjusted MI (PAMI, closed form in O(kl) or
O(nnz) sparse), and the two adjusted entropies (self-similarities).

Everything here is a pure function of immutable inputs; no caching, no
shared state.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.special import gammaln

from .errors import EmptyInput, InvalidMarginal, LengthMismatch

__all__ = [
    "Labeling",
    "ContingencyTable",
    "SparseContingencyTable",
    "canonicalize",
    "build_contingency",
    "entropy",
    "mutual_information",
    "variation_of_information",
    "expected_mi_full",
    "ami",
    "adjusted_entropy",
    "pami",
    "pami_dense",
    "pami_sparse",
    "pairwise_adjusted_entropy",
    "sparsify",
    "densify",
]

# pami() switches to the sparse path when the table is large and mostly
# zeros; the sparse correction term has constant overhead, so small
# tables are faster dense.
_SPARSE_DENSITY_THRESHOLD = 0.25
_SPARSE_CELLS_THRESHOLD = 1024


@dataclass(frozen=True)
class Labeling:
    """Cluster assignment of n samples, labels canonicalized to 0..k-1.

    Labels are consecutive integers in order of first appearance; use
    :func:`canonicalize` to build one from arbitrary tokens.
    """

    labels: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.labels, dtype=np.int64)
        arr.setflags(write=False)
        object.__setattr__(self, "labels", arr)
        if arr.ndim != 1 or arr.size == 0:
            raise EmptyInput("labeling must be a non-empty 1-d sequence")

    @property
    def n(self) -> int:
        return int(self.labels.size)

    @property
    def k(self) -> int:
        return int(self.labels.max()) + 1

    def cluster_sizes(self) -> np.ndarray:
        return np.bincount(self.labels, minlength=self.k)


def canonicalize(raw_labels) -> Labeling:
    """Remap arbitrary hashable labels to 0..k-1 by first appearance."""
    if hasattr(raw_labels, "__len__") and len(raw_labels) == 0:
        raise EmptyInput("empty label sequence")
    arr = np.asarray(raw_labels)
    if arr.size == 0:
        raise EmptyInput("empty label sequence")
    if arr.dtype.kind in "iub":
        # fast path: unique() sorts, so re-rank the codes by first index
        _, first_idx, inverse = np.unique(arr, return_index=True, return_inverse=True)
        order = np.empty(first_idx.size, dtype=np.int64)
        order[np.argsort(first_idx, kind="stable")] = np.arange(first_idx.size)
        return Labeling(order[inverse])
    seen: dict = {}
    out = np.empty(arr.size, dtype=np.int64)
    for pos, token in enumerate(arr.ravel()):
        code = seen.get(token)
        if code is None:
            code = len(seen)
            seen[token] = code
        out[pos] = code
    return Labeling(out)


@dataclass(frozen=True)
class ContingencyTable:
    """Dense k x l table of pair counts n_ij with marginals.

    Invariants: counts sum to ``total``, row/col sums match the stored
    marginals, and no marginal is zero (empty clusters are impossible
    after canonicalization).
    """

    counts: np.ndarray
    row_sums: np.ndarray = field(default=None)
    col_sums: np.ndarray = field(default=None)
    total: int = field(default=None)
    nnz: int = field(default=None)

    def __post_init__(self):
        counts = np.asarray(self.counts, dtype=np.int64)
        if counts.ndim != 2:
            raise InvalidMarginal("counts must be a 2-d matrix")
        if (counts < 0).any():
            raise InvalidMarginal("counts must be non-negative")
        row = counts.sum(axis=1)
        col = counts.sum(axis=0)
        tot = int(counts.sum())
        if tot < 1:
            raise EmptyInput("contingency table must contain at least one sample")
        if (row < 1).any() or (col < 1).any():
            raise InvalidMarginal("contingency table has an empty row or column")
        if self.row_sums is not None and not np.array_equal(row, np.asarray(self.row_sums)):
            raise InvalidMarginal("row_sums inconsistent with counts")
        if self.col_sums is not None and not np.array_equal(col, np.asarray(self.col_sums)):
            raise InvalidMarginal("col_sums inconsistent with counts")
        if self.total is not None and self.total != tot:
            raise InvalidMarginal("total inconsistent with counts")
        for name, value in (
            ("counts", counts),
            ("row_sums", row),
            ("col_sums", col),
            ("total", tot),
            ("nnz", int((counts > 0).sum())),
        ):
            if isinstance(value, np.ndarray):
                value.setflags(write=False)
            object.__setattr__(self, name, value)

    @property
    def k(self) -> int:
        return self.counts.shape[0]

    @property
    def l(self) -> int:
        return self.counts.shape[1]

    def transpose(self) -> "ContingencyTable":
        return ContingencyTable(self.counts.T.copy())


@dataclass(frozen=True)
class SparseContingencyTable:
    """Triplet-format contingency table: only strictly positive cells."""

    rows: np.ndarray
    cols: np.ndarray
    values: np.ndarray
    row_sums: np.ndarray
    col_sums: np.ndarray
    total: int

    def __post_init__(self):
        rows = np.asarray(self.rows, dtype=np.int64)
        cols = np.asarray(self.cols, dtype=np.int64)
        values = np.asarray(self.values, dtype=np.int64)
        if not (rows.size == cols.size == values.size):
            raise LengthMismatch("rows, cols, values must have equal length")
        if (values <= 0).any():
            raise InvalidMarginal("sparse entries must be strictly positive")
        keys = rows * (np.max(cols, initial=0) + 1) + cols
        if np.unique(keys).size != keys.size:
            raise InvalidMarginal("duplicate (i, j) keys in sparse table")
        for name, value in (
            ("rows", rows),
            ("cols", cols),
            ("values", values),
            ("row_sums", np.asarray(self.row_sums, dtype=np.int64)),
            ("col_sums", np.asarray(self.col_sums, dtype=np.int64)),
            ("total", int(self.total)),
        ):
            if isinstance(value, np.ndarray):
                value.setflags(write=False)
            object.__setattr__(self, name, value)

    @property
    def nnz(self) -> int:
        return int(self.values.size)

    @property
    def entries(self):
        return list(zip(self.rows.tolist(), self.cols.tolist(), self.values.tolist()))


def sparsify(t: ContingencyTable) -> SparseContingencyTable:
    rows, cols = np.nonzero(t.counts)
    return SparseContingencyTable(
        rows=rows,
        cols=cols,
        values=t.counts[rows, cols],
        row_sums=t.row_sums,
        col_sums=t.col_sums,
        total=t.total,
    )


def densify(s: SparseContingencyTable) -> ContingencyTable:
    counts = np.zeros((s.row_sums.size, s.col_sums.size), dtype=np.int64)
    counts[s.rows, s.cols] = s.values
    return ContingencyTable(counts)


def build_contingency(a: Labeling, b: Labeling) -> ContingencyTable:
    """Count co-occurrences: counts[i, j] = |{w : a(w)=i, b(w)=j}|."""
    if a.n != b.n:
        raise LengthMismatch(f"labelings have lengths {a.n} and {b.n}")
    k, l = a.k, b.k
    flat = np.bincount(a.labels * l + b.labels, minlength=k * l)
    return ContingencyTable(flat.reshape(k, l))


def _xlnx(x: np.ndarray) -> np.ndarray:
    """x * ln(x), with the convention x ln x = 0 for x <= 0."""
    x = np.asarray(x, dtype=np.float64)
    out = np.zeros_like(x)
    pos = x > 0
    out[pos] = x[pos] * np.log(x[pos])
    return out


def entropy(marginal) -> float:
    """Shannon entropy -sum (c_i/n) ln(c_i/n) of a cluster-size vector."""
    counts = np.asarray(marginal, dtype=np.int64)
    if counts.size == 0 or (counts <= 0).any():
        raise InvalidMarginal("marginal counts must all be >= 1")
    n = counts.sum()
    p = counts / n
    return float(-np.sum(p * np.log(p)))


def _joint_entropy(t: ContingencyTable) -> float:
    p = t.counts[t.counts > 0] / t.total
    return float(-np.sum(p * np.log(p)))


def mutual_information(t: ContingencyTable) -> float:
    """MI = H(a) + H(b) - H(joint), computed over nonzero cells."""
    n = t.total
    rows, cols = np.nonzero(t.counts)
    nij = t.counts[rows, cols].astype(np.float64)
    terms = (nij / n) * (
        np.log(nij) + np.log(n) - np.log(t.row_sums[rows]) - np.log(t.col_sums[cols])
    )
    return float(np.sum(terms))


def variation_of_information(t: ContingencyTable) -> float:
    """VI = H(joint) - MI = H(X|Y) + H(Y|X)."""
    return _joint_entropy(t) - mutual_information(t)


def expected_mi_full(t: ContingencyTable, _chunk_cells: int = 2_000_000) -> float:
    """Expected MI under uniformly random full label permutations.

    Hypergeometric closed form: for each cell (i, j) the overlap c ranges
    over (a_i + b_j - n)^+ .. min(a_i, b_j) and contributes
    P_hyp(c; n, a_i, b_j) * (c/n) * ln(n c / (a_i b_j)).  Factorial
    ratios are evaluated as differences of log-gamma values, looked up
    in a table over the integers 0..n so repeated arguments are free.
    Time O(max(k, l) * n).
    """
    n = t.total
    a = t.row_sums.astype(np.int64)
    b = t.col_sums.astype(np.int64)
    # log Gamma(x + 1) = log(x!) for x = 0..n
    lgamma = gammaln(np.arange(n + 2, dtype=np.float64))

    ai = np.repeat(a, b.size)
    bj = np.tile(b, a.size)
    # c = 0 contributes nothing; start the support at 1
    cmin = np.maximum(1, ai + bj - n)
    cmax = np.minimum(ai, bj)
    lens = np.maximum(cmax - cmin + 1, 0)

    log_n = np.log(n)
    cell_const = (
        lgamma[ai + 1]
        + lgamma[bj + 1]
        + lgamma[n - ai + 1]
        + lgamma[n - bj + 1]
        - lgamma[n + 1]
    )
    log_ab = np.log(ai.astype(np.float64)) + np.log(bj.astype(np.float64))

    total = 0.0
    ncells = ai.size
    start = 0
    while start < ncells:
        # bound the flattened work per chunk to keep memory flat
        stop = start
        budget = 0
        while stop < ncells and (budget == 0 or budget + lens[stop] <= _chunk_cells):
            budget += int(lens[stop])
            stop += 1
        sl = slice(start, stop)
        ln = lens[sl]
        m = int(ln.sum())
        if m > 0:
            idx = np.repeat(np.arange(stop - start), ln)
            within = np.arange(m) - np.repeat(np.cumsum(ln) - ln, ln)
            c = cmin[sl][idx] + within
            log_w = (
                cell_const[sl][idx]
                - lgamma[c + 1]
                - lgamma[ai[sl][idx] - c + 1]
                - lgamma[bj[sl][idx] - c + 1]
                - lgamma[n - ai[sl][idx] - bj[sl][idx] + c + 1]
            )
            cf = c.astype(np.float64)
            terms = np.exp(log_w) * (cf / n) * (np.log(cf) + log_n - log_ab[sl][idx])
            total += float(np.sum(terms))
        start = stop
    return total


def ami(t: ContingencyTable) -> float:
    """Adjusted mutual information, unnormalized: MI - EMI."""
    return mutual_information(t) - expected_mi_full(t)


def _diagonal_table(a: Labeling) -> ContingencyTable:
    sizes = a.cluster_sizes()
    return ContingencyTable(np.diag(sizes))


def adjusted_entropy(a: Labeling) -> float:
    """Chance-corrected information content of one clustering: AMI(A, A)."""
    return ami(_diagonal_table(a))


def pami_dense(t: ContingencyTable) -> float:
    """Pairwise adjusted MI, dense closed form in O(kl).

    Two double sums over all cells; zero cells still contribute through
    the second term, where the bracket degenerates to -(1/n) ln(1/n).
    """
    n = t.total
    nij = t.counts.astype(np.float64)
    a = t.row_sums.astype(np.float64)[:, None]
    b = t.col_sums.astype(np.float64)[None, :]

    x0 = _xlnx(nij / n)
    first = nij * (n - a - b + nij) / (n * n) * (x0 - _xlnx((nij - 1) / n))
    second = (a - nij) * (b - nij) / (n * n) * (x0 - _xlnx((nij + 1) / n))
    return float(2.0 * (np.sum(first) + np.sum(second)))


def pami_sparse(s: SparseContingencyTable) -> float:
    """Pairwise adjusted MI from a sparse table in O(nnz).

    The two sums run over positive cells only; the contribution of zero
    cells is folded into a closed-form correction involving the squared
    marginals.
    """
    n = s.total
    nij = s.values.astype(np.float64)
    a = s.row_sums.astype(np.float64)[s.rows]
    b = s.col_sums.astype(np.float64)[s.cols]

    unit = (1.0 / n) * np.log(1.0 / n)
    x0 = _xlnx(nij / n)
    first = nij * (n - a - b + nij) / (n * n) * (x0 - _xlnx((nij - 1) / n))
    second = (a - nij) * (b - nij) / (n * n) * (x0 - _xlnx((nij + 1) / n) + unit)
    correction = (
        float(n) * n
        - float(np.sum(s.row_sums.astype(np.float64) ** 2))
        - float(np.sum(s.col_sums.astype(np.float64) ** 2))
        + float(np.sum(nij**2))
    ) * unit / (n * n)
    return float(2.0 * (np.sum(first) + np.sum(second) - correction))


def pami(t: ContingencyTable) -> float:
    """Pairwise adjusted MI; dispatches to the sparse path on large
    mostly-zero tables."""
    cells = t.k * t.l
    if cells > _SPARSE_CELLS_THRESHOLD and t.nnz < _SPARSE_DENSITY_THRESHOLD * cells:
        return pami_sparse(sparsify(t))
    return pami_dense(t)


def pairwise_adjusted_entropy(a: Labeling) -> float:
    """Pairwise adjusted information content of one clustering, O(k).

    Closed form: 2 sum_i a_i (n - a_i) / n^2 *
    ((a_i/n) ln(a_i/n) - ((a_i-1)/n) ln((a_i-1)/n) - (1/n) ln(1/n)).
    Equals pami() on the diagonal table of A vs A.
    """
    sizes = a.cluster_sizes().astype(np.float64)
    n = a.n
    unit = (1.0 / n) * np.log(1.0 / n)
    bracket = _xlnx(sizes / n) - _xlnx((sizes - 1) / n) - unit
    return float(2.0 * np.sum(sizes * (n - sizes) / (n * n) * bracket))
