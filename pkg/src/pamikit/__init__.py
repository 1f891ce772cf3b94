"""Pairwise-adjusted and classical adjusted mutual information for
comparing clusterings, with exhaustive oracles, synthetic experiment
harnesses, a FastAPI service and a CLI."""

__version__ = "0.1.0"

from .errors import (
    DegenerateInput,
    EmptyInput,
    InvalidK,
    InvalidMarginal,
    InvalidSize,
    LengthMismatch,
    PamiError,
    TooLarge,
)
from .metrics import (
    ContingencyTable,
    Labeling,
    SparseContingencyTable,
    adjusted_entropy,
    ami,
    build_contingency,
    canonicalize,
    densify,
    entropy,
    expected_mi_full,
    mutual_information,
    pairwise_adjusted_entropy,
    pami,
    pami_dense,
    pami_sparse,
    sparsify,
    variation_of_information,
)

__all__ = [
    "__version__",
    "PamiError",
    "EmptyInput",
    "LengthMismatch",
    "InvalidMarginal",
    "InvalidSize",
    "InvalidK",
    "TooLarge",
    "DegenerateInput",
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
