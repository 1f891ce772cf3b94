"""FastAPI service exposing the metrics and experiment harnesses.

The route handlers delegate to plain functions (``compare_labelings``,
``labeling_info``, ``run_*``) that the CLI also calls in-process, so
local and remote invocations share one request/response schema.
"""

from __future__ import annotations

from typing import Optional, Union

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from . import __version__
from .errors import EmptyInput, LengthMismatch, PamiError
from .experiments import (
    PrecisionConfig,
    precision_experiment,
    report_envelope,
    similarity_profile,
    timing_experiment,
)
from .metrics import (
    adjusted_entropy,
    ami,
    build_contingency,
    canonicalize,
    entropy,
    expected_mi_full,
    mutual_information,
    pairwise_adjusted_entropy,
    pami,
    pami_sparse,
    sparsify,
    variation_of_information,
)

Label = Union[int, str]

METRIC_NAMES = ("mi", "vi", "ami", "pami", "pami-sparse", "emi")

_TABLE_METRICS = {
    "mi": mutual_information,
    "vi": variation_of_information,
    "ami": ami,
    "pami": pami,
    "pami-sparse": lambda t: pami_sparse(sparsify(t)),
    "emi": expected_mi_full,
}


class CompareRequest(BaseModel):
    labels_a: list[Label]
    labels_b: list[Label]
    metrics: list[str] = Field(default_factory=lambda: list(METRIC_NAMES))


class CompareResponse(BaseModel):
    n: int
    k: int
    l: int
    metrics: dict[str, float]


class InfoRequest(BaseModel):
    labels: list[Label]


class InfoResponse(BaseModel):
    n: int
    k: int
    entropy: float
    adjusted_entropy: float
    pairwise_adjusted_entropy: float


class ProfileRequest(BaseModel):
    n: int = 100
    s_ref: int = 10
    metric: str = "pami"


class PrecisionRequest(BaseModel):
    n: int
    k: int
    triplets: int = 1000
    runs: int = 100
    seed: int = 0


class TimingRequest(BaseModel):
    sizes: list[int]
    k: int = 10
    reps: int = 5
    seed: int = 0


class ReportResponse(BaseModel):
    config: dict
    results: Union[list, dict]
    seed: Optional[int]
    tool_version: str


def compare_labelings(req: CompareRequest) -> CompareResponse:
    unknown = [m for m in req.metrics if m not in _TABLE_METRICS]
    if unknown:
        raise PamiError(f"unknown metrics: {', '.join(unknown)}")
    a = canonicalize(req.labels_a)
    b = canonicalize(req.labels_b)
    table = build_contingency(a, b)
    values = {name: _TABLE_METRICS[name](table) for name in req.metrics}
    return CompareResponse(n=table.total, k=table.k, l=table.l, metrics=values)


def labeling_info(req: InfoRequest) -> InfoResponse:
    labeling = canonicalize(req.labels)
    return InfoResponse(
        n=labeling.n,
        k=labeling.k,
        entropy=entropy(labeling.cluster_sizes()),
        adjusted_entropy=adjusted_entropy(labeling),
        pairwise_adjusted_entropy=pairwise_adjusted_entropy(labeling),
    )


def run_profile(req: ProfileRequest) -> ReportResponse:
    report = similarity_profile(req.n, req.s_ref, req.metric)
    envelope = report_envelope(req.model_dump(), report.to_dict(), seed=None)
    return ReportResponse(**envelope)


def run_precision(req: PrecisionRequest) -> ReportResponse:
    cfg = PrecisionConfig(
        n=req.n, k=req.k, triplets_per_run=req.triplets, runs=req.runs, seed=req.seed
    )
    report = precision_experiment(cfg)
    envelope = report_envelope(req.model_dump(), report.to_dict(), seed=req.seed)
    return ReportResponse(**envelope)


def run_timing(req: TimingRequest) -> ReportResponse:
    report = timing_experiment(req.sizes, req.k, repetitions=req.reps, seed=req.seed)
    envelope = report_envelope(req.model_dump(), report.to_dict(), seed=req.seed)
    return ReportResponse(**envelope)


app = FastAPI(title="pamikit", version=__version__)


def _wrap(fn, req):
    try:
        return fn(req)
    except LengthMismatch as exc:
        raise HTTPException(status_code=400, detail={"code": "length_mismatch", "message": str(exc)})
    except (EmptyInput, PamiError, ValueError, KeyError) as exc:
        raise HTTPException(status_code=400, detail={"code": "invalid_input", "message": str(exc)})


@app.get("/health")
def health():
    return {"status": "ok", "version": __version__}


@app.post("/metrics/compare", response_model=CompareResponse)
def compare_endpoint(req: CompareRequest):
    return _wrap(compare_labelings, req)


@app.post("/metrics/info", response_model=InfoResponse)
def info_endpoint(req: InfoRequest):
    return _wrap(labeling_info, req)


@app.post("/experiments/profile", response_model=ReportResponse)
def profile_endpoint(req: ProfileRequest):
    return _wrap(run_profile, req)


@app.post("/experiments/precision", response_model=ReportResponse)
def precision_endpoint(req: PrecisionRequest):
    return _wrap(run_precision, req)


@app.post("/experiments/timing", response_model=ReportResponse)
def timing_endpoint(req: TimingRequest):
    return _wrap(run_timing, req)
