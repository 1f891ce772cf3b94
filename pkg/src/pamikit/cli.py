"""Command-line interface.

Thin client over the service layer: commands run in-process by default,
or against a running server with ``--url``.  Exit codes: 0 success, 2
parse/flag errors, 3 length mismatch between label files.
"""

from __future__ import annotations

import json
import os
import sys

import click

from . import __version__
from .client import ServiceClient
from .errors import LengthMismatch, PamiError
from .experiments import ProfileReport, TimingReport, TimingRow, profile_csv, timing_csv
from .labelfiles import ParseError, read_labels
from .service import (
    METRIC_NAMES,
    CompareRequest,
    InfoRequest,
    PrecisionRequest,
    ProfileRequest,
    TimingRequest,
)

EXIT_PARSE = 2
EXIT_LENGTH = 3


def _fmt(value: float) -> str:
    return format(value, ".12g")


def _load(path: str, column: str | None, skip_header: bool) -> list[str]:
    try:
        return read_labels(path, column=column, skip_header=skip_header)
    except ParseError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_PARSE)


@click.group()
@click.option("--url", default=None, help="Base URL of a running pami server; default in-process.")
@click.version_option(__version__)
@click.pass_context
def main(ctx, url):
    ctx.obj = ServiceClient(url)


@main.command()
@click.argument("file_a")
@click.argument("file_b")
@click.option("--metrics", default=",".join(METRIC_NAMES), show_default=True,
              help="Comma-separated subset of " + ",".join(METRIC_NAMES))
@click.option("--format", "fmt", type=click.Choice(["json", "text"]), default="text")
@click.option("--column", default=None, help="CSV column name holding the labels (implies header).")
@click.option("--skip-header", is_flag=True, help="Skip the first row of each file.")
@click.pass_obj
def compare(client: ServiceClient, file_a, file_b, metrics, fmt, column, skip_header):
    """Compare the clusterings in two label files."""
    names = [m.strip() for m in metrics.split(",") if m.strip()]
    unknown = [m for m in names if m not in METRIC_NAMES]
    if unknown:
        raise click.UsageError(f"unknown metrics: {', '.join(unknown)}")
    labels_a = _load(file_a, column, skip_header)
    labels_b = _load(file_b, column, skip_header)
    try:
        resp = client.compare(CompareRequest(labels_a=labels_a, labels_b=labels_b, metrics=names))
    except LengthMismatch as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_LENGTH)
    except PamiError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_PARSE)
    if fmt == "json":
        click.echo(json.dumps(resp.model_dump(), indent=2))
    else:
        for name in names:
            click.echo(f"{name:12s} {_fmt(resp.metrics[name])}")


@main.command()
@click.argument("file_a")
@click.option("--format", "fmt", type=click.Choice(["json", "text"]), default="text")
@click.option("--column", default=None)
@click.option("--skip-header", is_flag=True)
@click.pass_obj
def info(client: ServiceClient, file_a, fmt, column, skip_header):
    """Entropy and (pairwise) adjusted entropy of one clustering."""
    labels = _load(file_a, column, skip_header)
    resp = client.info(InfoRequest(labels=labels))
    if fmt == "json":
        click.echo(json.dumps(resp.model_dump(), indent=2))
    else:
        click.echo(f"n                         {resp.n}")
        click.echo(f"k                         {resp.k}")
        click.echo(f"entropy                   {_fmt(resp.entropy)}")
        click.echo(f"adjusted_entropy          {_fmt(resp.adjusted_entropy)}")
        click.echo(f"pairwise_adjusted_entropy {_fmt(resp.pairwise_adjusted_entropy)}")


@main.group()
def experiment():
    """Run the synthetic experiment suites."""


def _write_outputs(writes):
    """Write (path, content) pairs; on failure remove partial outputs."""
    written = []
    try:
        for path, content in writes:
            with open(path, "w") as handle:
                handle.write(content)
            written.append(path)
    except Exception:
        for path in written:
            try:
                os.unlink(path)
            except OSError:
                pass
        raise


@experiment.command()
@click.option("--n", default=100, show_default=True)
@click.option("--s-ref", default=10, show_default=True)
@click.option("--metric", type=click.Choice(["ami", "pami"]), default="pami", show_default=True)
@click.option("--out", default=None, help="CSV output path (s, similarity rows).")
@click.option("--json-out", default=None, help="JSON report path.")
@click.pass_obj
def profile(client: ServiceClient, n, s_ref, metric, out, json_out):
    """Similarity of block clusterings A^(s_ref) vs A^(s), s = 1..n."""
    resp = client.profile(ProfileRequest(n=n, s_ref=s_ref, metric=metric))
    report = ProfileReport(**resp.results)
    writes = []
    if out:
        writes.append((out, profile_csv(report)))
    if json_out:
        writes.append((json_out, json.dumps(resp.model_dump(), indent=2)))
    if writes:
        _write_outputs(writes)
    else:
        click.echo(json.dumps(resp.model_dump(), indent=2))
        return
    best = report.s_values[max(range(len(report.similarities)), key=report.similarities.__getitem__)]
    click.echo(f"profile: n={n} ref={s_ref} metric={metric} argmax_s={best}")


@experiment.command()
@click.option("--n", required=True, type=int)
@click.option("--k", required=True, type=int)
@click.option("--triplets", default=1000, show_default=True)
@click.option("--runs", default=100, show_default=True)
@click.option("--seed", default=0, show_default=True)
@click.option("--out", default=None, help="JSON report path (default: stdout).")
@click.pass_obj
def precision(client: ServiceClient, n, k, triplets, runs, seed, out):
    """Ordering-agreement rate of the two adjusted metrics."""
    resp = client.precision(
        PrecisionRequest(n=n, k=k, triplets=triplets, runs=runs, seed=seed)
    )
    payload = json.dumps(resp.model_dump(), indent=2)
    if out:
        _write_outputs([(out, payload)])
    else:
        click.echo(payload)
    results = resp.results
    click.echo(f"precision: n={n} k={k} mean={_fmt(results['mean'])} std={_fmt(results['std'])}")


def _parse_sizes(spec: str) -> list[int]:
    if ".." in spec:
        lo_s, hi_s = spec.split("..", 1)
        lo, hi = int(float(lo_s)), int(float(hi_s))
        sizes = []
        size = lo
        while size <= hi:
            sizes.append(size)
            size *= 10
        return sizes
    return [int(float(tok)) for tok in spec.split(",") if tok.strip()]


@experiment.command()
@click.option("--k", default=10, show_default=True)
@click.option("--sizes", default="1e2..1e6", show_default=True,
              help="Comma list of n values, or 'a..b' for decades.")
@click.option("--reps", default=5, show_default=True)
@click.option("--seed", default=0, show_default=True)
@click.option("--out", default=None, help="JSON report path (default: stdout).")
@click.option("--csv-out", default=None, help="CSV timing table path.")
@click.pass_obj
def timing(client: ServiceClient, k, sizes, reps, seed, out, csv_out):
    """Wall-clock timing of ami/pami as n grows."""
    try:
        size_list = _parse_sizes(sizes)
    except ValueError:
        raise click.UsageError(f"cannot parse --sizes {sizes!r}")
    if not size_list:
        raise click.UsageError("--sizes is empty")
    resp = client.timing(TimingRequest(sizes=size_list, k=k, reps=reps, seed=seed))
    report = TimingReport(
        k=resp.results["k"],
        repetitions=resp.results["repetitions"],
        seed=resp.results["seed"],
        per_size=[TimingRow(**row) for row in resp.results["per_size"]],
    )
    writes = []
    if out:
        writes.append((out, json.dumps(resp.model_dump(), indent=2)))
    if csv_out:
        writes.append((csv_out, timing_csv(report)))
    if writes:
        _write_outputs(writes)
    else:
        click.echo(json.dumps(resp.model_dump(), indent=2))
    by_metric = {}
    for row in report.per_size:
        by_metric.setdefault(row.metric_name, []).append(row)
    summary = ", ".join(
        f"{name}@n={rows[-1].n}: {rows[-1].mean_seconds:.3e}s" for name, rows in by_metric.items()
    )
    click.echo(f"timing: {summary}")


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8000, show_default=True)
def serve(host, port):
    """Start the HTTP service."""
    import uvicorn

    uvicorn.run("pamikit.service:app", host=host, port=port)


if __name__ == "__main__":
    main()
