#!/usr/bin/env python3
"""Build the parity fixtures consumed by the TypeScript client tests.

* parity_corpus.json: 100 random label pairs with the ami/pami values
  produced by the core CLI (`pami compare --format json`).
* emi_corpus.json: 200 random label pairs (n <= 500) with the expected
  mutual information from scikit-learn as an external reference.

Run from the bindings/ directory with the Python package installed:
    python3 scripts/generate_fixtures.py
"""

import json
import os
import tempfile

import numpy as np
from click.testing import CliRunner
from sklearn.metrics.cluster import contingency_matrix, expected_mutual_information

from pamikit.cli import main as cli_main

OUT_DIR = os.path.join(os.path.dirname(__file__), "..", "fixtures")


def random_pair(rng, max_n):
    n = int(rng.integers(2, max_n + 1))
    ka = int(rng.integers(1, min(n, 12) + 1))
    kb = int(rng.integers(1, min(n, 12) + 1))
    return rng.integers(0, ka, n).tolist(), rng.integers(0, kb, n).tolist()


def cli_compare(runner, labels_a, labels_b):
    with tempfile.TemporaryDirectory() as tmp:
        path_a = os.path.join(tmp, "a.labels")
        path_b = os.path.join(tmp, "b.labels")
        with open(path_a, "w") as fh:
            fh.write("\n".join(map(str, labels_a)) + "\n")
        with open(path_b, "w") as fh:
            fh.write("\n".join(map(str, labels_b)) + "\n")
        result = runner.invoke(
            cli_main,
            ["compare", path_a, path_b, "--metrics", "ami,pami,emi,mi,vi", "--format", "json"],
        )
        assert result.exit_code == 0, result.output
        return json.loads(result.output)["metrics"]


def main():
    os.makedirs(OUT_DIR, exist_ok=True)
    runner = CliRunner()

    rng = np.random.default_rng(2024)
    parity = []
    for _ in range(100):
        labels_a, labels_b = random_pair(rng, 200)
        metrics = cli_compare(runner, labels_a, labels_b)
        parity.append({"labels_a": labels_a, "labels_b": labels_b, "metrics": metrics})
    with open(os.path.join(OUT_DIR, "parity_corpus.json"), "w") as fh:
        json.dump(parity, fh)

    rng = np.random.default_rng(2025)
    emi_cases = []
    for _ in range(200):
        labels_a, labels_b = random_pair(rng, 500)
        table = contingency_matrix(labels_a, labels_b)
        reference = float(expected_mutual_information(np.asarray(table), len(labels_a)))
        emi_cases.append({"labels_a": labels_a, "labels_b": labels_b, "emi": reference})
    with open(os.path.join(OUT_DIR, "emi_corpus.json"), "w") as fh:
        json.dump(emi_cases, fh)

    print(f"wrote {len(parity)} parity cases and {len(emi_cases)} emi cases to {OUT_DIR}")


if __name__ == "__main__":
    main()
