"""Reading cluster labels from files.

Accepted formats: plain text with one label token per line, or CSV with
either a single column or a named column (``column=`` implies a header
row).  Tokens are arbitrary strings; canonicalization happens later.
"""

from __future__ import annotations

import csv
import sys

__all__ = ["ParseError", "read_labels"]


class ParseError(Exception):
    """A label file row that does not yield a label token."""

    def __init__(self, path: str, line: int, message: str):
        self.path = path
        self.line = line
        super().__init__(f"{path}:{line}: {message}")


def _open(path: str):
    if path == "-":
        return sys.stdin, False
    return open(path, "r", newline=""), True


def read_labels(path: str, column: str | None = None, skip_header: bool = False) -> list[str]:
    """Return the label tokens of a file; '-' reads stdin.

    Missing or empty tokens are a parse error, never a cluster.
    """
    handle, owned = _open(path)
    try:
        if column is not None or path.endswith(".csv"):
            return _read_csv(handle, path, column, skip_header)
        return _read_lines(handle, path, skip_header)
    finally:
        if owned:
            handle.close()


def _read_lines(handle, path: str, skip_header: bool) -> list[str]:
    labels = []
    for line_no, line in enumerate(handle, start=1):
        if line_no == 1 and skip_header:
            continue
        token = line.strip()
        if not token:
            raise ParseError(path, line_no, "empty label token")
        labels.append(token)
    if not labels:
        raise ParseError(path, 1, "no labels found")
    return labels


def _read_csv(handle, path: str, column: str | None, skip_header: bool) -> list[str]:
    reader = csv.reader(handle)
    index = 0
    labels = []
    for line_no, row in enumerate(reader, start=1):
        if line_no == 1:
            if column is not None:
                try:
                    index = row.index(column)
                except ValueError:
                    raise ParseError(path, 1, f"column {column!r} not found in header")
                continue
            if skip_header:
                continue
        if not row:
            continue
        if index >= len(row) or not row[index].strip():
            raise ParseError(path, line_no, "missing label value")
        labels.append(row[index].strip())
    if not labels:
        raise ParseError(path, 1, "no labels found")
    return labels
