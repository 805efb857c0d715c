"""CSV ingestion and the bundled EU-28 data sets."""
from __future__ import annotations

import csv
import os
from importlib import resources

import numpy as np

from .errors import DomainError
from .mre import EndowmentMatrix
from .spectral import Sample1D

__all__ = ["FIXTURES", "fixture_path", "load_eu", "resolve_dataset",
           "read_matrix", "read_sample"]

FIXTURES = ("eu2000", "eu2015")


def fixture_path(name: str) -> str:
    """Filesystem path of a bundled data set (``eu2000`` or ``eu2015``)."""
    stem = os.path.splitext(os.path.basename(name))[0]
    if stem not in FIXTURES:
        raise DomainError(f"no bundled data set named {name!r}; have {FIXTURES}")
    return str(resources.files("ginimre").joinpath("data", f"{stem}.csv"))


def load_eu(year: int) -> EndowmentMatrix:
    """Life expectancy (years) and GDP per capita (USD) of the EU-28 countries.

    Available for 2000 and 2015.  Rows are labelled by country name.
    """
    return read_matrix(fixture_path(f"eu{int(year)}"))


def resolve_dataset(path: str) -> str:
    """Return ``path`` if it exists, else the bundled fixture of that name."""
    if os.path.exists(path):
        return path
    try:
        return fixture_path(path)
    except DomainError:
        raise DomainError(f"cannot read {path!r}: no such file") from None


def _is_number(text: str) -> bool:
    try:
        float(text)
    except ValueError:
        return False
    return True


def read_matrix(path: str) -> EndowmentMatrix:
    """Read an endowment matrix from a CSV with a header row.

    The first column is taken as row labels when its cells are not numeric.
    """
    with open(path, newline="") as fh:
        rows = [r for r in csv.reader(fh) if r and "".join(r).strip()]
    if len(rows) < 2:
        raise DomainError(f"{path}: need a header row and at least one data row")
    header, body = rows[0], rows[1:]
    width = len(header)
    for k, r in enumerate(body, start=2):
        if len(r) != width:
            raise DomainError(f"{path}:{k}: expected {width} cells, got {len(r)}")
    has_label = not all(_is_number(r[0]) for r in body)
    start = 1 if has_label else 0
    if width - start < 1:
        raise DomainError(f"{path}: no numeric attribute columns")
    try:
        data = np.array([[float(c) for c in r[start:]] for r in body])
    except ValueError as exc:
        raise DomainError(f"{path}: non-numeric attribute cell ({exc})") from None
    if not np.all(np.isfinite(data)):
        raise DomainError(f"{path}: attribute cells must be finite")
    labels = [r[0] for r in body] if has_label else None
    return EndowmentMatrix(data, labels, header[start:])


def read_sample(path: str) -> Sample1D:
    """Read a single-column CSV (header optional) as a univariate sample."""
    values = []
    with open(path, newline="") as fh:
        for k, r in enumerate(csv.reader(fh)):
            if not r or not "".join(r).strip():
                continue
            cell = r[-1] if len(r) > 1 and not _is_number(r[0]) else r[0]
            if _is_number(cell):
                values.append(float(cell))
            elif k == 0 and not values:
                continue
            else:
                raise DomainError(f"{path}:{k + 1}: non-numeric value {cell!r}")
    return Sample1D(values)
