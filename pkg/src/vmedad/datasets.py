"""CSV ingestion and the Wisconsin diagnostic breast cancer file format.

The WDBC file is comma-separated with no header: column 0 is a record id,
column 1 the diagnosis label (B or M), and columns 2-31 the thirty
morphology features (ten base measurements, each as mean, standard error
and worst value).  The file is not bundled; ``fetch_wdbc`` downloads it
from the UCI repository.
"""

from __future__ import annotations

import csv
import urllib.request
from dataclasses import dataclass, field

import numpy as np

WDBC_URL = (
    "https://archive.ics.uci.edu/ml/machine-learning-databases/"
    "breast-cancer-wisconsin/wdbc.data"
)
WDBC_EXPECTED_ROWS = 569

_WDBC_BASES = (
    "radius",
    "texture",
    "perimeter",
    "area",
    "smoothness",
    "compactness",
    "concavity",
    "concave_points",
    "symmetry",
    "fractal_dimension",
)
WDBC_FEATURE_NAMES = tuple(
    f"{base}_{kind}" for kind in ("mean", "se", "worst") for base in _WDBC_BASES
)


@dataclass
class LoadedCsv:
    matrix: np.ndarray
    columns: list[str]
    dropped_rows: int


def load_csv(path, selectors, has_header: bool = True) -> LoadedCsv:
    """Read selected numeric columns from a CSV file.

    ``selectors`` mixes column names (header required) and zero-based
    indices.  Rows where any selected field is missing or non-numeric are
    dropped and counted; fewer than 2 usable rows is an error.
    """
    if not selectors:
        raise ValueError("at least one column must be selected")
    try:
        fh = open(path, "r", encoding="utf-8", newline="")
    except OSError as exc:
        raise FileNotFoundError(f"cannot read {path}: {exc}") from None
    with fh:
        reader = csv.reader(fh)
        header: list[str] | None = None
        if has_header:
            header = next(reader, None)
            if header is None:
                raise ValueError(f"no usable rows in {path}")
        indices: list[int] = []
        labels: list[str] = []
        for sel in selectors:
            if isinstance(sel, str) and not sel.lstrip("-").isdigit():
                if header is None:
                    raise ValueError(
                        f"column selected by name ({sel!r}) but file has no header"
                    )
                if sel not in header:
                    raise ValueError(f"unknown column {sel!r}")
                indices.append(header.index(sel))
                labels.append(sel)
            else:
                idx = int(sel)
                if idx < 0:
                    raise ValueError(f"unknown column {sel!r}")
                indices.append(idx)
                labels.append(header[idx] if header and idx < len(header) else f"col{idx}")
        rows: list[list[float]] = []
        dropped = 0
        for record in reader:
            try:
                rows.append([float(record[i]) for i in indices])
            except (ValueError, IndexError):
                dropped += 1
    if len(rows) < 2:
        raise ValueError(f"no usable rows in {path}")
    return LoadedCsv(np.asarray(rows, dtype=float), labels, dropped)


@dataclass
class WdbcData:
    """Parsed WDBC file: feature matrix plus named-column access."""

    matrix: np.ndarray
    feature_names: tuple[str, ...]
    diagnosis: list[str]
    warnings: list[str] = field(default_factory=list)

    @property
    def n(self) -> int:
        return self.matrix.shape[0]

    def column(self, name: str) -> np.ndarray:
        if name not in self.feature_names:
            raise ValueError(f"unknown column {name!r}")
        return self.matrix[:, self.feature_names.index(name)]

    def select(self, names) -> np.ndarray:
        return np.column_stack([self.column(n) for n in names])


def load_wdbc(path) -> WdbcData:
    """Parse a WDBC-format file into the 30-feature matrix.

    Malformed rows and unexpected row counts produce warnings, not errors;
    the sample size is whatever the file provides.  The diagnosis column
    is kept as labels and never enters the feature matrix.
    """
    try:
        fh = open(path, "r", encoding="utf-8", newline="")
    except OSError as exc:
        raise FileNotFoundError(f"cannot read {path}: {exc}") from None
    rows: list[list[float]] = []
    diagnosis: list[str] = []
    warnings: list[str] = []
    with fh:
        for lineno, record in enumerate(csv.reader(fh), start=1):
            if not record:
                continue
            if len(record) != 32:
                warnings.append(f"line {lineno}: expected 32 fields, got {len(record)}")
                continue
            try:
                values = [float(v) for v in record[2:]]
            except ValueError:
                warnings.append(f"line {lineno}: non-numeric feature value")
                continue
            rows.append(values)
            diagnosis.append(record[1])
    if not rows:
        raise ValueError(f"no usable rows in {path}")
    if len(rows) != WDBC_EXPECTED_ROWS:
        warnings.append(f"expected {WDBC_EXPECTED_ROWS} rows, got {len(rows)}")
    return WdbcData(np.asarray(rows), WDBC_FEATURE_NAMES, diagnosis, warnings)


def fetch_wdbc(dest, url: str = WDBC_URL, timeout: float = 60.0) -> str:
    """Download the WDBC file to ``dest`` and sanity-check the row count."""
    with urllib.request.urlopen(url, timeout=timeout) as resp:
        payload = resp.read()
    with open(dest, "wb") as fh:
        fh.write(payload)
    data = load_wdbc(dest)
    if data.n != WDBC_EXPECTED_ROWS:
        raise ValueError(
            f"downloaded file has {data.n} rows, expected {WDBC_EXPECTED_ROWS}"
        )
    return str(dest)
