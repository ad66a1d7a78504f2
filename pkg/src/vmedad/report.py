"""Analysis report document: assembly and lossless JSON serialization.

Floats are serialized with Python's shortest round-trip repr, so parsing
the JSON back reproduces every numeric field bit-for-bit, and rerunning
the same analysis yields byte-identical output.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass

import numpy as np

from . import __version__, baselines, geometry
from .depth import SHELL_ORDERS, assign_shells, spatial_depth_all
from .moments import VMedadReport, full_report

SCHEMA_VERSION = 1


@dataclass
class AnalysisConfig:
    """Settings for one analysis run, echoed into the report metadata."""

    input_path: str = ""
    columns: list | None = None
    b_max: int = 3
    shell_order: str = "center_out"
    standardize_depth: bool = True
    output_path: str | None = None
    emit_baselines: bool = True
    seed: int | None = None

    def __post_init__(self) -> None:
        if self.b_max < 2:
            raise ValueError("b_max must be >= 2")


def _jsonable(value):
    if isinstance(value, np.ndarray):
        return [_jsonable(v) for v in value.tolist()]
    if isinstance(value, (np.floating, np.integer)):
        return value.item()
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


def vmedad_section(rep: VMedadReport) -> dict:
    return _jsonable(
        {
            "phi1": rep.phi1,
            "phi2_vec": rep.phi2_vec,
            "phi2_scale": rep.phi2_scale,
            "c_med": rep.c_med,
            "c_med_trace": rep.c_med_trace,
            "phi": rep.phi,
            "psi": rep.psi,
            "norms": rep.norms,
            "psi2_unit": rep.psi2_unit,
            "b_max": rep.b_max,
            "shell_order": rep.shell_order,
            "depth_standardized": rep.depth_standardized,
            "n": rep.n,
            "d": rep.d,
            "center_converged": rep.center_converged,
            "center_iterations": rep.center_iterations,
        }
    )


def baseline_section(rep: baselines.BaselineReport) -> dict:
    return _jsonable(asdict(rep))


def shell_diagnostics(X, b_max: int, standardize_depth: bool = True) -> dict:
    """Shell sizes and shellwise coordinate medians under both orders."""
    A = geometry.as_data_matrix(X)
    U = A - geometry.spatial_median(A).m
    depths = spatial_depth_all(A, standardize=standardize_depth)
    out: dict = {}
    for order in SHELL_ORDERS:
        blocks = []
        for b in range(2, b_max + 1):
            profile = assign_shells(depths, b, order)
            medians = [
                np.median(U[profile.shell_indices(a)], axis=0) for a in range(b)
            ]
            blocks.append(
                {"b": b, "sizes": profile.shell_sizes(), "shell_medians": medians}
            )
        out[order] = blocks
    return _jsonable(out)


def build_document(X, columns, config: AnalysisConfig) -> dict:
    """Assemble the full report document for one data matrix."""
    A = geometry.as_data_matrix(X)
    rep = full_report(
        A,
        b_max=config.b_max,
        shell_order=config.shell_order,
        standardize_depth=config.standardize_depth,
    )
    doc = {
        "schema": SCHEMA_VERSION,
        "metadata": {
            "n": rep.n,
            "d": rep.d,
            "columns": list(columns),
            "config": _jsonable(asdict(config)),
            "version": __version__,
        },
        "vmedad": vmedad_section(rep),
        "baselines": None,
        "shell_diagnostics": shell_diagnostics(A, config.b_max, config.standardize_depth),
    }
    if config.emit_baselines:
        doc["baselines"] = baseline_section(baselines.baseline_report(A))
    return doc


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2, allow_nan=False)


def write(doc: dict, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(doc))
        fh.write("\n")
