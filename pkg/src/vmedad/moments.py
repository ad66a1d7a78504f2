"""Vector MedAD moments: location, scale, comedian, and shell contrasts.

Order b+1 moments (b >= 2) are alternating sums of the coordinate-wise
medians of the centered observations inside each depth shell; order 3
(two shells) measures directional skewness, order 4 (three shells)
directional peripheral dominance.  Standardized moments divide by the
radial median scale, giving scale-free shape vectors.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import depth as depth_mod
from . import geometry

# threshold, relative to the radial scale, below which the direction of
# the coordinate-wise median vector is numerically meaningless
_UNIT_DIRECTION_FLOOR = 1e-8


@dataclass
class VMedadReport:
    """Full set of vector MedAD moments for one sample.

    ``phi[k]`` holds the order-k moment vector for k >= 3, ``psi[k]`` the
    standardized vectors for k >= 2 (empty when the scale is zero), and
    ``norms[k]`` the Euclidean norm of the order-k moment (k=2 refers to
    the coordinate-wise median vector ``phi2_vec``).  ``psi2_unit`` is the
    unit-direction variant of order 2, defined only when the order-2
    vector is not negligibly small relative to the scale.
    """

    phi1: np.ndarray
    phi2_vec: np.ndarray
    phi2_scale: float
    c_med: np.ndarray
    phi: dict[int, np.ndarray] = field(default_factory=dict)
    psi: dict[int, np.ndarray] = field(default_factory=dict)
    norms: dict[int, float] = field(default_factory=dict)
    psi2_unit: np.ndarray | None = None
    b_max: int = 3
    shell_order: str = depth_mod.CENTER_OUT
    depth_standardized: bool = True
    n: int = 0
    d: int = 0
    center_converged: bool = True
    center_iterations: int = 0

    @property
    def c_med_trace(self) -> float:
        return float(np.trace(self.c_med))


def vector_moment(U, profile: depth_mod.DepthProfile, b: int) -> np.ndarray:
    """Alternating sum over shells of shellwise coordinate-wise medians.

    Shell ``a`` (under the profile's own ordering) contributes with sign
    ``(-1)**(a+1)``; each shellwise median is taken over that shell's
    members only.
    """
    A = geometry.as_data_matrix(U)
    if profile.b != b:
        raise ValueError(f"profile has {profile.b} shells, expected {b}")
    if profile.depths.size != A.shape[0]:
        raise ValueError("profile and data have different sample sizes")
    out = np.zeros(A.shape[1])
    for a in range(b):
        idx = profile.shell_indices(a)
        if idx.size == 0:
            raise ValueError(f"empty shell {a}")
        out += (-1.0) ** (a + 1) * np.median(A[idx], axis=0)
    return out


def skewness_vector(U, profile: depth_mod.DepthProfile) -> np.ndarray:
    """Order-3 moment (two shells): net directional asymmetry."""
    return vector_moment(U, profile, 2)


def peripheral_vector(U, profile: depth_mod.DepthProfile) -> np.ndarray:
    """Order-4 moment (three shells): directional peripheral dominance."""
    return vector_moment(U, profile, 3)


def standardized(phi_k, scale: float) -> np.ndarray:
    """Divide a moment vector by the radial median scale."""
    if scale <= 0.0:
        raise ValueError("degenerate scale")
    return np.asarray(phi_k, dtype=float) / scale


def full_report(
    X,
    b_max: int = 3,
    shell_order: str = depth_mod.CENTER_OUT,
    center_tol: float = 1e-10,
    standardize_depth: bool = True,
) -> VMedadReport:
    """Compute every vector MedAD moment of orders up to ``b_max + 1``.

    Depths are computed once; each order b in 2..b_max gets its own
    b-shell partition of the same depth values.  Deterministic given the
    data and configuration.
    """
    A = geometry.as_data_matrix(X)
    n, d = A.shape
    if b_max < 2:
        raise ValueError("b_max must be >= 2")
    if n < b_max:
        raise ValueError("need at least b_max observations")

    est = geometry.spatial_median(A, tol=center_tol)
    U = A - est.m
    report = VMedadReport(
        phi1=est.m,
        phi2_vec=geometry.coordwise_median(U),
        phi2_scale=geometry.medad_scale(U),
        c_med=geometry.comedian_matrix(U),
        b_max=b_max,
        shell_order=shell_order,
        depth_standardized=standardize_depth,
        n=n,
        d=d,
        center_converged=est.converged,
        center_iterations=est.iterations,
    )
    depths = depth_mod.spatial_depth_all(A, standardize=standardize_depth)
    for b in range(2, b_max + 1):
        profile = depth_mod.assign_shells(depths, b, shell_order)
        report.phi[b + 1] = vector_moment(U, profile, b)

    report.norms[2] = float(np.linalg.norm(report.phi2_vec))
    for k, vec in report.phi.items():
        report.norms[k] = float(np.linalg.norm(vec))

    if report.phi2_scale > 0.0:
        report.psi[2] = report.phi2_vec / report.phi2_scale
        for k, vec in report.phi.items():
            report.psi[k] = vec / report.phi2_scale
        if report.norms[2] > _UNIT_DIRECTION_FLOOR * report.phi2_scale:
            report.psi2_unit = report.phi2_vec / report.norms[2]
    return report
