"""Sample spatial depth and equal-size depth shells.

The spatial depth of an observation is one minus the norm of the average
unit vector pointing from it toward the other observations; values lie in
[0, 1], close to 1 at the center of the cloud and close to 0 far outside.
By default the unit vectors are taken after whitening the data by the
inverse square root of its covariance, which makes the depth ordering
invariant under every nonsingular affine map (matching the standard
implementations of spatial depth); without whitening the ordering is
invariant under similarity transforms only.

Shells partition the sample into ``b`` blocks of consecutive depth ranks,
the multivariate counterpart of univariate quantile slices.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .geometry import as_data_matrix

CENTER_OUT = "center_out"
DEPTH_ASCENDING = "depth_ascending"
SHELL_ORDERS = (CENTER_OUT, DEPTH_ASCENDING)

# rows per block when accumulating the n x n unit-vector sums
_BLOCK = 256


@dataclass
class DepthProfile:
    """Per-observation depths plus a shell partition for one shell count.

    ``ranks[i]`` is the 1-based ascending depth rank of observation i
    (ties broken by index) and ``shell_of[i]`` its shell in [0, b).
    Under ``center_out`` shell 0 holds the highest-depth (innermost)
    observations; under ``depth_ascending`` it holds the lowest-depth ones.
    """

    depths: np.ndarray
    ranks: np.ndarray
    shell_of: np.ndarray
    b: int
    order: str

    def shell_indices(self, a: int) -> np.ndarray:
        return np.nonzero(self.shell_of == a)[0]

    def shell_sizes(self) -> list[int]:
        return [int((self.shell_of == a).sum()) for a in range(self.b)]


def _whitening_matrix(A: np.ndarray) -> np.ndarray | None:
    """Inverse symmetric square root of the covariance, or None if degenerate."""
    n, d = A.shape
    if n <= d:
        return None
    Xc = A - A.mean(axis=0)
    S = Xc.T @ Xc / (n - 1)
    vals, vecs = np.linalg.eigh(S)
    if vals[0] <= 0.0 or vals[0] < 1e-12 * vals[-1]:
        return None
    return (vecs / np.sqrt(vals)) @ vecs.T


def spatial_depth_all(X, standardize: bool = True) -> np.ndarray:
    """Spatial depth of every observation, exact O(n^2 d).

    The self term, and any term where two observations coincide exactly,
    contributes a zero vector.  The averaging divisor is n.  With
    ``standardize`` (the default) the differences are whitened by the
    inverse covariance square root first; samples with a degenerate
    covariance fall back to the unstandardized computation.
    """
    A = as_data_matrix(X)
    n, d = A.shape
    if n < 2:
        raise ValueError("depth undefined for fewer than 2 observations")
    if standardize:
        W = _whitening_matrix(A)
        if W is not None:
            A = A @ W
    depths = np.empty(n)
    for start in range(0, n, _BLOCK):
        stop = min(start + _BLOCK, n)
        diff = A[None, :, :] - A[start:stop, None, :]  # (block, n, d)
        dist = np.sqrt(np.einsum("ijk,ijk->ij", diff, diff))
        with np.errstate(divide="ignore"):
            w = 1.0 / dist
        w[dist == 0.0] = 0.0  # self term and exact duplicates drop out
        # sum_j (x_j - x_i)/dist_ij  ==  (w @ X)_i - x_i * sum_j w_ij
        avg = (w @ A - A[start:stop] * w.sum(axis=1)[:, None]) / n
        depths[start:stop] = 1.0 - np.linalg.norm(avg, axis=1)
    return np.clip(depths, 0.0, 1.0)


def assign_shells(depths, b: int, order: str = CENTER_OUT) -> DepthProfile:
    """Partition observations into ``b`` shells of consecutive depth ranks.

    Observations are ranked by ascending depth (ties by original index);
    rank ``r`` belongs to ascending block ``ceil(r*b/n) - 1``.  Under
    ``center_out`` the same blocks are relabeled in reverse so that shell
    0 is the innermost block; the remainder observations therefore land in
    the innermost shell rather than the outermost.
    """
    dep = np.asarray(depths, dtype=float).ravel()
    n = dep.size
    if order not in SHELL_ORDERS:
        raise ValueError(f"shell order must be one of {SHELL_ORDERS}")
    if b < 2:
        raise ValueError("shell count b must be >= 2")
    if n < b:
        raise ValueError("too few observations for b shells")
    sort_idx = np.argsort(dep, kind="stable")
    ranks = np.empty(n, dtype=int)
    ranks[sort_idx] = np.arange(1, n + 1)
    ascending_block = (ranks * b + n - 1) // n - 1  # ceil(r*b/n) - 1
    if order == CENTER_OUT:
        shell_of = b - 1 - ascending_block
    else:
        shell_of = ascending_block
    return DepthProfile(dep, ranks, shell_of, b, order)
