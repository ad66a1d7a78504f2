"""Multivariate location and dispersion primitives.

Spatial median (Weiszfeld iteration with the singular-point handling of
Vardi & Zhang), centering, coordinate-wise medians, the comedian matrix
(entrywise median of outer products), and the radial median scale.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np


def as_data_matrix(X) -> np.ndarray:
    """Validate and return an (n, d) float matrix of observations."""
    A = np.asarray(X, dtype=float)
    if A.ndim == 1:
        A = A[:, None]
    if A.ndim != 2:
        raise ValueError("data must be a 2-d array of shape (n, d)")
    if A.shape[0] == 0:
        raise ValueError("empty sample")
    if not np.isfinite(A).all():
        raise ValueError("data contains non-finite values")
    return A


@dataclass
class CenterEstimate:
    """Spatial median result with convergence diagnostics.

    ``objective_history[k]`` is the sum of Euclidean distances at iterate k;
    the sequence is non-increasing by construction of the iteration.
    """

    m: np.ndarray
    iterations: int
    converged: bool
    final_step: float
    objective_history: list[float] = field(default_factory=list)


def _weiszfeld_objective(X: np.ndarray, m: np.ndarray) -> float:
    return float(np.linalg.norm(X - m, axis=1).sum())


def spatial_median(X, tol: float = 1e-10, max_iter: int = 500) -> CenterEstimate:
    """Minimizer of the sum of Euclidean distances to the rows of ``X``.

    Damped Weiszfeld reweighting started at the coordinate-wise median.
    When an iterate coincides with one or more data points the pull of the
    coinciding points is handled separately: if the residual pull of the
    remaining points does not exceed the coinciding multiplicity the
    iterate is optimal, otherwise the step is shrunk accordingly
    (Vardi-Zhang correction).  Convergence is declared when the relative
    step ``|m_new - m| / (1 + |m|)`` drops to ``tol``.
    """
    A = as_data_matrix(X)
    n, d = A.shape
    m = np.median(A, axis=0)
    history = [_weiszfeld_objective(A, m)]
    if n == 1:
        return CenterEstimate(A[0].copy(), 0, True, 0.0, history)

    step = np.inf
    for it in range(1, max_iter + 1):
        dist = np.linalg.norm(A - m, axis=1)
        near = dist <= 1e-12 * (1.0 + np.linalg.norm(m))
        eta = int(near.sum())
        if eta == n:
            # every observation sits at the iterate; it is the minimizer
            return CenterEstimate(m, it - 1, True, 0.0, history)
        w = 1.0 / dist[~near]
        t_step = (A[~near] * w[:, None]).sum(axis=0) / w.sum()
        if eta > 0:
            pull = ((A[~near] - m) * w[:, None]).sum(axis=0)
            r = np.linalg.norm(pull)
            if r <= eta:
                return CenterEstimate(m, it - 1, True, 0.0, history)
            gamma = eta / r
            new_m = (1.0 - gamma) * t_step + gamma * m
        else:
            new_m = t_step
        step = float(np.linalg.norm(new_m - m) / (1.0 + np.linalg.norm(m)))
        m = new_m
        history.append(_weiszfeld_objective(A, m))
        if step <= tol:
            return CenterEstimate(m, it, True, step, history)
    return CenterEstimate(m, max_iter, False, step, history)


def center(X, m) -> np.ndarray:
    """Subtract the location vector ``m`` from every row of ``X``."""
    A = as_data_matrix(X)
    mv = np.asarray(m, dtype=float).ravel()
    if mv.size != A.shape[1]:
        raise ValueError(
            f"location has dimension {mv.size}, data has dimension {A.shape[1]}"
        )
    return A - mv


def coordwise_median(U) -> np.ndarray:
    """Coordinate-wise median of the rows of ``U``."""
    A = as_data_matrix(U)
    return np.median(A, axis=0)


def comedian_matrix(U) -> np.ndarray:
    """Entrywise median of outer products of the rows of ``U``.

    Entry (j, k) is the median over observations of ``u[j] * u[k]``; each
    unordered pair is computed once, so the matrix is exactly symmetric
    and its diagonal is nonnegative.
    """
    A = as_data_matrix(U)
    d = A.shape[1]
    C = np.empty((d, d))
    for j in range(d):
        C[j, j] = np.median(A[:, j] * A[:, j])
        for k in range(j + 1, d):
            C[j, k] = C[k, j] = np.median(A[:, j] * A[:, k])
    return C


def medad_scale(U) -> float:
    """Square root of the median squared Euclidean row norm of ``U``."""
    A = as_data_matrix(U)
    return float(np.sqrt(np.median((A * A).sum(axis=1))))
