"""Classical moment-based comparators: Mardia and MRSz statistics.

All statistics standardize with the unbiased (divisor n-1) sample
covariance and break down under single-point contamination, which is
what makes them useful foils for the median-based estimators.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass
class BaselineReport:
    mardia_skew: float
    mardia_kurt: float
    mrsz_skew: np.ndarray
    mrsz_kurt_raw: np.ndarray
    mrsz_kurt_centered: np.ndarray


def _covariance(Xc: np.ndarray) -> np.ndarray:
    return Xc.T @ Xc / (Xc.shape[0] - 1)


def _inv_sqrt(S: np.ndarray) -> np.ndarray:
    # symmetric eigendecomposition root, so the result is basis-canonical
    vals, vecs = np.linalg.eigh(S)
    if vals.min() <= 0.0 or vals.min() < 1e-12 * vals.max():
        raise ValueError("degenerate covariance")
    return (vecs / np.sqrt(vals)) @ vecs.T


def mardia(X) -> tuple[float, float]:
    """Mardia's multivariate skewness and kurtosis scalars.

    Skewness is the mean cube of the Mahalanobis cross products
    g_ij = (x_i - mean)^T S^{-1} (x_j - mean) over all pairs; kurtosis is
    the mean square of the diagonal g_ii.
    """
    A = np.asarray(X, dtype=float)
    n, d = A.shape
    if n <= d:
        raise ValueError("need more observations than dimensions")
    Xc = A - A.mean(axis=0)
    S = _covariance(Xc)
    try:
        Si_Xt = np.linalg.solve(S, Xc.T)
    except np.linalg.LinAlgError:
        raise ValueError("degenerate covariance") from None
    G = Xc @ Si_Xt
    b1 = float((G**3).sum() / n**2)
    b2 = float((np.diag(G) ** 2).sum() / n)
    return b1, b2


def mrsz_skew(X) -> np.ndarray:
    """MRSz skewness vector: mean of ||z||^2 z over standardized rows."""
    A = np.asarray(X, dtype=float)
    Xc = A - A.mean(axis=0)
    Z = Xc @ _inv_sqrt(_covariance(Xc))
    return (Z * (Z * Z).sum(axis=1)[:, None]).mean(axis=0)


def mrsz_kurt(X) -> tuple[np.ndarray, np.ndarray]:
    """MRSz kurtosis matrices: raw mean of ||z||^2 z z^T and the version
    centered by its Gaussian limit (d + 2) I."""
    A = np.asarray(X, dtype=float)
    n, d = A.shape
    Xc = A - A.mean(axis=0)
    Z = Xc @ _inv_sqrt(_covariance(Xc))
    raw = (Z.T * (Z * Z).sum(axis=1)) @ Z / n
    raw = (raw + raw.T) / 2.0
    return raw, raw - (d + 2) * np.eye(d)


def baseline_report(X) -> BaselineReport:
    b1, b2 = mardia(X)
    raw, centered = mrsz_kurt(X)
    return BaselineReport(
        mardia_skew=b1,
        mardia_kurt=b2,
        mrsz_skew=mrsz_skew(X),
        mrsz_kurt_raw=raw,
        mrsz_kurt_centered=centered,
    )
