"""Univariate median absolute deviation (MedAD) moments.

The moment of order ``b + 1`` is built from the sample median ``M``:
order 1 is ``M`` itself, order 2 is the median absolute deviation
``Med|x - M|``, and orders three and up are alternating sums of the
medians of ``|x - M|`` restricted to the ``b`` quantile slices of the
sample.  Standardized moments divide by the order-2 scale and are
invariant under positive affine rescaling of the data.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np


def _as_sample(values) -> np.ndarray:
    x = np.asarray(values, dtype=float).ravel()
    if x.size == 0:
        raise ValueError("empty sample")
    if not np.isfinite(x).all():
        raise ValueError("sample contains non-finite values")
    return x


def median(values) -> float:
    """Sample median: middle order statistic, or for even n the mean of
    the two middle order statistics."""
    return float(np.median(_as_sample(values)))


def mad_about_median(values) -> float:
    """Median of absolute deviations from the sample median (the MedAD scale)."""
    x = _as_sample(values)
    return float(np.median(np.abs(x - np.median(x))))


def quantile_slices(values, b: int) -> list[np.ndarray]:
    """Partition observation indices into ``b`` contiguous quantile slices.

    Observations are sorted ascending (ties broken by original index) and
    the observation of 1-based rank ``r`` goes to slice ``ceil(r*b/n) - 1``.
    Slices are disjoint, cover the sample, each is nonempty, and sizes
    differ by at most one (later slices absorb any remainder).

    Returns a list of ``b`` integer index arrays into the original sample.
    """
    x = _as_sample(values)
    n = x.size
    if b < 2:
        raise ValueError("slice count b must be >= 2")
    if n < b:
        raise ValueError("too few observations for b slices")
    order = np.argsort(x, kind="stable")
    ranks = np.arange(1, n + 1)
    slice_of = (ranks * b + n - 1) // n - 1  # ceil(r*b/n) - 1, exact in ints
    return [order[slice_of == a] for a in range(b)]


def uni_medad_moment(values, b: int) -> float:
    """MedAD moment of order ``b + 1``.

    ``b = 0`` gives the median, ``b = 1`` the MedAD scale, and ``b >= 2``
    the alternating sum over quantile slices of the median of ``|x - M|``
    among that slice's members only.
    """
    x = _as_sample(values)
    if b < 0:
        raise ValueError("order b must be >= 0")
    if b == 0:
        return float(np.median(x))
    if b == 1:
        return mad_about_median(x)
    dev = np.abs(x - np.median(x))
    total = 0.0
    for a, idx in enumerate(quantile_slices(x, b)):
        total += (-1.0) ** (a + 1) * float(np.median(dev[idx]))
    return total


def uni_standardized(values, b: int) -> float:
    """Standardized MedAD moment of order ``b + 1``: moment over MedAD scale.

    Invariant under ``x -> s*x + t`` for ``s > 0``; raises when the scale
    is zero (degenerate sample).
    """
    x = _as_sample(values)
    if b < 2:
        raise ValueError("standardized moments need b >= 2")
    scale = mad_about_median(x)
    if scale <= 0.0:
        raise ValueError("degenerate scale")
    return uni_medad_moment(x, b) / scale


@dataclass
class UniMedadMoments:
    """Bundle of univariate MedAD moments up to a maximum order.

    ``phi[k]`` holds the order-k moment for k >= 2 and ``psi[k]`` the
    standardized version (empty when the scale is zero).
    """

    m: float
    phi: dict[int, float] = field(default_factory=dict)
    psi: dict[int, float] = field(default_factory=dict)


def uni_moments(values, b_max: int = 3) -> UniMedadMoments:
    """Compute the median plus MedAD moments of orders 2..b_max+1."""
    x = _as_sample(values)
    if b_max < 1:
        raise ValueError("b_max must be >= 1")
    out = UniMedadMoments(m=float(np.median(x)))
    out.phi[2] = mad_about_median(x)
    for b in range(2, b_max + 1):
        out.phi[b + 1] = uni_medad_moment(x, b)
    if out.phi[2] > 0.0:
        for k in range(3, b_max + 2):
            out.psi[k] = out.phi[k] / out.phi[2]
    return out
