"""Robust multivariate shape analysis with median-based vector moments."""

__version__ = "0.1.0"

from .baselines import BaselineReport, baseline_report, mardia, mrsz_kurt, mrsz_skew
from .depth import CENTER_OUT, DEPTH_ASCENDING, DepthProfile, assign_shells, spatial_depth_all
from .geometry import (
    CenterEstimate,
    center,
    comedian_matrix,
    coordwise_median,
    medad_scale,
    spatial_median,
)
from .moments import (
    VMedadReport,
    full_report,
    peripheral_vector,
    skewness_vector,
    standardized,
    vector_moment,
)
from .refdist import (
    ReferenceValues,
    chisq_median,
    f_median,
    figure2_curve,
    normal_reference,
    reg_inc_beta,
    reg_inc_gamma,
    t_reference,
)
from .univariate import (
    mad_about_median,
    median,
    quantile_slices,
    uni_medad_moment,
    uni_moments,
    uni_standardized,
)

__all__ = [
    "BaselineReport",
    "CenterEstimate",
    "CENTER_OUT",
    "DEPTH_ASCENDING",
    "DepthProfile",
    "ReferenceValues",
    "VMedadReport",
    "assign_shells",
    "baseline_report",
    "center",
    "chisq_median",
    "comedian_matrix",
    "coordwise_median",
    "f_median",
    "figure2_curve",
    "full_report",
    "mad_about_median",
    "mardia",
    "medad_scale",
    "median",
    "mrsz_kurt",
    "mrsz_skew",
    "normal_reference",
    "peripheral_vector",
    "quantile_slices",
    "reg_inc_beta",
    "reg_inc_gamma",
    "skewness_vector",
    "spatial_depth_all",
    "spatial_median",
    "standardized",
    "t_reference",
    "uni_medad_moment",
    "uni_moments",
    "uni_standardized",
    "vector_moment",
]
