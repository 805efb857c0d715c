"""Spectral inequality measures and multi-attribute representative endowments.

Univariate: :mod:`ginimre.spectral` (spectral values, generalized and S-Gini
indices, dual stochastic dominance).  Multivariate: :mod:`ginimre.mre`
(priced spectral values, exact 2-D MRE polylines, uniform Gini dominance).
"""
from .distortion import (DistortionSpec, dual, dw, empirical_weights, evaluate, family,
                         family_is_monotone_in_alpha, identity, parse_distortion, piecewise,
                         step, zonoid)
from .errors import DomainError, UnsupportedDimensionError
from .hausdorff import hausdorff_polyline
from .io import load_eu, read_matrix, read_sample
from .mre import (AngleInterval, DominanceVerdict, EndowmentMatrix, FamilyVerdict,
                  MREPolyline, SupportSample, contains, critical_angles_2d, direction,
                  direction_grid, dominates, dominates_family, mre_2d, priced_gini,
                  priced_spectral, support_sample, transform_affine)
from .spectral import (SDVerdict, Sample1D, classical_gini, dual_sd_check,
                       generalized_gini, quantile, s_gini, spectral_value)

__all__ = [
    "AngleInterval",
    "DistortionSpec",
    "DomainError",
    "DominanceVerdict",
    "EndowmentMatrix",
    "FamilyVerdict",
    "MREPolyline",
    "SDVerdict",
    "Sample1D",
    "SupportSample",
    "UnsupportedDimensionError",
    "classical_gini",
    "contains",
    "critical_angles_2d",
    "direction",
    "direction_grid",
    "dominates",
    "dominates_family",
    "dual",
    "dual_sd_check",
    "dw",
    "empirical_weights",
    "evaluate",
    "family",
    "family_is_monotone_in_alpha",
    "generalized_gini",
    "hausdorff_polyline",
    "identity",
    "load_eu",
    "mre_2d",
    "parse_distortion",
    "piecewise",
    "priced_gini",
    "priced_spectral",
    "quantile",
    "read_matrix",
    "read_sample",
    "s_gini",
    "spectral_value",
    "step",
    "support_sample",
    "transform_affine",
    "zonoid",
]

__version__ = "0.1.0"
