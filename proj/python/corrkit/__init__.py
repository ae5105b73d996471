"""Correlation coefficients including the g-correlation, backed by a C++ core."""

from ._corrkit import (
    CorrkitError,
    Diagonal,
    FechnerTrace,
    GCorrFit,
    HyperplaneFit,
    QuadrantCounts,
    SplitEstimate,
    compute_panel,
    estimate_g,
    fechner,
    fit_g,
    fit_g_multi,
    g_objective,
    generate,
    kendall,
    ncc,
    pearson,
    rank_with_average_ties,
    sample_mean,
    sample_median,
    spearman,
    __version__,
)

__all__ = [
    "CorrkitError",
    "Diagonal",
    "FechnerTrace",
    "GCorrFit",
    "HyperplaneFit",
    "QuadrantCounts",
    "SplitEstimate",
    "compute_panel",
    "estimate_g",
    "fechner",
    "fit_g",
    "fit_g_multi",
    "g_objective",
    "generate",
    "kendall",
    "ncc",
    "pearson",
    "rank_with_average_ties",
    "sample_mean",
    "sample_median",
    "spearman",
]
