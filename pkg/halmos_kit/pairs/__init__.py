from .intertwiners import (
    IntertwinerParams,
    build_intertwiner,
    build_intertwiner_in_algebra,
    intertwiner_exists,
    intertwiner_residuals,
    intertwiners_all_in_algebra,
)
from .report import TRACE_POWERS, PairReport, analyze_pair
from .theorems import (
    DEGENERATE,
    GENERIC,
    AnticommutatorAnalysis,
    SymmetryDistance,
    anticommutator_analysis,
    diff_spectrum,
    fredholm_index,
    fredholm_operator,
    invertibility_margin,
    symmetry_distance,
    trace_power_diff,
)

__all__ = [
    "AnticommutatorAnalysis",
    "DEGENERATE",
    "GENERIC",
    "IntertwinerParams",
    "PairReport",
    "SymmetryDistance",
    "TRACE_POWERS",
    "analyze_pair",
    "anticommutator_analysis",
    "build_intertwiner",
    "build_intertwiner_in_algebra",
    "diff_spectrum",
    "fredholm_index",
    "fredholm_operator",
    "intertwiner_exists",
    "intertwiner_residuals",
    "intertwiners_all_in_algebra",
    "invertibility_margin",
    "symmetry_distance",
    "trace_power_diff",
]
