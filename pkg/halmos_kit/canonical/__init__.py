from .decompose import (
    P_COEFFICIENTS,
    Q_COEFFICIENTS,
    Dims,
    HalmosDecomposition,
    balanced_form,
    embed,
    halmos_decompose,
    is_commuting,
    is_generic,
    projection_fibers,
    reconstruct,
)
from .pair import (
    SUBSPACE_LABELS,
    ProjectionPair,
    check_supersymmetry,
    projection_residuals,
    subspace_m,
    validate_pair,
)
from .synth import RandomPairSpec, generate_pair, random_unitary

__all__ = [
    "Dims",
    "HalmosDecomposition",
    "P_COEFFICIENTS",
    "ProjectionPair",
    "Q_COEFFICIENTS",
    "RandomPairSpec",
    "SUBSPACE_LABELS",
    "balanced_form",
    "check_supersymmetry",
    "embed",
    "generate_pair",
    "halmos_decompose",
    "is_commuting",
    "is_generic",
    "projection_fibers",
    "projection_residuals",
    "random_unitary",
    "reconstruct",
    "subspace_m",
    "validate_pair",
]
