from .base import (
    CMatrix,
    SubspaceBasis,
    adjoint,
    as_cmatrix,
    hermitian_part,
    max_abs,
    require_square,
    spectral_norm,
)
from .config import DEFAULT_TOLERANCES, TOLERANCE_ENV_VAR, Tolerances
from .kernels import (
    complement_within,
    distinct_values,
    hermitian_eig,
    null_basis,
    polar_unitary_part,
    psd_sqrt,
    range_basis,
    set_distance,
    subspace_angles,
    svd,
    unitarity_residual,
)

__all__ = [
    "CMatrix",
    "DEFAULT_TOLERANCES",
    "SubspaceBasis",
    "TOLERANCE_ENV_VAR",
    "Tolerances",
    "adjoint",
    "as_cmatrix",
    "complement_within",
    "distinct_values",
    "hermitian_eig",
    "hermitian_part",
    "max_abs",
    "null_basis",
    "polar_unitary_part",
    "psd_sqrt",
    "range_basis",
    "require_square",
    "set_distance",
    "spectral_norm",
    "subspace_angles",
    "svd",
    "unitarity_residual",
]
