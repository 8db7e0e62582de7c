from .brute import (
    MatrixBackend,
    brute_cor,
    brute_distance,
    brute_drazin,
    brute_index,
    brute_intertwiner_search,
    brute_null_space,
    brute_pinv,
    brute_spectrum,
    brute_subspaces,
    brute_word,
    intertwining_residuals,
)

__all__ = [
    "MatrixBackend",
    "brute_cor",
    "brute_distance",
    "brute_drazin",
    "brute_index",
    "brute_intertwiner_search",
    "brute_null_space",
    "brute_pinv",
    "brute_spectrum",
    "brute_subspaces",
    "brute_word",
    "intertwining_residuals",
]
