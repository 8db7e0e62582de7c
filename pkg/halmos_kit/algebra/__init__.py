from .element import (
    AlgebraElement,
    Fiber,
    add,
    adjoint_element,
    assemble,
    element_from_parts,
    identity_element,
    mul,
    operator_norm,
    p_symbol,
    power,
    q_symbol,
    scale,
    spectrum,
    trace,
    zero_element,
)
from .inverses import (
    FAILS,
    HERMITIAN,
    INDETERMINATE,
    SINGULAR_NON_NORMAL,
    CorResult,
    DrazinResult,
    drazin,
    inverse,
    is_cor,
    is_invertible,
    kernel_basis,
    kernel_direction_closed_form,
    moore_penrose,
    range_basis,
)
from .ranks import FiberRankProfile, rank_profile
from .words import (
    SymbolBackend,
    WordBackend,
    WordExpression,
    parse_word,
    symbol_of_word,
    tokenize,
)

__all__ = [
    "AlgebraElement",
    "CorResult",
    "DrazinResult",
    "FAILS",
    "Fiber",
    "FiberRankProfile",
    "HERMITIAN",
    "INDETERMINATE",
    "SINGULAR_NON_NORMAL",
    "SymbolBackend",
    "WordBackend",
    "WordExpression",
    "add",
    "adjoint_element",
    "assemble",
    "drazin",
    "element_from_parts",
    "identity_element",
    "inverse",
    "is_cor",
    "is_invertible",
    "kernel_basis",
    "kernel_direction_closed_form",
    "moore_penrose",
    "mul",
    "operator_norm",
    "p_symbol",
    "parse_word",
    "power",
    "q_symbol",
    "range_basis",
    "rank_profile",
    "scale",
    "spectrum",
    "symbol_of_word",
    "tokenize",
    "trace",
    "zero_element",
]
