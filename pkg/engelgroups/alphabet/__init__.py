from .far_set import (
    BasisLabels,
    FarSet,
    LevelBasis,
    far_element,
    far_index,
    far_set,
    far_set_size,
    level_basis,
)
from .fp_vector import (
    FpVector,
    e_length,
    format_vector,
    parse_vector,
    t_length,
    vec_add,
    vec_neg,
    vec_scale,
    vec_sum,
)
from .ranks import iter_binom, tetr
from .signature import (
    TreeSignature,
    d_fn,
    g_fn,
    parse_signature,
    rank_at,
    shift_signature,
    truncate_signature,
)

__all__ = [
    "BasisLabels",
    "FarSet",
    "FpVector",
    "LevelBasis",
    "TreeSignature",
    "d_fn",
    "e_length",
    "far_element",
    "far_index",
    "far_set",
    "far_set_size",
    "format_vector",
    "g_fn",
    "iter_binom",
    "level_basis",
    "parse_signature",
    "parse_vector",
    "rank_at",
    "shift_signature",
    "t_length",
    "tetr",
    "truncate_signature",
    "vec_add",
    "vec_neg",
    "vec_scale",
    "vec_sum",
]
