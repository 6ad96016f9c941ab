"""
Iterated identities, Engel towers, local checking and the involution identity.
"""

from .checks import (
    involution_check,
    left_engel_check,
    left_engel_degree,
    length_bound_check,
    local_checking_check,
    period_check,
    quotient_towers_check,
)
from .free_word import (
    FreeWord,
    GroupOps,
    counts,
    evaluate,
    format_free_word,
    iterate_word,
    length_bound,
    parse_free_word,
)
from .involution import involution_engel_check
from .local import (
    OrbitRestriction,
    local_check,
    local_decomposition,
    perm_wreath_ops,
    quotient_instance,
    stabilized_section,
    top_orbits,
)
from .tower import (
    ClosureMode,
    EngelGrowthResult,
    EngelTowerResult,
    QuotientMode,
    engel_growth,
    engel_tower,
    identity_tower,
    word_ops,
    wreath_ops,
)

__all__ = [
    "ClosureMode",
    "EngelGrowthResult",
    "EngelTowerResult",
    "FreeWord",
    "GroupOps",
    "OrbitRestriction",
    "QuotientMode",
    "counts",
    "engel_growth",
    "engel_tower",
    "evaluate",
    "format_free_word",
    "identity_tower",
    "involution_check",
    "involution_engel_check",
    "iterate_word",
    "left_engel_check",
    "left_engel_degree",
    "length_bound",
    "length_bound_check",
    "local_check",
    "local_checking_check",
    "local_decomposition",
    "parse_free_word",
    "perm_wreath_ops",
    "period_check",
    "quotient_instance",
    "quotient_towers_check",
    "stabilized_section",
    "top_orbits",
    "word_ops",
    "wreath_ops",
]
