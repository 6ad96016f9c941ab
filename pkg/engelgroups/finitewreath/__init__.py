"""
Exhaustive arithmetic in finite iterated wreath products of elementary abelian p-groups.
"""

from .abelian import (
    abelian_wreath_check,
    abelian_wreath_report,
    component_exponent,
    component_formula_check,
)
from .elem import (
    PermWreathElem,
    WreathElem,
    enumerate_group,
    from_parts,
    perm_wreath_inv,
    perm_wreath_mul,
    random_elem,
    to_perm_wreath,
    w_act,
    w_commutator,
    w_id,
    w_inv,
    w_mul,
    w_pow,
    w_section,
)
from .engel_bound import engel_bound, engel_class_pair, verify_engel_bound
from .quotient import quotient_spec, quotient_to_wreath
from .spec import WreathSpec, parse_wreath_spec

__all__ = [
    "PermWreathElem",
    "WreathElem",
    "WreathSpec",
    "abelian_wreath_check",
    "abelian_wreath_report",
    "component_exponent",
    "component_formula_check",
    "engel_bound",
    "engel_class_pair",
    "enumerate_group",
    "from_parts",
    "parse_wreath_spec",
    "perm_wreath_inv",
    "perm_wreath_mul",
    "quotient_spec",
    "quotient_to_wreath",
    "random_elem",
    "to_perm_wreath",
    "verify_engel_bound",
    "w_act",
    "w_commutator",
    "w_id",
    "w_inv",
    "w_mul",
    "w_pow",
    "w_section",
]
