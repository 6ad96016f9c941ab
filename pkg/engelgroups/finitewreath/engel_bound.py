"""Brute-force Engel classes in finite iterated wreath products."""
from typing import Optional

from ..metrics.report import VerificationReport
from ..utils.errors import SpecMismatchError
from ..utils.log import _init_logger
from .elem import WreathElem, enumerate_group, w_commutator
from .spec import WreathSpec

logger = _init_logger(__name__)


def engel_class_pair(g: WreathElem, h: WreathElem, limit: int) -> Optional[int]:
    """
    Least ``k`` in ``1..limit`` with ``[g, _k h]`` trivial, or None.

    ``[g, _1 h] = [g, h]`` and ``[g, _{k+1} h] = [[g, _k h], h]``.
    """
    if g.spec != h.spec:
        raise SpecMismatchError(f"elements of {g.spec} and {h.spec} cannot be combined")
    current = g
    for k in range(1, limit + 1):
        current = w_commutator(current, h)
        if current.is_identity():
            return k
    return None


def engel_bound(spec: WreathSpec) -> int:
    """``(p**n - 1) / (p - 1)`` for a wreath product of depth n."""
    return (spec.p**spec.depth - 1) // (spec.p - 1)


def verify_engel_bound(spec: WreathSpec, cap: Optional[int] = None) -> VerificationReport:
    """
    Check every pair of the group against the bound ``(p**n - 1) / (p - 1)``.

    The report records the largest Engel class seen as ``max_engel_class``
    and the bound as ``bound``.

    Raises
    ------
    CapExceededError
        If the group is larger than ``cap`` (default ``enumeration.group_cap``)
    """
    bound = engel_bound(spec)
    elements = list(enumerate_group(spec, cap))
    report = VerificationReport("wreath-engel", str(spec), spec.depth)
    report.extra["bound"] = bound
    logger.info(f"checking {len(elements) ** 2} pairs of {spec} against the bound {bound}")
    for h in elements:
        for g in elements:
            report.tested += 1
            # k >= 1 by convention, so the trivial group (bound 0) reports class 1
            k = engel_class_pair(g, h, max(bound, 1))
            if k is None:
                report.add_violation(g=g.to_nested(), h=h.to_nested(), bound=bound)
            else:
                report.observe_max("max_engel_class", k)
    return report
