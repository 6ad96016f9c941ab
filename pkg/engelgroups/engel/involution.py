"""The Engel identity satisfied by involutions."""
from typing import Any

from ..utils.errors import NotInvolutionError
from .free_word import GroupOps


def _power(ops: GroupOps, g: Any, k: int) -> Any:
    base = g if k >= 0 else ops.inv(g)
    result = ops.identity
    for _ in range(abs(k)):
        result = ops.mul(result, base)
    return result


def _commutator(ops: GroupOps, g: Any, h: Any) -> Any:
    return ops.mul(ops.mul(ops.inv(g), ops.inv(h)), ops.mul(g, h))


def involution_engel_check(ops: GroupOps, g: Any, h: Any, n: int) -> bool:
    """
    Whether ``[g, _{n+1} h] = [g, h]^((-2)^n)`` for an involution ``h``.

    Elements are compared with ``==``, so they must have canonical forms such
    as wreath elements; normalized words of different shape may still be equal.

    Raises
    ------
    NotInvolutionError
        If ``h * h`` is not the identity
    """
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if ops.mul(h, h) != ops.identity:
        raise NotInvolutionError(f"{h} does not square to the identity")
    base = _commutator(ops, g, h)
    tower = base
    for _ in range(n):
        tower = _commutator(ops, tower, h)
    return tower == _power(ops, base, (-2) ** n)
