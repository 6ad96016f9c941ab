"""Images of words in the congruence quotient ``G / St(d)``, as wreath elements."""
import functools

from ..alphabet import FpVector, TreeSignature, rank_at
from ..config import run_defaults
from ..treeauto import Word, first_layer_vector, layer_size, section_at_letter
from ..utils.errors import CapExceededError, PreconditionViolated
from .elem import Node, WreathElem
from .spec import WreathSpec


def quotient_spec(sig: TreeSignature, d: int, level: int = 0) -> WreathSpec:
    """The iterated wreath product acting on the ``d`` layers below ``level``."""
    if d < 0:
        raise PreconditionViolated(f"quotient depth must be non-negative, got {d}")
    if sig.depth is not None and level + d > sig.depth:
        raise PreconditionViolated(f"{sig} has only {sig.depth} levels, asked for {level} + {d}")
    return WreathSpec(sig.p, tuple(rank_at(sig, level + i) for i in range(d)))


def _check_size(sig: TreeSignature, level: int, d: int) -> None:
    nodes = sum(layer_size(sig, i, level) for i in range(d))
    cap = run_defaults.get("enumeration", "orbit_cap")
    if nodes > cap:
        raise CapExceededError(f"the depth-{d} quotient below level {level} needs {nodes} nodes")


@functools.lru_cache(maxsize=1 << 14)
def _image(w: Word, d: int) -> Node:
    if d == 0:
        return None
    top = first_layer_vector(w).to_index()
    if d == 1:
        return (top, ())
    p, rank = w.sig.p, rank_at(w.sig, w.level)
    children = tuple(
        _image(section_at_letter(w, FpVector.from_index(p, rank, x)), d - 1)
        for x in range(p**rank)
    )
    return (top, children)


def quotient_to_wreath(sig: TreeSignature, d: int, w: Word) -> WreathElem:
    """
    The image of ``w`` acting on the first ``d`` layers below its base level.

    The map is a homomorphism with kernel ``St(d)``: the image is the identity
    exactly when ``w`` is trivial to depth ``d``.

    Parameters
    ----------
    sig : TreeSignature
    d : int
        Quotient depth
    w : Word
        Word over ``sig``; levels below ``w.level`` are used

    Raises
    ------
    CapExceededError
        If the layers above depth ``d`` hold more vertices than ``enumeration.orbit_cap``
    """
    if w.sig != sig:
        raise PreconditionViolated(f"word over {w.sig} mapped into a quotient of {sig}")
    spec = quotient_spec(sig, d, w.level)
    _check_size(sig, w.level, d)
    return WreathElem(spec, _image(w, d))
