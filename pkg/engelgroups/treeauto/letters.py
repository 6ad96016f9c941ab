"""Generator letters and their first-level sections."""
import functools
from dataclasses import dataclass
from typing import Tuple, Union

from ..alphabet import BasisLabels, FpVector, TreeSignature, far_set, rank_at
from ..alphabet.far_set import LabelSet
from ..utils.errors import ShapeMismatchError
from .basis import choose_basis_V


@dataclass(frozen=True)
class Rooted:
    """The rooted automorphism translating the first letter at ``level`` by ``vector``."""

    level: int
    vector: FpVector


@dataclass(frozen=True)
class BLetter:
    """The power ``b_level ** exponent`` of the recursive generator."""

    level: int
    exponent: int = 1


GenLetter = Union[Rooted, BLetter]


@functools.lru_cache(maxsize=256)
def label_set(sig: TreeSignature, n: int) -> LabelSet:
    """Letters of X_n at which ``b_n`` has a nontrivial rooted section.

    This is the far set F(n) for growing and explicit trees and the basis V for
    regular trees. Its canonical order gives the basis index of the section.
    """
    if sig.family == "regular":
        return BasisLabels(choose_basis_V(sig.p, sig.r))
    return far_set(sig, n)


def _check_letter_shape(sig: TreeSignature, level: int, x: FpVector) -> None:
    if x.p != sig.p or x.r != rank_at(sig, level):
        raise ShapeMismatchError(
            f"letter {x} of C_{x.p}^{x.r} does not belong to level {level} of {sig}"
        )


@functools.lru_cache(maxsize=1 << 16)
def _b_section(sig: TreeSignature, level: int, k: int, x: FpVector) -> Tuple[GenLetter, ...]:
    if k == 0 or (sig.depth is not None and level + 1 >= sig.depth):
        return ()
    if x.is_zero():
        return (BLetter(level + 1, k),)
    labels = label_set(sig, level)
    if x in labels:
        basis = FpVector.basis(sig.p, rank_at(sig, level + 1), labels.index(x), k)
        return (Rooted(level + 1, basis),)
    return ()


def letter_section_letters(
    sig: TreeSignature, letter: GenLetter, x: FpVector
) -> Tuple[GenLetter, ...]:
    """Letters of ``letter|_x``; rooted letters have trivial sections."""
    if isinstance(letter, Rooted):
        return ()
    return _b_section(sig, letter.level, letter.exponent % sig.p, x)


def letter_section(sig: TreeSignature, letter: GenLetter, x: FpVector):
    """
    Section of a single generator letter at the first-level letter ``x``.

    ``b_n^k`` has section ``b_{n+1}^k`` at 0 and ``e_f^k`` (the basis vector of
    X_{n+1} with the index of ``f``) at each ``f`` of the label set; every other
    section, and every section of a rooted letter, is trivial.

    Parameters
    ----------
    sig : TreeSignature
    letter : Rooted or BLetter
    x : FpVector
        Letter of X_n, n the level of ``letter``

    Returns
    -------
    Word
        A word of base level n + 1 with at most one letter
    """
    from .word import Word

    _check_letter_shape(sig, letter.level, x)
    return Word._make(sig, letter.level + 1, letter_section_letters(sig, letter, x))
