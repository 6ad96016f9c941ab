"""Lifting generators of the upper companion groups to stabilizer elements."""
import functools
from typing import List, Tuple

from ..alphabet import FpVector, TreeSignature
from ..utils.errors import ConstructionFailed, WrongFamilyError
from .letters import BLetter, GenLetter, Rooted, label_set
from .sections import act, section
from .vertex import Vertex
from .word import Word, normalize, product


def _basis_letters(letter: Rooted) -> List[Rooted]:
    """Split a rooted letter into powers of basis vectors."""
    v = letter.vector
    return [
        Rooted(letter.level, FpVector.basis(v.p, v.r, i, k)) for i, k in v.coords
    ]


@functools.lru_cache(maxsize=4096)
def _lift(sig: TreeSignature, target: GenLetter, prefix: Tuple[FpVector, ...]) -> Word:
    """A level-0 word fixing ``prefix`` whose section there is ``target``."""
    n = len(prefix)
    if n == 0:
        return normalize(Word._make(sig, 0, (target,)))
    x = prefix[-1]
    if isinstance(target, BLetter):
        # (b^k)^x has section b_n^k at x
        offset = x
        k = target.exponent
    else:
        ((i, k),) = target.vector.coords
        # (b^k)^{x - f} has section k e_f at x
        offset = x - label_set(sig, n - 1).element(i)
    local = Word._make(
        sig, n - 1, (Rooted(n - 1, -offset), BLetter(n - 1, k), Rooted(n - 1, offset))
    )
    local = normalize(local)
    pieces = []
    for letter in local.letters:
        parts = _basis_letters(letter) if isinstance(letter, Rooted) else [letter]
        pieces.extend(_lift(sig, part, prefix[:-1]) for part in parts)
    return product(pieces, sig, 0)


def fractality_witness(sig: TreeSignature, target: Word, u: Vertex) -> Word:
    """
    A word in the level-0 generators that fixes ``u`` and has section ``target`` there.

    Parameters
    ----------
    sig : TreeSignature
        Growing or regular signature
    target : Word
        Word of base level ``len(u)`` with at most one letter, a power of
        ``b_n`` or of a basis vector of X_n
    u : Vertex
        Vertex of the whole tree

    Returns
    -------
    Word

    Raises
    ------
    ConstructionFailed
        If the constructed word does not have the required section
    """
    if sig.family not in ("growing", "regular"):
        raise WrongFamilyError(f"fractality witnesses need a growing or regular tree, got {sig}")
    if target.level != len(u):
        raise ValueError(f"target of level {target.level} for a vertex of length {len(u)}")
    target = normalize(target)
    if target.is_empty():
        return Word.empty(sig, 0)
    if len(target.letters) != 1:
        raise ValueError(f"target {target} is not a single generator of E|_{target.level}")
    (letter,) = target.letters
    if isinstance(letter, Rooted) and letter.vector.nnz != 1:
        raise ValueError(f"rooted target {letter.vector} is not a power of a basis vector")

    g = _lift(sig, letter, tuple(u.letters))
    if act(g, u) != u or section(g, u) != target:
        raise ConstructionFailed(f"lift of {target} to {u} has section {section(g, u)}")
    return g
