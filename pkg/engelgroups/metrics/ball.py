"""Balls of bounded representative length, enumerated or sampled."""
from typing import Iterator, Optional

import numpy as np

from ..alphabet import FpVector, TreeSignature, rank_at
from ..alphabet.ranks import checked_pow
from ..config import run_defaults
from ..treeauto import Word
from ..treeauto.vertex import _randbelow
from ..utils.errors import CapExceededError
from ..utils.log import _init_logger
from .length import GenSetTag

logger = _init_logger(__name__)


def alphabet_size(sig: TreeSignature, tag: GenSetTag) -> int:
    p = sig.p
    rank = rank_at(sig, tag.level)
    if tag.kind == "E":
        return (p - 1) * (1 + rank)
    size = checked_pow(p, rank)
    return (p - 1) * size + size - 1


def _letter(sig: TreeSignature, tag: GenSetTag, index: int) -> Word:
    """The letter of ``tag`` at position ``index`` (b-powers first)."""
    p, n = sig.p, tag.level
    rank = rank_at(sig, n)
    k, slot = index % (p - 1) + 1, index // (p - 1)
    if tag.kind == "E":
        if slot == 0:
            return Word.b(sig, n, k)
        return Word.rooted(sig, n, FpVector.basis(p, rank, slot - 1, k))
    size = checked_pow(p, rank)
    if slot < size:
        y = FpVector.from_index(p, rank, slot)
        return Word.b(sig, n, k).conjugate(Word.rooted(sig, n, y))
    return Word.rooted(sig, n, FpVector.from_index(p, rank, index - (p - 1) * size + 1))


def generators(sig: TreeSignature, tag: GenSetTag) -> Iterator[Word]:
    """The letters of ``tag`` as one-letter words."""
    for index in range(alphabet_size(sig, tag)):
        yield _letter(sig, tag, index)


def ball_word_count(sig: TreeSignature, tag: GenSetTag, t: int) -> int:
    """Number of letter strings of length at most ``t``."""
    size = alphabet_size(sig, tag)
    return sum(size**j for j in range(t + 1))


def enumerate_ball(
    sig: TreeSignature, tag: GenSetTag, t: int, cap: Optional[int] = None
) -> Iterator[Word]:
    """
    All distinct normalized words that are products of at most ``t`` letters of ``tag``.

    Words are produced breadth first, shortest products first, so the stream
    for radius t is a prefix of the stream for radius t + 1.

    Raises
    ------
    CapExceededError
        If the number of letter strings exceeds ``cap``; use :func:`sample_ball`
    """
    if cap is None:
        cap = run_defaults.get("enumeration", "word_count_cap")
    if t < 0:
        raise ValueError(f"radius must be non-negative, got {t}")
    if ball_word_count(sig, tag, t) > cap:
        raise CapExceededError(
            f"the radius-{t} ball over {tag} of {sig} has more than {cap} letter strings; "
            "sample it instead"
        )
    alphabet = list(generators(sig, tag))
    empty = Word.empty(sig, tag.level)
    seen = {empty}
    frontier = [empty]
    yield empty
    for _ in range(t):
        grown = []
        for w in frontier:
            for a in alphabet:
                v = w * a
                if v not in seen:
                    seen.add(v)
                    grown.append(v)
                    yield v
        frontier = grown


def random_letter(sig: TreeSignature, tag: GenSetTag, rng: np.random.Generator) -> Word:
    return _letter(sig, tag, _randbelow(rng, alphabet_size(sig, tag)))


def random_word(sig: TreeSignature, tag: GenSetTag, t: int, rng: np.random.Generator) -> Word:
    """A product of a uniform number ``0..t`` of uniform letters of ``tag``."""
    w = Word.empty(sig, tag.level)
    for _ in range(int(rng.integers(0, t + 1))):
        w = w * random_letter(sig, tag, rng)
    return w


def sample_ball(
    sig: TreeSignature, tag: GenSetTag, t: int, count: int, seed: int
) -> Iterator[Word]:
    """
    ``count`` seeded random words of representative length at most ``t``.

    The number of letters is drawn uniformly from ``0..t``, then each letter
    uniformly from the alphabet of ``tag``. The same seed gives the same stream.
    """
    rng = np.random.default_rng(seed)
    for _ in range(count):
        yield random_word(sig, tag, t, rng)


def ball(
    sig: TreeSignature,
    tag: GenSetTag,
    t: int,
    count: Optional[int] = None,
    seed: Optional[int] = None,
    cap: Optional[int] = None,
):
    """
    The radius-``t`` ball, exhaustive when it fits under ``cap`` and sampled otherwise.

    Returns
    -------
    mode : str
        ``"exhaustive"`` or ``"sampled"``
    words : iterator of Word
    """
    if cap is None:
        cap = run_defaults.get("enumeration", "word_count_cap")
    if ball_word_count(sig, tag, t) <= cap:
        return "exhaustive", enumerate_ball(sig, tag, t, cap)
    if count is None or seed is None:
        raise ValueError(f"the radius-{t} ball over {tag} needs sampling; give count and seed")
    logger.info(f"radius-{t} ball over {tag} of {sig} exceeds {cap} strings; sampling {count}")
    return "sampled", sample_ball(sig, tag, t, count, seed)
