"""Deciding whether a word acts trivially, to bounded depth or by a closure proof."""
import functools
from collections import deque
from dataclasses import dataclass
from typing import Deque, Dict, List, Optional, Tuple, Union

import numpy as np

from ..alphabet import FpVector, rank_at
from ..config import run_defaults
from ..utils.errors import CapExceededError
from ..utils.log import _init_logger
from .letters import BLetter, Rooted, label_set
from .sections import (
    _section_at_letter,
    active_letters,
    first_layer_vector,
    raw_section_at_letter,
    tree_ends_below,
)
from .vertex import Vertex, _randbelow
from .word import Word, normalize

logger = _init_logger(__name__)


@dataclass(frozen=True)
class Proven:
    """A closed set of section words, all fixing their first layer, was found."""

    closure_size: int


@dataclass(frozen=True)
class RefutedAt:
    """The word moves ``witness``, a vertex of length ``level``.

    ``witness`` is None only when one of its letters lies in an alphabet too
    large to write out.
    """

    witness: Optional[Vertex]
    level: int


@dataclass(frozen=True)
class TrivialToDepth:
    depth: int


@dataclass(frozen=True)
class Unknown:
    explored: int


TrivialityVerdict = Union[Proven, RefutedAt, TrivialToDepth, Unknown]


@functools.lru_cache(maxsize=1 << 15)
def _trivial_to_depth(w: Word, d: int) -> bool:
    if d == 0 or w.is_empty():
        return True
    if not first_layer_vector(w).is_zero():
        return False
    if d == 1 or tree_ends_below(w):
        return True
    active = active_letters(w)
    # a nonzero class coefficient moves the first layer of every section in its class
    if not active.rooted_classes_vanish:
        return False
    return all(_trivial_to_depth(_section_at_letter(w, x), d - 1) for x in active.b_active)


def is_trivial_to_depth(w: Word, d: int) -> bool:
    """
    Whether ``w`` fixes every vertex of length at most ``d`` below its level.

    Only the finitely many B-active letters are descended into; the F-active
    classes are settled by their coefficients, so no alphabet is enumerated.
    """
    if d < 0:
        raise ValueError(f"depth must be non-negative, got {d}")
    return _trivial_to_depth(normalize(w), d)


def equal_to_depth(g: Word, h: Word, d: int) -> bool:
    """Equality of ``g`` and ``h`` in the quotient by the stabilizer of layer ``d``."""
    return is_trivial_to_depth(g * h.inverse(), d)


def _closure_key(w: Word) -> Word:
    return w.relevel(0) if w.sig.self_similar else w


def _zero_letter(w: Word) -> FpVector:
    return FpVector.zero(w.sig.p, rank_at(w.sig, w.level))


def _refutation(
    w: Word, prefix: Tuple[FpVector, ...], root: Word
) -> Optional[RefutedAt]:
    """A witness below ``prefix`` if the section ``w`` moves its first or second layer."""
    if not first_layer_vector(w).is_zero():
        letters = prefix + (_zero_letter(w),)
        return RefutedAt(Vertex(root.sig, letters, root.level), len(letters))
    if tree_ends_below(w):
        return None
    active = active_letters(w)
    if active.rooted_classes_vanish:
        return None
    x = active.witness_letter()
    level = len(prefix) + 2
    if x is None:
        return RefutedAt(None, level)
    below = Word._make(w.sig, w.level + 1, ())
    letters = prefix + (x, _zero_letter(below))
    return RefutedAt(Vertex(root.sig, letters, root.level), level)


def prove_trivial(
    w: Word, budget: Optional[int] = None, depth_cap: Optional[int] = None
) -> TrivialityVerdict:
    """
    Try to prove that ``w`` is the identity by closing its set of sections.

    The search runs breadth first over the sections at B-active letters. A
    word whose sections all fix their first layer and whose B-active sections
    are already in the set closes the search; on self-similar trees sections
    are compared after moving them to level 0.

    Parameters
    ----------
    w : Word
    budget : int, optional
        Largest number of distinct section words explored; defaults to
        ``triviality.closure_budget``
    depth_cap : int, optional
        Deepest section explored; defaults to ``triviality.closure_depth_cap``

    Returns
    -------
    Proven, RefutedAt, TrivialToDepth or Unknown
    """
    if budget is None:
        budget = run_defaults.get("triviality", "closure_budget")
    if depth_cap is None:
        depth_cap = run_defaults.get("triviality", "closure_depth_cap")

    root = normalize(w)
    queue: Deque[Tuple[Word, Tuple[FpVector, ...]]] = deque([(root, ())])
    seen = {_closure_key(root)}
    capped = False
    while queue:
        word, prefix = queue.popleft()
        refuted = _refutation(word, prefix, root)
        if refuted is not None:
            return refuted
        if len(prefix) >= depth_cap:
            capped = True
            continue
        if tree_ends_below(word):
            continue
        for x in active_letters(word).b_active:
            child = _section_at_letter(word, x)
            key = _closure_key(child)
            if key in seen:
                continue
            seen.add(key)
            if len(seen) > budget:
                logger.warning(f"closure of {root} exceeded {budget} section words")
                return Unknown(len(seen))
            queue.append((child, prefix + (x,)))
    if capped:
        return TrivialToDepth(depth_cap)
    return Proven(len(seen))


@dataclass(frozen=True)
class SectionWalk:
    """
    Result of :func:`walk_sections`.

    ``witness`` is a vertex moved by the word, or None. ``closed`` means every
    branch ended in an empty section, a repeated one (self-similar trees only)
    or a section without ``b`` letters, and no label set was sampled or skipped.
    """

    witness: Optional[Vertex]
    sections: int
    depth: int
    sampled: bool
    closed: bool


def _has_b(w: Word) -> bool:
    return any(isinstance(l, BLetter) and l.exponent % w.sig.p for l in w.letters)


def _walk_letters(
    w: Word, sample: int, rng: np.random.Generator
) -> Tuple[List[FpVector], bool]:
    """Letters where a ``b`` letter of ``w`` has a nonempty section; True if labels were cut."""
    offsets: Dict[FpVector, None] = {}
    running = _zero_letter(w)
    for letter in w.letters:
        if isinstance(letter, Rooted):
            running = running + letter.vector
        elif letter.exponent % w.sig.p:
            offsets[-running] = None
    if not offsets:
        return [], False
    labels = label_set(w.sig, w.level)
    cut = False
    try:
        chosen = labels.materialize()
    except CapExceededError:
        cut = True
        if labels.r > run_defaults.get("triviality", "label_rank_limit"):
            chosen = []
        else:
            picks = {0, labels.size - 1}
            picks.update(_randbelow(rng, labels.size) for _ in range(sample))
            chosen = [labels.element(i) for i in sorted(picks)]
    letters = dict(offsets)
    for y in offsets:
        for f in chosen:
            letters.setdefault(f + y)
    return list(letters), cut


def walk_sections(
    w: Word, depth: int, sample: Optional[int] = None, seed: int = 0
) -> SectionWalk:
    """
    Check the action of ``w`` on vertices of length at most ``depth``, using
    the letters exactly as written.

    Every section is the unreduced product of the one-letter sections, so
    relations such as ``b^p = 1`` are tested and never applied. Only letters
    where a ``b`` letter has a nonempty section are visited: the offsets of
    the ``b`` letters and their translates by the label set. Label sets too
    large to list contribute ``sample`` seeded labels plus their first and
    last one, and label sets of rank above ``triviality.label_rank_limit`` are
    skipped. On self-similar trees a section equal to one already visited is
    not walked again, so a closed walk proves ``w`` trivial.

    Parameters
    ----------
    w : Word
    depth : int
        Longest vertex checked
    sample : int, optional
        Labels drawn per large label set; defaults to ``triviality.label_sample``
    seed : int

    Returns
    -------
    SectionWalk
    """
    if depth < 0:
        raise ValueError(f"depth must be non-negative, got {depth}")
    if sample is None:
        sample = run_defaults.get("triviality", "label_sample")
    rng = np.random.default_rng(seed)
    if depth == 0:
        return SectionWalk(None, 0, 0, False, not _has_b(w))

    stack: List[Tuple[Word, Tuple[FpVector, ...]]] = [(w, ())]
    seen = {_closure_key(w)}
    sections, deepest, sampled, closed = 0, 0, False, True
    while stack:
        word, prefix = stack.pop()
        deepest = max(deepest, len(prefix) + 1)
        if not first_layer_vector(word).is_zero():
            letters = prefix + (_zero_letter(word),)
            witness = Vertex(w.sig, letters, w.level)
            return SectionWalk(witness, sections, deepest, sampled, False)
        if tree_ends_below(word):
            continue
        if len(prefix) + 1 >= depth:
            closed = closed and not _has_b(word)
            continue
        letters, cut = _walk_letters(word, sample, rng)
        sampled = sampled or cut
        for x in letters:
            child = raw_section_at_letter(word, x)
            if child.is_empty():
                continue
            sections += 1
            if w.sig.self_similar:
                key = _closure_key(child)
                if key in seen:
                    continue
                seen.add(key)
            stack.append((child, prefix + (x,)))
    if sampled:
        logger.info(f"section walk of {len(w)} letters sampled or skipped some label sets")
    return SectionWalk(None, sections, deepest, sampled, closed and not sampled)
