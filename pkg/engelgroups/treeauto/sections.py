"""
Sections, vertex actions and the active-letter partition of a word.

A word ``r_0 b^k_1 r_1 ... b^k_m r_m`` in normal form is the product
``(b^k_1)^{y_1} ... (b^k_m)^{y_m} x`` with offsets ``y_i = -(r_0 + ... + r_{i-1})``
and ``x`` the sum of all rooted letters. The conjugate ``(b^k)^y`` has section
``b^k|_{x - y}`` at the first-layer letter ``x``, so only the offsets themselves
and the translates ``labels + y`` carry nontrivial sections.
"""
import functools
import itertools
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Tuple

from ..alphabet import FpVector, rank_at
from ..alphabet.far_set import LabelSet
from ..config import run_defaults
from ..utils.errors import ShapeMismatchError
from .letters import GenLetter, Rooted, _check_letter_shape, label_set, letter_section_letters
from .vertex import Vertex
from .word import Word, normalize

B_ACTIVE = "b-active"
F_ACTIVE = "f-active"
INACTIVE = "inactive"


def tree_ends_below(w: Word) -> bool:
    """True when the tree has no level below the base level of ``w``."""
    depth = w.sig.depth
    return depth is not None and w.level + 1 >= depth


def first_layer_vector(w: Word) -> FpVector:
    """Translation of the first letter under ``w``: the sum of its rooted letters."""
    total = FpVector.zero(w.sig.p, rank_at(w.sig, w.level))
    for letter in w.letters:
        if isinstance(letter, Rooted):
            total = total + letter.vector
    return total


def raw_section_at_letter(w: Word, x: FpVector) -> Word:
    """Product of the one-letter sections of ``w`` at ``x``, left unreduced."""
    parts: List[GenLetter] = []
    running = x
    for letter in w.letters:
        if isinstance(letter, Rooted):
            running = running + letter.vector
        else:
            parts.extend(letter_section_letters(w.sig, letter, running))
    return Word._make(w.sig, w.level + 1, parts)


@functools.lru_cache(maxsize=1 << 16)
def _section_at_letter(w: Word, x: FpVector) -> Word:
    return normalize(raw_section_at_letter(w, x))


def section_at_letter(w: Word, x: FpVector) -> Word:
    """Section ``w|_x`` at a first-layer letter, by the cocycle rule ``(gh)|_x = g|_x h|_{x.g}``."""
    _check_letter_shape(w.sig, w.level, x)
    return _section_at_letter(w, x)


def _check_vertex(w: Word, u: Vertex) -> None:
    if u.sig != w.sig or u.start != w.level:
        raise ShapeMismatchError(
            f"vertex below level {u.start} of {u.sig} does not match a word of level "
            f"{w.level} over {w.sig}"
        )


def section(w: Word, u: Vertex) -> Word:
    """
    Section ``w|_u`` of a word at a vertex below its base level.

    Parameters
    ----------
    w : Word
    u : Vertex
        Vertex with ``u.start == w.level``

    Returns
    -------
    Word
        Normalized word of base level ``w.level + len(u)``
    """
    _check_vertex(w, u)
    for x in u.letters:
        w = _section_at_letter(w, x)
    return w


def act(w: Word, u: Vertex) -> Vertex:
    """Image ``u.w`` of a vertex under the right action of ``w``."""
    _check_vertex(w, u)
    image = []
    for x in u.letters:
        image.append(x + first_layer_vector(w))
        w = _section_at_letter(w, x)
    return Vertex(u.sig, tuple(image), u.start)


def conjugated_form(w: Word) -> Tuple[List[Tuple[int, FpVector]], FpVector]:
    """Pairs ``(k_i, y_i)`` and the trailing rooted vector of ``(b^k_1)^{y_1} ... x``."""
    running = FpVector.zero(w.sig.p, rank_at(w.sig, w.level))
    pairs = []
    for letter in w.letters:
        if isinstance(letter, Rooted):
            running = running + letter.vector
        else:
            pairs.append((letter.exponent % w.sig.p, -running))
    return pairs, running


@dataclass(frozen=True)
class ActiveLetters:
    """The partition of X_n into the letters where a word has nontrivial sections.

    Attributes
    ----------
    word : Word
    b_active : tuple of FpVector
        Distinct offsets ``y_i``; the section at ``y_i`` contains a ``b`` letter
    coefficients : dict
        Offset ``y`` to ``K(y)``, the exponent sum mod p of the ``b`` letters
        conjugated by ``y``. The class ``labels + y`` carries the rooted
        section coordinate ``K(y)`` at the basis index of ``x - y``.
    labels : LabelSet or None
        None when the tree ends below the word's level
    """

    word: Word
    b_active: Tuple[FpVector, ...]
    coefficients: Dict[FpVector, int] = field(hash=False)
    labels: Optional[LabelSet] = field(default=None, hash=False)

    @property
    def rooted_classes_vanish(self) -> bool:
        """True iff every section away from the offsets is the identity."""
        return self.labels is None or all(k == 0 for k in self.coefficients.values())

    def nonzero_offsets(self) -> Iterator[FpVector]:
        if self.labels is None:
            return iter(())
        return (y for y in self.b_active if self.coefficients[y])

    def classify(self, x: FpVector) -> str:
        if x in self.coefficients:
            return B_ACTIVE
        if any((x - y) in self.labels for y in self.nonzero_offsets()):
            return F_ACTIVE
        return INACTIVE

    def pure_rooted_section(self, x: FpVector) -> FpVector:
        """First-layer vector of the section at ``x`` (for any ``x``, active or not)."""
        sig, level = self.word.sig, self.word.level
        if self.labels is None:
            raise ShapeMismatchError(f"the tree has no level below {level}")
        coords: Dict[int, int] = {}
        for y in self.nonzero_offsets():
            f = x - y
            if f in self.labels:
                coords[self.labels.index(f)] = self.coefficients[y]
        return FpVector._make(sig.p, rank_at(sig, level + 1), coords)

    def rooted_overlap(self) -> Tuple[int, Optional[FpVector]]:
        """
        Largest e-length of a pure rooted section, with a letter carrying it.

        The rooted section at a letter outside the offsets has one coordinate
        per class through it, so the length is the number of classes meeting
        there: 0 without classes, 1 if the classes are disjoint away from the
        offsets. When two classes meet only at letters too large to write out,
        2 is returned as a lower bound together with None.
        """
        offsets = list(self.nonzero_offsets())
        if not offsets:
            return 0, None
        avoid = set(self.coefficients)
        limit = len(avoid) + 1
        writable = self.labels.r <= run_defaults.get("arithmetic", "materialize_rank_limit")
        for i, y1 in enumerate(offsets):
            for y2 in offsets[i + 1 :]:
                count = self.labels.meet_count(y2 - y1, limit)
                if count == 0:
                    continue
                if count >= limit and not writable:
                    return 2, None
                for f in itertools.islice(self.labels.meet(y2 - y1), limit):
                    x = y1 + f
                    if x not in avoid:
                        return self.pure_rooted_section(x).nnz, x
        return 1, None

    def witness_letter(self) -> Optional[FpVector]:
        """A letter whose section moves its first layer, or None if none exists.

        None is also returned when such a letter exists but lives in an
        alphabet too large to write out.
        """
        y = next(self.nonzero_offsets(), None)
        if y is None or self.labels.r > run_defaults.get("arithmetic", "materialize_rank_limit"):
            return None
        return self.labels.element(0) + y


def active_letters(w: Word) -> ActiveLetters:
    """
    Partition the first layer below ``w`` by the kind of section found there.

    Offsets are B-active: the section there contains ``b_{n+1}`` letters. Each
    translate ``labels + y`` of an offset with ``K(y) != 0`` is F-active and has
    a pure rooted section. All other letters have trivial sections. Nothing is
    enumerated; classes are described by their offsets.
    """
    pairs, _ = conjugated_form(w)
    coefficients: Dict[FpVector, int] = {}
    for k, y in pairs:
        coefficients[y] = (coefficients.get(y, 0) + k) % w.sig.p
    if tree_ends_below(w):
        return ActiveLetters(w, (), {}, None)
    return ActiveLetters(w, tuple(coefficients), coefficients, label_set(w.sig, w.level))
