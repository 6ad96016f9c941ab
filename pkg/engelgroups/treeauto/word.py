"""Words over the recursive and rooted generators."""
import re
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

from ..alphabet import FpVector, TreeSignature, format_vector, parse_vector, rank_at
from ..utils.errors import ParseError, ShapeMismatchError
from .letters import BLetter, GenLetter, Rooted

_TERM_RE = re.compile(
    r"\s*(?:b(?P<blevel>\d+)|r(?P<rlevel>\d+)\s*:\s*(?P<vec>\[[^\]]*\]|\{[^}]*\}))"
    r"(?:\^(?P<exp>-?\d+))?\s*"
)


@dataclass(frozen=True)
class Word:
    """A product of generator letters, read left to right, acting at base level ``level``.

    Letters are ``BLetter`` (powers of ``b_level``) and ``Rooted`` (elements of
    X_level). The group operations below return normalized words; the
    constructor keeps the letters as given so raw input can be inspected.
    """

    sig: TreeSignature
    level: int
    letters: Tuple[GenLetter, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        if self.level < 0:
            raise ValueError(f"base level must be non-negative, got {self.level}")
        rank = None
        for letter in self.letters:
            if letter.level != self.level:
                raise ShapeMismatchError(
                    f"letter of level {letter.level} in a word of base level {self.level}"
                )
            if isinstance(letter, Rooted):
                rank = rank_at(self.sig, self.level) if rank is None else rank
                if letter.vector.p != self.sig.p or letter.vector.r != rank:
                    raise ShapeMismatchError(
                        f"rooted vector {letter.vector} does not belong to X_{self.level}"
                    )

    @classmethod
    def _make(cls, sig: TreeSignature, level: int, letters: Sequence[GenLetter]) -> "Word":
        """Build without validation, for letters produced by this package."""
        word = object.__new__(cls)
        object.__setattr__(word, "sig", sig)
        object.__setattr__(word, "level", level)
        object.__setattr__(word, "letters", tuple(letters))
        return word

    @classmethod
    def empty(cls, sig: TreeSignature, level: int = 0) -> "Word":
        return cls._make(sig, level, ())

    @classmethod
    def b(cls, sig: TreeSignature, level: int = 0, exponent: int = 1) -> "Word":
        return normalize(cls._make(sig, level, (BLetter(level, exponent),)))

    @classmethod
    def rooted(cls, sig: TreeSignature, level: int, vector: FpVector) -> "Word":
        return normalize(cls(sig, level, (Rooted(level, vector),)))

    def is_empty(self) -> bool:
        return not self.letters

    def __len__(self) -> int:
        return len(self.letters)

    def _check_compatible(self, other: "Word") -> None:
        if self.sig != other.sig or self.level != other.level:
            raise ShapeMismatchError(
                f"cannot multiply words of level {self.level} over {self.sig} "
                f"and level {other.level} over {other.sig}"
            )

    def __mul__(self, other: "Word") -> "Word":
        self._check_compatible(other)
        return normalize(Word._make(self.sig, self.level, self.letters + other.letters))

    def inverse(self) -> "Word":
        p = self.sig.p
        inverted: List[GenLetter] = []
        for letter in reversed(self.letters):
            if isinstance(letter, Rooted):
                inverted.append(Rooted(letter.level, -letter.vector))
            else:
                inverted.append(BLetter(letter.level, (-letter.exponent) % p))
        return normalize(Word._make(self.sig, self.level, inverted))

    def __pow__(self, exponent: int) -> "Word":
        base = self if exponent >= 0 else self.inverse()
        result = Word.empty(self.sig, self.level)
        for _ in range(abs(exponent)):
            result = result * base
        return result

    def conjugate(self, by: "Word") -> "Word":
        """``by^-1 * self * by``."""
        return by.inverse() * self * by

    def commutator(self, other: "Word") -> "Word":
        """``[self, other] = self^-1 other^-1 self other``."""
        return self.inverse() * other.inverse() * self * other

    def relevel(self, level: int) -> "Word":
        """The same letters read at another level; only meaningful on self-similar trees."""
        if not self.sig.self_similar:
            raise ShapeMismatchError(f"words over {self.sig} cannot change level")
        letters = [
            Rooted(level, l.vector) if isinstance(l, Rooted) else BLetter(level, l.exponent)
            for l in self.letters
        ]
        return Word._make(self.sig, level, letters)

    def __str__(self) -> str:
        return format_word(self)


def normalize(w: Word) -> Word:
    """
    Reduce a word: merge adjacent rooted letters, reduce and merge adjacent ``b``
    powers mod p, and drop trivial letters.

    The result alternates rooted letters and ``b`` powers, which is the
    conjugated normal form ``(b^k1)^y1 ... (b^km)^ym x`` written out.
    """
    p = w.sig.p
    stack: List[GenLetter] = []
    for letter in w.letters:
        if isinstance(letter, Rooted):
            if letter.vector.is_zero():
                continue
            if stack and isinstance(stack[-1], Rooted):
                merged = stack[-1].vector + letter.vector
                stack.pop()
                if not merged.is_zero():
                    stack.append(Rooted(letter.level, merged))
            else:
                stack.append(letter)
        else:
            k = letter.exponent % p
            if k == 0:
                continue
            if stack and isinstance(stack[-1], BLetter):
                k = (stack.pop().exponent + k) % p
                if k:
                    stack.append(BLetter(letter.level, k))
            else:
                stack.append(BLetter(letter.level, k))
    return Word._make(w.sig, w.level, stack)


def commutator(*words: Word) -> Word:
    """Left-normed commutator ``[w1, w2, ..., wk] = [[w1, w2], ..., wk]``."""
    if not words:
        raise ValueError("commutator needs at least one word")
    result = words[0]
    for word in words[1:]:
        result = result.commutator(word)
    return result


def product(words: Iterable[Word], sig: TreeSignature, level: int = 0) -> Word:
    result = Word.empty(sig, level)
    for word in words:
        result = result * word
    return result


def parse_word(text: str, sig: TreeSignature, level: Optional[int] = None) -> Word:
    """
    Parse the word grammar ``term (SP term)*`` with
    ``term := ('b' LEVEL | 'r' LEVEL ':' VEC) ('^' EXP)?``.

    Dense vectors shorter than the rank of their level are zero-padded. The
    empty string is the empty word at ``level`` (default 0). Letters are kept
    as written; call :func:`normalize` or multiply to reduce.
    """
    letters: List[GenLetter] = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        match = _TERM_RE.match(text, pos)
        if not match or match.end() == pos:
            raise ParseError(f"cannot parse word {text!r} at position {pos}")
        pos = match.end()
        exp = int(match["exp"]) if match["exp"] is not None else 1
        if match["blevel"] is not None:
            letters.append(BLetter(int(match["blevel"]), exp))
        else:
            lvl = int(match["rlevel"])
            vec = parse_vector(match["vec"], sig.p, rank_at(sig, lvl))
            letters.append(Rooted(lvl, vec.scale(exp)))
    levels = {letter.level for letter in letters}
    if len(levels) > 1:
        raise ParseError(f"all letters of {text!r} must share one level, got {sorted(levels)}")
    if levels:
        (found,) = levels
        if level is not None and level != found:
            raise ParseError(f"word {text!r} has level {found}, expected {level}")
        level = found
    return Word(sig, 0 if level is None else level, letters)


def format_word(w: Word) -> str:
    terms = []
    for letter in w.letters:
        if isinstance(letter, Rooted):
            terms.append(f"r{letter.level}:{format_vector(letter.vector)}")
        elif letter.exponent == 1:
            terms.append(f"b{letter.level}")
        else:
            terms.append(f"b{letter.level}^{letter.exponent}")
    return " ".join(terms)

