"""Free words in ``x, y1, ..., yk``, their iterates and evaluation in a group."""
import re
from dataclasses import dataclass
from typing import Any, Callable, List, NamedTuple, Optional, Sequence, Tuple

from ..alphabet.ranks import checked_pow
from ..utils.errors import ArityMismatchError, ParseError

# (generator, sign): generator 0 is x, generator i >= 1 is y_i
FreeLetter = Tuple[int, int]

_TOKEN_RE = re.compile(r"\s*(?:(?P<x>[xX])|(?P<y>[yY])(?P<index>\d+))\s*")


def _free_reduce(letters: Sequence[FreeLetter]) -> Tuple[FreeLetter, ...]:
    stack: List[FreeLetter] = []
    for gen, sign in letters:
        if stack and stack[-1] == (gen, -sign):
            stack.pop()
        else:
            stack.append((gen, sign))
    return tuple(stack)


@dataclass(frozen=True)
class FreeWord:
    """A freely reduced word over ``x`` and ``y_1, ..., y_arity``."""

    letters: Tuple[FreeLetter, ...] = ()
    arity: int = 0

    def __post_init__(self):
        if self.arity < 0:
            raise ValueError(f"arity must be non-negative, got {self.arity}")
        for gen, sign in self.letters:
            if sign not in (1, -1) or not 0 <= gen <= self.arity:
                raise ValueError(f"letter {(gen, sign)} is not over x, y1..y{self.arity}")
        object.__setattr__(self, "letters", _free_reduce(self.letters))

    @classmethod
    def x(cls, arity: int = 0) -> "FreeWord":
        return cls(((0, 1),), arity)

    @classmethod
    def commutator(cls) -> "FreeWord":
        """``[x, y1] = X Y1 x y1``."""
        return cls(((0, -1), (1, -1), (0, 1), (1, 1)), 1)

    @classmethod
    def power(cls, k: int) -> "FreeWord":
        """``x**k``."""
        sign = 1 if k >= 0 else -1
        return cls(((0, sign),) * abs(k), 0)

    def inverse(self) -> "FreeWord":
        return FreeWord(tuple((gen, -sign) for gen, sign in reversed(self.letters)), self.arity)

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return format_free_word(self)


def parse_free_word(text: str, arity: Optional[int] = None) -> FreeWord:
    """
    Parse ``X Y1 x y1``: ``x``/``y<i>`` are generators, capitals their inverses.

    The arity defaults to the largest ``y`` index that occurs.
    """
    letters: List[FreeLetter] = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        if not match or match.end() == pos:
            raise ParseError(f"cannot parse free word {text!r} at position {pos}")
        pos = match.end()
        if match["x"]:
            letters.append((0, 1 if match["x"] == "x" else -1))
        else:
            index = int(match["index"])
            if index < 1:
                raise ParseError(f"y indices start at 1, got y{index} in {text!r}")
            letters.append((index, 1 if match["y"] == "y" else -1))
    largest = max((gen for gen, _ in letters), default=0)
    if arity is None:
        arity = largest
    elif largest > arity:
        raise ParseError(f"{text!r} uses y{largest} but the arity is {arity}")
    return FreeWord(tuple(letters), arity)


def format_free_word(w: FreeWord) -> str:
    tokens = []
    for gen, sign in w.letters:
        name = "x" if gen == 0 else f"y{gen}"
        tokens.append(name if sign == 1 else name.upper())
    return " ".join(tokens)


def iterate_word(w: FreeWord, n: int) -> FreeWord:
    """
    ``w∘0 = x`` and ``w∘(n+1) = w(w∘n, y1, ..., yk)``, freely reduced.
    """
    if n < 0:
        raise ValueError(f"iteration count must be non-negative, got {n}")
    current = FreeWord.x(w.arity)
    for _ in range(n):
        inverse = current.inverse()
        letters: List[FreeLetter] = []
        for gen, sign in w.letters:
            if gen == 0:
                letters.extend(current.letters if sign == 1 else inverse.letters)
            else:
                letters.append((gen, sign))
        current = FreeWord(tuple(letters), w.arity)
    return current


def counts(w: FreeWord) -> Tuple[int, List[int]]:
    """Occurrences ``a(w)`` of x and ``a_i(w)`` of each ``y_i``, inverses included."""
    occurrences = [0] * (w.arity + 1)
    for gen, _ in w.letters:
        occurrences[gen] += 1
    return occurrences[0], occurrences[1:]


def length_bound(w: FreeWord, n: int, len_g: int, len_h: Sequence[int]) -> int:
    """
    ``a^n l(g) + sum_{i=0}^{n} a^i sum_j a_j l(h_j)`` with ``a = a(w)``.

    Bounds the length of ``w∘n(g, h_1, ..., h_k)`` by the lengths of its inputs.

    Raises
    ------
    ArityMismatchError
        If ``len_h`` does not have one entry per ``y``
    IntegerBudgetError
        If a power of ``a(w)`` leaves the integer budget
    """
    if len(len_h) != w.arity:
        raise ArityMismatchError(f"{w.arity} lengths of y's expected, got {len(len_h)}")
    if n < 0 or len_g < 0 or any(length < 0 for length in len_h):
        raise ValueError("iteration count and lengths must be non-negative")
    a, a_i = counts(w)
    s = sum(count * length for count, length in zip(a_i, len_h))
    return checked_pow(a, n) * len_g + sum(checked_pow(a, i) for i in range(n + 1)) * s


class GroupOps(NamedTuple):
    """Multiplication, inversion and identity of the group a free word is evaluated in."""

    mul: Callable[[Any, Any], Any]
    inv: Callable[[Any], Any]
    identity: Any


def evaluate(w: FreeWord, g: Any, hs: Sequence[Any], ops: GroupOps) -> Any:
    """
    The word map of ``w`` at ``x = g``, ``y_i = hs[i - 1]``.

    Raises
    ------
    ArityMismatchError
        If ``len(hs)`` differs from the arity of ``w``
    """
    if len(hs) != w.arity:
        raise ArityMismatchError(f"a word of arity {w.arity} got {len(hs)} y-values")
    values = [g, *hs]
    inverses = {}
    result = ops.identity
    for gen, sign in w.letters:
        if sign == 1:
            factor = values[gen]
        else:
            if gen not in inverses:
                inverses[gen] = ops.inv(values[gen])
            factor = inverses[gen]
        result = ops.mul(result, factor)
    return result
