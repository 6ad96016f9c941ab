"""Representative word lengths over the generating sets E|_n and S|_n."""
from dataclasses import dataclass

from ..treeauto import Rooted, Word, normalize
from ..treeauto.sections import conjugated_form
from ..utils.errors import ShapeMismatchError

GEN_SET_KINDS = ("E", "S")


@dataclass(frozen=True)
class GenSetTag:
    """Generating set ``E|_n`` (b-powers and basis-vector powers) or ``S|_n``
    (conjugates of b-powers and all rooted vectors)."""

    kind: str
    level: int

    def __post_init__(self):
        if self.kind not in GEN_SET_KINDS:
            raise ValueError(f"generating set must be one of {GEN_SET_KINDS}, got {self.kind!r}")
        if self.level < 0:
            raise ValueError(f"level must be non-negative, got {self.level}")

    @classmethod
    def E(cls, level: int) -> "GenSetTag":
        return cls("E", level)

    @classmethod
    def S(cls, level: int) -> "GenSetTag":
        return cls("S", level)

    def __str__(self) -> str:
        return f"{self.kind}|_{self.level}"


def word_length(w: Word, tag: GenSetTag) -> int:
    """
    Length of the normalized representative of ``w`` in the letters of ``tag``.

    Under E every ``b`` power costs 1 and a rooted vector costs its e-length;
    under S every conjugated ``b`` power costs 1 and the trailing rooted
    vector costs 1. This bounds the true word length from above and is exact
    for rooted-only words under E.
    """
    if w.level != tag.level:
        raise ShapeMismatchError(f"word of level {w.level} measured in {tag}")
    w = normalize(w)
    if tag.kind == "E":
        return sum(
            letter.vector.nnz if isinstance(letter, Rooted) else 1 for letter in w.letters
        )
    pairs, tail = conjugated_form(w)
    return len(pairs) + (0 if tail.is_zero() else 1)
