"""Vertices of the tree as tuples of letters, one letter per level below a start level."""
import re
from dataclasses import dataclass
from typing import Iterator, Sequence, Tuple

import numpy as np

from ..alphabet import FpVector, TreeSignature, format_vector, parse_vector, rank_at
from ..utils.errors import ParseError, ShapeMismatchError

_VEC_RE = re.compile(r"\s*(\[[^\]]*\]|\{[^}]*\})\s*")


@dataclass(frozen=True)
class Vertex:
    """A vertex ``x_start x_{start+1} ...`` below level ``start``, letter i in X_{start+i}.

    ``start`` is 0 for vertices of the whole tree and the base level of a word
    for vertices of the subtree a section acts on.
    """

    sig: TreeSignature
    letters: Tuple[FpVector, ...] = ()
    start: int = 0

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        for i, x in enumerate(self.letters):
            if x.p != self.sig.p or x.r != rank_at(self.sig, self.start + i):
                raise ShapeMismatchError(
                    f"letter {i} of C_{x.p}^{x.r} does not belong to X_{self.start + i}"
                )

    @classmethod
    def root(cls, sig: TreeSignature, start: int = 0) -> "Vertex":
        return cls(sig, (), start)

    @classmethod
    def zero(cls, sig: TreeSignature, length: int, start: int = 0) -> "Vertex":
        return cls(
            sig, tuple(FpVector.zero(sig.p, rank_at(sig, start + i)) for i in range(length)), start
        )

    @property
    def level(self) -> int:
        return len(self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[FpVector]:
        return iter(self.letters)

    def child(self, x: FpVector) -> "Vertex":
        return Vertex(self.sig, self.letters + (x,), self.start)

    def prefix(self, length: int) -> "Vertex":
        return Vertex(self.sig, self.letters[:length], self.start)

    def __str__(self) -> str:
        return format_vertex(self)


def parse_vertex(text: str, sig: TreeSignature, start: int = 0) -> Vertex:
    """Parse concatenated vectors, e.g. ``[1][0,0]``; the empty string is the root."""
    letters = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        match = _VEC_RE.match(text, pos)
        if not match:
            raise ParseError(f"cannot parse vertex {text!r} at position {pos}")
        letters.append(parse_vector(match[1], sig.p, rank_at(sig, start + len(letters))))
        pos = match.end()
    return Vertex(sig, tuple(letters), start)


def format_vertex(u: Vertex) -> str:
    return "".join(format_vector(x) for x in u.letters)


def layer_size(sig: TreeSignature, length: int, start: int = 0) -> int:
    """Number of vertices of the given length below level ``start``."""
    size = 1
    for i in range(length):
        size *= sig.p ** rank_at(sig, start + i)
    return size


def _randbelow(rng: np.random.Generator, n: int) -> int:
    """Uniform integer in ``[0, n)``, also for ``n`` beyond the int64 range."""
    if n < 2**62:
        return int(rng.integers(0, n))
    nbytes = (n.bit_length() + 7) // 8
    while True:
        value = int.from_bytes(rng.bytes(nbytes), "big") >> (8 * nbytes - n.bit_length())
        if value < n:
            return value


def random_vertex(
    sig: TreeSignature, length: int, rng: np.random.Generator, start: int = 0, density=None
) -> Vertex:
    """Uniform random vertex; with ``density`` only that many coordinates per letter are set."""
    letters = []
    for i in range(length):
        rank = rank_at(sig, start + i)
        if density is None or rank <= density:
            values = rng.integers(0, sig.p, size=rank)
            letters.append(FpVector.from_dense(sig.p, [int(v) for v in values]))
        else:
            idx = sorted({int(j) for j in rng.integers(0, rank, size=density)})
            vals = rng.integers(0, sig.p, size=len(idx))
            mapping = dict(zip(idx, (int(v) for v in vals)))
            letters.append(FpVector.from_sparse(sig.p, rank, mapping))
    return Vertex(sig, tuple(letters), start)


def iter_layer(sig: TreeSignature, length: int, start: int = 0) -> Iterator[Vertex]:
    """All vertices of a (small) layer, in lexicographic order of their encodings."""
    ranks: Sequence[int] = [rank_at(sig, start + i) for i in range(length)]
    sizes = [sig.p**rank for rank in ranks]

    def _rec(prefix):
        i = len(prefix)
        if i == length:
            yield Vertex(sig, tuple(prefix), start)
            return
        for index in range(sizes[i]):
            yield from _rec(prefix + [FpVector.from_index(sig.p, ranks[i], index)])

    yield from _rec([])
