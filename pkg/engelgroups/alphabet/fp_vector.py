"""Sparse vectors over F_p, the elements of the elementary abelian level alphabets."""
import re
from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, Mapping, Optional, Sequence, Tuple

from ..utils.errors import ParseError, ShapeMismatchError

Coords = Tuple[Tuple[int, int], ...]

# dense text is produced up to this rank, sparse text above it
DENSE_FORMAT_RANK = 32

_DENSE_RE = re.compile(r"^\[\s*(-?\d+\s*(,\s*-?\d+\s*)*)?\]$")
_SPARSE_RE = re.compile(r"^\{\s*(\d+\s*:\s*-?\d+\s*(,\s*\d+\s*:\s*-?\d+\s*)*)?\}$")


@dataclass(frozen=True)
class FpVector:
    """Element of C_p^r stored as sorted ``(index, value)`` pairs with nonzero values.

    Two vectors are equal iff prime, rank and coordinates agree, so vectors
    are usable as dictionary keys (tree letters, offsets, labels).
    """

    p: int
    r: int
    coords: Coords = ()

    def __post_init__(self):
        if self.p < 2:
            raise ValueError(f"prime must be at least 2, got {self.p}")
        if self.r < 0:
            raise ValueError(f"rank must be non-negative, got {self.r}")
        last = -1
        for i, v in self.coords:
            if not 0 <= i < self.r:
                raise ShapeMismatchError(f"coordinate index {i} outside rank {self.r}")
            if i <= last:
                raise ValueError("coordinates must be sorted by index without repeats")
            if not 0 < v < self.p:
                raise ValueError(f"stored coordinate values must lie in [1, {self.p - 1}]")
            last = i

    @classmethod
    def _make(cls, p: int, r: int, mapping: Mapping[int, int]) -> "FpVector":
        """Build from an index map whose values are already reduced; skips validation."""
        vec = object.__new__(cls)
        object.__setattr__(vec, "p", p)
        object.__setattr__(vec, "r", r)
        object.__setattr__(vec, "coords", tuple(sorted((i, v) for i, v in mapping.items() if v)))
        return vec

    @classmethod
    def zero(cls, p: int, r: int) -> "FpVector":
        return cls._make(p, r, {})

    @classmethod
    def basis(cls, p: int, r: int, i: int, k: int = 1) -> "FpVector":
        """``k`` times the ``i``-th standard basis vector."""
        if not 0 <= i < r:
            raise ShapeMismatchError(f"basis index {i} outside rank {r}")
        return cls._make(p, r, {i: k % p})

    @classmethod
    def from_dense(cls, p: int, values: Sequence[int], r: Optional[int] = None) -> "FpVector":
        """Vector from a dense coordinate list, zero-padded up to rank ``r``."""
        r = len(values) if r is None else r
        if len(values) > r:
            raise ShapeMismatchError(f"{len(values)} coordinates given for rank {r}")
        return cls._make(p, r, {i: v % p for i, v in enumerate(values)})

    @classmethod
    def from_sparse(cls, p: int, r: int, mapping: Mapping[int, int]) -> "FpVector":
        for i in mapping:
            if not 0 <= i < r:
                raise ShapeMismatchError(f"coordinate index {i} outside rank {r}")
        return cls._make(p, r, {i: v % p for i, v in mapping.items()})

    @classmethod
    def from_index(cls, p: int, r: int, index: int) -> "FpVector":
        """Inverse of :meth:`to_index`."""
        if not 0 <= index < p**r:
            raise ValueError(f"index {index} outside C_{p}^{r}")
        mapping = {}
        for i in range(r - 1, -1, -1):
            index, mapping[i] = divmod(index, p)
        return cls._make(p, r, mapping)

    def to_index(self) -> int:
        """Dense base-p encoding, first coordinate most significant."""
        values = self.as_dict()
        index = 0
        for i in range(self.r):
            index = index * self.p + values.get(i, 0)
        return index

    def as_dict(self) -> Dict[int, int]:
        return dict(self.coords)

    def dense(self) -> Tuple[int, ...]:
        values = self.as_dict()
        return tuple(values.get(i, 0) for i in range(self.r))

    def get(self, i: int) -> int:
        for j, v in self.coords:
            if j == i:
                return v
        return 0

    @property
    def nnz(self) -> int:
        return len(self.coords)

    def is_zero(self) -> bool:
        return not self.coords

    def __bool__(self) -> bool:
        return bool(self.coords)

    def _check_same_group(self, other: "FpVector") -> None:
        if self.p != other.p or self.r != other.r:
            raise ShapeMismatchError(
                f"cannot combine vectors of C_{self.p}^{self.r} and C_{other.p}^{other.r}"
            )

    def __add__(self, other: "FpVector") -> "FpVector":
        self._check_same_group(other)
        total = dict(self.coords)
        for i, v in other.coords:
            total[i] = (total.get(i, 0) + v) % self.p
        return FpVector._make(self.p, self.r, total)

    def __neg__(self) -> "FpVector":
        return FpVector._make(self.p, self.r, {i: self.p - v for i, v in self.coords})

    def __sub__(self, other: "FpVector") -> "FpVector":
        return self + (-other)

    def scale(self, k: int) -> "FpVector":
        k %= self.p
        return FpVector._make(self.p, self.r, {i: v * k % self.p for i, v in self.coords})

    def __str__(self) -> str:
        return format_vector(self)


def vec_add(a: FpVector, b: FpVector) -> FpVector:
    return a + b


def vec_neg(a: FpVector) -> FpVector:
    return -a


def vec_scale(a: FpVector, k: int) -> FpVector:
    return a.scale(k)


def vec_sum(vectors: Iterable[FpVector], p: int, r: int) -> FpVector:
    """Sum of vectors of C_p^r (the zero vector for an empty iterable)."""
    total: Dict[int, int] = {}
    for vec in vectors:
        if vec.p != p or vec.r != r:
            raise ShapeMismatchError(f"vector of C_{vec.p}^{vec.r} in a sum over C_{p}^{r}")
        for i, v in vec.coords:
            total[i] = (total.get(i, 0) + v) % p
    return FpVector._make(p, r, total)


def t_length(v: FpVector) -> int:
    """Word length with respect to the generators ``e_i^{±1}`` (sum of axis distances)."""
    return sum(min(k, v.p - k) for _, k in v.coords)


def e_length(v: FpVector) -> int:
    """Word length with respect to all powers of the ``e_i`` (number of nonzero axes)."""
    return v.nnz


def iter_nonzero(v: FpVector) -> Iterator[Tuple[int, int]]:
    return iter(v.coords)


def parse_vector(text: str, p: int, r: Optional[int] = None) -> FpVector:
    """Parse ``[c0,c1,...]`` (dense, zero-padded to ``r``) or ``{i:v,...}`` (sparse, needs ``r``).

    Values are reduced mod ``p``; negative values are allowed.
    """
    text = text.strip()
    if _DENSE_RE.match(text):
        body = text[1:-1].strip()
        values = [int(tok) for tok in body.split(",")] if body else []
        return FpVector.from_dense(p, values, r)
    if _SPARSE_RE.match(text):
        if r is None:
            raise ParseError(f"sparse vector text {text!r} needs an explicit rank")
        body = text[1:-1].strip()
        mapping: Dict[int, int] = {}
        for item in filter(None, (tok.strip() for tok in body.split(","))):
            idx, val = (int(part) for part in item.split(":"))
            mapping[idx] = (mapping.get(idx, 0) + val) % p
        return FpVector.from_sparse(p, r, mapping)
    raise ParseError(f"not a vector: {text!r}")


def format_vector(v: FpVector) -> str:
    if v.r <= DENSE_FORMAT_RANK:
        return "[" + ",".join(str(c) for c in v.dense()) + "]"
    return "{" + ",".join(f"{i}:{k}" for i, k in v.coords) + "}"
