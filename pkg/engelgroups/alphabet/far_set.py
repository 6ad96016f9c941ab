"""Far sets, their canonical order, and the level bases they label."""
import itertools
import math
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Sequence, Tuple, Union

from ..config import run_defaults
from ..utils.errors import CapExceededError, RankTooSmallError, ShapeMismatchError
from ..utils.log import _init_logger
from .fp_vector import FpVector
from .ranks import checked_pow
from .signature import TreeSignature, rank_at

logger = _init_logger(__name__)


def _materialize_limit() -> int:
    return run_defaults.get("arithmetic", "materialize_rank_limit")


class FarSet:
    """The far set F(n) inside X_n, generated lazily in canonical (lex) order.

    For odd p it consists of the vectors whose coordinates all lie in
    ``{d, p - d}`` with ``d = (p - 1) / 2``; for p = 2 of the 0/1 vectors with
    exactly three zero coordinates. The position of a vector in the canonical
    order is the basis index of its label in the next level.
    """

    def __init__(self, p: int, r: int):
        if p == 2 and r <= 3:
            raise RankTooSmallError(f"the p = 2 far set needs rank > 3, got {r}")
        self.p = p
        self.r = r
        self.d = (p - 1) // 2

    @property
    def size(self) -> int:
        if self.p == 2:
            return math.comb(self.r, 3)
        return checked_pow(2, self.r)

    def __len__(self) -> int:
        return self.size

    def __contains__(self, v: FpVector) -> bool:
        if v.p != self.p or v.r != self.r:
            return False
        if self.p == 2:
            return v.nnz == self.r - 3
        if v.nnz != self.r:
            return False
        return all(k == self.d or k == self.p - self.d for _, k in v.coords)

    def __iter__(self) -> Iterator[FpVector]:
        if self.p == 2:
            for zeros in itertools.combinations(range(self.r), 3):
                yield self._from_zeros(zeros)
        else:
            for values in itertools.product((self.d, self.p - self.d), repeat=self.r):
                yield FpVector._make(self.p, self.r, dict(enumerate(values)))

    def _from_zeros(self, zeros: Sequence[int]) -> FpVector:
        zero_set = set(zeros)
        return FpVector._make(2, self.r, {i: 1 for i in range(self.r) if i not in zero_set})

    def materialize(self) -> List[FpVector]:
        if self.r > _materialize_limit():
            raise CapExceededError(
                f"refusing to list a far set of rank {self.r} (limit {_materialize_limit()})"
            )
        return list(self)

    def index(self, f: FpVector) -> int:
        """Position of ``f`` in canonical order, computed without enumeration."""
        if f not in self:
            raise ValueError(f"{f} is not in the far set of C_{self.p}^{self.r}")
        if self.p == 2:
            present = f.as_dict()
            zeros = [i for i in range(self.r) if i not in present]
            return _combination_rank(zeros, self.r)
        # binary number with bit 1 where the coordinate is p - d, first coordinate on top
        high = self.p - self.d
        bits = 0
        for i, k in f.coords:
            if k == high:
                bits |= 1 << (self.r - 1 - i)
        return bits

    def element(self, index: int) -> FpVector:
        """Inverse of :meth:`index`."""
        if not 0 <= index < self.size:
            raise ValueError(f"far-set index {index} outside [0, {self.size})")
        if self.p == 2:
            return self._from_zeros(_combination_unrank(index, self.r, 3))
        high = self.p - self.d
        return FpVector._make(
            self.p,
            self.r,
            {i: high if (index >> (self.r - 1 - i)) & 1 else self.d for i in range(self.r)},
        )

    def min_shifted_e_length(self, y: FpVector) -> int:
        """Least e-length over the translate ``F + y``."""
        if self.p == 2:
            zeros = self.r - y.nnz
            return abs(zeros - 3)
        hits = sum(1 for _, k in y.coords if k == self.d or k == self.p - self.d)
        return self.r - hits

    def meet_count(self, delta: FpVector, limit: int) -> int:
        """Size of F ∩ (F + delta), capped at ``limit`` without computing huge values."""
        if self.p == 2:
            s = delta.nnz
            if s % 2 or s > 6:
                return 0
            count = math.comb(s, s // 2) * math.comb(self.r - s, 3 - s // 2)
            return min(count, limit)
        for _, k in delta.coords:
            if k not in (1, self.p - 1):
                return 0
        free = self.r - delta.nnz
        if free >= limit.bit_length():
            return limit
        return min(1 << free, limit)

    def meet(self, delta: FpVector) -> Iterator[FpVector]:
        """Elements ``f`` with ``f - delta`` also in the far set (small meets only)."""
        if self.p == 2:
            support = [i for i, _ in delta.coords]
            if len(support) % 2 or len(support) > 6:
                return
            half = len(support) // 2
            present = set(support)
            pool = [i for i in range(self.r) if i not in present] if half < 3 else []
            for own in itertools.combinations(support, half):
                for common in itertools.combinations(pool, 3 - half):
                    yield self._from_zeros(sorted(own + common))
            return
        far_values = (self.d, self.p - self.d)
        options = []
        for i in range(self.r):
            k = delta.get(i)
            choices = [a for a in far_values if (a - k) % self.p in far_values]
            if not choices:
                return
            options.append(choices)
        for values in itertools.product(*options):
            yield FpVector._make(self.p, self.r, dict(enumerate(values)))

    def __repr__(self) -> str:
        return f"FarSet(p={self.p}, r={self.r})"


class BasisLabels:
    """A finite ordered label set (the basis V of a regular signature)."""

    def __init__(self, vectors: Sequence[FpVector]):
        if not vectors:
            raise ValueError("a label set needs at least one vector")
        self.p = vectors[0].p
        self.r = vectors[0].r
        self.vectors: Tuple[FpVector, ...] = tuple(vectors)
        self._positions: Dict[FpVector, int] = {v: i for i, v in enumerate(self.vectors)}
        if len(self._positions) != len(self.vectors):
            raise ValueError("label vectors must be distinct")

    @property
    def size(self) -> int:
        return len(self.vectors)

    def __len__(self) -> int:
        return len(self.vectors)

    def __contains__(self, v: FpVector) -> bool:
        return v in self._positions

    def __iter__(self) -> Iterator[FpVector]:
        return iter(self.vectors)

    def materialize(self) -> List[FpVector]:
        return list(self.vectors)

    def index(self, v: FpVector) -> int:
        try:
            return self._positions[v]
        except KeyError:
            raise ValueError(f"{v} is not a label") from None

    def element(self, index: int) -> FpVector:
        return self.vectors[index]

    def min_shifted_e_length(self, y: FpVector) -> int:
        return min((v + y).nnz for v in self.vectors)

    def meet_count(self, delta: FpVector, limit: int) -> int:
        return min(sum(1 for v in self.vectors if (v - delta) in self), limit)

    def meet(self, delta: FpVector) -> Iterator[FpVector]:
        return (v for v in self.vectors if (v - delta) in self)

    def __repr__(self) -> str:
        return f"BasisLabels({', '.join(str(v) for v in self.vectors)})"


LabelSet = Union[FarSet, BasisLabels]


def _combination_rank(combo: Sequence[int], r: int) -> int:
    """Rank of a sorted combination in ``itertools.combinations(range(r), k)`` order."""
    k = len(combo)
    rank = 0
    prev = -1
    for t, c in enumerate(combo):
        for v in range(prev + 1, c):
            rank += math.comb(r - 1 - v, k - 1 - t)
        prev = c
    return rank


def _combination_unrank(rank: int, r: int, k: int) -> Tuple[int, ...]:
    combo = []
    v = 0
    for t in range(k):
        while True:
            block = math.comb(r - 1 - v, k - 1 - t)
            if rank < block:
                break
            rank -= block
            v += 1
        combo.append(v)
        v += 1
    return tuple(combo)


def far_set(sig: TreeSignature, n: int) -> FarSet:
    """Far set of the alphabet X_n of ``sig`` (a lazy stream with ``size``)."""
    return FarSet(sig.p, rank_at(sig, n))


def far_set_size(sig: TreeSignature, n: int) -> int:
    return far_set(sig, n).size


def far_index(sig: TreeSignature, n: int, f: FpVector) -> int:
    """Basis index in X_{n+1} of the label ``e_f``, ``f`` in F(n)."""
    return far_set(sig, n).index(f)


def far_element(sig: TreeSignature, n: int, index: int) -> FpVector:
    return far_set(sig, n).element(index)


@dataclass(frozen=True)
class LevelBasis:
    """The ordered basis of X_n together with the vector labelling each index.

    Level 0 and regular trees use the canonical labels ``e_1 ... e_r`` (reported
    as ``None``); level n > 0 of a growing tree labels index i by the i-th far
    vector of level n - 1.
    """

    sig: TreeSignature
    level: int

    @property
    def rank(self) -> int:
        return rank_at(self.sig, self.level)

    @property
    def labelled_by_far_set(self) -> bool:
        return self.level > 0 and self.sig.family != "regular"

    def label(self, index: int) -> Optional[FpVector]:
        if not 0 <= index < self.rank:
            raise ShapeMismatchError(f"basis index {index} outside rank {self.rank}")
        if not self.labelled_by_far_set:
            return None
        return far_element(self.sig, self.level - 1, index)

    def labels(self) -> List[Optional[FpVector]]:
        if self.rank > _materialize_limit():
            raise CapExceededError(f"refusing to list {self.rank} basis labels")
        if not self.labelled_by_far_set:
            return [None] * self.rank
        return far_set(self.sig, self.level - 1).materialize()


def level_basis(sig: TreeSignature, n: int) -> LevelBasis:
    basis = LevelBasis(sig, n)
    if basis.labelled_by_far_set and far_set_size(sig, n - 1) != basis.rank:
        logger.warning(f"far set of level {n - 1} does not match the rank of level {n} in {sig}")
    return basis
