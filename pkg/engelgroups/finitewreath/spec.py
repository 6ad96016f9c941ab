import functools
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from ..alphabet.ranks import checked_pow, is_prime
from ..core import WREATH_FAMILY, parse_family_params
from ..utils.errors import CapExceededError

# Largest alphabet whose addition table is built as a dense array.
TABLE_SIZE_LIMIT = 4096


@dataclass(frozen=True)
class WreathSpec:
    """An iterated wreath product of elementary abelian groups C_p^rank.

    ``ranks`` runs from the root down: ``ranks[0]`` is the top group acting on
    the first layer and ``ranks[-1]`` the group at the deepest layer. The
    empty spec is the trivial group.
    """

    p: int
    ranks: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "ranks", tuple(self.ranks))
        if not is_prime(self.p):
            raise ValueError(f"p must be prime, got {self.p}")
        if any(rank < 1 for rank in self.ranks):
            raise ValueError(f"all ranks must be at least 1, got {self.ranks}")

    @property
    def depth(self) -> int:
        return len(self.ranks)

    def size(self, level: int) -> int:
        """Number of letters of the alphabet at ``level``."""
        return checked_pow(self.p, self.ranks[level])

    def tail(self) -> "WreathSpec":
        """The spec of the subtree below the first layer."""
        return WreathSpec(self.p, self.ranks[1:])

    def order(self) -> int:
        """``|W|`` by the recursion ``|W'| = |A| * |W|^|A|``, built from the bottom."""
        order = 1
        for level in reversed(range(self.depth)):
            size = self.size(level)
            order = size * checked_pow(order, size)
        return order

    def __str__(self) -> str:
        return f"wreath:p={self.p},ranks=" + ",".join(str(rank) for rank in self.ranks)


def parse_wreath_spec(text: str) -> WreathSpec:
    """Parse ``wreath:p=3,ranks=1,1``."""
    family, params = parse_family_params(text, {"wreath": WREATH_FAMILY})
    return WreathSpec(params["p"], params["ranks"])


@functools.lru_cache(maxsize=64)
def addition_table(p: int, rank: int) -> np.ndarray:
    """
    ``table[i, j]`` is the index of ``from_index(i) + from_index(j)`` in C_p^rank.

    Indices use the dense base-p encoding of :meth:`FpVector.to_index`.
    """
    size = p**rank
    if size > TABLE_SIZE_LIMIT:
        raise CapExceededError(f"C_{p}^{rank} has {size} letters, above {TABLE_SIZE_LIMIT}")
    index = np.arange(size, dtype=np.int64)
    table = np.zeros((size, size), dtype=np.int64)
    for k in range(rank):
        weight = p ** (rank - 1 - k)
        digit = (index // weight) % p
        table += ((digit[:, None] + digit[None, :]) % p) * weight
    table.setflags(write=False)
    return table


@functools.lru_cache(maxsize=64)
def negation_table(p: int, rank: int) -> np.ndarray:
    """``table[i]`` is the index of ``-from_index(i)``."""
    table = np.argmin(addition_table(p, rank), axis=1)
    table.setflags(write=False)
    return table
