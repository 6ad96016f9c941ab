"""The basis V of the regular family, chosen inside the far set."""
import functools
from typing import List, Sequence

import numpy as np

from ..alphabet import FarSet, FpVector
from ..utils.log import _init_logger

logger = _init_logger(__name__)


def rank_mod_p(rows: Sequence[Sequence[int]], p: int) -> int:
    """Rank over F_p of an integer matrix, by Gauss-Jordan elimination."""
    mat = np.array(rows, dtype=np.int64) % p
    if mat.size == 0:
        return 0
    n_rows, n_cols = mat.shape
    rank = 0
    for col in range(n_cols):
        nonzero = np.nonzero(mat[rank:, col])[0]
        if nonzero.size == 0:
            continue
        pivot = rank + int(nonzero[0])
        mat[[rank, pivot]] = mat[[pivot, rank]]
        mat[rank] = mat[rank] * pow(int(mat[rank, col]), -1, p) % p
        for i in range(n_rows):
            if i != rank and mat[i, col]:
                mat[i] = (mat[i] - mat[i, col] * mat[rank]) % p
        rank += 1
        if rank == n_rows:
            break
    return rank


@functools.lru_cache(maxsize=None)
def _choose_basis(p: int, r: int) -> tuple:
    d = (p - 1) // 2
    pattern = [
        FpVector.from_dense(p, [p - d if j == i else d for j in range(r)]) for i in range(r)
    ]
    if rank_mod_p([v.dense() for v in pattern], p) == r:
        return tuple(pattern)

    logger.info(f"pattern basis is singular mod {p} for r={r}; scanning the far set")
    chosen: List[FpVector] = []
    for f in FarSet(p, r).materialize():
        if rank_mod_p([v.dense() for v in chosen + [f]], p) == len(chosen) + 1:
            chosen.append(f)
            if len(chosen) == r:
                break
    return tuple(chosen)


def choose_basis_V(p: int, r: int) -> List[FpVector]:
    """
    A basis of C_p^r made of far vectors (all coordinates equal to ``±d``).

    The vectors ``(d, ..., d, -d, d, ..., d)`` (``-d`` in slot i) are tried first;
    their matrix ``d(J - 2I)`` is singular mod p exactly when p divides r - 2, and
    then the far set is scanned in canonical order, keeping every vector that is
    independent of the ones kept so far.

    Parameters
    ----------
    p : int
        Odd prime
    r : int
        Rank, at least 1

    Returns
    -------
    list of FpVector
    """
    if p % 2 == 0:
        raise ValueError(f"the basis V is defined for odd primes only, got p={p}")
    if r < 1:
        raise ValueError(f"rank must be at least 1, got {r}")
    return list(_choose_basis(p, r))
