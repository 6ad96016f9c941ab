"""Tree signatures: the level sequence of alphabets a group acts on."""
import functools
import math
from dataclasses import dataclass
from typing import Optional, Tuple

from typing_extensions import Literal

from ..core import SIGNATURE_FAMILIES, parse_family_params
from ..utils.errors import ShapeMismatchError, WrongFamilyError
from .ranks import iter_binom, is_prime, tetr

SignatureFamily = Literal["growing", "regular", "explicit"]


@dataclass(frozen=True)
class TreeSignature:
    """Descriptor of a spherically homogeneous rooted tree with alphabets C_p^{rank(n)}.

    ``growing`` is the tree of the growing-valency Engel family (ranks tetr_2(n) for
    odd p, bin_{5,3}(n) for p = 2), optionally shifted by ``shift`` levels;
    ``regular`` is the p^r-regular tree; ``explicit`` lists the ranks of a finite tree.
    """

    family: SignatureFamily
    p: int
    r: Optional[int] = None
    ranks: Tuple[int, ...] = ()
    shift: int = 0

    def __post_init__(self):
        if self.family not in SIGNATURE_FAMILIES:
            raise ValueError(f"Unknown signature family {self.family!r}")
        if not is_prime(self.p):
            raise ValueError(f"p must be prime, got {self.p}")
        if self.family == "regular":
            if self.p == 2:
                raise ValueError("regular signatures need an odd prime")
            if self.r is None or self.r < 1:
                raise ValueError(f"regular signatures need a rank r >= 1, got {self.r}")
        elif self.r is not None:
            raise ValueError(f"'r' is only meaningful for regular signatures, not {self.family}")
        if self.family == "explicit":
            object.__setattr__(self, "ranks", tuple(self.ranks))
            if any(rank < 1 for rank in self.ranks):
                raise ValueError(f"explicit ranks must all be at least 1, got {self.ranks}")
        elif self.ranks:
            raise ValueError("'ranks' is only meaningful for explicit signatures")
        if self.shift < 0 or (self.shift and self.family != "growing"):
            raise ValueError("only growing signatures carry a non-negative shift")

    @classmethod
    def growing(cls, p: int, shift: int = 0) -> "TreeSignature":
        return cls("growing", p, shift=shift)

    @classmethod
    def regular(cls, p: int, r: int) -> "TreeSignature":
        return cls("regular", p, r=r)

    @classmethod
    def explicit(cls, p: int, ranks) -> "TreeSignature":
        return cls("explicit", p, ranks=tuple(ranks))

    @property
    def depth(self) -> Optional[int]:
        """Number of levels for finite (explicit) trees, ``None`` otherwise."""
        return len(self.ranks) if self.family == "explicit" else None

    @property
    def self_similar(self) -> bool:
        """Whether every level looks the same, so words may be compared across levels."""
        return SIGNATURE_FAMILIES[self.family]["self_similar"]

    def __str__(self) -> str:
        if self.family == "growing":
            return f"growing:p={self.p}" + (f",shift={self.shift}" if self.shift else "")
        if self.family == "regular":
            return f"regular:p={self.p},r={self.r}"
        return f"explicit:p={self.p},ranks=" + ",".join(str(rank) for rank in self.ranks)


def parse_signature(text: str) -> TreeSignature:
    """Parse ``growing:p=3``, ``regular:p=3,r=5`` or ``explicit:p=3,ranks=1,2,4``."""
    family, params = parse_family_params(text, SIGNATURE_FAMILIES)
    return TreeSignature(family, **params)


@functools.lru_cache(maxsize=4096)
def rank_at(sig: TreeSignature, n: int) -> int:
    """Rank of the alphabet X_n of ``sig``.

    Parameters
    ----------
    sig : TreeSignature
    n : int
        Level, non-negative

    Returns
    -------
    int

    Raises
    ------
    IntegerBudgetError
        If the rank does not fit the configured integer budget
    """
    if n < 0:
        raise ValueError(f"level must be non-negative, got {n}")
    if sig.family == "regular":
        return sig.r
    if sig.family == "explicit":
        if n >= len(sig.ranks):
            raise ShapeMismatchError(f"level {n} lies below the finite tree {sig}")
        return sig.ranks[n]
    level = n + sig.shift
    if sig.p == 2:
        return iter_binom(5, 3, level)
    return tetr(2, level)


def shift_signature(sig: TreeSignature, m: int) -> TreeSignature:
    """The signature of the levels ``m, m + 1, ...`` of ``sig``."""
    if m < 0:
        raise ValueError(f"shift must be non-negative, got {m}")
    if sig.family == "growing":
        return TreeSignature.growing(sig.p, sig.shift + m)
    if sig.family == "regular":
        return sig
    return TreeSignature.explicit(sig.p, sig.ranks[m:])


def truncate_signature(sig: TreeSignature, m: int) -> TreeSignature:
    """The finite tree made of the first ``m`` levels of ``sig``."""
    if m < 0:
        raise ValueError(f"truncation length must be non-negative, got {m}")
    return TreeSignature.explicit(sig.p, [rank_at(sig, i) for i in range(m)])


def _require_growing(sig: TreeSignature, what: str) -> None:
    if sig.family != "growing":
        raise WrongFamilyError(f"{what} is defined for growing signatures only, not {sig}")


def d_fn(sig: TreeSignature, n: int) -> int:
    """Least E-length of a far vector of level ``n``: the rank for odd p, rank - 3 for p = 2."""
    _require_growing(sig, "d_fn")
    rank = rank_at(sig, n)
    return rank - 3 if sig.p == 2 else rank


def g_fn(sig: TreeSignature, n: int) -> int:
    """Contraction function: 1 for n < 2, else the product of d(i) over i < n, i ≡ n mod 2."""
    _require_growing(sig, "g_fn")
    if n < 0:
        raise ValueError(f"level must be non-negative, got {n}")
    if n < 2:
        return 1
    return math.prod(d_fn(sig, i) for i in range(n % 2, n, 2))
