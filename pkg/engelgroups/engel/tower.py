"""Engel towers and iterated identities, decided in a congruence quotient or by closure."""
import operator
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple, Union

from ..alphabet import TreeSignature
from ..config import run_defaults
from ..finitewreath import (
    WreathSpec,
    engel_class_pair,
    quotient_to_wreath,
    w_id,
    w_inv,
    w_mul,
)
from ..metrics import GenSetTag, enumerate_ball
from ..treeauto import Proven, RefutedAt, Word, prove_trivial
from ..utils.errors import BudgetExhausted, ShapeMismatchError
from ..utils.log import _init_logger
from .free_word import FreeWord, GroupOps, evaluate

logger = _init_logger(__name__)


@dataclass(frozen=True)
class QuotientMode:
    """Decide triviality in ``G / St(depth)``."""

    depth: int

    def __str__(self) -> str:
        return f"quotient:{self.depth}"


@dataclass(frozen=True)
class ClosureMode:
    """Decide triviality with :func:`prove_trivial`; undecided closures raise."""

    budget: Optional[int] = None
    depth_cap: Optional[int] = None

    def __str__(self) -> str:
        return "closure"


TowerMode = Union[QuotientMode, ClosureMode]


@dataclass(frozen=True)
class EngelTowerResult:
    """
    First index ``n >= 1`` at which the tower became trivial, or None within ``limit``.

    ``trace[i]`` is the verdict at index ``i + 1``.
    """

    index: Optional[int]
    mode: str
    limit: int
    trace: Tuple[str, ...] = ()

    @property
    def found(self) -> bool:
        return self.index is not None


def word_ops(sig: TreeSignature, level: int = 0) -> GroupOps:
    return GroupOps(operator.mul, Word.inverse, Word.empty(sig, level))


def wreath_ops(spec: WreathSpec) -> GroupOps:
    return GroupOps(w_mul, w_inv, w_id(spec))


def _check_common_level(g: Word, hs: Sequence[Word]) -> None:
    for h in hs:
        if h.sig != g.sig or h.level != g.level:
            raise ShapeMismatchError(
                f"tower inputs must share a signature and base level, got {g.sig} level "
                f"{g.level} and {h.sig} level {h.level}"
            )


def identity_tower(
    w: FreeWord, g: Word, hs: Sequence[Word], limit: int, mode: TowerMode
) -> EngelTowerResult:
    """
    Least ``n`` in ``1..limit`` with ``w∘n(g, hs)`` trivial in ``mode``.

    Each step applies ``w`` once to the previous value, so every value is
    reduced before the next step.

    Raises
    ------
    BudgetExhausted
        In closure mode, when a step is neither proven nor refuted
    """
    _check_common_level(g, hs)
    trace: List[str] = []
    if isinstance(mode, QuotientMode):
        current = quotient_to_wreath(g.sig, mode.depth, g)
        ops = wreath_ops(current.spec)
        ys = [quotient_to_wreath(g.sig, mode.depth, h) for h in hs]
        for n in range(1, limit + 1):
            current = evaluate(w, current, ys, ops)
            if current.is_identity():
                trace.append("trivial")
                return EngelTowerResult(n, str(mode), limit, tuple(trace))
            trace.append("nontrivial")
        return EngelTowerResult(None, str(mode), limit, tuple(trace))

    ops = word_ops(g.sig, g.level)
    current = g
    for n in range(1, limit + 1):
        current = evaluate(w, current, hs, ops)
        verdict = prove_trivial(current, mode.budget, mode.depth_cap)
        if isinstance(verdict, Proven):
            trace.append("proven")
            return EngelTowerResult(n, str(mode), limit, tuple(trace))
        if not isinstance(verdict, RefutedAt):
            raise BudgetExhausted(f"step {n} of the tower is undecided: {verdict}")
        trace.append("refuted")
    return EngelTowerResult(None, str(mode), limit, tuple(trace))


def engel_tower(g: Word, h: Word, limit: int, mode: TowerMode) -> EngelTowerResult:
    """
    The Engel tower ``[g, _n h] = [[g, _{n-1} h], h]``: :func:`identity_tower` with ``[x, y1]``.

    An empty ``g`` or ``h`` succeeds at index 1.
    """
    return identity_tower(FreeWord.commutator(), g, [h], limit, mode)


@dataclass(frozen=True)
class EngelGrowthResult:
    """Measured Engel growth on a ball; ``value`` None means ``witness`` outlasted the limit."""

    value: Optional[int]
    witness: Optional[Tuple[Word, Word]]
    radius: int
    depth: int
    pairs: int


def engel_growth(
    sig: TreeSignature,
    depth: int,
    radius: int,
    limit: Optional[int] = None,
    cap: Optional[int] = None,
) -> EngelGrowthResult:
    """
    Largest least ``k >= 1`` with ``[g, _k h]`` trivial in ``G / St(depth)``, over all
    pairs of the E-ball of radius ``radius`` at level 0.

    The radius-0 ball gives 0. Words with equal images in the quotient are
    counted once.

    Raises
    ------
    CapExceededError
        If the ball or the quotient is too large to enumerate
    """
    if limit is None:
        limit = run_defaults.suite("growth")["limit"]
    if radius == 0:
        return EngelGrowthResult(0, None, radius, depth, 0)
    images = {}
    for word in enumerate_ball(sig, GenSetTag.E(0), radius, cap):
        images.setdefault(quotient_to_wreath(sig, depth, word), word)
    elements = list(images.items())
    logger.info(f"Engel growth over {len(elements)} quotient elements of the radius-{radius} ball")
    best, witness = 0, None
    for h, h_word in elements:
        for g, g_word in elements:
            k = engel_class_pair(g, h, limit)
            if k is None:
                return EngelGrowthResult(None, (g_word, h_word), radius, depth, len(elements) ** 2)
            if k > best:
                best, witness = k, (g_word, h_word)
    return EngelGrowthResult(best, witness, radius, depth, len(elements) ** 2)
