"""Depth, contraction and S-to-E checks."""
from typing import Iterable, Optional

from ..alphabet import TreeSignature, d_fn
from ..config import run_defaults
from ..treeauto import Vertex, Word, active_letters, normalize, section_at_letter
from ..treeauto.sections import tree_ends_below
from ..utils.errors import PreconditionViolated, WrongFamilyError
from ..utils.log import _init_logger
from .ball import ball, sample_ball
from .length import GenSetTag, word_length
from .report import ContractionReport, VerificationReport

logger = _init_logger(__name__)


def depth_estimate(w: Word, c: int = 1, max_depth: int = 8) -> Optional[int]:
    """
    Least ``m <= max_depth`` such that every section at a vertex of length ``m``
    has S-length at most ``c``, or None.

    Sections at F-active letters are rooted and have S-length 1, so only the
    B-active sections need to be followed.
    """
    if c < 1:
        raise ValueError(f"the constant c must be at least 1, got {c}")
    frontier = {normalize(w)}
    for m in range(max_depth + 1):
        level = w.level + m
        if all(word_length(s, GenSetTag.S(level)) <= c for s in frontier):
            return m
        frontier = {
            section_at_letter(s, x)
            for s in frontier
            if not tree_ends_below(s)
            for x in active_letters(s).b_active
        }
    return None


def _two_level_sections(report: ContractionReport, g: Word, bound: int = 1) -> int:
    """
    Check ``l_E(g|_u) <= bound`` for all two-letter vertices ``u`` below ``g``.

    Returns the number of internal single-letter failures (S-length of
    ``g|_x`` above 1), which are noted rather than counted as violations.
    """
    sig, n = g.sig, g.level
    internal = 0
    if tree_ends_below(g):
        return internal
    for x in active_letters(g).b_active:
        h = section_at_letter(g, x)
        if word_length(h, GenSetTag.S(n + 1)) > 1:
            internal += 1
        if tree_ends_below(h):
            continue
        below = active_letters(h)
        for x2 in below.b_active:
            length = word_length(section_at_letter(h, x2), GenSetTag.E(n + 2))
            report.max_section_length = max(report.max_section_length, length)
            if length > bound:
                report.add_violation(word=g, vertex=Vertex(sig, (x, x2), n), length=length)
        length, x2 = below.rooted_overlap()
        report.max_section_length = max(report.max_section_length, length)
        if length > bound:
            vertex = None if x2 is None else Vertex(sig, (x, x2), n)
            report.add_violation(word=g, vertex=vertex, length=length)
    return internal


def _run_two_level(report: ContractionReport, words: Iterable[Word], bound: int = 1):
    internal = 0
    for g in words:
        report.tested += 1
        internal += _two_level_sections(report, g, bound)
    if internal:
        report.note(f"{internal} words have a first-layer section of S-length above 1")
        logger.warning(f"{report.check}: single-layer bound failed for {internal} words")
    return report


def contraction_check(
    sig: TreeSignature,
    n: int,
    count: Optional[int] = None,
    seed: Optional[int] = None,
    cap: Optional[int] = None,
) -> ContractionReport:
    """
    Two-layer contraction on the ``d(n)``-ball of a growing tree.

    Every word of E-length at most ``d(n)`` at level n must have sections of
    E-length at most 1 at every vertex of ``X_n X_{n+1}``. The ball is
    enumerated when it fits under ``cap`` and sampled (``count`` words,
    ``seed``) otherwise.

    Parameters
    ----------
    sig : TreeSignature
        Growing signature
    n : int
        Level of the words
    count, seed : int, optional
        Sample size and seed, needed only when the ball is sampled
    cap : int, optional
        Exhaustive/sampled switch, defaults to ``enumeration.word_count_cap``

    Returns
    -------
    ContractionReport
    """
    radius = d_fn(sig, n)
    mode, words = ball(sig, GenSetTag.E(n), radius, count, seed, cap)
    report = ContractionReport(
        "contraction", str(sig), n, radius, mode, seed if mode == "sampled" else None
    )
    logger.info(f"contraction on the radius-{radius} ball of {sig} at level {n} ({mode})")
    return _run_two_level(report, words)


def regular_contraction_check(
    sig: TreeSignature,
    t: Optional[int] = None,
    count: Optional[int] = None,
    seed: Optional[int] = None,
    cap: Optional[int] = None,
) -> ContractionReport:
    """
    Two-layer contraction for a regular tree: words of E-length at most ``t <= r``
    have sections of E-length at most 1 at every vertex of the second layer.
    """
    if sig.family != "regular":
        raise WrongFamilyError(f"regular contraction needs a regular signature, got {sig}")
    if t is None:
        t = run_defaults.suite("regular-contraction")["radius"]
    if not 0 <= t <= sig.r:
        raise PreconditionViolated(f"radius {t} must lie in [0, r = {sig.r}]")
    mode, words = ball(sig, GenSetTag.E(0), t, count, seed, cap)
    report = ContractionReport(
        "regular-contraction", str(sig), 0, t, mode, seed if mode == "sampled" else None
    )
    return _run_two_level(report, words)


def s_to_e_check(
    sig: TreeSignature, n: int, radius: int, count: int, seed: int
) -> VerificationReport:
    """
    ``l_{E|n+1}(g|_x) <= l_{S|n}(g)`` for sampled words over ``S|_n`` and every
    active first-layer letter ``x``.

    Rooted sections are covered through the largest overlap of rooted classes.
    """
    report = VerificationReport("s-to-e", str(sig), n, radius, "sampled", seed)
    for g in sample_ball(sig, GenSetTag.S(n), radius, count, seed):
        report.tested += 1
        bound = word_length(g, GenSetTag.S(n))
        if tree_ends_below(g):
            continue
        active = active_letters(g)
        for x in active.b_active:
            length = word_length(section_at_letter(g, x), GenSetTag.E(n + 1))
            report.observe_max("max_section_length", length)
            if length > bound:
                report.add_violation(word=g, letter=x, length=length, bound=bound)
        length, x = active.rooted_overlap()
        report.observe_max("max_section_length", length)
        if length > bound:
            report.add_violation(word=g, letter=x, length=length, bound=bound)
    return report
