"""Separation of sections and vanishing of ``[b, g, b]``."""
from typing import List, Optional, Tuple

import numpy as np

from ..alphabet import FpVector, TreeSignature, d_fn
from ..config import run_defaults
from ..treeauto import (
    BLetter,
    Proven,
    RefutedAt,
    Rooted,
    Word,
    active_letters,
    commutator,
    is_trivial_to_depth,
    prove_trivial,
    section_at_letter,
)
from ..treeauto.vertex import _randbelow
from ..utils.errors import PreconditionViolated
from ..utils.log import _init_logger
from .ball import ball
from .length import GenSetTag
from .report import VerificationReport

logger = _init_logger(__name__)


def _separation_bound(sig: TreeSignature, n: int) -> int:
    """``d(n)`` for growing trees and ``r`` for regular trees."""
    if sig.family == "regular":
        return sig.r
    return d_fn(sig, n)


def _is_power_of_b(w: Word) -> bool:
    return all(isinstance(letter, BLetter) for letter in w.letters)


def _is_rooted(w: Word) -> bool:
    return all(isinstance(letter, Rooted) for letter in w.letters)


def _predicted(sig: TreeSignature, d: int, t: int, e_len: int) -> Tuple[bool, bool]:
    """Whether a section at a letter of this e-length may be a b-power, resp. rooted."""
    if sig.family == "regular":
        return e_len < t, e_len > d - t
    return e_len <= t, e_len >= d - t


def _nontrivial_points(g: Word, rng: np.random.Generator) -> List[FpVector]:
    """B-active letters of ``g`` plus one sampled letter of each nonzero rooted class."""
    active = active_letters(g)
    points = [x for x in active.b_active if not section_at_letter(g, x).is_empty()]
    if active.labels is None:
        return points
    limit = run_defaults.get("arithmetic", "materialize_rank_limit")
    for y in active.nonzero_offsets():
        if active.labels.r <= limit:
            points.append(active.labels.element(_randbelow(rng, active.labels.size)) + y)
    return points


def separation_check(
    sig: TreeSignature,
    n: int,
    t: int,
    count: Optional[int] = None,
    seed: int = 0,
    cap: Optional[int] = None,
) -> VerificationReport:
    """
    The separation trichotomy for every word of E-length at most ``t`` at level n.

    A section at a letter ``x`` must be a power of ``b_{n+1}`` when ``x`` is
    short, a rooted vector when ``x`` is long, and trivial otherwise (short
    means e-length at most ``t``, long at least ``d(n) - t``; strict bounds
    with ``r`` in place of ``d(n)`` on regular trees). Sampled pairs of words
    also test that sections failing to commute sit at letters at e-distance
    at least ``d(n) - 2t``.

    Raises
    ------
    PreconditionViolated
        If ``t`` exceeds half of ``d(n)`` (resp. ``r``)
    """
    d = _separation_bound(sig, n)
    if not 0 <= 2 * t <= d:
        raise PreconditionViolated(f"t = {t} must satisfy 0 <= 2t <= {d}")
    mode, words = ball(sig, GenSetTag.E(n), t, count, seed, cap)
    words = list(words)
    report = VerificationReport("separation", str(sig), n, t, mode, seed)

    for g in words:
        report.tested += 1
        active = active_letters(g)
        if active.labels is None:
            continue
        for x in active.b_active:
            s = section_at_letter(g, x)
            may_be_b, may_be_rooted = _predicted(sig, d, t, x.nnz)
            if not (
                s.is_empty()
                or (may_be_b and _is_power_of_b(s))
                or (may_be_rooted and _is_rooted(s))
            ):
                report.add_violation(word=g, letter=x, section=s, case="offset")
        for y in active.nonzero_offsets():
            shortest = active.labels.min_shifted_e_length(y)
            if not _predicted(sig, d, t, shortest)[1]:
                report.add_violation(word=g, offset=y, shortest=shortest, case="rooted class")

    _distance_pairs(report, words, d, t, count or run_defaults.suite("separation")["count"])
    return report


def _distance_pairs(
    report: VerificationReport, words: List[Word], d: int, t: int, count: int
) -> None:
    rng = np.random.default_rng(report.seed)
    candidates = [g for g in words if not g.is_empty()]
    found = 0
    attempts = 0
    while candidates and found < count and attempts < 50 * count:
        attempts += 1
        g = candidates[int(rng.integers(len(candidates)))]
        h = candidates[int(rng.integers(len(candidates)))]
        ys, zs = _nontrivial_points(g, rng), _nontrivial_points(h, rng)
        if not ys or not zs:
            continue
        y = ys[int(rng.integers(len(ys)))]
        z = zs[int(rng.integers(len(zs)))]
        c = commutator(section_at_letter(g, y), section_at_letter(h, z))
        if is_trivial_to_depth(c, 2):
            continue
        found += 1
        distance = (y - z).nnz
        if distance < d - 2 * t:
            report.add_violation(word=g, other=h, letter=y, other_letter=z, distance=distance)
    report.extra["distance_pairs"] = found
    if found < count:
        logger.info(f"separation: only {found} non-commuting section pairs in {attempts} draws")


def vanishing_commutator_check(
    sig: TreeSignature,
    n: int,
    t: int,
    depth: Optional[int] = None,
    count: Optional[int] = None,
    seed: int = 0,
    cap: Optional[int] = None,
) -> VerificationReport:
    """
    ``[b_n, g, b_n]`` is trivial for every word ``g`` of E-length at most ``t``.

    Growing trees are checked to ``depth``; regular trees get a closure proof,
    and an undecided closure counts as unknown.

    Raises
    ------
    PreconditionViolated
        If ``t > d(n)/4 - 1`` (resp. ``r/4 - 1``)
    """
    d = _separation_bound(sig, n)
    if not 0 <= 4 * (t + 1) <= d:
        raise PreconditionViolated(f"t = {t} must satisfy t <= {d}/4 - 1")
    if depth is None:
        depth = run_defaults.get("triviality", "bounded_depth")
    mode, words = ball(sig, GenSetTag.E(n), t, count, seed, cap)
    report = VerificationReport(
        "vanishing", str(sig), n, t, mode, seed if mode == "sampled" else None
    )
    b = Word.b(sig, n)
    for g in words:
        report.tested += 1
        c = commutator(b, g, b)
        if sig.family == "regular":
            verdict = prove_trivial(c)
            if isinstance(verdict, RefutedAt):
                report.add_violation(word=g, witness=verdict.witness)
            elif not isinstance(verdict, Proven):
                report.unknown += 1
        elif not is_trivial_to_depth(c, depth):
            report.add_violation(word=g, depth=depth)
    if sig.family != "regular":
        report.observe_max("max_depth_checked", depth)
    return report
