"""Verification runs: towers, left Engel elements, local checking, involutions, word lengths."""
from typing import Dict, Optional

import numpy as np

from ..alphabet import FpVector, TreeSignature
from ..finitewreath import WreathElem, engel_class_pair, quotient_to_wreath, w_pow
from ..metrics import GenSetTag, VerificationReport, ball, random_letter, random_word, word_length
from ..treeauto import Word, first_layer_vector
from ..utils.errors import BudgetExhausted, CapExceededError, WrongFamilyError
from ..utils.log import _init_logger
from .free_word import FreeWord, evaluate, iterate_word, length_bound
from .involution import involution_engel_check
from .local import local_check, quotient_instance
from .tower import (
    ClosureMode,
    EngelTowerResult,
    QuotientMode,
    engel_tower,
    word_ops,
    wreath_ops,
)

logger = _init_logger(__name__)


def _distinct_images(sig: TreeSignature, depth: int, words) -> Dict[WreathElem, Word]:
    images: Dict[WreathElem, Word] = {}
    for w in words:
        images.setdefault(quotient_to_wreath(sig, depth, w), w)
    return images


def quotient_towers_check(
    sig: TreeSignature,
    depth: int,
    radius: int,
    limit: int,
    count: Optional[int] = None,
    seed: Optional[int] = None,
    cap: Optional[int] = None,
) -> VerificationReport:
    """
    Every pair ``g, h`` of the E-ball of radius ``radius`` reaches a trivial
    ``[g, _n h]`` in ``G / St(depth)`` for some ``n <= limit``.

    Pairs are taken over distinct quotient images; the largest index is kept as
    ``max_tower_index``.
    """
    mode, words = ball(sig, GenSetTag.E(0), radius, count, seed, cap)
    images = _distinct_images(sig, depth, words)
    logger.info(f"quotient-towers: {len(images)} distinct images in G / St({depth})")
    report = VerificationReport(
        "quotient-towers", str(sig), depth, radius, mode, seed if mode == "sampled" else None
    )
    report.extra["distinct_images"] = len(images)
    for h, h_word in images.items():
        for g, g_word in images.items():
            report.tested += 1
            k = engel_class_pair(g, h, limit)
            if k is None:
                report.add_violation(g=g_word, h=h_word, limit=limit)
            else:
                report.observe_max("max_tower_index", k)
    return report


def period_check(
    sig: TreeSignature,
    depth: int,
    radius: int,
    count: Optional[int] = None,
    seed: Optional[int] = None,
    cap: Optional[int] = None,
) -> VerificationReport:
    """
    The power word ``x^p`` iterated: every ``g`` of the E-ball has ``g^(p^k)`` in
    ``St(depth)`` for some ``k <= depth``.
    """
    mode, words = ball(sig, GenSetTag.E(0), radius, count, seed, cap)
    report = VerificationReport(
        "periodicity", str(sig), depth, radius, mode, seed if mode == "sampled" else None
    )
    for g, g_word in _distinct_images(sig, depth, words).items():
        report.tested += 1
        x = g
        for k in range(depth + 1):
            if x.is_identity():
                report.observe_max("max_period_exponent", k)
                break
            x = w_pow(x, sig.p)
        else:
            report.add_violation(word=g_word, depth=depth)
    return report


def local_checking_check(
    sig: TreeSignature, depth: int, iterations: int, radius: int, count: int, seed: int
) -> VerificationReport:
    """
    Orbit-restricted and global verdicts of ``[x, y1]∘m`` agree for ``m <= iterations``.

    Each instance pairs a sampled ``g`` pushed into ``St(1)`` with a sampled ``h``
    that moves the first layer, both read in ``G / St(depth)`` as elements of
    ``(G / St(depth - 1)) wr_X A``.
    """
    rng = np.random.default_rng(seed)
    report = VerificationReport("local-checking", str(sig), depth, radius, "sampled", seed)
    commutator = FreeWord.commutator()
    tag = GenSetTag.E(0)
    for _ in range(count):
        w = random_word(sig, tag, radius, rng)
        g = w * Word.rooted(sig, 0, -first_layer_vector(w))
        h = random_word(sig, tag, radius, rng)
        while first_layer_vector(h).is_zero():
            h = h * random_letter(sig, tag, rng)
        g_perm, hs_perm, base_ops = quotient_instance(g, [h], depth)
        for m in range(1, iterations + 1):
            report.tested += 1
            whole, parts = local_check(commutator, m, g_perm, hs_perm, base_ops)
            if whole != all(parts):
                report.add_violation(g=g, h=h, m=m, whole=whole, orbits=parts)
    return report


def involution_check(
    sig: TreeSignature, depth: int, radius: int, count: int, seed: int, n: int
) -> VerificationReport:
    """
    ``[g, _{k+1} h] = [g, h]^((-2)^k)`` for ``k <= n`` in ``G / St(depth)``, with ``h``
    a conjugate of a generator of order 2.
    """
    if sig.p != 2:
        raise ValueError(f"the involution identity needs p = 2, got {sig}")
    rng = np.random.default_rng(seed)
    report = VerificationReport("involution", str(sig), depth, radius, "sampled", seed)
    tag = GenSetTag.E(0)
    for _ in range(count):
        g = random_word(sig, tag, radius, rng)
        h = random_letter(sig, tag, rng).conjugate(random_word(sig, tag, radius, rng))
        g_image = quotient_to_wreath(sig, depth, g)
        h_image = quotient_to_wreath(sig, depth, h)
        ops = wreath_ops(g_image.spec)
        for k in range(n + 1):
            report.tested += 1
            if not involution_engel_check(ops, g_image, h_image, k):
                report.add_violation(g=g, h=h, n=k)
    return report


def length_bound_check(
    sig: TreeSignature, count: int, seed: int, n: int, radius: int
) -> VerificationReport:
    """
    ``l_S(w∘k(g, h)) <= length_bound(w, k, l_S(g), [l_S(h)])`` for random ``w`` in
    ``{[x, y1], x^p}``, ``k <= n`` and S-words of length at most ``radius``.
    """
    rng = np.random.default_rng(seed)
    tag = GenSetTag.S(0)
    words = (FreeWord.commutator(), FreeWord.power(sig.p))
    report = VerificationReport("length-bound", str(sig), n, radius, "sampled", seed)
    ops = word_ops(sig)
    for _ in range(count):
        w = words[int(rng.integers(len(words)))]
        k = int(rng.integers(0, n + 1))
        g = random_word(sig, tag, radius, rng)
        hs = [random_word(sig, tag, radius, rng) for _ in range(w.arity)]
        value = evaluate(iterate_word(w, k), g, hs, ops)
        length = word_length(value, tag)
        bound = length_bound(w, k, word_length(g, tag), [word_length(h, tag) for h in hs])
        report.tested += 1
        report.observe_max("max_length", length)
        if length > bound:
            report.add_violation(w=w, k=k, g=g, hs=hs, length=length, bound=bound)
    return report


def left_engel_degree(
    g: Word, h: Word, limit: int, closure: ClosureMode, quotient: QuotientMode
) -> EngelTowerResult:
    """
    The Engel tower ``[g, _n h]`` decided by closure, or in ``G / St(depth)``
    when the closure runs out of budget.

    Raises
    ------
    CapExceededError
        If the closure is undecided and the quotient is too large to build
    """
    try:
        return engel_tower(g, h, limit, closure)
    except BudgetExhausted as err:
        logger.info(f"left-engel: {err}; retrying in {quotient}")
    return engel_tower(g, h, limit, quotient)


def left_engel_check(
    sig: TreeSignature,
    radius: int,
    limit: int,
    depth: int,
    count: int,
    seed: int,
    budget: Optional[int] = None,
) -> VerificationReport:
    """
    Every basis vector ``e_i`` and the generator ``b`` are left Engel on ``count``
    sampled words ``g`` of E-length at most ``radius``: ``[g, _n h]`` is trivial for
    some ``n <= limit``.

    Towers are decided by closure; a tower left undecided within ``budget`` is
    retried in ``G / St(depth)``, and counted as unknown when that quotient is
    too large. The largest index reached is kept as ``max_engel_degree``.

    Raises
    ------
    WrongFamilyError
        If ``sig`` is not a regular signature
    """
    if sig.family != "regular":
        raise WrongFamilyError(f"left Engel elements need a regular signature, got {sig}")
    rng = np.random.default_rng(seed)
    tag = GenSetTag.E(0)
    hs = [
        (f"e{i + 1}", Word.rooted(sig, 0, FpVector.basis(sig.p, sig.r, i)))
        for i in range(sig.r)
    ]
    hs.append(("b", Word.b(sig)))
    closure = ClosureMode(budget)
    quotient = QuotientMode(depth)
    report = VerificationReport("left-engel", str(sig), depth, radius, "sampled", seed)
    report.extra["quotient_fallbacks"] = 0
    for _ in range(count):
        g = random_word(sig, tag, radius, rng)
        for name, h in hs:
            report.tested += 1
            try:
                result = left_engel_degree(g, h, limit, closure, quotient)
            except CapExceededError:
                report.unknown += 1
                continue
            if result.mode != str(closure):
                report.extra["quotient_fallbacks"] += 1
            if result.found:
                report.observe_max("max_engel_degree", result.index)
            else:
                report.add_violation(g=g, h=name, limit=limit, mode=result.mode)
    return report
