"""Sections of the generators ``[b, b^{f^-1}, b^{f'^-1}]`` of the third lower central term."""
from typing import Iterable, Optional, Tuple

import numpy as np

from ..alphabet import FpVector, TreeSignature
from ..treeauto import (
    BLetter,
    Word,
    active_letters,
    commutator,
    equal_to_depth,
    first_layer_vector,
    is_trivial_to_depth,
    label_set,
    letter_section,
    section_at_letter,
)
from ..treeauto.vertex import _randbelow
from ..utils.errors import PreconditionViolated, WrongFamilyError
from .report import VerificationReport

TRIPLE_LEVEL_MAX = 3


def gamma3_base_level(sig: TreeSignature, level: int) -> int:
    """Level of ``b`` in the table: ``level + 2`` on growing trees, ``level`` on regular ones."""
    if sig.family == "growing":
        if level + 2 > TRIPLE_LEVEL_MAX:
            raise PreconditionViolated(f"level {level} puts b beyond level {TRIPLE_LEVEL_MAX}")
        return level + 2
    if sig.family == "regular":
        return level
    raise WrongFamilyError(f"the section table needs a growing or regular tree, got {sig}")


def gamma3_element(sig: TreeSignature, base: int, f: FpVector, f_prime: FpVector) -> Word:
    b = Word.b(sig, base)
    return commutator(
        b,
        b.conjugate(Word.rooted(sig, base, -f)),
        b.conjugate(Word.rooted(sig, base, -f_prime)),
    )


def expected_sections(
    sig: TreeSignature, base: int, f: FpVector, f_prime: FpVector
) -> Iterable[Tuple[FpVector, Word]]:
    """
    The tabulated first-layer sections: ``[b|_x, b|_{x+f}, b|_{x+f'}]`` at
    ``x`` in ``{0, -f, -f'}``; every other section is trivial.
    """
    zero = FpVector.zero(f.p, f.r)

    def b_at(x: FpVector) -> Word:
        return letter_section(sig, BLetter(base, 1), x)

    for x in dict.fromkeys((zero, -f, -f_prime)):
        yield x, commutator(b_at(x), b_at(x + f), b_at(x + f_prime))


def _sample_pairs(labels, count: int, seed: int):
    rng = np.random.default_rng(seed)
    for _ in range(count):
        yield (
            labels.element(_randbelow(rng, labels.size)),
            labels.element(_randbelow(rng, labels.size)),
        )


def gamma3_section_check(
    sig: TreeSignature,
    level: int = 0,
    depth: int = 3,
    count: int = 100,
    seed: int = 0,
    f: Optional[FpVector] = None,
    f_prime: Optional[FpVector] = None,
) -> VerificationReport:
    """
    Confirm the first-layer section table of ``[b, b^{f^-1}, b^{f'^-1}]``.

    The sections at ``0``, ``-f`` and ``-f'`` must agree to ``depth`` with the
    tabulated commutators and every other section must be trivial. For
    ``f = f'`` the section at ``-f`` must itself be trivial. A nontrivial
    ``b|_{f'-f}`` for ``f != f'`` (possible when ``f' - f`` is again a label)
    is recorded as a note.

    Parameters
    ----------
    sig : TreeSignature
        Growing or regular signature
    level : int
        n in ``b_{n+2}`` for growing trees; the level of ``b`` for regular ones
    f, f_prime : FpVector, optional
        A single pair of labels to check instead of ``count`` sampled pairs

    Raises
    ------
    PreconditionViolated
        If a given vector is not a label of ``b``
    """
    base = gamma3_base_level(sig, level)
    labels = label_set(sig, base)
    if f is not None or f_prime is not None:
        for v in (f, f_prime):
            if v is None or v not in labels:
                raise PreconditionViolated(f"{v} is not in the label set {labels}")
        pairs = [(f, f_prime)]
        mode = "exhaustive"
    else:
        pairs = _sample_pairs(labels, count, seed)
        mode = "sampled"
    report = VerificationReport(
        "gamma3-sections", str(sig), level, None, mode, seed if mode == "sampled" else None
    )

    for f, f_prime in pairs:
        report.tested += 1
        g = gamma3_element(sig, base, f, f_prime)
        if not first_layer_vector(g).is_zero():
            report.add_violation(f=f, f_prime=f_prime, case="first layer moved")
            continue
        expected = dict(expected_sections(sig, base, f, f_prime))
        for x, want in expected.items():
            if not equal_to_depth(section_at_letter(g, x), want, depth):
                report.add_violation(f=f, f_prime=f_prime, letter=x, case="tabulated section")
        active = active_letters(g)
        if not active.rooted_classes_vanish:
            report.add_violation(f=f, f_prime=f_prime, case="rooted class")
        for x in active.b_active:
            if x not in expected and not is_trivial_to_depth(section_at_letter(g, x), depth):
                report.add_violation(f=f, f_prime=f_prime, letter=x, case="otherwise trivial")
        if f == f_prime:
            if not is_trivial_to_depth(section_at_letter(g, -f), depth):
                report.add_violation(f=f, case="equal labels")
        elif (f_prime - f) in labels or (f - f_prime) in labels:
            report.note(f"b|_(f'-f) is nontrivial for f={f}, f'={f_prime}")
    return report
