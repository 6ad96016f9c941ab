"""The order of the recursive generator ``b``."""
from typing import Optional

from ..alphabet import TreeSignature
from ..config import run_defaults
from ..treeauto import BLetter, Word, format_vertex, walk_sections
from .report import VerificationReport


def order_check(
    sig: TreeSignature, depth: Optional[int] = None, level: int = 0, seed: int = 0
) -> VerificationReport:
    """
    ``b_level`` has order p.

    The p-fold product is kept as p separate letters, and its sections are
    walked without reducing exponents mod p (:func:`walk_sections`). Growing
    and explicit trees are checked on vertices of length at most ``depth``.
    Regular trees are walked until the sections close up, to at most
    ``triviality.closure_depth_cap`` levels, and report the verdict ``Proven``
    when they do.

    Parameters
    ----------
    sig : TreeSignature
    depth : int, optional
        Defaults to the ``order`` suite depth
    level : int
        Level of ``b``
    seed : int
        Seed of the labels drawn from label sets too large to list
    """
    regular = sig.family == "regular"
    if depth is None:
        if regular:
            depth = run_defaults.get("triviality", "closure_depth_cap")
        else:
            depth = run_defaults.suite("order")["depth"]
    power = Word(sig, level, (BLetter(level, 1),) * sig.p)
    walk = walk_sections(power, depth, seed=seed)

    report = VerificationReport("order", str(sig), level, None)
    report.tested = 1
    report.observe_max("max_depth_checked", walk.depth)
    report.observe_max("sections", walk.sections)
    if walk.sampled:
        report.note("some label sets were sampled or skipped")
    if walk.witness is not None:
        report.add_violation(word=f"b{level}^{sig.p}", witness=format_vertex(walk.witness))
        verdict = "RefutedAt"
    elif regular and walk.closed:
        verdict = "Proven"
    elif regular:
        verdict = "Unknown"
        report.unknown += 1
    else:
        verdict = "TrivialToDepth"
    report.extra["verdict"] = verdict
    return report
