"""Spherical transitivity, orbit sizes and fractality."""
from typing import Optional

import numpy as np

from ..alphabet import TreeSignature
from ..alphabet.ranks import checked_pow
from ..config import run_defaults
from ..treeauto import Vertex, cycle, fractality_witness, layer_size, orbit, random_vertex
from ..utils.errors import CapExceededError, ConstructionFailed
from ..utils.log import _init_logger
from .ball import generators, sample_ball
from .length import GenSetTag
from .report import VerificationReport

logger = _init_logger(__name__)


def transitivity_check(sig: TreeSignature, level: int) -> VerificationReport:
    """The orbit of the all-zero vertex under E covers the whole layer."""
    size = layer_size(sig, level)
    if size > run_defaults.get("enumeration", "orbit_cap"):
        raise CapExceededError(f"layer {level} of {sig} has {size} vertices")
    gens = list(generators(sig, GenSetTag.E(0)))
    found = orbit(Vertex.zero(sig, level), gens, cap=size + 1)
    report = VerificationReport("transitivity", str(sig), level)
    report.tested = size
    report.observe_max("max_orbit_size", len(found))
    if len(found) != size:
        report.add_violation(orbit_size=len(found), layer_size=size)
    return report


def max_orbit_check(
    sig: TreeSignature, level: int, radius: int, count: int, seed: int
) -> VerificationReport:
    """Orbits of single words on layer ``level`` have at most ``p**level`` vertices."""
    bound = checked_pow(sig.p, level)
    rng = np.random.default_rng(seed)
    report = VerificationReport("max-orbit", str(sig), level, radius, "sampled", seed)
    for g in sample_ball(sig, GenSetTag.E(0), radius, count, seed):
        u = random_vertex(sig, level, rng)
        size = len(cycle(g, u, cap=bound + 1))
        report.tested += 1
        report.observe_max("max_orbit_size", size)
        if size > bound:
            report.add_violation(word=g, vertex=u, orbit_size=size, bound=bound)
    return report


def fractality_check(
    sig: TreeSignature, level: int, count: int, seed: int
) -> VerificationReport:
    """
    Every generator of ``E|_n``, ``n <= level``, lifts to a stabilizer element at
    ``count`` sampled vertices of layer n.
    """
    rng = np.random.default_rng(seed)
    report = VerificationReport("fractality", str(sig), level, None, "sampled", seed)
    for n in range(level + 1):
        targets = list(generators(sig, GenSetTag.E(n)))
        vertices = [Vertex.root(sig)] if n == 0 else [
            random_vertex(sig, n, rng) for _ in range(count)
        ]
        for u in vertices:
            for target in targets:
                report.tested += 1
                try:
                    fractality_witness(sig, target, u)
                except ConstructionFailed as err:
                    report.add_violation(target=target, vertex=u, error=str(err))
    return report
