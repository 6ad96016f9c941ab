"""Orbits of vertices under finite sets of words, and cycles of a single word."""
from collections import deque
from dataclasses import dataclass
from typing import FrozenSet, Optional, Sequence

from ..config import run_defaults
from ..utils.errors import ShapeMismatchError
from ..utils.log import _init_logger
from .sections import act
from .vertex import Vertex
from .word import Word

logger = _init_logger(__name__)


@dataclass(frozen=True)
class OrbitResult:
    """Vertices reached by a breadth-first orbit search; ``capped`` marks a truncated orbit."""

    vertices: FrozenSet[Vertex]
    capped: bool = False

    def __len__(self) -> int:
        return len(self.vertices)

    def __contains__(self, u: Vertex) -> bool:
        return u in self.vertices


def orbit(u: Vertex, gens: Sequence[Word], cap: Optional[int] = None) -> OrbitResult:
    """
    Orbit of ``u`` under the group generated by ``gens``.

    Generators and their inverses are applied until no new vertex appears or
    ``cap`` vertices are known. Reaching the cap is reported, not raised.
    """
    if cap is None:
        cap = run_defaults.get("enumeration", "orbit_cap")
    moves = []
    for g in gens:
        if g.level != u.start or g.sig != u.sig:
            raise ShapeMismatchError(f"generator {g} does not act below level {u.start}")
        moves.extend([g, g.inverse()])

    found = {u}
    queue = deque([u])
    while queue:
        v = queue.popleft()
        for g in moves:
            image = act(g, v)
            if image in found:
                continue
            if len(found) >= cap:
                logger.warning(f"orbit of {u} stopped at the cap of {cap} vertices")
                return OrbitResult(frozenset(found), capped=True)
            found.add(image)
            queue.append(image)
    return OrbitResult(frozenset(found))


def cycle(w: Word, u: Vertex, cap: Optional[int] = None) -> OrbitResult:
    """Orbit of ``u`` under the cyclic group generated by ``w``."""
    if cap is None:
        cap = run_defaults.get("enumeration", "orbit_cap")
    found = {u}
    v = act(w, u)
    while v != u:
        if len(found) >= cap:
            logger.warning(f"cycle of {u} under {w} stopped at the cap of {cap} vertices")
            return OrbitResult(frozenset(found), capped=True)
        found.add(v)
        v = act(w, v)
    return OrbitResult(frozenset(found))
