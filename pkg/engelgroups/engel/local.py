"""Orbit-restricted evaluation of iterated identities in permutational wreath products."""
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from ..finitewreath import (
    PermWreathElem,
    perm_wreath_inv,
    perm_wreath_mul,
    quotient_to_wreath,
    to_perm_wreath,
)
from ..treeauto import Word, is_trivial_to_depth, section
from ..treeauto.vertex import Vertex
from ..utils.errors import NotInBaseError, NotStabilizedError
from .free_word import FreeWord, GroupOps, evaluate, iterate_word
from .tower import word_ops, wreath_ops


@dataclass(frozen=True)
class OrbitRestriction:
    """``g`` and the ``hs`` cut down to one orbit of the tops, positions renumbered in order."""

    orbit: Tuple[int, ...]
    g: PermWreathElem
    hs: Tuple[PermWreathElem, ...]


def perm_wreath_ops(base_ops: GroupOps, degree: int) -> GroupOps:
    identity = PermWreathElem((base_ops.identity,) * degree, tuple(range(degree)))
    return GroupOps(
        lambda a, b: perm_wreath_mul(base_ops.mul, a, b),
        lambda a: perm_wreath_inv(base_ops.inv, a),
        identity,
    )


def top_orbits(tops: Sequence[Tuple[int, ...]], degree: int) -> List[Tuple[int, ...]]:
    """Orbits of the group generated by the permutations ``tops``, each sorted."""
    seen = [False] * degree
    orbits = []
    for start in range(degree):
        if seen[start]:
            continue
        seen[start] = True
        stack, found = [start], [start]
        while stack:
            x = stack.pop()
            for top in tops:
                y = top[x]
                if not seen[y]:
                    seen[y] = True
                    stack.append(y)
                    found.append(y)
        orbits.append(tuple(sorted(found)))
    return orbits


def _restrict(elem: PermWreathElem, orbit: Tuple[int, ...]) -> PermWreathElem:
    position = {x: i for i, x in enumerate(orbit)}
    base = tuple(elem.base[x] for x in orbit)
    top = tuple(position[elem.top[x]] for x in orbit)
    return PermWreathElem(base, top)


def local_decomposition(
    g: PermWreathElem, hs: Sequence[PermWreathElem]
) -> List[OrbitRestriction]:
    """
    Split ``(g, h_1, ..., h_k)`` along the orbits of the tops of the ``h_i``.

    ``w∘m(g, hs)`` is trivial exactly when it is trivial on every restriction,
    provided the top group satisfies ``w∘m`` itself.

    Raises
    ------
    NotInBaseError
        If ``g`` moves a position
    """
    if not g.is_in_base():
        raise NotInBaseError(f"g has top {g.top}; only base elements can be decomposed")
    orbits = top_orbits([h.top for h in hs], g.degree)
    return [
        OrbitRestriction(orbit, _restrict(g, orbit), tuple(_restrict(h, orbit) for h in hs))
        for orbit in orbits
    ]


def _is_identity(elem: PermWreathElem, base_ops: GroupOps) -> bool:
    return elem.is_in_base() and all(x == base_ops.identity for x in elem.base)


def local_check(
    w: FreeWord, m: int, g: PermWreathElem, hs: Sequence[PermWreathElem], base_ops: GroupOps
) -> Tuple[bool, List[bool]]:
    """Triviality of ``w∘m(g, hs)`` globally and on each orbit restriction."""
    iterate = iterate_word(w, m)
    whole = evaluate(iterate, g, hs, perm_wreath_ops(base_ops, g.degree))
    verdicts = []
    for part in local_decomposition(g, hs):
        restricted = evaluate(
            iterate, part.g, part.hs, perm_wreath_ops(base_ops, len(part.orbit))
        )
        verdicts.append(_is_identity(restricted, base_ops))
    return _is_identity(whole, base_ops), verdicts


def quotient_instance(
    g: Word, hs: Sequence[Word], depth: int
) -> Tuple[PermWreathElem, Tuple[PermWreathElem, ...], GroupOps]:
    """
    Words as elements of ``(G / St(depth - 1)) wr_X A`` through the depth-``depth`` quotient.

    Returns the permutational images and the ops of the base group.
    """
    image = quotient_to_wreath(g.sig, depth, g)
    g_perm = to_perm_wreath(image)
    hs_perm = tuple(to_perm_wreath(quotient_to_wreath(g.sig, depth, h)) for h in hs)
    return g_perm, hs_perm, wreath_ops(image.spec.tail())


def stabilized_section(
    w: FreeWord, g: Word, hs: Sequence[Word], n: int, u: Vertex, f_n: int
) -> Word:
    """
    The section at ``u`` of ``w∘f_n(g, hs)``, an element of ``St(n)`` with ``|u| = n``.

    Raises
    ------
    NotStabilizedError
        If the iterate moves a vertex of layer ``n``
    """
    if len(u) != n:
        raise ValueError(f"vertex {u} has length {len(u)}, expected {n}")
    value = evaluate(iterate_word(w, f_n), g, hs, word_ops(g.sig, g.level))
    if not is_trivial_to_depth(value, n):
        raise NotStabilizedError(f"w∘{f_n} moves layer {n}")
    return section(value, u)
