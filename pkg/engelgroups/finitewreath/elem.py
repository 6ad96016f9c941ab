"""
Dense elements of finite iterated wreath products.

An element is stored in tree orientation: a node ``(top, children)`` holds the
translation ``top`` of the first-layer alphabet and one child per letter, the
element induced on the subtree below that letter. Letters are the integer
indices of :meth:`FpVector.to_index`. Nodes at the deepest layer keep no
children, and the trivial group (empty spec) has the single node ``None``.

With right actions the law reads ``(f, s)(g, t) = (x -> f(x) g(x + s), s + t)``,
the same cocycle rule words obey under ``section_at_letter``.
"""
import functools
import itertools
from dataclasses import dataclass
from typing import Any, Callable, Iterator, List, Optional, Sequence, Tuple

from ..config import run_defaults
from ..utils.errors import CapExceededError, ShapeMismatchError, SpecMismatchError
from .spec import WreathSpec, addition_table, negation_table

Node = Optional[Tuple[int, tuple]]


@dataclass(frozen=True)
class WreathElem:
    spec: WreathSpec
    node: Node

    def __mul__(self, other: "WreathElem") -> "WreathElem":
        return w_mul(self, other)

    def inverse(self) -> "WreathElem":
        return w_inv(self)

    def is_identity(self) -> bool:
        return self.node == w_id(self.spec).node

    @property
    def top(self) -> int:
        """Index of the translation on the first layer (0 for the trivial group)."""
        return 0 if self.node is None else self.node[0]

    def to_nested(self) -> list:
        """Nested ``[top, [children...]]`` lists for reports; the trivial group gives ``[]``."""
        return _nested(self.node)


def _nested(node: Node) -> list:
    if node is None:
        return []
    top, children = node
    return [top, [_nested(child) for child in children]]


def _check_same_spec(a: WreathElem, b: WreathElem) -> None:
    if a.spec != b.spec:
        raise SpecMismatchError(f"elements of {a.spec} and {b.spec} cannot be combined")


def _mul(spec: WreathSpec, level: int, a: Node, b: Node) -> Node:
    if level == spec.depth:
        return None
    add = addition_table(spec.p, spec.ranks[level])
    top = int(add[a[0], b[0]])
    if level == spec.depth - 1:
        return (top, ())
    shift = a[0]
    children = tuple(
        _mul(spec, level + 1, a[1][x], b[1][add[x, shift]]) for x in range(len(a[1]))
    )
    return (top, children)


def _inv(spec: WreathSpec, level: int, a: Node) -> Node:
    if level == spec.depth:
        return None
    add = addition_table(spec.p, spec.ranks[level])
    neg = negation_table(spec.p, spec.ranks[level])
    top = int(neg[a[0]])
    if level == spec.depth - 1:
        return (top, ())
    # the inverse has section f(x - s)^-1 at x
    children = tuple(_inv(spec, level + 1, a[1][add[x, top]]) for x in range(len(a[1])))
    return (top, children)


@functools.lru_cache(maxsize=64)
def _identity_node(spec: WreathSpec, level: int = 0) -> Node:
    if level == spec.depth:
        return None
    if level == spec.depth - 1:
        return (0, ())
    child = _identity_node(spec, level + 1)
    return (0, (child,) * spec.size(level))


def w_id(spec: WreathSpec) -> WreathElem:
    return WreathElem(spec, _identity_node(spec))


def w_mul(a: WreathElem, b: WreathElem) -> WreathElem:
    _check_same_spec(a, b)
    return WreathElem(a.spec, _mul(a.spec, 0, a.node, b.node))


def w_inv(a: WreathElem) -> WreathElem:
    return WreathElem(a.spec, _inv(a.spec, 0, a.node))


def w_pow(a: WreathElem, k: int) -> WreathElem:
    base = a if k >= 0 else w_inv(a)
    result = w_id(a.spec)
    for _ in range(abs(k)):
        result = w_mul(result, base)
    return result


def w_commutator(a: WreathElem, b: WreathElem) -> WreathElem:
    """``[a, b] = a^-1 b^-1 a b``."""
    return w_mul(w_mul(w_inv(a), w_inv(b)), w_mul(a, b))


def _check_encoded_vertex(spec: WreathSpec, vertex: Sequence[int]) -> None:
    if len(vertex) > spec.depth:
        raise ShapeMismatchError(f"vertex of length {len(vertex)} below a depth-{spec.depth} tree")
    for level, x in enumerate(vertex):
        if not 0 <= x < spec.size(level):
            raise ShapeMismatchError(f"letter {x} outside the alphabet of level {level}")


def w_act(elem: WreathElem, vertex: Sequence[int]) -> Tuple[int, ...]:
    """Image of an encoded vertex under the right action of ``elem``."""
    spec = elem.spec
    _check_encoded_vertex(spec, vertex)
    node = elem.node
    image = []
    for level, x in enumerate(vertex):
        add = addition_table(spec.p, spec.ranks[level])
        image.append(int(add[x, node[0]]))
        node = node[1][x] if node[1] else None
    return tuple(image)


def w_section(elem: WreathElem, vertex: Sequence[int]) -> WreathElem:
    """The element induced on the subtree below an encoded vertex."""
    spec = elem.spec
    _check_encoded_vertex(spec, vertex)
    node = elem.node
    for x in vertex:
        node = node[1][x] if node[1] else None
    sub = WreathSpec(spec.p, spec.ranks[len(vertex) :])
    return WreathElem(sub, node if sub.depth else None)


def from_parts(spec: WreathSpec, top: int, children: Sequence[WreathElem]) -> WreathElem:
    """Assemble an element from its first-layer translation and subtree elements."""
    if spec.depth == 0:
        raise ShapeMismatchError("the trivial group has no first layer")
    if not 0 <= top < spec.size(0):
        raise ShapeMismatchError(f"top {top} outside the alphabet of {spec}")
    if spec.depth == 1:
        return WreathElem(spec, (top, ()))
    tail = spec.tail()
    if len(children) != spec.size(0) or any(child.spec != tail for child in children):
        raise SpecMismatchError(f"an element of {spec} needs {spec.size(0)} children of {tail}")
    return WreathElem(spec, (top, tuple(child.node for child in children)))


def _iter_nodes(spec: WreathSpec, level: int) -> Iterator[Node]:
    if level == spec.depth:
        yield None
        return
    size = spec.size(level)
    if level == spec.depth - 1:
        for top in range(size):
            yield (top, ())
        return
    below = list(_iter_nodes(spec, level + 1))
    for top in range(size):
        for children in itertools.product(below, repeat=size):
            yield (top, children)


def enumerate_group(spec: WreathSpec, cap: Optional[int] = None) -> Iterator[WreathElem]:
    """
    Every element of the group exactly once.

    Raises
    ------
    CapExceededError
        If the order of the group exceeds ``cap``
    """
    if cap is None:
        cap = run_defaults.get("enumeration", "group_cap")
    order = spec.order()
    if order > cap:
        raise CapExceededError(f"{spec} has {order} elements, above the cap {cap}")
    for node in _iter_nodes(spec, 0):
        yield WreathElem(spec, node)


def random_elem(spec: WreathSpec, rng) -> WreathElem:
    """A uniformly random element, drawn top-down with ``rng.integers``."""

    def _draw(level: int) -> Node:
        if level == spec.depth:
            return None
        top = int(rng.integers(spec.size(level)))
        if level == spec.depth - 1:
            return (top, ())
        return (top, tuple(_draw(level + 1) for _ in range(spec.size(level))))

    return WreathElem(spec, _draw(0))


@dataclass(frozen=True)
class PermWreathElem:
    """An element ``(g_x)_x t`` of ``G wr_X T`` with ``T`` acting by permutations.

    ``top[x]`` is the image ``x.t`` of position ``x``; base entries live in a
    group given by an ops triple.
    """

    base: Tuple[Any, ...]
    top: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "base", tuple(self.base))
        object.__setattr__(self, "top", tuple(int(x) for x in self.top))
        if sorted(self.top) != list(range(len(self.base))):
            raise ShapeMismatchError(
                f"top {self.top} is not a permutation of {len(self.base)} positions"
            )

    @property
    def degree(self) -> int:
        return len(self.base)

    def is_in_base(self) -> bool:
        return all(x == y for x, y in enumerate(self.top))


def perm_wreath_mul(
    mul: Callable[[Any, Any], Any], a: PermWreathElem, b: PermWreathElem
) -> PermWreathElem:
    if a.degree != b.degree:
        raise ShapeMismatchError(f"degrees {a.degree} and {b.degree} differ")
    base = tuple(mul(a.base[x], b.base[a.top[x]]) for x in range(a.degree))
    return PermWreathElem(base, tuple(b.top[a.top[x]] for x in range(a.degree)))


def perm_wreath_inv(inv: Callable[[Any], Any], a: PermWreathElem) -> PermWreathElem:
    inverse_top: List[int] = [0] * a.degree
    for x, y in enumerate(a.top):
        inverse_top[y] = x
    base = tuple(inv(a.base[inverse_top[x]]) for x in range(a.degree))
    return PermWreathElem(base, tuple(inverse_top))


def to_perm_wreath(elem: WreathElem) -> PermWreathElem:
    """View ``elem`` as an element of ``W' wr_X A`` with ``A`` translating the first layer."""
    spec = elem.spec
    if spec.depth == 0:
        raise ShapeMismatchError("the trivial group has no first layer")
    add = addition_table(spec.p, spec.ranks[0])
    size = spec.size(0)
    children = [w_section(elem, (x,)) for x in range(size)]
    return PermWreathElem(tuple(children), tuple(int(add[x, elem.top]) for x in range(size)))
