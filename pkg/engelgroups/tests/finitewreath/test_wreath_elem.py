import itertools

import pytest

from engelgroups.finitewreath import (
    PermWreathElem,
    WreathSpec,
    enumerate_group,
    from_parts,
    parse_wreath_spec,
    perm_wreath_inv,
    perm_wreath_mul,
    to_perm_wreath,
    w_act,
    w_commutator,
    w_id,
    w_inv,
    w_mul,
    w_pow,
    w_section,
)
from engelgroups.finitewreath.spec import addition_table, negation_table
from engelgroups.testing import _gen_random_wreath_elem
from engelgroups.utils.errors import (
    CapExceededError,
    ParseError,
    ShapeMismatchError,
    SpecMismatchError,
)


@pytest.mark.parametrize(
    ("spec", "order"),
    [
        (WreathSpec(2, (1, 1)), 8),
        (WreathSpec(3, (1, 1)), 81),
        (WreathSpec(2, (2,)), 4),
        (WreathSpec(2, (1, 1, 1)), 128),
        (WreathSpec(3, ()), 1),
    ],
    ids=["C2wrC2", "C3wrC3", "C2^2", "C2wrC2wrC2", "trivial"],
)
def test_enumerate_group(spec, order):
    assert spec.order() == order
    elements = list(enumerate_group(spec))
    assert len(elements) == order
    assert len(set(elements)) == order


def test_enumerate_group_cap():
    with pytest.raises(CapExceededError, match="above the cap 50"):
        list(enumerate_group(WreathSpec(3, (1, 1)), cap=50))


def test_spec_validation():
    with pytest.raises(ValueError, match="prime"):
        WreathSpec(4, (1,))
    with pytest.raises(ValueError, match="at least 1"):
        WreathSpec(3, (1, 0))


def test_parse_wreath_spec():
    spec = parse_wreath_spec("wreath:p=3,ranks=1,2")
    assert spec == WreathSpec(3, (1, 2))
    assert str(spec) == "wreath:p=3,ranks=1,2"
    assert parse_wreath_spec(str(spec)) == spec
    assert spec.tail() == WreathSpec(3, (2,))
    with pytest.raises(ParseError, match="Unknown family"):
        parse_wreath_spec("growing:p=3")


def test_tables():
    add = addition_table(3, 2)
    neg = negation_table(3, 2)
    assert add.shape == (9, 9)
    assert all(add[i, neg[i]] == 0 for i in range(9))
    # (0, 1) + (1, 2) = (1, 0)
    assert add[1, 5] == 3
    with pytest.raises(CapExceededError):
        addition_table(2, 13)


def test_group_axioms():
    spec = WreathSpec(2, (1, 1))
    elements = list(enumerate_group(spec))
    e = w_id(spec)
    for a in elements:
        assert w_mul(a, e) == a == w_mul(e, a)
        assert w_mul(a, w_inv(a)).is_identity()
    for a, b, c in itertools.product(elements, repeat=3):
        assert w_mul(w_mul(a, b), c) == w_mul(a, w_mul(b, c))


@pytest.mark.parametrize("seed", range(5))
def test_random_elements_of_deeper_groups(seed):
    spec = WreathSpec(3, (1, 2))
    a = _gen_random_wreath_elem(spec, seed)
    b = _gen_random_wreath_elem(spec, seed + 100)
    assert (a * b).inverse() == b.inverse() * a.inverse()
    assert w_pow(a, 9).is_identity()
    assert w_pow(a, -1) == w_inv(a)


def test_dihedral_group_is_not_abelian():
    spec = WreathSpec(2, (1, 1))
    elements = list(enumerate_group(spec))
    commutators = {w_commutator(a, b) for a in elements for b in elements}
    assert len(commutators) == 2


def test_mixing_specs():
    with pytest.raises(SpecMismatchError, match="cannot be combined"):
        w_mul(w_id(WreathSpec(2, (1,))), w_id(WreathSpec(3, (1,))))


def test_action_and_sections():
    spec = WreathSpec(3, (1, 1))
    child = from_parts(spec.tail(), 1, [])
    e = w_id(spec.tail())
    g = from_parts(spec, 2, [child, e, e])
    assert g.top == 2
    assert w_act(g, (0, 0)) == (2, 1)
    assert w_act(g, (1, 1)) == (0, 1)
    assert w_section(g, (0,)) == child
    assert w_section(g, (0, 0)).spec == WreathSpec(3, ())
    assert g.to_nested() == [2, [[1, []], [0, []], [0, []]]]
    with pytest.raises(ShapeMismatchError, match="outside the alphabet"):
        w_act(g, (3,))
    with pytest.raises(ShapeMismatchError, match="below a depth-2 tree"):
        w_act(g, (0, 0, 0))


def test_action_is_a_right_action():
    spec = WreathSpec(3, (1, 1))
    a = _gen_random_wreath_elem(spec, 1)
    b = _gen_random_wreath_elem(spec, 2)
    for vertex in itertools.product(range(3), repeat=2):
        assert w_act(a * b, vertex) == w_act(b, w_act(a, vertex))


def test_from_parts_errors():
    spec = WreathSpec(3, (1, 1))
    with pytest.raises(ShapeMismatchError, match="outside the alphabet"):
        from_parts(spec, 3, [])
    with pytest.raises(SpecMismatchError, match="children"):
        from_parts(spec, 0, [w_id(spec.tail())])
    with pytest.raises(ShapeMismatchError, match="no first layer"):
        from_parts(WreathSpec(3, ()), 0, [])


def test_perm_wreath_elements():
    with pytest.raises(ShapeMismatchError, match="not a permutation"):
        PermWreathElem((0, 0), (0, 0))
    add = lambda a, b: (a + b) % 5  # noqa: E731
    neg = lambda a: (-a) % 5  # noqa: E731
    a = PermWreathElem((1, 2, 3), (1, 2, 0))
    product = perm_wreath_mul(add, a, perm_wreath_inv(neg, a))
    assert product == PermWreathElem((0, 0, 0), (0, 1, 2))
    assert product.is_in_base()
    assert not a.is_in_base()


def test_to_perm_wreath_is_a_homomorphism():
    spec = WreathSpec(3, (1, 1))
    a = _gen_random_wreath_elem(spec, 3)
    b = _gen_random_wreath_elem(spec, 4)
    mul = lambda x, y: x * y  # noqa: E731
    assert to_perm_wreath(a * b) == perm_wreath_mul(mul, to_perm_wreath(a), to_perm_wreath(b))
    assert to_perm_wreath(w_id(spec)).is_in_base()
