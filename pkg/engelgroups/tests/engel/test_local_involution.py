import pytest

from engelgroups.engel import (
    FreeWord,
    GroupOps,
    involution_engel_check,
    local_check,
    local_decomposition,
    quotient_instance,
    stabilized_section,
    top_orbits,
    wreath_ops,
)
from engelgroups.finitewreath import PermWreathElem, WreathSpec, enumerate_group, from_parts, w_id
from engelgroups.treeauto import Vertex, Word, parse_word
from engelgroups.utils.errors import NotInBaseError, NotInvolutionError, NotStabilizedError

Z5 = GroupOps(lambda a, b: (a + b) % 5, lambda a: (-a) % 5, 0)


def test_top_orbits():
    assert top_orbits([(1, 0, 2)], 3) == [(0, 1), (2,)]
    assert top_orbits([(1, 2, 0)], 3) == [(0, 1, 2)]
    assert top_orbits([], 2) == [(0,), (1,)]


def test_local_decomposition_needs_a_base_element():
    g = PermWreathElem((0, 0), (1, 0))
    with pytest.raises(NotInBaseError, match="only base elements"):
        local_decomposition(g, [g])


def test_local_decomposition_renumbers_orbits():
    g = PermWreathElem((1, 2, 3), (0, 1, 2))
    h = PermWreathElem((0, 4, 0), (2, 1, 0))
    parts = local_decomposition(g, [h])
    assert [part.orbit for part in parts] == [(0, 2), (1,)]
    assert parts[0].g.base == (1, 3)
    assert parts[0].hs[0].top == (1, 0)
    assert parts[1].hs[0].base == (4,)


def test_local_check_agrees_with_global_verdict():
    g = PermWreathElem((1, 2, 0), (0, 1, 2))
    h = PermWreathElem((0, 0, 0), (1, 0, 2))
    whole, parts = local_check(FreeWord.commutator(), 1, g, [h], Z5)
    assert whole is False
    assert parts == [False, True]


def test_quotient_instance(growing3):
    g = parse_word("b0", growing3)
    h = parse_word("r0:[1]", growing3)
    g_perm, hs_perm, base_ops = quotient_instance(g, [h], 2)
    assert g_perm.is_in_base()
    assert g_perm.degree == 3
    assert hs_perm[0].top == (1, 2, 0)
    assert base_ops.identity == w_id(WreathSpec(3, (2,)))


def test_stabilized_section(growing3):
    b = Word.b(growing3)
    u = Vertex.zero(growing3, 1)
    value = stabilized_section(FreeWord.commutator(), b, [b], 1, u, 1)
    assert value.is_empty()
    with pytest.raises(NotStabilizedError, match="moves layer 1"):
        stabilized_section(FreeWord.x(), parse_word("r0:[1]", growing3), [], 1, u, 3)
    with pytest.raises(ValueError, match="has length"):
        stabilized_section(FreeWord.x(), b, [], 2, u, 1)


def _dihedral():
    spec = WreathSpec(2, (1, 1))
    return spec, list(enumerate_group(spec))


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_involution_identity_holds_in_dihedral_group(n):
    spec, elements = _dihedral()
    ops = wreath_ops(spec)
    involutions = [h for h in elements if ops.mul(h, h) == ops.identity]
    assert len(involutions) == 6
    for h in involutions:
        for g in elements:
            assert involution_engel_check(ops, g, h, n)


def test_involution_identity_needs_an_involution():
    spec = WreathSpec(3, (1,))
    ops = wreath_ops(spec)
    h = from_parts(spec, 1, [])
    with pytest.raises(NotInvolutionError, match="square"):
        involution_engel_check(ops, w_id(spec), h, 1)
    with pytest.raises(ValueError, match="non-negative"):
        involution_engel_check(ops, w_id(spec), w_id(spec), -1)
