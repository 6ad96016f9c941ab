import pytest

from engelgroups.alphabet import FpVector, TreeSignature
from engelgroups.finitewreath import WreathSpec, quotient_spec, quotient_to_wreath, w_act
from engelgroups.metrics import GenSetTag, enumerate_ball
from engelgroups.testing import _gen_random_word
from engelgroups.treeauto import (
    Vertex,
    Word,
    act,
    equal_to_depth,
    is_trivial_to_depth,
    parse_word,
)
from engelgroups.utils.errors import CapExceededError, PreconditionViolated


def test_quotient_spec(growing3, growing2):
    assert quotient_spec(growing3, 3) == WreathSpec(3, (1, 2, 4))
    assert quotient_spec(growing3, 1, level=2) == WreathSpec(3, (4,))
    assert quotient_spec(growing2, 2) == WreathSpec(2, (5, 10))
    assert quotient_spec(growing3, 0) == WreathSpec(3, ())


def test_quotient_spec_errors():
    with pytest.raises(PreconditionViolated, match="non-negative"):
        quotient_spec(TreeSignature.growing(3), -1)
    with pytest.raises(PreconditionViolated, match="only 2 levels"):
        quotient_spec(TreeSignature.explicit(3, (1, 2)), 3)


def test_empty_word_maps_to_identity(growing3):
    assert quotient_to_wreath(growing3, 2, Word.empty(growing3)).is_identity()


def test_rooted_letter_is_a_pure_top(growing3):
    image = quotient_to_wreath(growing3, 1, parse_word("r0:[1]", growing3))
    assert image.node == (1, ())


def test_b_fixes_the_first_layer_only(growing3):
    b = Word.b(growing3)
    assert quotient_to_wreath(growing3, 1, b).is_identity()
    assert not quotient_to_wreath(growing3, 2, b).is_identity()


@pytest.mark.parametrize("seed", range(4))
def test_quotient_is_a_homomorphism(growing3, seed):
    u = _gen_random_word(growing3, 4, seed=seed)
    v = _gen_random_word(growing3, 4, seed=seed + 50)
    image = quotient_to_wreath(growing3, 2, u * v)
    assert image == quotient_to_wreath(growing3, 2, u) * quotient_to_wreath(growing3, 2, v)


@pytest.mark.parametrize("seed", range(4))
def test_kernel_is_the_level_stabilizer(growing3, seed):
    u = _gen_random_word(growing3, 3, seed=seed)
    c = u.commutator(Word.b(growing3))
    assert quotient_to_wreath(growing3, 2, c).is_identity() == is_trivial_to_depth(c, 2)


def test_image_acts_like_the_word(growing3):
    g = parse_word("b0 r0:[2] b0^2", growing3)
    image = quotient_to_wreath(growing3, 2, g)
    for first in range(3):
        for second in range(9):
            letters = (FpVector.from_index(3, 1, first), FpVector.from_index(3, 2, second))
            vertex = Vertex(growing3, letters)
            encoded = tuple(x.to_index() for x in act(g, vertex).letters)
            assert w_act(image, (first, second)) == encoded


def test_quotient_needs_matching_signature(growing3, growing2):
    with pytest.raises(PreconditionViolated, match="mapped into"):
        quotient_to_wreath(growing2, 1, Word.b(growing3))


def test_quotient_size_cap(growing3):
    with pytest.raises(CapExceededError, match="nodes"):
        quotient_to_wreath(growing3, 5, Word.b(growing3))


@pytest.mark.parametrize("depth", [1, 2, 3], ids=["depth1", "depth2", "depth3"])
def test_quotient_separates_a_ball(growing3, depth):
    words = list(enumerate_ball(growing3, GenSetTag.E(0), 2))
    images = [quotient_to_wreath(growing3, depth, w) for w in words]
    for u, image_u in zip(words, images):
        for v, image_v in zip(words, images):
            assert (image_u == image_v) == equal_to_depth(u, v, depth)
