import pytest

from engelgroups.engel import (
    ClosureMode,
    FreeWord,
    QuotientMode,
    engel_growth,
    engel_tower,
    identity_tower,
)
from engelgroups.treeauto import Word, parse_word
from engelgroups.utils.errors import ShapeMismatchError


@pytest.mark.parametrize(
    "mode", [QuotientMode(3), ClosureMode()], ids=["quotient", "closure"]
)
def test_tower_with_trivial_h(growing3, mode):
    result = engel_tower(Word.b(growing3), Word.empty(growing3), 13, mode)
    assert result.index == 1
    assert result.found


def test_tower_of_rooted_letters_closes_at_once(regular35):
    g = parse_word("r0:[1,0,0,0,0]", regular35)
    h = parse_word("r0:[0,2,0,0,0]", regular35)
    result = engel_tower(g, h, 5, ClosureMode())
    assert result.index == 1
    assert result.trace == ("proven",)
    assert result.mode == "closure"


def test_tower_of_rooted_and_b(growing3):
    g = parse_word("r0:[1]", growing3)
    result = engel_tower(g, Word.b(growing3), 13, QuotientMode(3))
    assert result.found
    assert 2 <= result.index <= 13
    assert len(result.trace) == result.index
    assert result.trace[-1] == "trivial"
    assert result.mode == "quotient:3"


def test_tower_not_found_within_limit(growing3):
    g = parse_word("r0:[1]", growing3)
    result = engel_tower(g, Word.b(growing3), 1, QuotientMode(3))
    assert result.index is None
    assert not result.found
    assert result.trace == ("nontrivial",)


def test_tower_inputs_share_a_level(growing3):
    with pytest.raises(ShapeMismatchError, match="share a signature"):
        engel_tower(Word.b(growing3), Word.b(growing3, 1), 3, QuotientMode(1))


def test_identity_tower_of_power_word(growing3):
    # x^3 applied twice kills every element of the depth-2 quotient
    g = parse_word("b0 r0:[1]", growing3)
    result = identity_tower(FreeWord.power(3), g, [], 2, QuotientMode(2))
    assert result.found
    assert result.index <= 2


def test_growth_of_empty_ball(growing3):
    result = engel_growth(growing3, depth=2, radius=0)
    assert result.value == 0
    assert result.witness is None
    assert result.pairs == 0


def test_growth_on_generators(growing3):
    result = engel_growth(growing3, depth=2, radius=1)
    assert result.pairs == 25
    # the depth-2 quotient is (3**2 - 1) / 2 = 4 Engel
    assert 1 <= result.value <= 4
    g, h = result.witness
    assert g.level == h.level == 0
