import pytest

from engelgroups.alphabet import FpVector
from engelgroups.testing import _gen_random_word
from engelgroups.treeauto import (
    BLetter,
    Rooted,
    Word,
    commutator,
    format_word,
    normalize,
    parse_word,
)
from engelgroups.utils.errors import ParseError, ShapeMismatchError


@pytest.mark.parametrize(
    ["text", "expected"],
    [
        ("r0:[1] r0:[2]", ""),
        ("b0 b0^2", ""),
        ("b0 r0:[1] r0:[1]", "b0 r0:[2]"),
        ("b0^4 r0:[0]", "b0"),
        ("b0^-1", "b0^2"),
    ],
    ids=["rooted_cancel", "b_order", "merge", "zero_rooted", "negative"],
)
def test_normalize(growing3, text, expected):
    assert format_word(normalize(parse_word(text, growing3))) == expected


def test_parse_keeps_raw_letters(growing3):
    w = parse_word("b0^3 r0:[1]^2", growing3)
    assert w.letters == (BLetter(0, 3), Rooted(0, FpVector.from_dense(3, [2])))


def test_parse_pads_vectors(growing2):
    w = parse_word("r0:[1,1]", growing2)
    (letter,) = w.letters
    assert letter.vector.dense() == (1, 1, 0, 0, 0)


@pytest.mark.parametrize(
    "text", ["b0 r0:[1] b0^2 r0:[2]", "r1:[1,2] b1^2", "", "b2 r2:[1,0,0,2]"]
)
def test_format_parse_round_trip(growing3, text):
    w = parse_word(text, growing3)
    assert format_word(w) == text
    assert parse_word(format_word(w), growing3) == w


@pytest.mark.parametrize(
    ["text", "match"],
    [("b0 b1", "share one level"), ("b0 q", "cannot parse"), ("r0:(1)", "cannot parse")],
    ids=["levels", "garbage", "bad_vector"],
)
def test_parse_errors(growing3, text, match):
    with pytest.raises(ParseError, match=match):
        parse_word(text, growing3)


def test_parse_expected_level(growing3):
    assert parse_word("", growing3, 2) == Word.empty(growing3, 2)
    with pytest.raises(ParseError, match="expected 0"):
        parse_word("b1", growing3, 0)


def test_group_operations(growing3):
    g = _gen_random_word(growing3, 6, seed=1)
    h = _gen_random_word(growing3, 6, seed=2)
    assert (g * g.inverse()).is_empty()
    assert g**3 == g * g * g
    assert g**-1 == g.inverse()
    assert g.conjugate(h) == h.inverse() * g * h
    assert g.commutator(h) == g.inverse() * h.inverse() * g * h
    assert commutator(g, h, g) == g.commutator(h).commutator(g)


def test_mixed_levels_rejected(growing3):
    with pytest.raises(ShapeMismatchError, match="cannot multiply"):
        Word.b(growing3, 0) * Word.b(growing3, 1)
    with pytest.raises(ShapeMismatchError, match="cannot change level"):
        Word.b(growing3, 0).relevel(1)


def test_relevel_on_regular_tree(regular35):
    assert Word.b(regular35, 0).relevel(3) == Word.b(regular35, 3)
