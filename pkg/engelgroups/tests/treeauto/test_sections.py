import pytest

from engelgroups.alphabet import BasisLabels, FarSet, FpVector
from engelgroups.treeauto import (
    BLetter,
    Rooted,
    Word,
    act,
    active_letters,
    conjugated_form,
    first_layer_vector,
    format_word,
    label_set,
    letter_section,
    parse_vertex,
    parse_word,
    section,
    section_at_letter,
)
from engelgroups.treeauto.basis import rank_mod_p
from engelgroups.treeauto.sections import B_ACTIVE, F_ACTIVE, INACTIVE
from engelgroups.treeauto.vertex import Vertex
from engelgroups.utils.errors import ShapeMismatchError


def _v(p, *values):
    return FpVector.from_dense(p, list(values))


def test_b_sections(growing3):
    assert letter_section(growing3, BLetter(0, 1), _v(3, 0)) == Word.b(growing3, 1)
    assert format_word(letter_section(growing3, BLetter(0, 1), _v(3, 1))) == "r1:[1,0]"
    assert format_word(letter_section(growing3, BLetter(0, 2), _v(3, 2))) == "r1:[0,2]"
    assert letter_section(growing3, Rooted(0, _v(3, 2)), _v(3, 1)).is_empty()


def test_b_section_away_from_labels(growing3):
    # (0,1) is not a far vector of X_1
    assert letter_section(growing3, BLetter(1, 1), _v(3, 0, 1)).is_empty()


@pytest.mark.parametrize(
    ["text", "expected"],
    [("b0 r0:[1] b0^2 r0:[2]", (0,)), ("", (0,)), ("r0:[1] b0 r0:[1]", (2,))],
    ids=["fixes_layer", "empty", "translation"],
)
def test_first_layer_vector(growing3, text, expected):
    assert first_layer_vector(parse_word(text, growing3)).dense() == expected


def test_first_layer_vector_padded(growing2):
    assert first_layer_vector(parse_word("r0:[1,1]", growing2)).dense() == (1, 1, 0, 0, 0)


def test_act(growing3):
    assert act(parse_word("r0:[1]", growing3), parse_vertex("[1]", growing3)) == parse_vertex(
        "[2]", growing3
    )
    assert act(parse_word("b0", growing3), parse_vertex("[1][0,0]", growing3)) == parse_vertex(
        "[1][1,0]", growing3
    )
    u = parse_vertex("[2][1,1]", growing3)
    assert act(Word.empty(growing3), u) == u


def test_section(growing3):
    w = parse_word("r0:[1] b0", growing3)
    assert format_word(section(w, parse_vertex("[0]", growing3))) == "r1:[1,0]"
    assert section(parse_word("b0^3", growing3), parse_vertex("[0]", growing3)).is_empty()
    assert section(w, Vertex.root(growing3)) == w


def test_section_cocycle(growing3):
    g = parse_word("b0 r0:[1] b0^2", growing3)
    h = parse_word("r0:[2] b0 r0:[1]", growing3)
    for x in (_v(3, 0), _v(3, 1), _v(3, 2)):
        image = x + first_layer_vector(g)
        assert section_at_letter(g * h, x) == section_at_letter(g, x) * section_at_letter(h, image)


def test_section_vertex_must_match(growing3):
    with pytest.raises(ShapeMismatchError):
        section(Word.b(growing3, 1), parse_vertex("[0]", growing3))


def test_conjugated_form(growing3):
    pairs, tail = conjugated_form(parse_word("r0:[1] b0 r0:[1] b0^2", growing3))
    assert pairs == [(1, _v(3, 2)), (2, _v(3, 1))]
    assert tail == _v(3, 2)


def test_active_letters(growing3):
    w = parse_word("b0 r0:[1] b0 r0:[2]", growing3)
    active = active_letters(w)
    # offsets 0 and 2, coefficient 1 each
    assert set(active.b_active) == {_v(3, 0), _v(3, 2)}
    assert active.classify(_v(3, 0)) == B_ACTIVE
    assert active.classify(_v(3, 1)) == F_ACTIVE
    assert not active.rooted_classes_vanish


def test_active_letters_of_rooted_word(growing3):
    active = active_letters(parse_word("r0:[1]", growing3))
    assert active.b_active == ()
    assert active.classify(_v(3, 1)) == INACTIVE
    assert active.rooted_classes_vanish


@pytest.mark.parametrize(
    ("family", "n", "size"),
    [("growing3", 0, 2), ("growing3", 1, 4), ("growing2", 0, 10), ("regular35", 0, 5)],
    ids=["p3-level0", "p3-level1", "p2-level0", "regular"],
)
def test_label_set_sizes(request, family, n, size):
    assert len(label_set(request.getfixturevalue(family), n)) == size


def test_regular_labels_are_far_and_independent(regular35):
    labels = label_set(regular35, 0)
    assert isinstance(labels, BasisLabels)
    assert all(v in FarSet(3, 5) for v in labels)
    assert rank_mod_p([v.dense() for v in labels], 3) == 5
