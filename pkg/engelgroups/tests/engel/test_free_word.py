import pytest
from hypothesis import given
from hypothesis import strategies as st

from engelgroups.engel import (
    FreeWord,
    GroupOps,
    counts,
    evaluate,
    format_free_word,
    iterate_word,
    length_bound,
    parse_free_word,
    word_ops,
)
from engelgroups.testing import _gen_random_free_word
from engelgroups.treeauto import Word, parse_word
from engelgroups.utils.errors import ArityMismatchError, IntegerBudgetError, ParseError

# integers mod 7 under addition
Z7 = GroupOps(lambda a, b: (a + b) % 7, lambda a: (-a) % 7, 0)


def test_commutator_word():
    w = FreeWord.commutator()
    assert str(w) == "X Y1 x y1"
    assert w.arity == 1
    assert counts(w) == (2, [2])


@pytest.mark.parametrize(
    ("text", "letters", "arity"),
    [
        ("X Y1 x y1", ((0, -1), (1, -1), (0, 1), (1, 1)), 1),
        ("x y2", ((0, 1), (2, 1)), 2),
        ("x X y1", ((1, 1),), 1),
        ("", (), 0),
    ],
    ids=["commutator", "arity-two", "reduced", "empty"],
)
def test_parse_free_word(text, letters, arity):
    w = parse_free_word(text)
    assert w.letters == letters
    assert w.arity == arity


@pytest.mark.parametrize(
    ("text", "arity", "message"),
    [
        ("x z", None, "cannot parse"),
        ("x y0", None, "start at 1"),
        ("x y2", 1, "arity is 1"),
    ],
    ids=["unknown-letter", "y0", "arity-too-small"],
)
def test_parse_free_word_errors(text, arity, message):
    with pytest.raises(ParseError, match=message):
        parse_free_word(text, arity)


def test_free_word_validation():
    with pytest.raises(ValueError, match="arity"):
        FreeWord((), -1)
    with pytest.raises(ValueError, match="not over"):
        FreeWord(((2, 1),), 1)


@given(st.integers(min_value=0, max_value=3), st.integers(min_value=0, max_value=12))
def test_parse_inverts_format(arity, length):
    w = _gen_random_free_word(arity, length, seed=arity * 100 + length)
    assert parse_free_word(format_free_word(w), arity) == w


def test_power_word():
    assert FreeWord.power(3).letters == ((0, 1),) * 3
    assert FreeWord.power(-2).letters == ((0, -1),) * 2
    assert counts(FreeWord.power(3)) == (3, [])


def test_iterates_of_commutator():
    w = FreeWord.commutator()
    assert iterate_word(w, 0) == FreeWord.x(1)
    assert iterate_word(w, 1) == w
    second = iterate_word(w, 2)
    assert format_free_word(second) == "Y1 X y1 x Y1 X Y1 x y1 y1"


def test_iterates_of_power():
    assert iterate_word(FreeWord.power(3), 2) == FreeWord.power(9)


def test_iterate_rejects_negative():
    with pytest.raises(ValueError, match="non-negative"):
        iterate_word(FreeWord.commutator(), -1)


@pytest.mark.parametrize(
    ("n", "len_g", "len_h", "expected"),
    [(0, 1, 1, 3), (1, 1, 1, 8), (2, 3, 0, 12), (3, 1, 2, 68)],
    ids=["n0", "n1", "no-y", "n3"],
)
def test_length_bound(n, len_g, len_h, expected):
    assert length_bound(FreeWord.commutator(), n, len_g, [len_h]) == expected


def test_length_bound_errors():
    with pytest.raises(ArityMismatchError, match="lengths of y"):
        length_bound(FreeWord.commutator(), 1, 1, [])
    with pytest.raises(ValueError, match="non-negative"):
        length_bound(FreeWord.commutator(), 1, -1, [1])
    with pytest.raises(IntegerBudgetError):
        length_bound(FreeWord.power(3), 10**6, 1, [])


def test_evaluate_commutator_on_words(growing3):
    g = Word.b(growing3)
    h = parse_word("r0:[1]", growing3)
    value = evaluate(FreeWord.commutator(), g, [h], word_ops(growing3))
    assert value == g.commutator(h)


def test_evaluate_in_abelian_group():
    # every commutator vanishes, x^3 triples
    assert evaluate(iterate_word(FreeWord.commutator(), 3), 4, [5], Z7) == 0
    assert evaluate(FreeWord.power(3), 4, [], Z7) == 5


def test_evaluate_arity_mismatch():
    with pytest.raises(ArityMismatchError, match="y-values"):
        evaluate(FreeWord.commutator(), 1, [], Z7)


@given(
    st.integers(min_value=0, max_value=2),
    st.integers(min_value=0, max_value=6),
    st.integers(min_value=0, max_value=3),
    st.integers(min_value=0, max_value=10**6),
)
def test_iterate_counts_are_bounded(arity, length, n, seed):
    w = _gen_random_free_word(arity, length, seed=seed)
    iterate = iterate_word(w, n)
    assert counts(iterate)[0] <= counts(w)[0] ** n
    # with every generator of length 1 the bound covers the free word itself
    assert len(iterate) <= length_bound(w, n, 1, [1] * arity)
