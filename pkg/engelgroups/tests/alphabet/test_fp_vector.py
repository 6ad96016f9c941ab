import pytest
from hypothesis import given
from hypothesis import strategies as st

from engelgroups.alphabet import (
    FpVector,
    e_length,
    format_vector,
    parse_vector,
    t_length,
    vec_add,
    vec_neg,
    vec_scale,
    vec_sum,
)
from engelgroups.utils.errors import ParseError, ShapeMismatchError


def _vectors(p: int, r: int):
    return st.lists(st.integers(0, p - 1), min_size=r, max_size=r).map(
        lambda values: FpVector.from_dense(p, values)
    )


@pytest.mark.parametrize(
    ["p", "values", "t_len", "e_len"],
    [
        (5, [3, 0], 2, 1),
        (3, [1, 2, 1], 3, 3),
        (7, [0, 0, 0], 0, 0),
    ],
    ids=["p5_one_axis", "p3_all_axes", "zero"],
)
def test_lengths(p, values, t_len, e_len):
    v = FpVector.from_dense(p, values)
    assert t_length(v) == t_len
    assert e_length(v) == e_len


def test_vector_arithmetic():
    assert vec_add(FpVector.from_dense(3, [1, 2]), FpVector.from_dense(3, [2, 1])).is_zero()
    assert vec_neg(FpVector.from_dense(3, [1, 0, 2])) == FpVector.from_dense(3, [2, 0, 1])
    assert vec_scale(FpVector.from_dense(5, [1, 2]), 3) == FpVector.from_dense(5, [3, 1])
    assert vec_sum([], 3, 2) == FpVector.zero(3, 2)


def test_shape_mismatch():
    with pytest.raises(ShapeMismatchError, match="cannot combine"):
        FpVector.zero(3, 2) + FpVector.zero(3, 3)
    with pytest.raises(ShapeMismatchError, match="outside rank"):
        FpVector.basis(3, 2, 2)


@given(_vectors(3, 4), _vectors(3, 4), _vectors(3, 4))
def test_addition_is_an_abelian_group_law(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert a + FpVector.zero(3, 4) == a
    assert (a + (-a)).is_zero()


@given(_vectors(5, 3), st.integers(-20, 20))
def test_scale_matches_repeated_addition(a, k):
    total = FpVector.zero(5, 3)
    for _ in range(k % 5):
        total = total + a
    assert a.scale(k) == total


@given(_vectors(3, 5))
def test_index_encoding(a):
    assert FpVector.from_index(3, 5, a.to_index()) == a


def test_to_index_puts_first_coordinate_on_top():
    assert FpVector.from_dense(3, [1, 0]).to_index() == 3
    assert FpVector.from_dense(3, [0, 2]).to_index() == 2


@pytest.mark.parametrize(
    ["text", "p", "r", "expected"],
    [
        ("[1,1]", 2, 5, (1, 1, 0, 0, 0)),
        ("[ -1, 4 ]", 3, None, (2, 1)),
        ("{0:1,3:2}", 3, 4, (1, 0, 0, 2)),
        ("[]", 3, 2, (0, 0)),
    ],
    ids=["padded", "reduced", "sparse", "empty"],
)
def test_parse_vector(text, p, r, expected):
    assert parse_vector(text, p, r).dense() == expected


def test_parse_vector_errors():
    with pytest.raises(ParseError, match="needs an explicit rank"):
        parse_vector("{0:1}", 3)
    with pytest.raises(ParseError, match="not a vector"):
        parse_vector("(1,2)", 3)
    with pytest.raises(ShapeMismatchError):
        parse_vector("[1,1,1]", 3, 2)


def test_format_vector():
    assert format_vector(FpVector.from_dense(3, [2, 0, 1])) == "[2,0,1]"
    wide = FpVector.from_sparse(3, 40, {1: 2, 39: 1})
    assert format_vector(wide) == "{1:2,39:1}"
    assert parse_vector(format_vector(wide), 3, 40) == wide
