import pytest

from engelgroups.alphabet import TreeSignature
from engelgroups.metrics import (
    contraction_check,
    depth_estimate,
    fractality_check,
    max_orbit_check,
    order_check,
    regular_contraction_check,
    s_to_e_check,
    separation_check,
    transitivity_check,
    vanishing_commutator_check,
)
from engelgroups.treeauto import Word, parse_word, triviality
from engelgroups.utils.errors import PreconditionViolated, WrongFamilyError


@pytest.mark.parametrize(
    "sig",
    [
        TreeSignature.growing(3),
        TreeSignature.growing(2),
        TreeSignature.growing(5),
        TreeSignature.regular(3, 5),
    ],
    ids=["growing3", "growing2", "growing5", "regular35"],
)
def test_b_has_order_p(sig):
    report = order_check(sig, depth=4)
    assert report.passed
    assert report.tested == 1


def test_order_on_regular_tree_is_proven(regular35):
    assert order_check(regular35).extra["verdict"] == "Proven"


def test_order_walks_unreduced_sections(mocker, growing3):
    spy = mocker.spy(triviality, "raw_section_at_letter")
    report = order_check(growing3, depth=3)
    assert report.passed
    assert report.extra["verdict"] == "TrivialToDepth"
    # b0^3 at the 3 letters of level 0, then b1^3 at the 5 letters of level 1
    assert spy.call_count == report.extra["sections"] == 8
    assert report.extra["max_depth_checked"] == 3


@pytest.mark.parametrize(
    ("text", "expected"),
    [("", 0), ("b0", 0), ("b0 r0:[1] b0 r0:[2]", 2)],
    ids=["empty", "b", "two-b"],
)
def test_depth_estimate(growing3, text, expected):
    w = parse_word(text, growing3)
    assert depth_estimate(w) == expected


def test_depth_estimate_rejects_small_constant(growing3):
    with pytest.raises(ValueError, match="at least 1"):
        depth_estimate(Word.b(growing3), c=0)


@pytest.mark.parametrize(
    ("p", "n"),
    [(3, 0), (3, 1), (2, 0)],
    ids=["p3-level0", "p3-level1", "p2-level0"],
)
def test_contraction(p, n):
    report = contraction_check(TreeSignature.growing(p), n)
    assert report.mode == "exhaustive"
    assert report.passed
    assert report.max_section_length <= 1


@pytest.mark.integration
def test_contraction_at_level_two(growing3):
    report = contraction_check(growing3, 2, count=2000, seed=0)
    assert report.passed


@pytest.mark.integration
def test_regular_contraction(regular35):
    report = regular_contraction_check(regular35, t=2)
    assert report.passed


def test_regular_contraction_preconditions(growing3, regular35):
    with pytest.raises(WrongFamilyError, match="regular signature"):
        regular_contraction_check(growing3)
    with pytest.raises(PreconditionViolated, match="must lie in"):
        regular_contraction_check(regular35, t=6)


def test_s_to_e(growing3):
    report = s_to_e_check(growing3, 0, radius=3, count=50, seed=0)
    assert report.mode == "sampled"
    assert report.tested == 50
    assert report.passed


def test_separation_precondition(growing3):
    with pytest.raises(PreconditionViolated, match="must satisfy"):
        separation_check(growing3, 2, 3)


def test_separation_at_level_one(growing3):
    report = separation_check(growing3, 1, 1, count=20)
    assert report.mode == "exhaustive"
    assert report.passed


def test_separation_on_regular_tree(regular35):
    report = separation_check(regular35, 0, 2)
    assert report.mode == "exhaustive"
    assert report.tested == 93
    assert report.passed
    assert report.extra["distance_pairs"] > 0


@pytest.mark.integration
def test_separation_at_level_two(growing3):
    report = separation_check(growing3, 2, 2, count=1000, seed=0)
    assert report.passed


def test_vanishing_precondition(growing3):
    with pytest.raises(PreconditionViolated, match="t <="):
        vanishing_commutator_check(growing3, 2, 1)


def test_vanishing_commutators(growing3):
    report = vanishing_commutator_check(growing3, 3, 1, depth=4)
    assert report.mode == "exhaustive"
    assert report.tested == 35
    assert report.passed
    assert report.extra["max_depth_checked"] == 4


def test_vanishing_commutators_regular():
    report = vanishing_commutator_check(TreeSignature.regular(3, 8), 0, 1)
    assert report.passed
    assert report.unknown == 0


@pytest.mark.parametrize("level", [1, 2], ids=["level1", "level2"])
def test_transitivity(growing3, level):
    report = transitivity_check(growing3, level)
    assert report.passed
    assert report.extra["max_orbit_size"] == report.tested


@pytest.mark.integration
def test_transitivity_layer_three(growing3):
    report = transitivity_check(growing3, 3)
    assert report.tested == 2187
    assert report.passed


def test_max_orbit(growing3):
    report = max_orbit_check(growing3, 2, radius=4, count=30, seed=0)
    assert report.passed
    assert report.extra["max_orbit_size"] <= 9


def test_fractality(growing3):
    report = fractality_check(growing3, 1, count=3, seed=0)
    assert report.passed
    # 4 generators at the root, 6 per sampled vertex of layer 1
    assert report.tested == 4 + 3 * 6
