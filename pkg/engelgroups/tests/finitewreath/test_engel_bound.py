import pytest

from engelgroups.finitewreath import (
    WreathSpec,
    abelian_wreath_check,
    abelian_wreath_report,
    component_exponent,
    component_formula_check,
    engel_bound,
    engel_class_pair,
    enumerate_group,
    verify_engel_bound,
    w_id,
)
from engelgroups.utils.errors import PreconditionViolated, SpecMismatchError


@pytest.mark.parametrize(
    ("spec", "bound"),
    [
        (WreathSpec(2, (1, 1)), 3),
        (WreathSpec(3, (1, 2, 4)), 13),
        (WreathSpec(5, (1,)), 1),
        (WreathSpec(2, ()), 0),
    ],
    ids=["C2wrC2", "growing3-depth3", "C5", "trivial"],
)
def test_engel_bound(spec, bound):
    assert engel_bound(spec) == bound


def test_engel_class_pair():
    spec = WreathSpec(2, (1, 1))
    elements = list(enumerate_group(spec))
    e = w_id(spec)
    assert all(engel_class_pair(g, e, 3) == 1 for g in elements)
    classes = {engel_class_pair(g, h, 3) for g in elements for h in elements}
    assert classes == {1, 2}
    with pytest.raises(SpecMismatchError):
        engel_class_pair(e, w_id(WreathSpec(3, (1,))), 3)


@pytest.mark.parametrize(
    ("spec", "largest"),
    [(WreathSpec(2, (1, 1)), 2), (WreathSpec(2, ()), 1), (WreathSpec(3, (1,)), 1)],
    ids=["C2wrC2", "trivial", "C3"],
)
def test_verify_engel_bound(spec, largest):
    report = verify_engel_bound(spec)
    assert report.passed
    assert report.tested == spec.order() ** 2
    assert report.extra["max_engel_class"] == largest
    assert report.extra["bound"] == engel_bound(spec)


@pytest.mark.integration
@pytest.mark.parametrize(
    "spec",
    [WreathSpec(3, (1, 1)), WreathSpec(2, (1, 1, 1))],
    ids=["C3wrC3", "C2wrC2wrC2"],
)
def test_verify_engel_bound_larger_groups(spec):
    report = verify_engel_bound(spec)
    assert report.passed
    assert report.extra["max_engel_class"] <= engel_bound(spec)


@pytest.mark.parametrize(
    ("p", "rank", "r", "g", "h"),
    [
        (3, 1, 1, [1, 0, 0], [0, 0, 0]),
        (3, 1, 1, [1, 2, 0], [2, 1, 1]),
        (2, 2, 2, [[1, 0], [0, 1], [1, 1], [0, 0]], [[1, 1], [0, 0], [0, 1], [1, 0]]),
    ],
    ids=["single", "dense", "rank2-r2"],
)
def test_abelian_wreath_identity(p, rank, r, g, h):
    assert abelian_wreath_check(p, rank, r, g, h)


def test_abelian_wreath_shape():
    with pytest.raises(PreconditionViolated, match="shape"):
        abelian_wreath_check(3, 1, 1, [1, 0], [0, 0, 0])
    with pytest.raises(PreconditionViolated, match="rank >= 1"):
        abelian_wreath_check(3, 0, 1, [], [])


@pytest.mark.parametrize(
    ("n", "x", "m", "p", "expected"),
    [(0, 0, 3, 3, 1), (0, 1, 3, 3, 0), (1, 0, 3, 3, 2), (1, 1, 3, 3, 1), (3, 0, 3, 3, 0)],
    ids=["n0-x0", "n0-x1", "n1-x0", "n1-x1", "n3-vanishes"],
)
def test_component_exponent(n, x, m, p, expected):
    assert component_exponent(n, x, m, p) == expected


def test_literal_component_form_differs_by_sign():
    # odd n inverts g
    assert component_exponent(1, 0, 3, 3, literal=True) == 1
    assert component_exponent(2, 1, 3, 3, literal=True) == component_exponent(2, 1, 3, 3)


@pytest.mark.parametrize("n", range(5))
@pytest.mark.parametrize("x", range(3))
def test_component_formula(n, x):
    assert component_formula_check(3, 1, [1], n, x)
    assert component_formula_check(3, 1, [2, 1], n, x)


def test_abelian_wreath_report_exhaustive():
    report = abelian_wreath_report(2, 1, 1)
    assert report.mode == "exhaustive"
    assert report.tested == 16
    assert report.passed
    assert report.sig == "C_2^1 wr C_2"


def test_abelian_wreath_report_sampled():
    report = abelian_wreath_report(3, 1, 1, count=50, seed=0, cap=100)
    assert report.mode == "sampled"
    assert report.tested == 50
    assert report.passed
    with pytest.raises(ValueError, match="give count and seed"):
        abelian_wreath_report(3, 1, 1, cap=100)
