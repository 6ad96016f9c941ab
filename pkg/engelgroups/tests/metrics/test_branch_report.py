import pytest

from engelgroups.alphabet import FpVector, TreeSignature
from engelgroups.metrics import ContractionReport, VerificationReport, gamma3_section_check
from engelgroups.metrics.branch import expected_sections, gamma3_base_level
from engelgroups.utils.errors import PreconditionViolated, ShapeMismatchError, WrongFamilyError


@pytest.mark.parametrize(
    ("sig", "level", "expected"),
    [
        (TreeSignature.growing(3), 0, 2),
        (TreeSignature.growing(3), 1, 3),
        (TreeSignature.regular(3, 5), 0, 0),
    ],
    ids=["growing-0", "growing-1", "regular"],
)
def test_gamma3_base_level(sig, level, expected):
    assert gamma3_base_level(sig, level) == expected


def test_gamma3_base_level_rejects_explicit_trees():
    with pytest.raises(WrongFamilyError, match="growing or regular"):
        gamma3_base_level(TreeSignature.explicit(3, (1, 2)), 0)


def test_gamma3_labels_are_checked(growing3):
    zero = FpVector.zero(3, 4)
    with pytest.raises(PreconditionViolated, match="label set"):
        gamma3_section_check(growing3, f=zero, f_prime=zero)
    with pytest.raises(PreconditionViolated, match="beyond level"):
        gamma3_section_check(growing3, level=2)


def test_expected_sections_cover_three_letters(growing3):
    f = FpVector.from_dense(3, (1, 1, 1, 1))
    f_prime = FpVector.from_dense(3, (2, 1, 1, 1))
    letters = [x for x, _ in expected_sections(growing3, 2, f, f_prime)]
    assert letters == [FpVector.zero(3, 4), -f, -f_prime]
    # equal labels collapse to two letters
    assert len(list(expected_sections(growing3, 2, f, f))) == 2


def test_gamma3_equal_labels(growing3):
    f = FpVector.from_dense(3, (1, 2, 1, 2))
    report = gamma3_section_check(growing3, f=f, f_prime=f)
    assert report.mode == "exhaustive"
    assert report.tested == 1
    assert report.passed


def test_gamma3_sampled_pairs(growing3):
    report = gamma3_section_check(growing3, count=5, seed=3)
    assert report.mode == "sampled"
    assert report.seed == 3
    assert report.tested == 5
    assert report.passed


@pytest.mark.integration
def test_gamma3_hundred_pairs(growing3):
    assert gamma3_section_check(growing3, count=100, seed=0).passed


def _report(**kwargs):
    return VerificationReport("separation", "growing:p=3", 2, 1, "sampled", 0, **kwargs)


def test_report_merge():
    left = _report(tested=3, extra={"max_depth": 2, "pairs": 4, "notes": ["a"]})
    right = _report(tested=5, unknown=1, extra={"max_depth": 5, "pairs": 1, "notes": ["b"]})
    right.add_violation(word="b2", length=3)
    merged = left.merge(right)
    assert merged.tested == 8
    assert merged.unknown == 1
    assert merged.violations == [{"word": "b2", "length": 3}]
    assert merged.extra == {"max_depth": 5, "pairs": 5, "notes": ["a", "b"]}
    assert not merged.passed
    assert left.tested == 3


def test_report_merge_rejects_other_configuration():
    other = VerificationReport("separation", "growing:p=3", 3, 1, "sampled", 0)
    with pytest.raises(ShapeMismatchError, match="cannot merge"):
        _report().merge(other)


def test_contraction_report_merge_keeps_longest_section():
    left = ContractionReport("contraction", "growing:p=3", 1, 2, max_section_length=1)
    right = ContractionReport("contraction", "growing:p=3", 1, 2, max_section_length=0)
    merged = left.merge(right)
    assert isinstance(merged, ContractionReport)
    assert merged.max_section_length == 1
    assert merged.to_record()["max_section_length"] == 1


def test_report_record_is_plain():
    report = _report(tested=2)
    report.add_violation(letter=FpVector.from_dense(3, (1, 2)), pair=(1, None))
    report.observe_max("max_orbit_size", 4)
    report.observe_max("max_orbit_size", 3)
    record = report.to_record()
    assert record["check"] == "separation"
    assert record["passed"] is False
    letter = str(FpVector.from_dense(3, (1, 2)))
    assert record["violations"] == [{"letter": letter, "pair": [1, None]}]
    assert record["max_orbit_size"] == 4


def test_report_case_key_orders_missing_fields_first():
    keys = sorted(
        [
            VerificationReport("order", "growing:p=3", 0).case_key,
            VerificationReport("order", "growing:p=3", None).case_key,
        ]
    )
    assert keys[0][2] == -1
