"""Verification reports and their line-delimited records."""
from dataclasses import dataclass, field, replace
from typing import Any, Dict, List, Optional

from ..utils.errors import ShapeMismatchError


def _merge_extra(left: Dict[str, Any], right: Dict[str, Any]) -> Dict[str, Any]:
    merged = dict(left)
    for key, value in right.items():
        if key not in merged:
            merged[key] = value
        elif isinstance(value, list) and isinstance(merged[key], list):
            merged[key] = merged[key] + value
        elif isinstance(value, int) and isinstance(merged[key], int):
            merged[key] = max(merged[key], value) if key.startswith("max") else merged[key] + value
    return merged


@dataclass
class VerificationReport:
    """Outcome of one check at one configuration.

    ``violations`` holds one mapping per counterexample; ``unknown`` counts
    cases left undecided by a budget. ``extra`` carries observed statistics:
    integer entries named ``max_*`` merge by maximum, other integers by sum,
    lists by concatenation.
    """

    check: str
    sig: str
    n: Optional[int] = None
    t: Optional[int] = None
    mode: str = "exhaustive"
    seed: Optional[int] = None
    tested: int = 0
    violations: List[Dict[str, Any]] = field(default_factory=list)
    unknown: int = 0
    extra: Dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.violations and not self.unknown

    def add_violation(self, **details) -> None:
        self.violations.append({key: _plain(value) for key, value in details.items()})

    def note(self, message: str) -> None:
        self.extra.setdefault("notes", []).append(message)

    def observe_max(self, key: str, value: int) -> None:
        self.extra[key] = max(self.extra.get(key, value), value)

    def _check_mergeable(self, other: "VerificationReport") -> None:
        mine = (self.check, self.sig, self.n, self.t, self.mode, self.seed)
        theirs = (other.check, other.sig, other.n, other.t, other.mode, other.seed)
        if mine != theirs:
            raise ShapeMismatchError(f"cannot merge reports {mine} and {theirs}")

    def merge(self, other: "VerificationReport") -> "VerificationReport":
        """Combine reports of the same configuration over disjoint inputs."""
        self._check_mergeable(other)
        return replace(
            self,
            tested=self.tested + other.tested,
            violations=self.violations + other.violations,
            unknown=self.unknown + other.unknown,
            extra=_merge_extra(self.extra, other.extra),
        )

    @property
    def case_key(self) -> tuple:
        return (self.check, self.sig, self.n if self.n is not None else -1, self.t or 0)

    def to_record(self) -> Dict[str, Any]:
        return {
            "check": self.check,
            "sig": self.sig,
            "n": self.n,
            "t": self.t,
            "mode": self.mode,
            "seed": self.seed,
            "tested": self.tested,
            "violations": list(self.violations),
            "unknown": self.unknown,
            "passed": self.passed,
            **{key: _plain(value) for key, value in sorted(self.extra.items())},
        }


@dataclass
class ContractionReport(VerificationReport):
    """A report that also tracks the longest section seen."""

    max_section_length: int = 0

    def merge(self, other: "ContractionReport") -> "ContractionReport":
        merged = super().merge(other)
        merged.max_section_length = max(self.max_section_length, other.max_section_length)
        return merged

    def to_record(self) -> Dict[str, Any]:
        record = super().to_record()
        record["max_section_length"] = self.max_section_length
        return record


def _plain(value: Any) -> Any:
    """Reduce values to JSON-friendly types; package objects print in their text formats."""
    if value is None or isinstance(value, (bool, int, float, str)):
        return value
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    return str(value)
