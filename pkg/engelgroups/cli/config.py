"""Validated run configuration of one CLI invocation."""
from dataclasses import asdict, dataclass
from typing import Any, Dict, Optional

from ..config import run_defaults
from ..utils.errors import PreconditionViolated

# suites that draw random inputs and therefore need a seed
SAMPLED_SUITES = {
    "fractality",
    "s-to-e",
    "contraction",
    "regular-contraction",
    "separation",
    "vanishing",
    "max-orbit",
    "abelian-wreath",
    "local-checking",
    "gamma3-sections",
    "involution",
    "left-engel",
    "quotient-towers",
    "length-bound",
    "periodicity",
}

# flags that fill suite parameters of the same name
_SCALE_FIELDS = ("level", "depth", "t", "radius", "count", "limit", "iterations", "rank")


@dataclass(frozen=True)
class RunConfig:
    """
    Everything a CLI run depends on. Unset scale fields fall back to the suite
    defaults in ``defaults.yml``.
    """

    command: str
    suite: Optional[str] = None
    sig: Optional[str] = None
    level: Optional[int] = None
    depth: Optional[int] = None
    t: Optional[int] = None
    radius: Optional[int] = None
    count: Optional[int] = None
    limit: Optional[int] = None
    iterations: Optional[int] = None
    rank: Optional[int] = None
    seed: Optional[int] = None
    cap: Optional[int] = None
    budget: Optional[int] = None
    word: Optional[str] = None
    f: Optional[str] = None
    f_prime: Optional[str] = None
    out: Optional[str] = None
    format: str = "jsonl"

    def __post_init__(self):
        for name in ("cap", "budget", "count"):
            value = getattr(self, name)
            if value is not None and value <= 0:
                raise PreconditionViolated(f"--{name} must be positive, got {value}")
        for name in ("level", "depth", "t", "radius", "limit", "iterations"):
            value = getattr(self, name)
            if value is not None and value < 0:
                raise PreconditionViolated(f"--{name} must be non-negative, got {value}")
        if self.rank is not None and self.rank < 1:
            raise PreconditionViolated(f"--rank must be at least 1, got {self.rank}")
        if self.format not in ("jsonl", "csv"):
            raise PreconditionViolated(f"unknown report format {self.format!r}")
        if self.suite in SAMPLED_SUITES and self.seed is None:
            raise PreconditionViolated(f"suite {self.suite!r} samples and needs --seed")

    @property
    def defaults_key(self) -> str:
        return self.suite if self.command == "verify" else self.command

    def resolve(self) -> Dict[str, Any]:
        """Suite defaults overridden by every flag that was given."""
        params = run_defaults.suite(self.defaults_key)
        if self.sig is not None:
            params["sig"] = self.sig
        for name in _SCALE_FIELDS:
            value = getattr(self, name)
            if value is not None:
                params[name] = value
        params["seed"] = self.seed
        params["cap"] = self.cap
        params["budget"] = self.budget
        for name in ("f", "f_prime", "word"):
            if getattr(self, name) is not None:
                params[name] = getattr(self, name)
        return params

    def header(self) -> Dict[str, Any]:
        """The config as written to report headers, with defaults filled in."""
        record = {key: value for key, value in asdict(self).items() if key != "out"}
        record.update(self.resolve())
        return record
