"""
Command-line front end running the verification suites and experiments.
"""

from .config import SAMPLED_SUITES, RunConfig
from .main import build_parser, cmd_engel_tower, cmd_growth, cmd_verify, exit_code, main
from .suites import SUITES

__all__ = [
    "RunConfig",
    "SAMPLED_SUITES",
    "SUITES",
    "build_parser",
    "cmd_engel_tower",
    "cmd_growth",
    "cmd_verify",
    "exit_code",
    "main",
]
