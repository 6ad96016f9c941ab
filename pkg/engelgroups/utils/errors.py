"""Exception types raised across engelgroups.

Each class derives from the builtin matching its failure kind, so callers
can keep catching ``ValueError`` / ``RuntimeError`` / ``OverflowError``.
The CLI turns ``ValueError`` into exit code 2 and the resource errors
(``CapExceededError``, ``BudgetExhausted``, ``IntegerBudgetError``) into 3.
"""


class IntegerBudgetError(OverflowError):
    """A rank or size computation left the configured integer budget."""


class RankTooSmallError(ValueError):
    """The far set is undefined for this rank."""


class ShapeMismatchError(ValueError):
    """Operands live in different groups (prime, rank or level differ)."""


class WrongFamilyError(ValueError):
    """The operation is not defined for this signature family."""


class PreconditionViolated(ValueError):
    """A parameter falls outside the range where a check is meaningful."""


class ArityMismatchError(ValueError):
    """A free word received the wrong number of inputs."""


class NotInBaseError(ValueError):
    """The element has a nontrivial top and is not in the base group."""


class NotStabilizedError(ValueError):
    """The iterate does not stabilize the requested layer."""


class NotInvolutionError(ValueError):
    """The element does not square to the identity."""


class SpecMismatchError(ValueError):
    """Wreath elements belong to different wreath specs."""


class ParseError(ValueError):
    """Malformed text for a vector, signature, word, vertex or spec."""


class CapExceededError(RuntimeError):
    """An enumeration would exceed its cap; sample instead."""


class ConstructionFailed(RuntimeError):
    """A constructed witness failed its own verification."""


class BudgetExhausted(RuntimeError):
    """A closure search ran out of budget before reaching a verdict."""
