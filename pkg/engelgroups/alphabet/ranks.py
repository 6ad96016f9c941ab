"""Checked integer functions that generate the rank sequences of the level alphabets."""
import math
from typing import Optional

from ..config import run_defaults
from ..utils.errors import IntegerBudgetError


def _budget_bits(budget_bits: Optional[int]) -> int:
    if budget_bits is None:
        budget_bits = run_defaults.get("arithmetic", "integer_budget_bits")
    if budget_bits < 1:
        raise ValueError(f"integer budget must be positive, got {budget_bits}")
    return budget_bits


def _guard_bits(bits: int, budget_bits: int, what: str) -> None:
    if bits > budget_bits:
        raise IntegerBudgetError(
            f"{what} needs about {bits} bits, above the integer budget of {budget_bits} bits"
        )


def tetr(base: int, m: int, budget_bits: Optional[int] = None) -> int:
    """Tetration: ``tetr(n, 0) = 1`` and ``tetr(n, m + 1) = n ** tetr(n, m)``.

    Parameters
    ----------
    base : int
        Base of the tower, at least 2
    m : int
        Height of the tower, non-negative
    budget_bits : int, optional
        Largest admissible bit length of the result; defaults to
        ``arithmetic.integer_budget_bits``

    Returns
    -------
    int

    Raises
    ------
    IntegerBudgetError
        If the value would exceed the budget
    """
    if base < 2:
        raise ValueError(f"tetration base must be at least 2, got {base}")
    if m < 0:
        raise ValueError(f"tetration height must be non-negative, got {m}")
    budget = _budget_bits(budget_bits)
    value = 1
    for step in range(m):
        # bit length of base**value is about value*log2(base)
        if value.bit_length() > 64:
            _guard_bits(budget + 1, budget, f"tetr({base}, {step + 1})")
        _guard_bits(math.floor(value * math.log2(base)) + 1, budget, f"tetr({base}, {step + 1})")
        value = base**value
    return value


def iter_binom(n0: int, m: int, k: int, budget_bits: Optional[int] = None) -> int:
    """Iterated binomial: ``iter_binom(n0, m, 0) = n0`` and ``C(iter_binom(k - 1), m)`` after.

    Parameters
    ----------
    n0 : int
        Starting value, larger than ``m``
    m : int
        Lower binomial argument, at least 1
    k : int
        Number of iterations
    budget_bits : int, optional
        Largest admissible bit length of the result

    Returns
    -------
    int
    """
    if not n0 > m >= 1:
        raise ValueError(f"iter_binom needs n0 > m >= 1, got n0={n0}, m={m}")
    if k < 0:
        raise ValueError(f"iteration count must be non-negative, got {k}")
    budget = _budget_bits(budget_bits)
    value = n0
    for step in range(k):
        _guard_bits(m * value.bit_length(), budget, f"iter_binom({n0}, {m}, {step + 1})")
        value = math.comb(value, m)
    return value


def checked_pow(base: int, exponent: int, budget_bits: Optional[int] = None) -> int:
    """``base ** exponent`` behind the same overflow guard."""
    budget = _budget_bits(budget_bits)
    if base in (0, 1) or exponent == 0:
        return base**exponent
    if exponent.bit_length() > 64:
        _guard_bits(budget + 1, budget, f"{base}**{exponent}")
    _guard_bits(math.floor(exponent * math.log2(abs(base))) + 1, budget, f"{base}**{exponent}")
    return base**exponent


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % q for q in range(2, math.isqrt(p) + 1))
