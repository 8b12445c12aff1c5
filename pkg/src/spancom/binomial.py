"""Binomial coefficient with the zero-outside-the-triangle convention."""

from math import comb

from .errors import NegativeUpper


def binom(a: int, b: int) -> int:
    """``C(a, b)``, taken as 0 when ``b < 0`` or ``b > a``."""
    if a < 0:
        raise NegativeUpper(f"binom upper index must be >= 0, got {a}")
    if b < 0 or b > a:
        return 0
    return comb(a, b)
