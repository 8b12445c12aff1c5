"""Closed forms for the spanning complex of a uni-cyclic graph ``U(n, m)``.

These never enumerate anything, so they run for any ``3 <= m <= n`` with
exact big-integer output.
"""

from __future__ import annotations

from dataclasses import dataclass

from .binomial import binom
from .errors import BadParams
from .simplicial import FVector
from .sr import HilbertSeries, HVector, assemble_series, normalize

__all__ = [
    "UnicyclicParams",
    "binom",
    "f_closed",
    "f_closed_merged",
    "h_closed",
    "h_closed_branched",
    "hilbert_closed",
]


@dataclass(frozen=True)
class UnicyclicParams:
    n: int
    m: int

    def __post_init__(self):
        if not (isinstance(self.n, int) and isinstance(self.m, int)) or not 3 <= self.m <= self.n:
            raise BadParams(f"need integers 3 <= m <= n, got n={self.n!r}, m={self.m!r}")


def _params(p, m=None) -> UnicyclicParams:
    if isinstance(p, UnicyclicParams):
        return p
    return UnicyclicParams(p, m)


def f_closed(p, m: int | None = None) -> FVector:
    """f-vector of dimension ``n - 2``, branch by branch.

    Every set of fewer than ``m`` edges is a face; from size ``m`` on, the
    sets containing the whole cycle are missing.
    """
    p = _params(p, m)
    n, m = p.n, p.m
    f = []
    for i in range(n - 1):
        if i <= m - 2:
            f.append(binom(n, i + 1))
        else:
            f.append(binom(n, i + 1) - binom(n - m, i - m + 1))
    return FVector(tuple(f))


def f_closed_merged(p, m: int | None = None) -> FVector:
    # the correction term vanishes for i <= m - 2 under the binom convention
    p = _params(p, m)
    n, m = p.n, p.m
    return FVector(tuple(binom(n, i + 1) - binom(n - m, i - m + 1) for i in range(n - 1)))


def h_closed(p, m: int | None = None) -> HVector:
    """Raw h-vector ``h_0..h_{n-1}`` (single merged formula)."""
    p = _params(p, m)
    n, m = p.n, p.m
    h = []
    for k in range(n):
        h.append(
            sum(
                (-1) ** (k - i) * binom(n - 1 - i, k - i) * (binom(n, i) - binom(n - m, i - m))
                for i in range(k + 1)
            )
        )
    return HVector(tuple(h))


def h_closed_branched(p, m: int | None = None) -> HVector:
    """Raw h-vector from the two-case form (``k <= m-1`` / ``k > m-1``)."""
    p = _params(p, m)
    n, m = p.n, p.m
    h = []
    for k in range(n):
        if k <= m - 1:
            h.append(sum((-1) ** (k - i) * binom(n - 1 - i, k - i) * binom(n, i) for i in range(k + 1)))
        else:
            h.append(
                sum(
                    (-1) ** (k - i) * binom(n - 1 - i, k - i) * (binom(n, i) - binom(n - m, i - m))
                    for i in range(k + 1)
                )
            )
    return HVector(tuple(h))


def hilbert_closed(p, m: int | None = None) -> HilbertSeries:
    """``1 + sum_{i<=m-2} C(n,i+1) x^(i+1) + sum_{i>=m-1} [C(n,i+1) - C(n-m,i-m+1)] x^(i+1)``
    with ``x = t / (1 - t)``, normalized."""
    p = _params(p, m)
    n, m = p.n, p.m
    terms = [1]
    terms += [binom(n, i + 1) for i in range(0, m - 1)]
    terms += [binom(n, i + 1) - binom(n - m, i - m + 1) for i in range(m - 1, n - 1)]
    return normalize(assemble_series(terms))
