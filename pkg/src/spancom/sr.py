"""Exact Hilbert-series arithmetic for Stanley-Reisner rings.

Polynomials in ``t`` are dense lists of Python ints, lowest degree first.
Nothing here touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .binomial import binom
from .errors import ZeroNumerator
from .simplicial import FVector, SimplicialComplex

Poly = list[int]


def strip(p: Sequence[int]) -> Poly:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def poly_add(p: Sequence[int], q: Sequence[int]) -> Poly:
    out = [0] * max(len(p), len(q))
    for i, a in enumerate(p):
        out[i] += a
    for i, b in enumerate(q):
        out[i] += b
    return out


def poly_mul(p: Sequence[int], q: Sequence[int]) -> Poly:
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return out


def one_minus_t_pow(k: int) -> Poly:
    return [(-1) ** j * binom(k, j) for j in range(k + 1)]


def evaluate_at_one(p: Sequence[int]) -> int:
    return sum(p)


def divide_one_minus_t(p: Sequence[int]) -> Poly:
    """Exact quotient ``p / (1 - t)``; requires ``p(1) == 0``."""
    if evaluate_at_one(p) != 0:
        raise ValueError("polynomial is not divisible by (1 - t)")
    # (1 - t) q = p  gives  q_k = p_0 + ... + p_k
    q, acc = [], 0
    for a in p[:-1]:
        acc += a
        q.append(acc)
    return q


@dataclass(frozen=True)
class HVector:
    entries: tuple[int, ...]

    def normalized(self) -> "HVector":
        return HVector(tuple(strip(self.entries)))

    def __getitem__(self, k):
        return self.entries[k]

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)


@dataclass(frozen=True)
class HilbertSeries:
    """``numerator(t) / (1 - t) ** pole_order``."""

    numerator: tuple[int, ...]
    pole_order: int

    @property
    def h_vector(self) -> HVector:
        return HVector(self.numerator)


def h_from_f(f: FVector, d: int | None = None) -> HVector:
    """Raw h-vector ``h_0..h_{d+1}`` of a ``d``-dimensional complex.

    ``h_k = sum_i (-1)^(k-i) C(d+1-i, k-i) f_{i-1}`` with ``f_{-1} = 1``.
    Trailing zeros are kept.
    """
    if d is None:
        d = f.dim
    fe = f.with_empty_face()  # fe[i] == f_{i-1}
    h = []
    for k in range(d + 2):
        h.append(sum((-1) ** (k - i) * binom(d + 1 - i, k - i) * fe[i] for i in range(k + 1)))
    return HVector(tuple(h))


def assemble_series(terms: Sequence[int]) -> HilbertSeries:
    """``sum_i terms[i] t^i / (1 - t)^i`` over the common denominator, unnormalized.

    ``terms[0]`` is the constant term (``f_{-1} = 1`` for a complex).
    """
    D = len(terms) - 1
    num: Poly = []
    for i, c in enumerate(terms):
        if c:
            term = [0] * i + [c]
            num = poly_add(num, poly_mul(term, one_minus_t_pow(D - i)))
    return HilbertSeries(tuple(strip(num)), D)


def normalize(series: HilbertSeries) -> HilbertSeries:
    """Cancel every common factor of ``(1 - t)`` between numerator and denominator."""
    num = strip(series.numerator)
    if not num:
        raise ZeroNumerator("Hilbert series numerator is identically zero")
    D = series.pole_order
    while D > 0 and evaluate_at_one(num) == 0:
        num = strip(divide_one_minus_t(num))
        D -= 1
    return HilbertSeries(tuple(num), D)


def series_from_f(f: FVector) -> HilbertSeries:
    """``1 + sum_i f_i t^(i+1) / (1 - t)^(i+1)``, normalized."""
    return normalize(assemble_series(f.with_empty_face()))


def expand_series(series: HilbertSeries, J: int) -> list[int]:
    """Power-series coefficients of ``t^0 .. t^J``."""
    D = series.pole_order
    num = series.numerator
    out = []
    for j in range(J + 1):
        if D == 0:
            out.append(num[j] if j < len(num) else 0)
            continue
        out.append(sum(a * binom(j - k + D - 1, D - 1) for k, a in enumerate(num[: j + 1])))
    return out


def hilbert_function_direct(c: SimplicialComplex, j: int) -> int:
    """Number of degree-``j`` monomials whose support is a face of ``c``.

    A face with ``s`` elements carries ``C(j-1, s-1)`` monomials of degree
    ``j`` using every one of its variables.
    """
    if j == 0:
        return 1
    return sum(binom(j - 1, m.bit_count() - 1) for m in c.face_masks if m)
