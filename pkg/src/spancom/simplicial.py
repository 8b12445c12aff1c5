"""Facet-presented simplicial complexes on a labelled ground set ``[N]``.

Faces are handed out as sorted label tuples. Internally a face is a bitmask
with bit ``i - 1`` standing for label ``i``; anything that walks every face
refuses to run once ``N`` exceeds :data:`FACE_GUARD`.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from functools import cached_property
from itertools import permutations
from typing import Iterable, Sequence

from .errors import EmptyInput, LabelOutOfRange, NotPermutation, NotPure, TooLarge
from .graph import Graph
from .trees import ENUMERATION_GUARD, enumerate_spanning_trees

FACE_GUARD = 25
EXHAUSTIVE_SHELLING_LIMIT = 8

Face = tuple[int, ...]


def to_mask(labels: Iterable[int]) -> int:
    mask = 0
    for x in labels:
        mask |= 1 << (x - 1)
    return mask


def from_mask(mask: int) -> Face:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def _submasks(mask: int):
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


@dataclass(frozen=True)
class FVector:
    entries: tuple[int, ...]

    @property
    def dim(self) -> int:
        return len(self.entries) - 1

    def __getitem__(self, i):
        return self.entries[i]

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def with_empty_face(self) -> tuple[int, ...]:
        """``(f_{-1}, f_0, ..., f_d)`` with ``f_{-1} = 1``."""
        return (1,) + self.entries


@dataclass(frozen=True)
class SimplicialComplex:
    ground_size: int
    facets: tuple[Face, ...]

    @property
    def dim(self) -> int:
        return max(len(F) for F in self.facets) - 1

    @property
    def is_pure(self) -> bool:
        return len({len(F) for F in self.facets}) == 1

    @property
    def unused(self) -> tuple[int, ...]:
        """Ground labels that lie in no facet."""
        used = set().union(*self.facets)
        return tuple(x for x in range(1, self.ground_size + 1) if x not in used)

    @cached_property
    def facet_masks(self) -> tuple[int, ...]:
        return tuple(to_mask(F) for F in self.facets)

    @cached_property
    def face_masks(self) -> frozenset[int]:
        _guard(self)
        faces: set[int] = set()
        for fm in self.facet_masks:
            if fm in faces:
                continue
            faces.update(_submasks(fm))
        return frozenset(faces)

    def has_mask(self, mask: int) -> bool:
        return any(fm & mask == mask for fm in self.facet_masks)


def _guard(c: SimplicialComplex):
    if c.ground_size > FACE_GUARD:
        raise TooLarge(f"ground set of size {c.ground_size} exceeds guard {FACE_GUARD}")


def _check_labels(N: int, labels: Iterable[int]):
    for x in labels:
        if not 1 <= x <= N:
            raise LabelOutOfRange(f"label {x} outside 1..{N}")


def from_facets(N: int, candidate_facets: Iterable[Iterable[int]]) -> SimplicialComplex:
    """Complex generated by the candidates, keeping only inclusion-maximal ones."""
    masks = set()
    for cand in candidate_facets:
        cand = tuple(cand)
        _check_labels(N, cand)
        masks.add(to_mask(cand))
    masks.discard(0)
    if not masks:
        raise EmptyInput("need at least one nonempty candidate facet")
    # a dominated mask is a proper subset of some longer one
    ordered = sorted(masks, key=int.bit_count, reverse=True)
    kept: list[int] = []
    for m in ordered:
        if not any(k & m == m for k in kept):
            kept.append(m)
    facets = sorted(from_mask(m) for m in kept)
    return SimplicialComplex(N, tuple(facets))


def spanning_complex(g: Graph) -> SimplicialComplex:
    """The complex on the edge labels of ``g`` whose facets are its spanning trees."""
    trees = enumerate_spanning_trees(g, guard=ENUMERATION_GUARD)
    return from_facets(g.edge_count, trees.trees)


def contains_face(c: SimplicialComplex, face: Iterable[int]) -> bool:
    face = tuple(face)
    _check_labels(c.ground_size, face)
    return c.has_mask(to_mask(face))


def faces_of_dim(c: SimplicialComplex, i: int) -> list[Face]:
    if i == -1:
        return [()]
    size = i + 1
    return sorted(from_mask(m) for m in c.face_masks if m.bit_count() == size)


def f_vector(c: SimplicialComplex) -> FVector:
    counts = [0] * (c.dim + 1)
    for m in c.face_masks:
        k = m.bit_count()
        if k:
            counts[k - 1] += 1
    return FVector(tuple(counts))


def minimal_nonfaces(c: SimplicialComplex) -> list[Face]:
    """Inclusion-minimal non-faces, i.e. supports of the Stanley-Reisner generators.

    Every minimal non-face is a face plus one extra label, so it suffices to
    try each face extended by each label it misses.
    """
    faces = c.face_masks
    N = c.ground_size
    found: set[int] = set()
    for fm in faces:
        for x in range(N):
            bit = 1 << x
            if fm & bit:
                continue
            S = fm | bit
            if S in faces or S in found:
                continue
            if all((S & ~(1 << y)) in faces for y in range(N) if S >> y & 1):
                found.add(S)
    return sorted((from_mask(m) for m in found), key=lambda F: (len(F), F))


def _faces_in_scan_order(c: SimplicialComplex) -> list[Face]:
    return sorted((from_mask(m) for m in c.face_masks), key=lambda F: (len(F), F))


def is_shifted(c: SimplicialComplex) -> tuple[bool, tuple[Face, int, int] | None]:
    """Check the shifting condition on every face.

    Returns ``(True, None)`` or ``(False, (F, i, j))`` where ``F`` is a face,
    ``i`` in ``F``, ``j > i`` not in ``F`` and ``(F - {i}) | {j}`` is not a
    face. Faces are scanned by size, then lexicographically.
    """
    faces = c.face_masks
    N = c.ground_size
    for F in _faces_in_scan_order(c):
        fm = to_mask(F)
        for i in F:
            base = fm & ~(1 << (i - 1))
            for j in range(i + 1, N + 1):
                bit = 1 << (j - 1)
                if fm & bit:
                    continue
                if base | bit not in faces:
                    return False, (F, i, j)
    return True, None


# -- shelling ---------------------------------------------------------------


def _check_order(c: SimplicialComplex, order: Sequence[Iterable[int]]) -> list[int]:
    if not c.is_pure:
        raise NotPure("shelling is only defined here for pure complexes")
    masks = [to_mask(tuple(F)) for F in order]
    if sorted(masks) != sorted(c.facet_masks):
        raise NotPermutation("order must list every facet exactly once")
    return masks


def _step_ok_union(prev: Sequence[int], fm: int) -> bool:
    # facets of (F_k ∩ union of predecessors) must all have codimension 1 in F_k
    if not prev:
        return True
    inters = {fm & p for p in prev}
    maximal = [a for a in inters if not any(a != b and a & b == a for b in inters)]
    target = fm.bit_count() - 1
    return all(a.bit_count() == target for a in maximal)


def _step_ok_pairs(prev: Sequence[int], fm: int) -> bool:
    near = [fm & p for p in prev if (fm & ~p).bit_count() == 1]
    for p in prev:
        a = fm & p
        if not any(a & b == a for b in near):
            return False
    return True


_STEP_TESTS = {"union": _step_ok_union, "pairs": _step_ok_pairs}


def is_shelling_order(
    c: SimplicialComplex, order: Sequence[Iterable[int]], method: str = "pairs"
) -> bool:
    """Whether ``order`` (a permutation of the facets) is a shelling.

    ``method="union"`` tests that each facet meets the union of its
    predecessors in a pure codimension-one subcomplex; ``method="pairs"``
    uses the equivalent pairwise exchange condition.
    """
    step = _STEP_TESTS[method]
    masks = _check_order(c, order)
    return all(step(masks[:k], masks[k]) for k in range(1, len(masks)))


def find_shelling_order(c: SimplicialComplex) -> list[Face] | None:
    """A shelling order of a pure complex, or None.

    Up to :data:`EXHAUSTIVE_SHELLING_LIMIT` facets the search is exhaustive,
    so None means the complex is not shellable. Past that a single greedy pass
    is made and None only means none was found.
    """
    if not c.is_pure:
        raise NotPure("shelling is only defined here for pure complexes")
    masks = list(c.facet_masks)
    if len(masks) > EXHAUSTIVE_SHELLING_LIMIT:
        order = _greedy_shelling(masks)
    else:
        order = _backtrack_shelling(masks)
    return None if order is None else [from_mask(m) for m in order]


def is_shellable(c: SimplicialComplex) -> bool | None:
    """True, False, or None when the greedy fallback could not decide."""
    order = find_shelling_order(c)
    if order is not None:
        return True
    return False if len(c.facets) <= EXHAUSTIVE_SHELLING_LIMIT else None


def _greedy_shelling(masks):
    order = []
    remaining = list(masks)
    while remaining:
        for idx, fm in enumerate(remaining):
            if _step_ok_pairs(order, fm):
                order.append(remaining.pop(idx))
                break
        else:
            return None
    return order


def _backtrack_shelling(masks):
    used = [False] * len(masks)
    order: list[int] = []

    def extend():
        if len(order) == len(masks):
            return True
        for idx, fm in enumerate(masks):
            if used[idx] or not _step_ok_pairs(order, fm):
                continue
            used[idx] = True
            order.append(fm)
            if extend():
                return True
            order.pop()
            used[idx] = False
        return False

    return order if extend() else None


def shelling_permutations(c: SimplicialComplex, limit: int, seed: int = 0):
    """Up to ``limit`` distinct facet orders: all of them when there are few
    enough, otherwise a seeded sample."""
    facets = list(c.facets)
    q = len(facets)
    if math.factorial(q) <= limit:
        return [list(p) for p in permutations(facets)]
    rng = random.Random(seed)
    seen: set[tuple] = set()
    out = []
    while len(out) < limit:
        p = facets[:]
        rng.shuffle(p)
        key = tuple(p)
        if key not in seen:
            seen.add(key)
            out.append(p)
    return out


def full_simplex(N: int) -> SimplicialComplex:
    return SimplicialComplex(N, (tuple(range(1, N + 1)),))

