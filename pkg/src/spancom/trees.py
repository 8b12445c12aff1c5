"""Spanning trees: exhaustive enumeration, matrix-tree counting, and the
closed-form tree set of a canonically labelled uni-cyclic graph."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import Disconnected, NotCanonical, TooLarge
from .graph import Graph, UnicyclicGraph, is_connected

ENUMERATION_GUARD = 25


@dataclass(frozen=True)
class SpanningTreeSet:
    ground_size: int
    trees: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        trees = sorted({tuple(sorted(t)) for t in self.trees})
        object.__setattr__(self, "trees", tuple(trees))

    def __len__(self):
        return len(self.trees)

    def __iter__(self):
        return iter(self.trees)

    def as_sets(self) -> set[frozenset[int]]:
        return {frozenset(t) for t in self.trees}


class _RollbackUnionFind:
    """Union by size without path compression, so unions can be undone."""

    def __init__(self, size):
        self.parent = list(range(size))
        self.size = [1] * size
        self.history = []

    def find(self, x):
        while self.parent[x] != x:
            x = self.parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        self.history.append(rb)
        return True

    def undo(self):
        rb = self.history.pop()
        ra = self.parent[rb]
        self.size[ra] -= self.size[rb]
        self.parent[rb] = rb


def _require_connected(g: Graph):
    if not is_connected(g):
        raise Disconnected("graph is not connected")


def enumerate_spanning_trees(g: Graph, guard: int = ENUMERATION_GUARD) -> SpanningTreeSet:
    """All spanning trees of ``g`` as sorted label tuples, in lexicographic order.

    Labels are tried in increasing order and an edge is only taken if it joins
    two components, so every leaf of the search at depth ``n - 1`` is a tree.
    """
    _require_connected(g)
    if g.edge_count > guard:
        raise TooLarge(f"{g.edge_count} edges exceeds the enumeration guard of {guard}")
    n, E = g.vertex_count, g.edge_count
    need = n - 1
    uf = _RollbackUnionFind(n + 1)
    chosen: list[int] = []
    found: list[tuple[int, ...]] = []

    def extend(start):
        if len(chosen) == need:
            found.append(tuple(chosen))
            return
        for label in range(start, E + 1):
            if E - label + 1 < need - len(chosen):
                break
            u, v = g.edge(label)
            if uf.union(u, v):
                chosen.append(label)
                extend(label + 1)
                chosen.pop()
                uf.undo()

    extend(1)
    return SpanningTreeSet(E, tuple(found))


def laplacian(g: Graph) -> list[list[int]]:
    n = g.vertex_count
    L = [[0] * n for _ in range(n)]
    for u, v in g.edges:
        L[u - 1][u - 1] += 1
        L[v - 1][v - 1] += 1
        L[u - 1][v - 1] -= 1
        L[v - 1][u - 1] -= 1
    return L


def bareiss_determinant(matrix: list[list[int]]) -> int:
    """Exact determinant of an integer matrix by fraction-free elimination."""
    A = [list(row) for row in matrix]
    n = len(A)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for r in range(k + 1, n):
                if A[r][k] != 0:
                    A[k], A[r] = A[r], A[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = A[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * pivot - A[i][k] * A[k][j]) // prev
            A[i][k] = 0
        prev = pivot
    return sign * A[n - 1][n - 1]


def count_spanning_trees_kirchhoff(g: Graph) -> int:
    """Spanning-tree count as the determinant of the Laplacian minus row/col 1."""
    _require_connected(g)
    L = laplacian(g)
    reduced = [row[1:] for row in L[1:]]
    return bareiss_determinant(reduced)


def hat_sets(u: UnicyclicGraph) -> list[tuple[int, ...]]:
    """``E \\ {e_i}`` for ``i = 1..m``, in increasing ``i``."""
    E = u.base.edge_count
    return [tuple(x for x in range(1, E + 1) if x != i) for i in range(1, u.m + 1)]


def unicyclic_spanning_trees(u: UnicyclicGraph) -> SpanningTreeSet:
    """Closed-form tree set: drop exactly one cycle edge."""
    if not u.canonical:
        raise NotCanonical("relabel the graph so the cycle uses labels 1..m first")
    return SpanningTreeSet(u.base.edge_count, tuple(hat_sets(u)))
