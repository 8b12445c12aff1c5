"""Simple graphs with positional edge labels, and uni-cyclic graphs.

Edge ``k`` (1-based) is the ``k``-th entry of ``Graph.edges``. Every complex
built elsewhere in the package lives on these labels, never on vertex pairs.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    BadAttachment,
    BadCycleLength,
    DuplicateEdge,
    NotUnicyclic,
    ParseError,
    SelfLoop,
    VertexOutOfRange,
)

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    vertex_count: int
    edges: tuple[Edge, ...]

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def labels(self) -> range:
        return range(1, len(self.edges) + 1)

    def edge(self, label: int) -> Edge:
        return self.edges[label - 1]

    def adjacency(self) -> dict[int, list[tuple[int, int]]]:
        """Map each vertex to its ``(neighbour, edge label)`` pairs."""
        adj: dict[int, list[tuple[int, int]]] = {v: [] for v in range(1, self.vertex_count + 1)}
        for label, (u, v) in enumerate(self.edges, start=1):
            adj[u].append((v, label))
            adj[v].append((u, label))
        return adj


@dataclass(frozen=True)
class UnicyclicGraph:
    base: Graph
    cycle_length: int
    cycle_edge_labels: frozenset[int]
    canonical: bool

    @property
    def n(self) -> int:
        return self.base.vertex_count

    @property
    def m(self) -> int:
        return self.cycle_length


def build_graph(n: int, pairs: Iterable[Sequence[int]]) -> Graph:
    """Build a simple graph on vertices ``1..n``; labels follow list order."""
    if n < 1:
        raise VertexOutOfRange(f"vertex count must be positive, got {n}")
    edges: list[Edge] = []
    seen: set[Edge] = set()
    for pair in pairs:
        u, v = (int(x) for x in pair)
        if not (1 <= u <= n and 1 <= v <= n):
            raise VertexOutOfRange(f"edge ({u}, {v}) outside vertices 1..{n}")
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}")
        e = (u, v) if u < v else (v, u)
        if e in seen:
            raise DuplicateEdge(f"edge {e} appears twice")
        seen.add(e)
        edges.append(e)
    return Graph(n, tuple(edges))


def is_connected(g: Graph) -> bool:
    adj = g.adjacency()
    seen = {1}
    queue = deque([1])
    while queue:
        v = queue.popleft()
        for w, _ in adj[v]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == g.vertex_count


def find_unique_cycle(g: Graph) -> frozenset[int]:
    """Return the edge labels of the only cycle of a uni-cyclic graph.

    Leaves are stripped repeatedly; whatever survives is the cycle.
    """
    if g.edge_count != g.vertex_count or not is_connected(g):
        raise NotUnicyclic(
            f"need a connected graph with |E| = n, got n={g.vertex_count}, |E|={g.edge_count}"
        )
    adj = g.adjacency()
    degree = {v: len(nbrs) for v, nbrs in adj.items()}
    removed_edges: set[int] = set()
    leaves = deque(v for v, d in degree.items() if d == 1)
    while leaves:
        v = leaves.popleft()
        for w, label in adj[v]:
            if label in removed_edges:
                continue
            removed_edges.add(label)
            degree[w] -= 1
            if degree[w] == 1:
                leaves.append(w)
    return frozenset(label for label in g.labels if label not in removed_edges)


def as_unicyclic(g: Graph) -> UnicyclicGraph:
    """Wrap ``g`` as a :class:`UnicyclicGraph` without relabelling."""
    cycle = find_unique_cycle(g)
    m = len(cycle)
    return UnicyclicGraph(g, m, cycle, cycle == frozenset(range(1, m + 1)))


def make_unicyclic(n: int, m: int, attachment: Sequence[int] = ()) -> UnicyclicGraph:
    """Cycle on vertices ``1..m`` plus trees hanging off it.

    New vertex ``m + k`` (``k`` counted from 1) is joined to ``attachment[k-1]``,
    which must already exist. Edges ``1..m`` are the cycle, so the result is
    canonical.
    """
    if m < 3 or m > n:
        raise BadCycleLength(f"need 3 <= m <= n, got n={n}, m={m}")
    if len(attachment) != n - m:
        raise BadAttachment(f"expected {n - m} parent indices, got {len(attachment)}")
    pairs = [(i, i + 1) for i in range(1, m)] + [(m, 1)]
    for k, parent in enumerate(attachment, start=1):
        if not 1 <= parent <= m + k - 1:
            raise BadAttachment(f"vertex {m + k} cannot attach to {parent}")
        pairs.append((m + k, parent))
    g = build_graph(n, pairs)
    return UnicyclicGraph(g, m, frozenset(range(1, m + 1)), True)


def attachment_shape(n: int, m: int, shape: str) -> list[int]:
    """Parent vector for a named shape: ``chain``, ``star`` or ``seed:<k>``."""
    count = n - m
    if shape == "chain":
        return [1] + [m + k - 1 for k in range(2, count + 1)] if count else []
    if shape == "star":
        return [1] * count
    if shape.startswith("seed:"):
        try:
            seed = int(shape[5:])
        except ValueError:
            raise BadAttachment(f"bad seed in {shape!r}") from None
        rng = random.Random(seed)
        return [rng.randint(1, m + k - 1) for k in range(1, count + 1)]
    raise BadAttachment(f"unknown attachment shape {shape!r}")


def _cycle_walk(g: Graph, cycle: frozenset[int]) -> list[int]:
    # start at the smallest label, step first towards the smaller neighbour
    start = min(cycle)
    u, v = g.edge(start)
    at = {}
    for label in cycle:
        for x in g.edge(label):
            at.setdefault(x, []).append(label)
    nbrs = [lab for x in (u, v) for lab in at[x] if lab != start]
    first = min(nbrs)
    walk = [start, first]
    shared = u if u in g.edge(first) else v
    tip = next(x for x in g.edge(first) if x != shared)
    while len(walk) < len(cycle):
        nxt = next(lab for lab in at[tip] if lab != walk[-1])
        walk.append(nxt)
        tip = next(x for x in g.edge(nxt) if x != tip)
    return walk


def canonical_relabel(g: Graph) -> tuple[UnicyclicGraph, tuple[int, ...]]:
    """Permute edges so the cycle occupies labels ``1..m``.

    Returns the relabelled graph and ``perm`` with ``perm[new - 1] = old``.
    Non-cycle edges keep their relative order.
    """
    cycle = find_unique_cycle(g)
    walk = _cycle_walk(g, cycle)
    rest = [label for label in g.labels if label not in cycle]
    perm = tuple(walk + rest)
    relabelled = Graph(g.vertex_count, tuple(g.edge(old) for old in perm))
    m = len(cycle)
    return UnicyclicGraph(relabelled, m, frozenset(range(1, m + 1)), True), perm


# -- edge-list text format ---------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse ``n`` on the first content line, then one ``u v`` pair per line."""
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            lines.append((lineno, body))
    if not lines:
        raise ParseError("empty edge list: missing vertex count")
    lineno, head = lines[0]
    try:
        n = int(head)
    except ValueError:
        raise ParseError(f"line {lineno}: expected vertex count, got {head!r}") from None
    pairs = []
    for lineno, body in lines[1:]:
        fields = body.split()
        if len(fields) != 2:
            raise ParseError(f"line {lineno}: expected 'u v', got {body!r}")
        try:
            pairs.append((int(fields[0]), int(fields[1])))
        except ValueError:
            raise ParseError(f"line {lineno}: non-integer vertex in {body!r}") from None
    return build_graph(n, pairs)


def format_edge_list(g: Graph, comment: str | None = None) -> str:
    out = []
    if comment:
        out.extend(f"# {line}" for line in comment.splitlines())
    out.append(str(g.vertex_count))
    out.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(out) + "\n"


def read_edge_list(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_edge_list(fh.read())
