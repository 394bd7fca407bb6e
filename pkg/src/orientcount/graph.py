"""Undirected multigraphs with stable edge indexing.

Edge ``i`` is the ``i``-th edge line of the input and keeps that index for the
life of the object; every counting routine in the package addresses edges by
these indices (bit ``i`` of a subset or orientation mask).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence


class GraphParseError(ValueError):
    """Malformed edge-list text. ``line`` is 1-based."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...]
    incidence: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        edges = tuple((int(u), int(v)) for u, v in self.edges)
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for i, (u, v) in enumerate(edges):
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge {i} = ({u}, {v}) has an endpoint outside [0, {self.n})")
            if u == v:
                raise ValueError(f"edge {i} = ({u}, {v}) is a self-loop")
            inc[u].append(i)
            inc[v].append(i)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "incidence", tuple(tuple(x) for x in inc))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        return cls(n, tuple((u, v) for u, v in edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(x) for x in self.incidence)

    def degree(self, v: int) -> int:
        return len(self.incidence[v])

    def is_regular(self) -> bool:
        return len(set(self.degrees)) <= 1

    def subset_degrees(self, mask: int) -> list[int]:
        """Degree of every vertex in the spanning subgraph whose edge set is ``mask``."""
        deg = [0] * self.n
        for i, (u, v) in enumerate(self.edges):
            if mask >> i & 1:
                deg[u] += 1
                deg[v] += 1
        return deg

    def to_text(self) -> str:
        lines = [f"{self.n} {self.m}"]
        lines.extend(f"{u} {v}" for u, v in self.edges)
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class VertexPartition:
    part1: frozenset[int]
    part2: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "part1", frozenset(self.part1))
        object.__setattr__(self, "part2", frozenset(self.part2))
        if self.part1 & self.part2:
            raise ValueError("partition parts overlap")

    @classmethod
    def from_part1(cls, g: Graph, part1: Iterable[int]) -> "VertexPartition":
        p1 = frozenset(part1)
        bad = [v for v in p1 if not 0 <= v < g.n]
        if bad:
            raise ValueError(f"vertices {sorted(bad)} are not in the graph")
        return cls(p1, frozenset(range(g.n)) - p1)

    def check(self, g: Graph) -> None:
        if self.part1 | self.part2 != frozenset(range(g.n)):
            raise ValueError("partition does not cover exactly the vertex set")


def parse_graph(text: str) -> Graph:
    """Parse the edge-list format: a header ``n m`` then ``m`` lines ``u v``.

    Lines starting with ``#`` and blank lines are skipped, trailing whitespace is
    ignored. Parallel edges are kept; self-loops are rejected.
    """
    header = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphParseError(f"expected two integers, got {raw!r}", lineno)
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphParseError(f"expected two integers, got {raw!r}", lineno) from None
        if header is None:
            if a < 0 or b < 0:
                raise GraphParseError("negative vertex or edge count", lineno)
            header = (a, b)
            continue
        n, m = header
        if len(edges) == m:
            raise GraphParseError(f"more than the declared {m} edges", lineno)
        if not (0 <= a < n and 0 <= b < n):
            raise GraphParseError(f"endpoint out of range [0, {n}): {raw!r}", lineno)
        if a == b:
            raise GraphParseError(f"self-loop at vertex {a}", lineno)
        edges.append((a, b))
    if header is None:
        raise GraphParseError("missing 'n m' header")
    if len(edges) != header[1]:
        raise GraphParseError(f"declared {header[1]} edges, found {len(edges)}")
    return Graph(header[0], tuple(edges))


def connected_components(g: Graph) -> list[frozenset[int]]:
    """Vertex sets of the connected components, ordered by smallest vertex id."""
    parent = list(range(g.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in g.edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[max(ru, rv)] = min(ru, rv)
    groups: dict[int, set[int]] = {}
    for v in range(g.n):
        groups.setdefault(find(v), set()).add(v)
    return [frozenset(groups[r]) for r in sorted(groups)]


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced on ``s``, relabelled by ascending original id.

    Returns the subgraph and the map original id -> new id. Edge order follows
    the original edge order.
    """
    verts = sorted(set(s))
    for v in verts:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} is not in the graph")
    relabel = {v: i for i, v in enumerate(verts)}
    edges = [(relabel[u], relabel[v]) for u, v in g.edges if u in relabel and v in relabel]
    return Graph(len(verts), tuple(edges)), relabel


# small generators used by tests and demos

def cycle_graph(n: int) -> Graph:
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))


def complete_graph(n: int) -> Graph:
    return Graph(n, tuple((i, j) for i in range(n) for j in range(i + 1, n)))


def complete_bipartite_graph(a: int, b: int) -> Graph:
    return Graph(a + b, tuple((i, a + j) for i in range(a) for j in range(b)))


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for h in graphs:
        edges.extend((u + offset, v + offset) for u, v in h.edges)
        offset += h.n
    return Graph(offset, tuple(edges))


def random_multigraph(rng, n: int, m: int) -> Graph:
    """Uniform random endpoints, loops redrawn. ``rng`` is a ``random.Random``."""
    if n < 2 and m > 0:
        raise ValueError("need at least two vertices to place an edge")
    edges = []
    while len(edges) < m:
        u, v = rng.randrange(n), rng.randrange(n)
        if u != v:
            edges.append((u, v))
    return Graph(n, tuple(edges))


def random_regular_multigraph(rng, n: int, d: int) -> Graph:
    """Configuration model on ``n`` vertices of degree ``d``, retried until loop-free."""
    if n * d % 2:
        raise ValueError("n * d must be even")
    while True:
        stubs = [v for v in range(n) for _ in range(d)]
        rng.shuffle(stubs)
        pairs = list(zip(stubs[::2], stubs[1::2]))
        if all(u != v for u, v in pairs):
            return Graph(n, tuple(pairs))
