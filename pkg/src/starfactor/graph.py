"""Immutable simple-graph representation and structural primitives.

Vertices are 0-based integers.  Edges are stored as a lexicographically
sorted tuple of (u, v) pairs with u < v; the position of a pair in that
tuple is the edge's index, and every other module addresses edges by
this index.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence


class GraphError(Exception):
    """Base class for graph construction and parsing failures."""


class EdgeListParseError(GraphError):
    """Malformed edge-list text."""


class LoopError(EdgeListParseError):
    """An edge joins a vertex to itself."""


class DuplicateEdgeError(EdgeListParseError):
    """The same unordered pair appears twice."""


class VertexRangeError(EdgeListParseError):
    """A vertex index is outside 0..n-1."""


class EdgeCountError(EdgeListParseError):
    """The declared edge count does not match the number of edge lines."""


class Graph6Error(GraphError):
    """Malformed graph6 text."""


@dataclass(frozen=True, eq=False)
class Girth:
    """Length of a shortest cycle; ``value`` is None for forests (infinite).

    Comparisons against integers treat the infinite girth as larger than
    every finite value, so ``girth(g) >= 5`` holds for forests.
    """

    value: int | None

    @classmethod
    def finite(cls, k: int) -> "Girth":
        if k < 3:
            raise ValueError(f"finite girth must be >= 3, got {k}")
        return cls(k)

    @classmethod
    def infinite(cls) -> "Girth":
        return cls(None)

    @property
    def is_infinite(self) -> bool:
        return self.value is None

    def __ge__(self, other: object) -> bool:
        if isinstance(other, int):
            return self.value is None or self.value >= other
        return NotImplemented

    def __gt__(self, other: object) -> bool:
        if isinstance(other, int):
            return self.value is None or self.value > other
        return NotImplemented

    def __le__(self, other: object) -> bool:
        if isinstance(other, int):
            return self.value is not None and self.value <= other
        return NotImplemented

    def __lt__(self, other: object) -> bool:
        if isinstance(other, int):
            return self.value is not None and self.value < other
        return NotImplemented

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self.value == other
        if isinstance(other, Girth):
            return self.value == other.value
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("Girth", self.value))

    def __str__(self) -> str:
        return "Infinite" if self.value is None else str(self.value)


@dataclass(frozen=True)
class VertexClass:
    """Leaves (degree one) and stems (vertices with a degree-one neighbor).

    In a K_{1,1} component both endpoints satisfy both definitions and are
    recorded in both sets; callers that need "leaf or stem" take the union.
    """

    leaves: frozenset[int]
    stems: frozenset[int]


@dataclass(frozen=True)
class Graph:
    """A finite simple undirected graph with a canonical edge order."""

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        seen: set[tuple[int, int]] = set()
        for u, v in self.edges:
            if u == v:
                raise LoopError(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise VertexRangeError(f"edge ({u}, {v}) out of range 0..{self.n - 1}")
            if u > v:
                raise GraphError(f"edge ({u}, {v}) not normalized (u < v required)")
            if (u, v) in seen:
                raise DuplicateEdgeError(f"duplicate edge ({u}, {v})")
            seen.add((u, v))
        if list(self.edges) != sorted(self.edges):
            raise GraphError("edge list must be sorted lexicographically")

    @classmethod
    def from_edges(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph from unordered pairs, normalizing and sorting them."""
        normalized = []
        for u, v in pairs:
            if u == v:
                raise LoopError(f"loop at vertex {u}")
            normalized.append((u, v) if u < v else (v, u))
        return cls(n, tuple(sorted(normalized)))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        neighbors: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            neighbors[u].append(v)
            neighbors[v].append(u)
        return tuple(tuple(sorted(ns)) for ns in neighbors)

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        return {e: i for i, e in enumerate(self.edges)}

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edge_index

    def has_isolated_vertex(self) -> bool:
        return any(len(ns) == 0 for ns in self.adjacency)


def parse_edge_list(text: str) -> Graph:
    """Parse the plain edge-list format.

    First non-comment line is "n m", followed by m lines "u v".  Lines
    starting with '#' and blank lines are ignored.
    """
    lines = [
        line.strip()
        for line in text.splitlines()
        if line.strip() and not line.strip().startswith("#")
    ]
    if not lines:
        raise EdgeListParseError("empty input")
    header = lines[0].split()
    if len(header) != 2:
        raise EdgeListParseError(f"expected header 'n m', got {lines[0]!r}")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError as exc:
        raise EdgeListParseError(f"non-integer header {lines[0]!r}") from exc
    if n < 0 or m < 0:
        raise EdgeListParseError(f"negative counts in header {lines[0]!r}")
    if len(lines) - 1 != m:
        raise EdgeCountError(f"header declares {m} edges but {len(lines) - 1} lines follow")
    pairs: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise EdgeListParseError(f"expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise EdgeListParseError(f"non-integer edge line {line!r}") from exc
        if u == v:
            raise LoopError(f"loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise VertexRangeError(f"edge ({u}, {v}) out of range 0..{n - 1}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise DuplicateEdgeError(f"duplicate edge {key}")
        seen.add(key)
        pairs.append(key)
    return Graph(n, tuple(sorted(pairs)))


def format_edge_list(g: Graph) -> str:
    """Inverse of parse_edge_list."""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


_G6_PREFIX = ">>graph6<<"


def parse_graph6(text: str) -> Graph:
    """Decode one graph from its graph6 string (n <= 62)."""
    s = text.strip()
    if s.startswith(_G6_PREFIX):
        s = s[len(_G6_PREFIX):]
    if not s:
        raise Graph6Error("empty graph6 string")
    data = s.encode("ascii", errors="replace")
    for b in data:
        if not (63 <= b <= 126):
            raise Graph6Error(f"byte {b} outside graph6 range 63..126")
    if data[0] == 126:
        raise Graph6Error("extended size header (n > 62) not supported")
    n = data[0] - 63
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[1:]
    if len(body) < nbytes:
        raise Graph6Error(f"truncated bitstream: need {nbytes} bytes, got {len(body)}")
    if len(body) > nbytes:
        raise Graph6Error(f"trailing bytes: need {nbytes} bytes, got {len(body)}")
    bits = []
    for b in body:
        value = b - 63
        bits.extend((value >> shift) & 1 for shift in range(5, -1, -1))
    if any(bits[nbits:]):
        raise Graph6Error("nonzero padding bits")
    pairs = []
    k = 0
    for v in range(1, n):
        for u in range(v):
            if bits[k]:
                pairs.append((u, v))
            k += 1
    return Graph(n, tuple(sorted(pairs)))


def to_graph6(g: Graph) -> str:
    """Encode a graph as graph6 (n <= 62)."""
    if g.n > 62:
        raise Graph6Error(f"graph6 encoding limited to n <= 62, got n={g.n}")
    bits = []
    for v in range(1, g.n):
        for u in range(v):
            bits.append(1 if g.has_edge(u, v) else 0)
    while len(bits) % 6:
        bits.append(0)
    out = [chr(g.n + 63)]
    for i in range(0, len(bits), 6):
        value = 0
        for bit in bits[i:i + 6]:
            value = (value << 1) | bit
        out.append(chr(value + 63))
    return "".join(out)


def girth(g: Graph) -> Girth:
    """Shortest cycle length via BFS from every vertex; Infinite for forests."""
    best: int | None = None
    adjacency = g.adjacency
    for root in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if best is not None and 2 * dist[u] >= best:
                continue
            for v in adjacency[u]:
                if dist[v] == -1:
                    dist[v] = dist[u] + 1
                    parent[v] = u
                    queue.append(v)
                elif v != parent[u]:
                    cycle = dist[u] + dist[v] + 1
                    if best is None or cycle < best:
                        best = cycle
    return Girth.infinite() if best is None else Girth.finite(best)


def classify_vertices(g: Graph) -> VertexClass:
    """Leaves and stems of g (see VertexClass for the K_{1,1} convention)."""
    leaves = frozenset(v for v in range(g.n) if g.degree(v) == 1)
    stems = frozenset(
        v for v in range(g.n) if any(u in leaves for u in g.adjacency[v])
    )
    return VertexClass(leaves=leaves, stems=stems)


def connected_components(g: Graph) -> list[frozenset[int]]:
    """Vertex sets of the connected components, ordered by smallest vertex."""
    seen = [False] * g.n
    components = []
    for start in range(g.n):
        if seen[start]:
            continue
        seen[start] = True
        queue = deque([start])
        comp = [start]
        while queue:
            u = queue.popleft()
            for v in g.adjacency[u]:
                if not seen[v]:
                    seen[v] = True
                    comp.append(v)
                    queue.append(v)
        components.append(frozenset(comp))
    return components


def induced_delete(g: Graph, vertices: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """The induced subgraph on V minus ``vertices``, with renumbered vertices.

    Returns (subgraph, mapping) where mapping sends each kept original
    vertex to its new index.
    """
    drop = set(vertices)
    for v in drop:
        if not (0 <= v < g.n):
            raise VertexRangeError(f"unknown vertex {v}")
    kept = [v for v in range(g.n) if v not in drop]
    mapping = {v: i for i, v in enumerate(kept)}
    pairs = [
        (mapping[u], mapping[v])
        for u, v in g.edges
        if u not in drop and v not in drop
    ]
    return Graph(len(kept), tuple(sorted(pairs))), mapping


def delete_edges(g: Graph, edge_idxs: Iterable[int]) -> Graph:
    """Remove the given edge indices, keeping all vertices."""
    drop = set(edge_idxs)
    for i in drop:
        if not (0 <= i < g.m):
            raise GraphError(f"unknown edge index {i}")
    pairs = [e for i, e in enumerate(g.edges) if i not in drop]
    return Graph(g.n, tuple(pairs))


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph on ``vertices`` (complement view of induced_delete)."""
    keep = set(vertices)
    return induced_delete(g, [v for v in range(g.n) if v not in keep])
