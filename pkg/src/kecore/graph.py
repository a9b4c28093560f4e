"""Immutable simple undirected graphs on vertices ``0..n-1``.

Vertex sets are plain ``frozenset[int]`` values. The edge-list text format
understood by :func:`parse_graph` is::

    # optional comment lines
    n m
    u v        (exactly m lines, 0 <= u, v < n, u != v)
"""

from __future__ import annotations

from bisect import bisect_left
from collections import deque
from collections.abc import Iterable
from dataclasses import dataclass

from .errors import ParseError

__all__ = [
    "Graph",
    "Bipartition",
    "parse_graph",
    "format_graph",
    "induced_delete",
    "closed_neighborhood",
    "neighborhood",
    "bipartition",
    "is_independent",
    "is_connected",
]


class Graph:
    """Simple undirected graph with sorted adjacency lists.

    Construction validates the edge list; afterwards the object is never
    mutated, so it can be shared freely between threads and processes.
    """

    __slots__ = ("n", "edges", "adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError(f"vertex count must be non-negative, got {n}")
        seen: set[tuple[int, int]] = set()
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {u}-{v} has an endpoint outside 0..{n - 1}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise ValueError(f"duplicate edge {key[0]}-{key[1]}")
            seen.add(key)
            adj[u].append(v)
            adj[v].append(u)
        self.n = n
        self.edges: tuple[tuple[int, int], ...] = tuple(sorted(seen))
        self.adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(a)) for a in adj)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        a = self.adj[u]
        i = bisect_left(a, v)
        return i < len(a) and a[i] == v

    def vertices(self) -> range:
        return range(self.n)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def __getstate__(self):
        return (self.n, self.edges, self.adj)

    def __setstate__(self, state):
        self.n, self.edges, self.adj = state


def parse_graph(text: str) -> Graph:
    """Parse an edge-list document into a validated :class:`Graph`."""
    header: tuple[int, int] | None = None
    header_line = 0
    edges: list[tuple[int, int]] = []
    seen: dict[tuple[int, int], int] = {}
    n = m = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if header is None:
            if len(fields) != 2:
                raise ParseError(f"malformed header {line!r}: expected 'n m'", lineno)
            try:
                n, m = int(fields[0]), int(fields[1])
            except ValueError:
                raise ParseError(f"malformed header {line!r}: expected two integers", lineno) from None
            if n < 0 or m < 0:
                raise ParseError(f"malformed header {line!r}: counts must be non-negative", lineno)
            header = (n, m)
            header_line = lineno
            continue
        if len(fields) != 2:
            raise ParseError(f"malformed edge line {line!r}: expected 'u v'", lineno)
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise ParseError(f"malformed edge line {line!r}: expected two integers", lineno) from None
        if len(edges) == m:
            raise ParseError(f"more edge lines than the {m} declared in the header", lineno)
        for x in (u, v):
            if not 0 <= x < n:
                raise ParseError(f"vertex id {x} out of range 0..{n - 1}", lineno)
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", lineno)
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise ParseError(
                f"duplicate edge {key[0]}-{key[1]} (first seen on line {seen[key]})", lineno
            )
        seen[key] = lineno
        edges.append((u, v))
    if header is None:
        raise ParseError("missing header line 'n m'")
    if len(edges) != m:
        raise ParseError(
            f"header on line {header_line} declares {m} edges but {len(edges)} were given"
        )
    return Graph(n, edges)


def format_graph(g: Graph, comments: Iterable[str] = ()) -> str:
    """Serialize ``g`` in edge-list format; inverse of :func:`parse_graph`."""
    lines = [f"# {c}" for c in comments]
    lines.append(f"{g.n} {g.m}")
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def induced_delete(g: Graph, v: int) -> Graph:
    """Return ``G - v``.

    Vertices are renumbered stably: ids below ``v`` keep their number and
    ids above ``v`` shift down by one.
    """
    if not 0 <= v < g.n:
        raise IndexError(f"vertex {v} out of range 0..{g.n - 1}")
    edges = [
        (a - (a > v), b - (b > v))
        for a, b in g.edges
        if a != v and b != v
    ]
    return Graph(g.n - 1, edges)


def neighborhood(g: Graph, s: Iterable[int]) -> frozenset[int]:
    """N(S): all vertices adjacent to some member of ``s``."""
    out: set[int] = set()
    for v in s:
        out.update(g.adj[v])
    return frozenset(out)


def closed_neighborhood(g: Graph, s: Iterable[int]) -> frozenset[int]:
    """N[S] = S ∪ N(S)."""
    s = frozenset(s)
    return s | neighborhood(g, s)


def is_independent(g: Graph, s: Iterable[int]) -> bool:
    s = frozenset(s)
    return all(w not in s for v in s for w in g.adj[v])


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = [False] * g.n
    seen[0] = True
    stack = [0]
    count = 1
    while stack:
        v = stack.pop()
        for w in g.adj[v]:
            if not seen[w]:
                seen[w] = True
                count += 1
                stack.append(w)
    return count == g.n


@dataclass(frozen=True)
class Bipartition:
    """Result of :func:`bipartition`.

    Exactly one of ``side`` (a 0/1 label per vertex, every edge joining
    different labels) and ``odd_cycle`` (an odd closed walk, given as its
    vertex sequence without repeating the start) is set.
    """

    side: tuple[int, ...] | None
    odd_cycle: tuple[int, ...] | None = None

    @property
    def is_bipartite(self) -> bool:
        return self.side is not None

    def parts(self) -> tuple[frozenset[int], frozenset[int]]:
        if self.side is None:
            raise ValueError("graph is not bipartite")
        a = frozenset(v for v, s in enumerate(self.side) if s == 0)
        b = frozenset(v for v, s in enumerate(self.side) if s == 1)
        return a, b


def bipartition(g: Graph) -> Bipartition:
    """Two-colour ``g`` by BFS, or return an odd cycle proving it impossible.

    Components are coloured in ascending order of their smallest vertex,
    which gets side 0.
    """
    side = [-1] * g.n
    parent = [-1] * g.n
    depth = [0] * g.n
    for root in range(g.n):
        if side[root] != -1:
            continue
        side[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if side[w] == -1:
                    side[w] = 1 - side[u]
                    parent[w] = u
                    depth[w] = depth[u] + 1
                    queue.append(w)
                elif side[w] == side[u]:
                    return Bipartition(None, _odd_cycle(u, w, parent, depth))
    return Bipartition(tuple(side))


def _odd_cycle(u: int, w: int, parent: list[int], depth: list[int]) -> tuple[int, ...]:
    # u and w are adjacent with equal BFS parity; walk both up to their
    # lowest common ancestor
    left, right = [u], [w]
    a, b = u, w
    while depth[a] > depth[b]:
        a = parent[a]
        left.append(a)
    while depth[b] > depth[a]:
        b = parent[b]
        right.append(b)
    while a != b:
        a, b = parent[a], parent[b]
        left.append(a)
        right.append(b)
    right.pop()  # common ancestor already ends `left`
    return tuple(left + right[::-1])
