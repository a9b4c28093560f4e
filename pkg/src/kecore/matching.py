"""Maximum-cardinality matching.

Bipartite graphs go through Hopcroft-Karp; everything else through
Edmonds' blossom algorithm with array-based blossom bases, one
single-source search per free vertex. Both start from the same greedy
matching and scan neighbours in ascending id order, so results are
reproducible.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Sequence
from dataclasses import dataclass

from .errors import InvalidMatchingError
from .graph import Graph, bipartition

__all__ = [
    "Matching",
    "maximum_matching",
    "mu_after_delete",
    "has_perfect_matching",
    "greedy_mate",
    "find_augmenting_path",
]

UNMATCHED = -1


@dataclass(frozen=True)
class Matching:
    """A matching stored as a mate array; ``mate[v] == -1`` when v is free."""

    mate: tuple[int, ...]

    @classmethod
    def from_mate(cls, g: Graph, mate: Sequence[int]) -> "Matching":
        """Build a matching for ``g``, checking that it is consistent."""
        if len(mate) != g.n:
            raise InvalidMatchingError(f"mate array has length {len(mate)}, graph has {g.n} vertices")
        for u, w in enumerate(mate):
            if w == UNMATCHED:
                continue
            if not 0 <= w < g.n:
                raise InvalidMatchingError(f"vertex {u} has mate {w} outside the graph")
            if mate[w] != u:
                raise InvalidMatchingError(f"vertex {u} is matched to {w}, but {w} is matched to {mate[w]}")
            if not g.has_edge(u, w):
                raise InvalidMatchingError(f"matched pair {u}-{w} is not an edge")
        return cls(tuple(mate))

    @classmethod
    def from_edges(cls, g: Graph, edges: Sequence[tuple[int, int]]) -> "Matching":
        mate = [UNMATCHED] * g.n
        for u, w in edges:
            for x in (u, w):
                if mate[x] != UNMATCHED:
                    raise InvalidMatchingError(f"vertex {x} is covered by two matched edges")
            mate[u], mate[w] = w, u
        return cls.from_mate(g, mate)

    @property
    def edges(self) -> list[tuple[int, int]]:
        return [(u, w) for u, w in enumerate(self.mate) if u < w]

    @property
    def size(self) -> int:
        return sum(1 for u, w in enumerate(self.mate) if u < w)

    def is_matched(self, v: int) -> bool:
        return self.mate[v] != UNMATCHED

    def __len__(self) -> int:
        return self.size


def greedy_mate(g: Graph) -> list[int]:
    """Pair each free vertex, in id order, with its lowest free neighbour."""
    mate = [UNMATCHED] * g.n
    for u in range(g.n):
        if mate[u] != UNMATCHED:
            continue
        for w in g.adj[u]:
            if mate[w] == UNMATCHED:
                mate[u], mate[w] = w, u
                break
    return mate


def maximum_matching(g: Graph) -> Matching:
    mate = greedy_mate(g)
    coloring = bipartition(g)
    if coloring.is_bipartite:
        _hopcroft_karp(g.adj, coloring.side, mate)
    else:
        adj = g.adj
        for root in range(g.n):
            if mate[root] == UNMATCHED:
                end, parent = find_augmenting_path(adj, mate, root)
                if end != UNMATCHED:
                    _augment(mate, parent, end)
    return Matching(tuple(mate))


def _hopcroft_karp(adj, side, mate: list[int]) -> None:
    n = len(adj)
    left = [u for u in range(n) if side[u] == 0]
    inf = n + 1
    while True:
        # BFS layering from free left vertices
        dist = [inf] * n
        queue = deque()
        for u in left:
            if mate[u] == UNMATCHED:
                dist[u] = 0
                queue.append(u)
        found = inf
        while queue:
            u = queue.popleft()
            if dist[u] >= found:
                continue
            for w in adj[u]:
                x = mate[w]
                if x == UNMATCHED:
                    if found == inf:
                        found = dist[u] + 1
                elif dist[x] == inf:
                    dist[x] = dist[u] + 1
                    queue.append(x)
        if found == inf:
            return
        # iterative DFS along the layers; `pos` remembers scan positions
        pos = [0] * n
        for root in left:
            if mate[root] != UNMATCHED or dist[root] != 0:
                continue
            stack = [root]
            via: list[int] = []
            while stack:
                u = stack[-1]
                nbrs = adj[u]
                advanced = False
                while pos[u] < len(nbrs):
                    w = nbrs[pos[u]]
                    pos[u] += 1
                    x = mate[w]
                    if x == UNMATCHED:
                        if dist[u] + 1 == found:
                            via.append(w)
                            # flip the path root .. u, w
                            for a, b in zip(stack, via):
                                mate[a], mate[b] = b, a
                            stack.clear()
                            advanced = True
                            break
                    elif dist[x] == dist[u] + 1:
                        via.append(w)
                        stack.append(x)
                        advanced = True
                        break
                if not advanced:
                    dist[u] = inf
                    stack.pop()
                    if via:
                        via.pop()


def find_augmenting_path(
    adj: Sequence[Sequence[int]], mate: Sequence[int], root: int, excluded: int = UNMATCHED
) -> tuple[int, list[int]]:
    """Search an M-augmenting path starting at the free vertex ``root``.

    Returns ``(end, parent)``; ``end`` is the free vertex the path reaches,
    or -1 when no augmenting path from ``root`` exists. The vertex
    ``excluded`` is treated as deleted from the graph.
    """
    n = len(adj)
    parent = [UNMATCHED] * n
    base = list(range(n))
    used = [False] * n
    used[root] = True
    tree = [root]
    queue = deque([root])

    def lca(a: int, b: int) -> int:
        seen = set()
        while True:
            a = base[a]
            seen.add(a)
            if mate[a] == UNMATCHED:
                break
            a = parent[mate[a]]
        while True:
            b = base[b]
            if b in seen:
                return b
            b = parent[mate[b]]

    def mark_path(v: int, b: int, child: int, blossom: set) -> None:
        while base[v] != b:
            blossom.add(base[v])
            blossom.add(base[mate[v]])
            parent[v] = child
            child = mate[v]
            v = parent[mate[v]]

    while queue:
        v = queue.popleft()
        for to in adj[v]:
            if to == excluded or base[v] == base[to] or mate[v] == to:
                continue
            if to == root or (mate[to] != UNMATCHED and parent[mate[to]] != UNMATCHED):
                cur = lca(v, to)
                blossom: set[int] = set()
                mark_path(v, cur, to, blossom)
                mark_path(to, cur, v, blossom)
                for i in list(tree):
                    if base[i] in blossom:
                        base[i] = cur
                        if not used[i]:
                            used[i] = True
                            tree.append(i)
                            queue.append(i)
            elif parent[to] == UNMATCHED:
                parent[to] = v
                tree.append(to)
                if mate[to] == UNMATCHED:
                    return to, parent
                nxt = mate[to]
                used[nxt] = True
                tree.append(nxt)
                queue.append(nxt)
    return UNMATCHED, parent


def _augment(mate: list[int], parent: list[int], end: int) -> None:
    v = end
    while v != UNMATCHED:
        pv = parent[v]
        nxt = mate[pv]
        mate[v], mate[pv] = pv, v
        v = nxt


def repair_after_delete(g: Graph, mate: Sequence[int], v: int) -> tuple[bool, list[int]]:
    """Drop ``v`` from a maximum matching of ``g`` and try to regrow it.

    Returns ``(augmented, mate')`` where ``mate'`` is a maximum matching of
    ``G - v`` in the original vertex ids (``mate'[v] == -1``). ``augmented``
    is true iff ``mu(G - v) == mu(G)``. If v is free the matching is
    returned unchanged; otherwise any augmenting path in ``G - v`` must
    start at v's old mate, so one search from there decides it.
    """
    new = list(mate)
    w = new[v]
    if w == UNMATCHED:
        return True, new
    new[v] = new[w] = UNMATCHED
    end, parent = find_augmenting_path(g.adj, new, w, excluded=v)
    if end == UNMATCHED:
        return False, new
    _augment(new, parent, end)
    return True, new


def mu_after_delete(g: Graph, matching: Matching, v: int) -> int:
    """mu(G - v), given a maximum matching of ``g``."""
    if not 0 <= v < g.n:
        raise IndexError(f"vertex {v} out of range 0..{g.n - 1}")
    augmented, _ = repair_after_delete(g, matching.mate, v)
    return matching.size - (not augmented)


def has_perfect_matching(g: Graph, matching: Matching) -> bool:
    return 2 * matching.size == g.n
