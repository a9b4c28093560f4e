"""core(G) of König-Egerváry graphs in polynomial time.

For a KE graph G and a vertex v exactly one of two things happens:

* mu(G - v) == mu(G): then v is in core(G) (and G - v is again KE);
* mu(G - v) == mu(G) - 1: then v is in core(G) iff G - v is *not* KE.

Three solvers apply this per vertex:

``general``
    both branches, for any KE graph;
``bipartite``
    every subgraph of a bipartite graph is KE, so only the matching
    comparison is needed;
``perfect-matching``
    with a perfect matching the second case always applies, so only the
    KE test of G - v is needed.

The per-vertex loop is a parallel map over an immutable graph. Each task
writes its own slot, so results do not depend on the worker count.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Literal

from .errors import NoPerfectMatchingError, NotBipartiteError, NotKEError
from .graph import Graph, bipartition, closed_neighborhood
from .ke_test import _decide, ke_given_matching
from .matching import UNMATCHED, Matching, maximum_matching, repair_after_delete

__all__ = [
    "CoreResult",
    "UniqueMIS",
    "core_general",
    "core_bipartite",
    "core_perfect_matching",
    "compute_core",
    "alpha_ke",
    "unique_mis",
    "MODES",
]

Algorithm = Literal["general", "bipartite", "perfect-matching"]
MODES = ("auto", "general", "bipartite", "perfect")


@dataclass(frozen=True)
class CoreResult:
    """Output of the core solvers.

    ``c[v]`` is 1 iff v is in the core. ``ke[v]`` is 1/0 when the KE test of
    G - v was run for v and ``None`` otherwise. ``mu_deleted[v]`` is
    mu(G - v) where the solver computed it (``None`` under the
    perfect-matching solver, which never needs it).
    """

    core: frozenset[int]
    c: tuple[int, ...]
    ke: tuple[int | None, ...]
    mu_deleted: tuple[int | None, ...]
    algorithm: Algorithm
    mu: int
    alpha: int

    @property
    def n(self) -> int:
        return len(self.c)

    def sorted_core(self) -> list[int]:
        return sorted(self.core)


@dataclass(frozen=True)
class UniqueMIS:
    unique: bool
    mis: frozenset[int] | None
    core: frozenset[int]


# per-process state for the worker pool
_shared: dict = {}


def _init_worker(g: Graph, mate: tuple[int, ...], mu: int, algorithm: str) -> None:
    _shared.update(g=g, mate=mate, mu=mu, algorithm=algorithm)


def _classify_range(bounds: tuple[int, int]) -> list[tuple[int, int | None, int | None]]:
    return _classify(_shared["g"], _shared["mate"], _shared["mu"], _shared["algorithm"], range(*bounds))


def _classify(g: Graph, mate, mu: int, algorithm: str, vertices) -> list[tuple[int, int | None, int | None]]:
    """Return ``(c, ke, mu_deleted)`` for each vertex in ``vertices``."""
    out = []
    for v in vertices:
        if algorithm == "perfect-matching":
            # mu(G - v) = mu(G) - 1 for every v, and M minus v's edge is
            # already a maximum matching of G - v
            reduced = list(mate)
            w = reduced[v]
            reduced[v] = reduced[w] = UNMATCHED
            ke = int(_decide(g.adj, reduced, excluded=v)[0])
            out.append((1 - ke, ke, None))
            continue
        augmented, reduced = repair_after_delete(g, mate, v)
        mu_v = mu if augmented else mu - 1
        if augmented:
            out.append((1, None, mu_v))
        elif algorithm == "bipartite":
            out.append((0, None, mu_v))
        else:
            ke = int(_decide(g.adj, reduced, excluded=v)[0])
            out.append((1 - ke, ke, mu_v))
    return out


def _chunks(n: int, pieces: int) -> list[tuple[int, int]]:
    pieces = max(1, min(pieces, n))
    step, extra = divmod(n, pieces)
    bounds = []
    lo = 0
    for i in range(pieces):
        hi = lo + step + (i < extra)
        bounds.append((lo, hi))
        lo = hi
    return bounds


def _solve(g: Graph, matching: Matching, algorithm: Algorithm, workers: int) -> CoreResult:
    if workers < 1:
        raise ValueError(f"workers must be positive, got {workers}")
    mu = matching.size
    if workers == 1 or g.n < 2:
        rows = _classify(g, matching.mate, mu, algorithm, range(g.n))
    else:
        rows = []
        with ProcessPoolExecutor(
            max_workers=workers,
            initializer=_init_worker,
            initargs=(g, matching.mate, mu, algorithm),
        ) as pool:
            for part in pool.map(_classify_range, _chunks(g.n, 4 * workers)):
                rows.extend(part)
    c = tuple(r[0] for r in rows)
    return CoreResult(
        core=frozenset(v for v, bit in enumerate(c) if bit),
        c=c,
        ke=tuple(r[1] for r in rows),
        mu_deleted=tuple(r[2] for r in rows),
        algorithm=algorithm,
        mu=mu,
        alpha=g.n - mu,
    )


def _checked_matching(g: Graph) -> Matching:
    matching = maximum_matching(g)
    verdict = ke_given_matching(g, matching)
    if not verdict.is_ke:
        raise NotKEError(f"graph is not König-Egerváry: {verdict.reason}")
    return matching


def core_general(g: Graph, workers: int = 1) -> CoreResult:
    return _solve(g, _checked_matching(g), "general", workers)


def core_bipartite(g: Graph, workers: int = 1) -> CoreResult:
    colouring = bipartition(g)
    if not colouring.is_bipartite:
        raise NotBipartiteError(f"graph has an odd cycle {list(colouring.odd_cycle)}")
    return _solve(g, _checked_matching(g), "bipartite", workers)


def core_perfect_matching(g: Graph, workers: int = 1) -> CoreResult:
    matching = _checked_matching(g)
    if 2 * matching.size != g.n:
        raise NoPerfectMatchingError(
            f"maximum matching covers {2 * matching.size} of {g.n} vertices"
        )
    return _solve(g, matching, "perfect-matching", workers)


def compute_core(g: Graph, mode: str = "auto", workers: int = 1) -> CoreResult:
    """Compute core(G), choosing a solver by ``mode``.

    ``auto`` prefers the bipartite solver, then the perfect-matching one,
    then the general one. The KE property is verified in every mode.
    """
    if mode == "auto":
        matching = _checked_matching(g)
        if bipartition(g).is_bipartite:
            algorithm = "bipartite"
        elif 2 * matching.size == g.n:
            algorithm = "perfect-matching"
        else:
            algorithm = "general"
        return _solve(g, matching, algorithm, workers)
    if mode == "general":
        return core_general(g, workers)
    if mode == "bipartite":
        return core_bipartite(g, workers)
    if mode == "perfect":
        return core_perfect_matching(g, workers)
    raise ValueError(f"unknown mode {mode!r}; expected one of {', '.join(MODES)}")


def alpha_ke(g: Graph) -> int:
    """alpha(G) = n - mu(G) for a KE graph."""
    return g.n - _checked_matching(g).size


def unique_mis(g: Graph, workers: int = 1) -> UniqueMIS:
    """Decide whether a KE graph has exactly one maximum independent set.

    That happens iff core(G) is a maximal independent set, i.e. N[core]
    already covers every vertex.
    """
    core = compute_core(g, "auto", workers).core
    if len(closed_neighborhood(g, core)) == g.n:
        return UniqueMIS(True, core, core)
    return UniqueMIS(False, None, core)
