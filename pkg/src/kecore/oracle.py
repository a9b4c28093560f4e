"""Exhaustive reference computations for small graphs.

Nothing here touches the matching or KE-test modules: alpha, mu, the
family of maximum independent sets and core(G) are all found by plain
search over vertex bitmasks. The validators compare the polynomial
algorithms and several structural facts about cores against these values.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .errors import NotKEError, TooLargeError
from .graph import Graph, bipartition, induced_delete, is_connected, neighborhood

__all__ = [
    "MAX_ORDER",
    "MISFamily",
    "enumerate_mis",
    "brute_core",
    "brute_mu",
    "brute_is_ke",
    "TheoremReport",
    "verify_theorem_th",
    "StructureCheck",
    "StructureReport",
    "validate_structure",
]

MAX_ORDER = 24


def _guard(g: Graph) -> None:
    if g.n > MAX_ORDER:
        raise TooLargeError(f"oracle is limited to {MAX_ORDER} vertices, graph has {g.n}")


def _masks(g: Graph) -> list[int]:
    return [sum(1 << w for w in g.adj[v]) for v in range(g.n)]


def _members(mask: int) -> tuple[int, ...]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


@dataclass(frozen=True)
class MISFamily:
    """All maximum independent sets, each a sorted tuple, listed in lexicographic order."""

    alpha: int
    sets: tuple[tuple[int, ...], ...]

    @property
    def count(self) -> int:
        return len(self.sets)

    def core(self) -> frozenset[int]:
        if not self.sets:
            return frozenset()
        out = set(self.sets[0])
        for s in self.sets[1:]:
            out.intersection_update(s)
        return frozenset(out)


def enumerate_mis(g: Graph) -> MISFamily:
    """Branch and bound over include/exclude of the lowest candidate vertex."""
    _guard(g)
    nbr = _masks(g)
    best = 0
    found: list[int] = []

    def search(chosen: int, size: int, candidates: int) -> None:
        nonlocal best, found
        if size + candidates.bit_count() < best:
            return
        if not candidates:
            if size > best:
                best = size
                found = [chosen]
            elif size == best:
                found.append(chosen)
            return
        low = candidates & -candidates
        v = low.bit_length() - 1
        search(chosen | low, size + 1, candidates & ~low & ~nbr[v])
        search(chosen, size, candidates & ~low)

    search(0, 0, (1 << g.n) - 1)
    sets = sorted(_members(s) for s in found)
    return MISFamily(best, tuple(sets))


def brute_core(g: Graph) -> frozenset[int]:
    return enumerate_mis(g).core()


def brute_mu(g: Graph) -> int:
    """Matching number by recursion on the lowest uncovered vertex."""
    _guard(g)
    nbr = _masks(g)

    @lru_cache(maxsize=None)
    def best(free: int) -> int:
        if not free:
            return 0
        low = free & -free
        v = low.bit_length() - 1
        rest = free & ~low
        result = best(rest)
        options = nbr[v] & rest
        while options:
            bit = options & -options
            options &= ~bit
            result = max(result, 1 + best(rest & ~bit))
        return result

    return best((1 << g.n) - 1)


def brute_is_ke(g: Graph) -> bool:
    return enumerate_mis(g).alpha + brute_mu(g) == g.n


@dataclass(frozen=True)
class TheoremReport:
    """Outcome of checking the deletion dichotomy at one vertex.

    ``case`` is 1 when mu(G - v) == mu(G) and 2 when it dropped by one.
    """

    vertex: int
    case: int
    mu: int
    mu_deleted: int
    deleted_is_ke: bool
    in_core: bool
    passed: bool

    def as_dict(self) -> dict:
        return {
            "vertex": self.vertex,
            "case": self.case,
            "mu": self.mu,
            "mu_deleted": self.mu_deleted,
            "deleted_is_ke": self.deleted_is_ke,
            "in_core": self.in_core,
            "passed": self.passed,
        }


def verify_theorem_th(
    g: Graph, v: int, core: frozenset[int] | None = None, mu: int | None = None
) -> TheoremReport:
    """Check the per-vertex dichotomy for KE graphs at vertex ``v``.

    Case 1, mu(G - v) == mu(G): G - v must be KE and v in core(G).
    Case 2, mu(G - v) == mu(G) - 1: G - v is KE iff v is not in core(G).

    ``core`` and ``mu`` may be passed in to avoid recomputing them for each
    vertex of the same graph; they must be the oracle's values.
    """
    _guard(g)
    if not 0 <= v < g.n:
        raise IndexError(f"vertex {v} out of range 0..{g.n - 1}")
    if mu is None:
        mu = brute_mu(g)
    if core is None:
        family = enumerate_mis(g)
        if family.alpha + mu != g.n:
            raise NotKEError("graph is not König-Egerváry")
        core = family.core()
    h = induced_delete(g, v)
    mu_h = brute_mu(h)
    h_ke = enumerate_mis(h).alpha + mu_h == h.n
    in_core = v in core
    if mu_h == mu:
        case, passed = 1, h_ke and in_core
    elif mu_h == mu - 1:
        case, passed = 2, h_ke == (not in_core)
    else:
        case, passed = 0, False
    return TheoremReport(v, case, mu, mu_h, h_ke, in_core, passed)


@dataclass(frozen=True)
class StructureCheck:
    name: str
    applicable: bool
    passed: bool | None = None
    detail: str = ""

    def as_dict(self) -> dict:
        return {"name": self.name, "applicable": self.applicable, "passed": self.passed, "detail": self.detail}


@dataclass(frozen=True)
class StructureReport:
    checks: tuple[StructureCheck, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks if c.applicable)

    def by_name(self, name: str) -> StructureCheck:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)


def validate_structure(g: Graph) -> StructureReport:
    """Evaluate known structural facts about cores on ``g``.

    Every check states its hypotheses; a check whose hypotheses fail on
    ``g`` is reported as not applicable rather than passed.

    ``bipartite_alpha_gt_half``
        connected bipartite, n >= 2: alpha > n/2 iff |core| >= 2.
    ``bipartite_alpha_eq_half``
        connected bipartite, n >= 2: alpha = n/2 iff core is empty and
        both colour classes are maximum independent sets.
    ``ke_alpha_gt_half``
        connected KE, n >= 2: alpha > n/2 iff |core| > |N(core)| >= 1.
    ``ke_alpha_eq_half``
        connected KE, n >= 2: alpha = n/2 iff G has a perfect matching.
    ``core_exceeds_alpha_minus_mu``
        no isolated vertices and alpha > mu: |core| > alpha - mu.
    ``small_matching_core``
        connected, n >= 2 and 3 mu < n: |core| >= 2. (K1 is excluded:
        its core has one vertex.)
    """
    _guard(g)
    n = g.n
    family = enumerate_mis(g)
    alpha = family.alpha
    mu = brute_mu(g)
    core = family.core()
    connected = is_connected(g)
    colouring = bipartition(g)
    ke = alpha + mu == n
    checks: list[StructureCheck] = []

    if connected and colouring.is_bipartite and n >= 2:
        a, b = colouring.parts()
        mis = set(family.sets)
        lhs = 2 * alpha > n
        rhs = len(core) >= 2
        checks.append(StructureCheck("bipartite_alpha_gt_half", True, lhs == rhs, f"alpha={alpha} n={n} |core|={len(core)}"))
        lhs = 2 * alpha == n
        rhs = not core and tuple(sorted(a)) in mis and tuple(sorted(b)) in mis
        checks.append(StructureCheck("bipartite_alpha_eq_half", True, lhs == rhs, f"|A|={len(a)} |B|={len(b)}"))
    else:
        reason = "needs a connected bipartite graph of order >= 2"
        checks.append(StructureCheck("bipartite_alpha_gt_half", False, detail=reason))
        checks.append(StructureCheck("bipartite_alpha_eq_half", False, detail=reason))

    if connected and ke and n >= 2:
        n_core = len(neighborhood(g, core))
        lhs = 2 * alpha > n
        rhs = len(core) > n_core >= 1
        checks.append(StructureCheck("ke_alpha_gt_half", True, lhs == rhs, f"|core|={len(core)} |N(core)|={n_core}"))
        lhs = 2 * alpha == n
        rhs = 2 * mu == n
        checks.append(StructureCheck("ke_alpha_eq_half", True, lhs == rhs, f"alpha={alpha} mu={mu}"))
    else:
        reason = "needs a connected KE graph of order >= 2"
        checks.append(StructureCheck("ke_alpha_gt_half", False, detail=reason))
        checks.append(StructureCheck("ke_alpha_eq_half", False, detail=reason))

    if all(g.adj[v] for v in range(n)) and alpha > mu:
        checks.append(StructureCheck("core_exceeds_alpha_minus_mu", True, len(core) > alpha - mu, f"|core|={len(core)} alpha-mu={alpha - mu}"))
    else:
        checks.append(StructureCheck("core_exceeds_alpha_minus_mu", False, detail="needs no isolated vertices and alpha > mu"))

    if connected and n >= 2 and 3 * mu < n:
        checks.append(StructureCheck("small_matching_core", True, len(core) >= 2, f"|core|={len(core)} mu={mu}"))
    else:
        checks.append(StructureCheck("small_matching_core", False, detail="needs a connected graph of order >= 2 with 3*mu < n"))

    return StructureReport(tuple(checks))
