"""Seeded König-Egerváry graphs with a prescribed matching number.

Layout for order n and target mu: S = {0, ..., n-mu-1} stays independent,
D = {n-mu, ..., n-1}, and the matching edges (n-mu+i, i) for i < mu are
always present. Optional edges inside D and between D and S are added
independently with probability p.

Why the result is KE with mu(G) = mu:

1. S is independent, so every edge has an endpoint in D.
2. Hence D is a vertex cover and mu(G) <= |D| = mu.
3. The mandatory edges form a matching of size mu, so mu(G) = mu.
4. S is independent, so alpha(G) >= |S| = n - mu.
5. alpha(G) + mu(G) <= n for every graph, so alpha(G) <= n - mu.
6. Therefore alpha(G) + mu(G) = n.

The bipartite flavour never adds edges inside D (then D and S are the two
sides); the perfect-matching flavour needs 2 mu = n.

Random bits come from splitmix64, so a spec yields the same graph on
every platform.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from .graph import Graph, format_graph

__all__ = ["GenSpec", "SplitMix64", "prng_next", "gen_ke", "random_spec", "FLAVORS"]

MASK64 = (1 << 64) - 1
FLAVORS = ("ke", "bipartite-ke", "perfect-matching-ke")
Flavor = Literal["ke", "bipartite-ke", "perfect-matching-ke"]


def prng_next(state: int) -> tuple[int, int]:
    """One splitmix64 step: returns ``(output, new_state)``."""
    state = (state + 0x9E3779B97F4A7C15) & MASK64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31), state


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next(self) -> int:
        value, self.state = prng_next(self.state)
        return value

    def random(self) -> float:
        """Uniform float in [0, 1) from the top 53 bits."""
        return (self.next() >> 11) * (1.0 / (1 << 53))

    def below(self, bound: int) -> int:
        """Integer in [0, bound); modulo bias is irrelevant at these sizes."""
        return self.next() % bound


@dataclass(frozen=True)
class GenSpec:
    n: int
    mu: int
    extra_edge_prob: float = 0.0
    seed: int = 0
    flavor: Flavor = "ke"

    def __post_init__(self):
        if self.n < 0 or self.mu < 0:
            raise ValueError(f"n and mu must be non-negative (n={self.n}, mu={self.mu})")
        if 2 * self.mu > self.n:
            raise ValueError(f"mu={self.mu} exceeds n-mu={self.n - self.mu}")
        if not 0.0 <= self.extra_edge_prob <= 1.0:
            raise ValueError(f"extra_edge_prob={self.extra_edge_prob} is not in [0, 1]")
        if self.flavor not in FLAVORS:
            raise ValueError(f"unknown flavor {self.flavor!r}; expected one of {', '.join(FLAVORS)}")
        if self.flavor == "perfect-matching-ke" and 2 * self.mu != self.n:
            raise ValueError("perfect-matching-ke needs 2*mu == n")
        if not 0 <= self.seed <= MASK64:
            raise ValueError(f"seed {self.seed} does not fit in 64 bits")

    def describe(self) -> str:
        return (
            f"gen flavor={self.flavor} n={self.n} mu={self.mu} "
            f"p={self.extra_edge_prob!r} seed={self.seed}"
        )


def gen_ke(spec: GenSpec) -> Graph:
    n, mu, p = spec.n, spec.mu, spec.extra_edge_prob
    rng = SplitMix64(spec.seed)
    s_size = n - mu
    d = range(s_size, n)
    edges = [(s_size + i, i) for i in range(mu)]
    if spec.flavor != "bipartite-ke":
        for a in d:
            for b in range(a + 1, n):
                if rng.random() < p:
                    edges.append((a, b))
    for a in d:
        mandatory = a - s_size
        for b in range(s_size):
            if b == mandatory:
                continue
            if rng.random() < p:
                edges.append((a, b))
    return Graph(n, edges)


def random_spec(seed: int, max_n: int = 14) -> GenSpec:
    """Draw a small mixed-flavour spec from ``seed`` (used for test corpora)."""
    rng = SplitMix64(seed)
    flavor = FLAVORS[rng.below(3)]
    # orders lie in max_n // 2 .. max_n
    low = max_n // 2
    if flavor == "perfect-matching-ke":
        mu = (low + 1) // 2 + rng.below(max_n // 2 - (low + 1) // 2 + 1)
        n = 2 * mu
    else:
        n = low + rng.below(max_n - low + 1)
        mu = rng.below(n // 2 + 1)
    p = (rng.below(9) + 1) / 10
    return GenSpec(n=n, mu=mu, extra_edge_prob=p, seed=seed, flavor=flavor)


def format_generated(spec: GenSpec) -> str:
    return format_graph(gen_ke(spec), comments=[spec.describe()])
