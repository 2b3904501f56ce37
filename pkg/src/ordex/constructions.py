"""Extremal lower-bound constructions with machine verification.

Randomness comes from ``random.Random`` seeded explicitly, i.e. the
Mersenne Twister as shipped with CPython, whose output sequence for a
given seed is stable across platforms and documented by the standard
library.  Same (n, k, seed) therefore always yields the same graph.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .containment import Embedding, contains
from .graphs import (BIPARTITE, ORDERED, GraphValueError, PatternGraph,
                     bipartite_graph, ordered_graph)


def power_distance_graph(n: int, base: int = 2, flavor: str = ORDERED) -> PatternGraph:
    """Host whose edges join vertices at index distance a power of base.

    Ordered flavor: vertices 1..n, an edge whenever |i - j| = base**k for
    some k >= 0.  Bipartite flavor: an n-by-n host with an edge (u, v)
    whenever v - u is a nonnegative power of base.  Either way the edge
    count is sum(n - d) over powers d < n, which is of order n log n.
    Only nonnegative exponents produce integer distances, so k starts
    at 0.
    """
    if n < 2:
        raise GraphValueError("need at least two vertices")
    if base < 2:
        raise GraphValueError("base must be at least 2")
    distances = []
    d = 1
    while d < n:
        distances.append(d)
        d *= base
    if flavor == ORDERED:
        edges = [(i, i + d) for d in distances for i in range(1, n - d + 1)]
        return ordered_graph(n, edges)
    if flavor == BIPARTITE:
        edges = [(i, i + d) for d in distances for i in range(1, n - d + 1)]
        return bipartite_graph(n, n, edges)
    raise GraphValueError(f"power distance graph is ordered or bipartite, not {flavor}")


def random_ck_free(n: int, k: int, seed: int) -> PatternGraph:
    """Seeded sparse random graph purged of every k-cycle.

    Each pair becomes an edge independently with probability
    n**((2-k)/(k-1)) / 2, then every edge lying on at least one cycle of
    length exactly k is deleted.  The survivor count lands near
    n**(1 + 1/(k-1)) in expectation.
    """
    if k < 3:
        raise GraphValueError("cycle length k must be at least 3")
    if n < k:
        raise GraphValueError("need at least k vertices")
    rng = random.Random(seed)
    p = n ** ((2 - k) / (k - 1)) / 2
    edges = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if rng.random() < p:
                edges.append((i, j))
    bad = edges_on_k_cycles(n, edges, k)
    kept = [e for e in edges if e not in bad]
    return ordered_graph(n, kept)


def edges_on_k_cycles(n: int, edges, k: int) -> set:
    """Every edge lying on at least one simple cycle of length exactly k.

    Exhaustive bounded DFS from each start vertex; only cycles whose
    smallest vertex is the start are expanded, so each cycle is seen a
    constant number of times.  Fine at the sizes the construction is
    verified at (n <= a few hundred).
    """
    adj = [set() for _ in range(n + 1)]
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    bad = set()

    def mark(path):
        for i in range(len(path)):
            a, b = path[i], path[(i + 1) % len(path)]
            bad.add((a, b) if a < b else (b, a))

    def dfs(start, current, depth, path, on_path):
        if depth == k:
            if start in adj[current]:
                mark(path)
            return
        for nxt in adj[current]:
            if nxt > start and nxt not in on_path:
                path.append(nxt)
                on_path.add(nxt)
                dfs(start, nxt, depth + 1, path, on_path)
                on_path.discard(nxt)
                path.pop()

    for s in range(1, n + 1):
        dfs(s, s, 1, [s], {s})
    return bad


@dataclass(frozen=True)
class ConstructionReport:
    """Outcome of checking a construction against a pattern."""

    avoids: bool
    witness: Embedding | None
    edge_count: int
    density: float

    def as_dict(self):
        d = {"avoids": self.avoids, "edge_count": self.edge_count,
             "density": self.density}
        if self.witness is not None:
            d["witness"] = self.witness.as_dict()
        return d


def verify_construction(g: PatternGraph, pattern: PatternGraph) -> ConstructionReport:
    """Run the containment checker over a construction and report the outcome.

    ``avoids`` is True exactly when no embedding exists; otherwise the
    witness embedding is included.  Density is edges per vertex.
    """
    emb = contains(g, pattern)
    vertices = g.n_vertices
    density = g.n_edges / vertices if vertices else 0.0
    return ConstructionReport(emb is None, emb, g.n_edges, density)
