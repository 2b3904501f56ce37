"""Structural transforms on ordered and bipartite graphs.

These are the operations the bound machinery and its verification lean
on: degree regularization by vertex splitting, the dyadic edge
decomposition of an ordered graph into low-complexity layers, and the
hat-with-extensions configuration whose presence forces a sailboat
embedding.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .containment import Embedding
from .graphs import (BIPARTITE, ORDERED, GraphValueError, PatternGraph,
                     bipartite_graph)


def split_regularize(g: PatternGraph, q: int, seed: int | None = None) -> PatternGraph:
    """Replace every row vertex of degree d by floor(d/q) clones of degree q.

    Each clone inherits a block of q of its origin's neighbors, blocks
    pairwise disjoint, so the result keeps at least |E| - (q-1)|U|
    edges.  By default neighbors are taken in ascending column order and
    chunked left to right; a seed shuffles each neighbor list first,
    which exercises the freedom the construction leaves open.  Clones of
    one origin are ordered by their block content.
    """
    if g.flavor != BIPARTITE:
        raise GraphValueError("splitting regularizes bipartite graphs")
    if q < 1:
        raise GraphValueError("target degree q must be at least 1")
    rng = random.Random(seed) if seed is not None else None
    nbrs = [[] for _ in range(g.n_u + 1)]
    for u, v in g.edges:
        nbrs[u].append(v)
    clones = []
    for u in range(1, g.n_u + 1):
        lst = sorted(nbrs[u])
        if rng is not None:
            rng.shuffle(lst)
        for c in range(len(lst) // q):
            chunk = tuple(sorted(lst[c * q:(c + 1) * q]))
            clones.append((u, chunk))
    clones.sort()
    edges = []
    for i, (_, chunk) in enumerate(clones, start=1):
        for v in chunk:
            edges.append((i, v))
    return bipartite_graph(len(clones), g.n_v, edges)


def layered_decomposition(g: PatternGraph) -> list[PatternGraph]:
    """Partition the edges of an ordered graph into dyadic layers.

    With 0-based vertex positions, an edge {j, k} lands in layer i when
    floor(2^i j / n) = floor(2^i k / n) but the halved buckets already
    separate them.  Layers partition the edge set; every connected
    component of layer i spans at most ceil(n / 2^i) vertices and splits
    into two edge-free intervals at its bucket midpoint.
    """
    if g.flavor != ORDERED:
        raise GraphValueError("layered decomposition applies to ordered graphs")
    n = g.n_u
    if n == 0:
        return []
    levels = max(0, math.ceil(math.log2(n))) if n > 1 else 0
    layers = [[] for _ in range(levels + 1)]
    for a, b in g.edges:
        j, k = a - 1, b - 1
        for i in range(levels + 1):
            if (2 ** i * j) // n == (2 ** i * k) // n and \
               (2 ** (i + 1) * j) // n != (2 ** (i + 1) * k) // n:
                layers[i].append((a, b))
                break
    return [PatternGraph(ORDERED, n, 0, tuple(e)) for e in layers]


@dataclass(frozen=True)
class Hat:
    """Two edges sharing a row apex; feet are columns with left < right."""

    apex: int
    left_foot: int
    right_foot: int

    def __post_init__(self):
        if self.left_foot >= self.right_foot:
            raise GraphValueError("hat feet must satisfy left < right")

    @property
    def width(self) -> int:
        return self.right_foot - self.left_foot


def find_double_extended_hat(g: PatternGraph) -> tuple[Hat, Hat, Hat] | None:
    """A hat with both a left and a right extension, if any.

    The base hat (a, x, y) has a left extension (b, x, z) when b < a and
    (y-x)/2 < z-x < y-x, and a right extension (c, w, y) when c > a and
    (y-x)/2 < y-w < y-x.  The six edges of such a triple always form a
    sailboat embedding, with rows (b, a, c) and columns (x, w, z, y).
    Returns (left extension, base, right extension) or None.
    """
    if g.flavor != BIPARTITE:
        raise GraphValueError("hats live in bipartite graphs")
    nbrs = [[] for _ in range(g.n_u + 1)]
    for u, v in g.edges:
        nbrs[u].append(v)
    for u in range(1, g.n_u + 1):
        nbrs[u].sort()
    for a in range(1, g.n_u + 1):
        row = nbrs[a]
        for ix in range(len(row)):
            for iy in range(ix + 1, len(row)):
                x, y = row[ix], row[iy]
                width = y - x
                left = None
                for b in range(1, a):
                    if x not in set(nbrs[b]):
                        continue
                    for z in nbrs[b]:
                        if 2 * (z - x) > width and z - x < width:
                            left = Hat(b, x, z)
                            break
                    if left:
                        break
                if left is None:
                    continue
                for c in range(a + 1, g.n_u + 1):
                    if y not in set(nbrs[c]):
                        continue
                    for w in nbrs[c]:
                        if 2 * (y - w) > width and y - w < width:
                            return left, Hat(a, x, y), Hat(c, w, y)
    return None


def hat_triple_embedding(triple: tuple[Hat, Hat, Hat]) -> Embedding:
    """Sailboat embedding spelled out by a double-extended hat triple."""
    left, base, right = triple
    return Embedding(
        u_map=(left.apex, base.apex, right.apex),
        v_map=(base.left_foot, right.left_foot, left.right_foot, base.right_foot),
    )
