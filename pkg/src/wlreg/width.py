"""Exact treewidth of small graphs and its rooted / hom-hereditary variants."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .counting import MAX_QUOTIENT_VERTICES, ProperPartition, proper_quotients
from .graph import Graph, RootedPattern, _bits

__all__ = [
    "WidthResult",
    "treewidth",
    "rooted_treewidth",
    "htw",
    "elimination_width",
    "MAX_TW_VERTICES",
]

MAX_TW_VERTICES = 16


@dataclass(frozen=True)
class WidthResult:
    value: int
    witness: tuple[int, ...]
    # for htw: the partition whose quotient attains the maximum
    partition: ProperPartition | None = None


def elimination_width(g: Graph, order) -> int:
    """Largest degree at elimination time when eliminating ``order`` with fill-in."""
    rows = list(g.adj)
    alive = (1 << g.n) - 1
    width = 0
    for v in order:
        nb = rows[v] & alive & ~(1 << v)
        width = max(width, nb.bit_count())
        for u in _bits(nb):
            rows[u] |= nb & ~(1 << u)
        alive &= ~(1 << v)
    return width


def _q(g: Graph, eliminated: int, v: int) -> int:
    """Degree of ``v`` in the fill graph after eliminating the set ``eliminated``."""
    inside = eliminated | (1 << v)
    comp = frontier = 1 << v
    while frontier:
        reach = 0
        for u in _bits(frontier):
            reach |= g.adj[u]
        frontier = reach & eliminated & ~comp
        comp |= frontier
    boundary = 0
    for u in _bits(comp):
        boundary |= g.adj[u]
    return (boundary & ~inside).bit_count()


@lru_cache(maxsize=4096)
def _treewidth(g: Graph) -> tuple[int, tuple[int, ...]]:
    n = g.n
    if n == 0:
        return 0, ()
    if g.num_edges == 0:
        return 0, tuple(range(n))
    if g.num_edges == n * (n - 1) // 2:
        return n - 1, tuple(range(n))
    size = 1 << n
    best = [0] * size
    choice = [0] * size
    best[0] = -1
    for s in range(1, size):
        val = n
        arg = -1
        rest = s
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            rest ^= low
            prev = s ^ low
            cand = best[prev]
            if cand >= val:
                continue
            q = _q(g, prev, v)
            if q > cand:
                cand = q
            if cand < val:
                val, arg = cand, v
        best[s], choice[s] = val, arg
    order = []
    s = size - 1
    while s:
        v = choice[s]
        order.append(v)
        s ^= 1 << v
    return best[size - 1], tuple(reversed(order))


def treewidth(g: Graph) -> WidthResult:
    """Exact treewidth by dynamic programming over eliminated vertex sets."""
    if g.n > MAX_TW_VERTICES:
        raise ValueError(f"treewidth supports graphs up to {MAX_TW_VERTICES} vertices, got {g.n}")
    value, order = _treewidth(g)
    return WidthResult(value, order)


def _with_root_clique(p: RootedPattern) -> Graph:
    roots = sorted(set(p.roots))
    extra = [(u, v) for u, v in combinations(roots, 2) if not p.graph.has_edge(u, v)]
    if not extra:
        return p.graph
    return Graph.from_edges(p.graph.n, list(p.graph.edges()) + extra)


def rooted_treewidth(p: RootedPattern) -> WidthResult:
    """Treewidth subject to one bag holding every root.

    Equals the treewidth of the graph with the roots made a clique.
    """
    if p.graph.n > MAX_TW_VERTICES:
        raise ValueError(f"treewidth supports graphs up to {MAX_TW_VERTICES} vertices, got {p.graph.n}")
    return treewidth(_with_root_clique(p))


def htw(p: RootedPattern | Graph, *, merged_roots: bool = True) -> WidthResult:
    """Max rooted treewidth over all edge-surjective homomorphic images.

    Images are the quotients by proper partitions (the discrete one
    included). With ``merged_roots=False`` images identifying two roots are
    left out.
    """
    if isinstance(p, Graph):
        p = RootedPattern(p)
    if p.graph.n > MAX_QUOTIENT_VERTICES:
        raise ValueError(f"htw supports patterns up to {MAX_QUOTIENT_VERTICES} vertices, got {p.graph.n}")
    best: WidthResult | None = None
    for part, q in proper_quotients(p, include_discrete=True):
        if not merged_roots and not q.distinct_roots:
            continue
        r = rooted_treewidth(q)
        if best is None or r.value > best.value:
            best = WidthResult(r.value, r.witness, part)
    assert best is not None
    return best
