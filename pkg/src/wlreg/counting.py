"""Exact rooted homomorphism, injective-homomorphism and subgraph counts.

All counts are brute-force exact: a backtracker places pattern vertices one
at a time, each new vertex restricted to the common host-neighbourhood of its
already placed pattern-neighbours. Roots are pre-placed.

Two interchangeable backends run the same search: a pure-Python one over
Python ints (any host size) and a numba kernel over int64 bitmasks (hosts up
to 63 vertices). ``backend="auto"`` uses the kernel whenever it applies.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

from .graph import Graph, RootedPattern, _bits

__all__ = [
    "RootedHost",
    "ProperPartition",
    "CountingError",
    "hom_count",
    "inj_hom_count",
    "sub_count",
    "aut_size",
    "proper_quotients",
    "quotient",
    "SearchPlan",
    "rooted_counts",
]

MAX_AUT_VERTICES = 10
MAX_QUOTIENT_VERTICES = 10
_INT64_LIMIT = 2**62


class CountingError(RuntimeError):
    """An internal consistency check failed (e.g. non-exact sub = inj/aut)."""


@dataclass(frozen=True)
class RootedHost:
    """Host graph with pairwise distinct labelled vertices."""

    graph: Graph
    roots: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "roots", tuple(self.roots))
        for x in self.roots:
            if not 0 <= x < self.graph.n:
                raise ValueError(f"host root {x} is not a vertex of a {self.graph.n}-vertex graph")
        if len(set(self.roots)) != len(self.roots):
            raise ValueError(f"host roots must be pairwise distinct, got {self.roots}")


@dataclass(frozen=True)
class ProperPartition:
    """Partition of the pattern's vertices into independent sets.

    ``blocks[b]`` lists the vertices of block ``b``; blocks are ordered by
    their smallest vertex.
    """

    blocks: tuple[tuple[int, ...], ...]

    @property
    def is_discrete(self) -> bool:
        return all(len(b) == 1 for b in self.blocks)

    def block_of(self) -> dict[int, int]:
        return {v: i for i, blk in enumerate(self.blocks) for v in blk}


# ---------------------------------------------------------------------------
# search plan

class SearchPlan:
    """Placement order of a pattern's vertices with roots first.

    After the roots, every vertex is chosen to maximise the number of
    already-placed neighbours, so on a connected pattern each placed vertex
    has at least one earlier neighbour and candidates come from host
    neighbourhoods rather than the whole vertex set.
    """

    def __init__(self, pattern: RootedPattern):
        g = pattern.graph
        self.pattern = pattern
        order: list[int] = []
        for z in pattern.roots:
            if z not in order:
                order.append(z)
        self.num_fixed = len(order)
        placed = 0
        for z in order:
            placed |= 1 << z
        rest = set(range(g.n)) - set(order)
        while rest:
            v = max(rest, key=lambda u: ((g.adj[u] & placed).bit_count(), g.degree(u), -u))
            order.append(v)
            placed |= 1 << v
            rest.remove(v)
        self.order = order
        pos = {v: i for i, v in enumerate(order)}
        # back[p]: earlier positions adjacent to position p (free positions only)
        self.back = [sorted(pos[u] for u in g.neighbors(v) if pos[u] < p) for p, v in enumerate(order)]
        self.fixed_edges = [
            (p, q) for p in range(self.num_fixed) for q in self.back[p]
        ]
        ptr = [0]
        idx: list[int] = []
        for p in range(len(order)):
            if p >= self.num_fixed:
                idx.extend(self.back[p])
            ptr.append(len(idx))
        self.back_ptr = np.asarray(ptr, dtype=np.int64)
        self.back_idx = np.asarray(idx, dtype=np.int64)

    def fixed_images(self, host_roots: Sequence[int]) -> list[int] | None:
        """Images of the pre-placed positions, or None if the roots are inconsistent."""
        roots = self.pattern.roots
        if len(roots) != len(host_roots):
            raise ValueError(
                f"root arity mismatch: pattern has {len(roots)}, host has {len(host_roots)}"
            )
        image: dict[int, int] = {}
        for z, x in zip(roots, host_roots):
            if image.setdefault(z, x) != x:
                return None
        return [image[v] for v in self.order[: self.num_fixed]]

    def count(self, host: Graph, host_roots: Sequence[int], injective: bool, backend: str = "auto") -> int:
        fixed = self.fixed_images(host_roots)
        if fixed is None:
            return 0
        if injective and len(set(fixed)) != len(fixed):
            return 0
        for p, q in self.fixed_edges:
            if not host.has_edge(fixed[p], fixed[q]):
                return 0
        m = len(self.order)
        if backend == "auto":
            backend = "numba" if self._kernel_ok(host, m) else "python"
        if backend == "numba":
            if not self._kernel_ok(host, m):
                raise ValueError("numba backend needs a host with at most 63 vertices and an int64-sized count")
            from ._kernel import count_kernel

            return int(
                count_kernel(
                    _host_array(host),
                    host.n,
                    np.asarray(fixed, dtype=np.int64),
                    m,
                    self.back_ptr,
                    self.back_idx,
                    injective,
                )
            )
        if backend == "python":
            return _count_python(host, fixed, self.back, injective)
        raise ValueError(f"unknown backend {backend!r}")

    def count_batch(self, hosts: Sequence[Graph], host_roots: Sequence[Sequence[int]], injective: bool) -> np.ndarray:
        """Counts for many (host, roots) pairs in one compiled call.

        Pattern roots must be pairwise distinct; hosts must fit the kernel.
        """
        from ._kernel import count_batch_kernel

        if not self.pattern.distinct_roots:
            raise ValueError("batched counting needs pairwise distinct pattern roots")
        m = len(self.order)
        if not hosts:
            return np.zeros(0, dtype=np.int64)
        for h in hosts:
            if not self._kernel_ok(h, m):
                raise ValueError("host too large for the compiled kernel")
        adj_flat = np.concatenate([_host_array(h) for h in hosts])
        offsets = np.zeros(len(hosts) + 1, dtype=np.int64)
        offsets[1:] = np.cumsum([h.n for h in hosts])
        ns = np.asarray([h.n for h in hosts], dtype=np.int64)
        fixed = np.asarray([[r[self.pattern.roots.index(v)] for v in self.order[: self.num_fixed]] for r in host_roots],
                           dtype=np.int64).reshape(len(hosts), self.num_fixed)
        for r in host_roots:
            if len(r) != self.pattern.arity:
                raise ValueError("root arity mismatch")
        edges = np.asarray(self.fixed_edges, dtype=np.int64).reshape(-1, 2)
        return count_batch_kernel(adj_flat, offsets, ns, fixed, m, self.back_ptr, self.back_idx, edges, injective)

    def _kernel_ok(self, host: Graph, m: int) -> bool:
        from ._kernel import MAX_HOST

        if host.n > MAX_HOST:
            return False
        # overflow guard: the count never exceeds n^(free positions)
        return host.n ** (m - self.num_fixed) < _INT64_LIMIT


_HOST_CACHE: dict[Graph, np.ndarray] = {}


def _host_array(host: Graph) -> np.ndarray:
    arr = _HOST_CACHE.get(host)
    if arr is None:
        if len(_HOST_CACHE) > 256:
            _HOST_CACHE.clear()
        arr = _HOST_CACHE[host] = np.asarray(host.adj, dtype=np.int64)
    return arr


def _count_python(host: Graph, fixed: list[int], back: list[list[int]], injective: bool) -> int:
    m = len(back)
    nf = len(fixed)
    if nf == m:
        return 1
    adj = host.adj
    full = (1 << host.n) - 1
    img = list(fixed) + [0] * (m - nf)
    used0 = 0
    for x in fixed:
        used0 |= 1 << x

    def rec(p: int, used: int) -> int:
        mask = full
        for q in back[p]:
            mask &= adj[img[q]]
        if injective:
            mask &= ~used
        if p == m - 1:
            return mask.bit_count()
        total = 0
        while mask:
            low = mask & -mask
            img[p] = low.bit_length() - 1
            total += rec(p + 1, used | low)
            mask ^= low
        return total

    return rec(nf, used0)


def _as_host(host) -> RootedHost:
    if isinstance(host, Graph):
        return RootedHost(host)
    return host


def _as_pattern(pattern) -> RootedPattern:
    if isinstance(pattern, Graph):
        return RootedPattern(pattern)
    return pattern


# ---------------------------------------------------------------------------
# public counts

def hom_count(pattern: RootedPattern | Graph, host: RootedHost | Graph, *, backend: str = "auto") -> int:
    """Number of homomorphisms F -> G sending root z_i to host root x_i."""
    pattern, host = _as_pattern(pattern), _as_host(host)
    return SearchPlan(pattern).count(host.graph, host.roots, injective=False, backend=backend)


def inj_hom_count(pattern: RootedPattern | Graph, host: RootedHost | Graph, *, backend: str = "auto") -> int:
    """Number of injective root-respecting homomorphisms.

    A pattern with a repeated root can never map injectively onto distinct
    host roots, so such patterns count 0.
    """
    pattern, host = _as_pattern(pattern), _as_host(host)
    if not pattern.distinct_roots:
        if len(pattern.roots) != len(host.roots):
            raise ValueError(
                f"root arity mismatch: pattern has {len(pattern.roots)}, host has {len(host.roots)}"
            )
        return 0
    return SearchPlan(pattern).count(host.graph, host.roots, injective=True, backend=backend)


def aut_size(pattern: RootedPattern | Graph) -> int:
    """Number of automorphisms of the pattern fixing each root."""
    pattern = _as_pattern(pattern)
    if pattern.graph.n > MAX_AUT_VERTICES:
        raise ValueError(f"aut_size supports patterns up to {MAX_AUT_VERTICES} vertices")
    # injective edge-preserving self-maps of a finite graph are automorphisms
    return SearchPlan(pattern).count(pattern.graph, pattern.roots, injective=True, backend="python")


def sub_count(pattern: RootedPattern | Graph, host: RootedHost | Graph, *, backend: str = "auto") -> int:
    """Number of subgraphs of the host isomorphic to the pattern via a root-respecting map."""
    pattern, host = _as_pattern(pattern), _as_host(host)
    if not pattern.distinct_roots:
        raise ValueError("sub_count needs pairwise distinct pattern roots")
    inj = inj_hom_count(pattern, host, backend=backend)
    aut = aut_size(pattern)
    q, r = divmod(inj, aut)
    if r:
        raise CountingError(f"injective count {inj} is not divisible by |Aut| = {aut}")
    return q


def rooted_counts(
    pattern: RootedPattern | Graph,
    host: Graph,
    tuples: Iterable[Sequence[int]],
    kind: str = "sub",
    *,
    backend: str = "auto",
) -> dict[tuple[int, ...], int]:
    """Count ``kind`` in {"hom", "inj", "sub"} for many root tuples with one plan."""
    pattern = _as_pattern(pattern)
    if kind not in ("hom", "inj", "sub"):
        raise ValueError(f"unknown count kind {kind!r}")
    if kind != "hom" and not pattern.distinct_roots:
        raise ValueError("injective and subgraph counts need pairwise distinct pattern roots")
    plan = SearchPlan(pattern)
    aut = aut_size(pattern) if kind == "sub" else 1
    out = {}
    for t in tuples:
        t = tuple(t)
        RootedHost(host, t)
        c = plan.count(host, t, injective=(kind != "hom"), backend=backend)
        q, r = divmod(c, aut)
        if r:
            raise CountingError(f"injective count {c} at {t} is not divisible by |Aut| = {aut}")
        out[t] = q
    return out


# ---------------------------------------------------------------------------
# quotients

def _restricted_growth(g: Graph) -> Iterator[list[int]]:
    """Block assignments of vertices 0..n-1 into independent sets (RGS order)."""
    n = g.n
    assign = [0] * n
    block_masks: list[int] = []

    def rec(v: int) -> Iterator[list[int]]:
        if v == n:
            yield assign
            return
        nb = g.adj[v]
        for b, bm in enumerate(block_masks):
            if not bm & nb:
                assign[v] = b
                block_masks[b] = bm | (1 << v)
                yield from rec(v + 1)
                block_masks[b] = bm
        assign[v] = len(block_masks)
        block_masks.append(1 << v)
        yield from rec(v + 1)
        block_masks.pop()

    yield from rec(0)


def quotient(pattern: RootedPattern, blocks: Sequence[Sequence[int]]) -> RootedPattern:
    """The labelled quotient F/alpha: blocks adjacent iff some F-edge joins them."""
    g = pattern.graph
    where = {}
    for i, blk in enumerate(blocks):
        for v in blk:
            if v in where:
                raise ValueError(f"vertex {v} appears in two blocks")
            where[v] = i
    if len(where) != g.n:
        raise ValueError("blocks do not cover the pattern's vertices")
    edges = set()
    for u, v in g.edges():
        a, b = where[u], where[v]
        if a == b:
            raise ValueError(f"block {a} is not independent (edge {u}-{v})")
        edges.add((min(a, b), max(a, b)))
    return RootedPattern(Graph.from_edges(len(blocks), sorted(edges)), tuple(where[z] for z in pattern.roots))


def proper_quotients(
    pattern: RootedPattern | Graph, *, include_discrete: bool = False
) -> Iterator[tuple[ProperPartition, RootedPattern]]:
    """All proper partitions (blocks are independent sets) with their quotients.

    The discrete partition is skipped unless ``include_discrete``.
    """
    pattern = _as_pattern(pattern)
    g = pattern.graph
    if g.n > MAX_QUOTIENT_VERTICES:
        raise ValueError(f"proper_quotients supports patterns up to {MAX_QUOTIENT_VERTICES} vertices")
    for assign in _restricted_growth(g):
        k = max(assign) + 1 if assign else 0
        if k == g.n and not include_discrete:
            continue
        blocks = [[] for _ in range(k)]
        for v, b in enumerate(assign):
            blocks[b].append(v)
        part = ProperPartition(tuple(tuple(b) for b in blocks))
        yield part, quotient(pattern, part.blocks)
