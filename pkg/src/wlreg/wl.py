"""Weisfeiler-Leman refinement with a palette shared across graphs.

Two independent implementations of pair refinement live here:

* :func:`wl2_stable` refines pairs directly by the triangle rule, the new
  color of ``(x, y)`` being the old one plus the multiset of
  ``(c(x, z), c(z, y))`` over all ``z``;
* :func:`wlk_stable` is the generic k-dimensional substitution refinement
  (vectorised with numpy), which for ``k = 2`` must induce the same
  partition.

In every round the signatures of all tuples of all graphs in the session are
sorted and numbered densely, so color ids never depend on vertex numbering
and are comparable across the graphs of one call.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Hashable, Sequence

import numpy as np

from .graph import Graph

__all__ = [
    "TupleColoring",
    "EdgeColoring",
    "wl1_stable",
    "wl2_stable",
    "wlk_stable",
    "tuple_color",
    "wlk_equivalent",
    "refine_pairs_once",
    "coherent_closure",
    "is_association_scheme",
    "constituents",
    "is_one_half_regular",
    "MAX_TUPLES",
]

MAX_TUPLES = 2**24
_CHUNK_ELEMS = 1 << 22


@dataclass
class TupleColoring:
    """Stable coloring of ``V^k`` for every graph of a session.

    ``colors[i]`` is an int array of shape ``(n_i,) * k``; ids are dense in
    ``range(num_colors)``. ``extra`` interns (k+1)-tuple color vectors
    on demand (ids from ``num_colors`` upwards, in order of first request).
    """

    k: int
    colors: list[np.ndarray]
    rounds: int
    num_colors: int
    extra: dict[tuple[int, ...], int] = field(default_factory=dict)

    def color(self, graph_index: int, tup: Sequence[int]) -> int:
        return tuple_color(self, graph_index, tup)

    def multiset(self, graph_index: int) -> Counter:
        return Counter(self.colors[graph_index].ravel().tolist())

    def num_classes(self, graph_index: int | None = None) -> int:
        if graph_index is None:
            return len(set().union(*(np.unique(c).tolist() for c in self.colors)))
        return len(np.unique(self.colors[graph_index]))

    def class_sizes(self, graph_index: int) -> dict[int, int]:
        return dict(sorted(self.multiset(graph_index).items()))


@dataclass
class EdgeColoring:
    """A coloring of all ordered pairs ``V x V``, diagonal included."""

    n: int
    color: np.ndarray

    def __post_init__(self) -> None:
        self.color = np.asarray(self.color, dtype=np.int64)
        if self.color.shape != (self.n, self.n):
            raise ValueError(f"color matrix has shape {self.color.shape}, expected {(self.n, self.n)}")

    @property
    def num_classes(self) -> int:
        return len(np.unique(self.color))

    def classes(self) -> list[int]:
        return np.unique(self.color).tolist()


# ---------------------------------------------------------------------------
# interning

def _intern(signatures: list[list[Hashable]]) -> tuple[list[list[int]], int]:
    """Number the distinct signatures of all graphs densely in sorted order."""
    distinct = sorted({s for sigs in signatures for s in sigs})
    ids = {s: i for i, s in enumerate(distinct)}
    return [[ids[s] for s in sigs] for sigs in signatures], len(distinct)


def _intern_rows(per_graph: list[np.ndarray]) -> tuple[list[np.ndarray], int]:
    """Dense ids for the rows of 2-d int arrays (row length may differ per graph).

    Rows are ordered by (first entry, length, rest) so the first column, the
    previous color, keeps its order.
    """
    uniques, inverses = [], []
    for rows in per_graph:
        if rows.shape[0] == 0:
            uniques.append(np.zeros((0, rows.shape[1]), dtype=np.int64))
            inverses.append(np.zeros(0, dtype=np.int64))
            continue
        u, inv = np.unique(rows, axis=0, return_inverse=True)
        uniques.append(u)
        inverses.append(inv.ravel())
    keys = sorted(
        {(int(r[0]), len(r), tuple(r[1:].tolist())) for u in uniques for r in u}
    )
    index = {key: i for i, key in enumerate(keys)}
    out = []
    for u, inv in zip(uniques, inverses):
        lut = np.asarray(
            [index[(int(r[0]), len(r), tuple(r[1:].tolist()))] for r in u], dtype=np.int64
        )
        out.append(lut[inv] if len(u) else inv)
    return out, len(keys)


# ---------------------------------------------------------------------------
# WL-1

def wl1_stable(graphs: Sequence[Graph]) -> TupleColoring:
    """Classical degree refinement (color refinement) on vertices."""
    if not graphs:
        raise ValueError("need at least one graph")
    colors = [[0] * g.n for g in graphs]
    num = 1 if any(g.n for g in graphs) else 0
    rounds = 0
    while True:
        sigs = [
            [(c[v], tuple(sorted(c[u] for u in g.neighbors(v)))) for v in range(g.n)]
            for g, c in zip(graphs, colors)
        ]
        new, new_num = _intern(sigs)
        if new_num == num:
            break
        colors, num = new, new_num
        rounds += 1
    return TupleColoring(1, [np.asarray(c, dtype=np.int64) for c in colors], rounds, num)


# ---------------------------------------------------------------------------
# WL-2 by the triangle rule

def _initial_pairs(g: Graph) -> list[list[int]]:
    """0 on the diagonal, 1 for edges, 2 for non-edges."""
    return [[0 if x == y else (1 if g.has_edge(x, y) else 2) for y in range(g.n)] for x in range(g.n)]


def _triangle_signatures(c: list[list[int]]) -> list[tuple]:
    n = len(c)
    cols = [[c[z][y] for z in range(n)] for y in range(n)]
    sigs = []
    for x in range(n):
        row = c[x]
        for y in range(n):
            col = cols[y]
            sigs.append((row[y], tuple(sorted(zip(row, col)))))
    return sigs


def _refine2(colors: list[list[list[int]]]) -> tuple[list[list[list[int]]], int]:
    sigs = [_triangle_signatures(c) for c in colors]
    flat, num = _intern(sigs)
    out = []
    for c, ids in zip(colors, flat):
        n = len(c)
        out.append([ids[x * n:(x + 1) * n] for x in range(n)])
    return out, num


def wl2_stable(graphs: Sequence[Graph]) -> TupleColoring:
    """Stable 2-WL coloring of vertex pairs, palette shared by ``graphs``.

    ``rounds`` is the first ``t`` with P^{t+1} = P^t; a strongly regular
    graph gives ``rounds == 0``.
    """
    if not graphs:
        raise ValueError("need at least one graph")
    init = [_initial_pairs(g) for g in graphs]
    colors, num = _intern([[v for row in c for v in row] for c in init])
    colors = [[ids[x * g.n:(x + 1) * g.n] for x in range(g.n)] for g, ids in zip(graphs, colors)]
    rounds = 0
    while True:
        new, new_num = _refine2(colors)
        if new_num == num:
            break
        colors, num = new, new_num
        rounds += 1
    arrays = [np.asarray(c, dtype=np.int64).reshape(g.n, g.n) for g, c in zip(graphs, colors)]
    return TupleColoring(2, arrays, rounds, num)


def refine_pairs_once(colors: Sequence[np.ndarray]) -> tuple[list[np.ndarray], int]:
    """One triangle-rule round applied to arbitrary pair colorings."""
    lists = [np.asarray(c).tolist() for c in colors]
    new, num = _refine2(lists)
    return [np.asarray(c, dtype=np.int64).reshape(len(c), len(c)) for c in new], num


# ---------------------------------------------------------------------------
# WL-k by substitution

def _atomic_types(g: Graph, k: int) -> np.ndarray:
    """Equality pattern plus ordered adjacency of every k-tuple, as an int code."""
    n = g.n
    adj = g.adjacency_matrix().astype(bool)
    code = np.zeros((n,) * k, dtype=np.int64)
    bit = 0
    grids = np.indices((n,) * k, sparse=True)
    for i in range(k):
        for j in range(i + 1, k):
            xi, xj = grids[i], grids[j]
            code |= (xi == xj).astype(np.int64) << bit
            code |= adj[xi, xj].astype(np.int64) << (bit + 1)
            bit += 2
    return code


def _substitution_rows(c: np.ndarray, k: int, num: int) -> np.ndarray:
    """Rows ``[old color, sorted codes of the k-vectors over z]`` for each tuple."""
    n = c.shape[0]
    total = n**k
    if n == 0:
        return np.zeros((0, 1), dtype=np.int64)
    radix_ok = num**k < 2**62
    moved = [np.moveaxis(c, i, -1).reshape(-1, n) for i in range(k)]
    rows = np.empty((total, n + 1), dtype=np.int64)
    rows[:, 0] = c.ravel()
    flat_idx = np.arange(total)
    chunk = max(1, _CHUNK_ELEMS // max(1, n * k))
    for start in range(0, total, chunk):
        idx = flat_idx[start:start + chunk]
        coords = np.unravel_index(idx, (n,) * k)
        vecs = np.empty((len(idx), n, k), dtype=np.int64)
        for i in range(k):
            others = [coords[j] for j in range(k) if j != i]
            other_flat = np.ravel_multi_index(others, (n,) * (k - 1)) if k > 2 else others[0]
            vecs[:, :, i] = moved[i][other_flat]
        if radix_ok:
            enc = np.zeros((len(idx), n), dtype=np.int64)
            for i in range(k):
                enc = enc * num + vecs[:, :, i]
        else:
            _, enc = np.unique(vecs.reshape(-1, k), axis=0, return_inverse=True)
            enc = enc.reshape(len(idx), n)
        enc.sort(axis=1)
        rows[start:start + len(idx), 1:] = enc
    return rows


def wlk_stable(graphs: Sequence[Graph], k: int) -> TupleColoring:
    """Stable k-WL coloring of ``V^k``; ``k = 1`` is degree refinement.

    For ``k >= 2`` a round appends to each tuple's color the multiset, over
    all vertices ``z``, of the k-vector of colors of the tuples obtained by
    putting ``z`` at position ``i`` for ``i = 1..k``.
    """
    if not graphs:
        raise ValueError("need at least one graph")
    if k < 1:
        raise ValueError(f"dimension must be >= 1, got {k}")
    for g in graphs:
        if g.n**k > MAX_TUPLES:
            raise ValueError(f"{g.n}^{k} tuples exceed the {MAX_TUPLES} limit")
    if k == 1:
        return wl1_stable(graphs)
    atomic = [_atomic_types(g, k) for g in graphs]
    flat, num = _intern_rows([a.reshape(-1, 1) for a in atomic])
    colors = [f.reshape((g.n,) * k) for g, f in zip(graphs, flat)]
    rounds = 0
    while True:
        rows = [_substitution_rows(c, k, num) for c in colors]
        new_flat, new_num = _intern_rows(rows)
        if new_num == num:
            break
        colors = [f.reshape((g.n,) * k) for g, f in zip(graphs, new_flat)]
        num = new_num
        rounds += 1
    return TupleColoring(k, colors, rounds, num)


def tuple_color(c: TupleColoring, graph_index: int, tup: Sequence[int]) -> int:
    """Color of an s-tuple, 1 <= s <= k+1.

    Shorter tuples are padded by repeating their last entry; a (k+1)-tuple
    gets the vector of colors of its k-subtuples (entry i removed), interned
    into ``c.extra``.
    """
    s = len(tup)
    k = c.k
    if not 1 <= s <= k + 1:
        raise ValueError(f"tuple length {s} outside 1..{k + 1}")
    arr = c.colors[graph_index]
    if s <= k:
        padded = tuple(tup) + (tup[-1],) * (k - s)
        return int(arr[padded])
    vec = tuple(int(arr[tuple(tup[:i]) + tuple(tup[i + 1:])]) for i in range(s))
    return c.extra.setdefault(vec, c.num_colors + len(c.extra))


def wlk_equivalent(g: Graph, h: Graph, k: int) -> bool:
    """Whether k-WL fails to distinguish ``g`` and ``h``."""
    if g.n != h.n:
        return False
    c = wl2_stable([g, h]) if k == 2 else wlk_stable([g, h], k)
    return c.multiset(0) == c.multiset(1)


# ---------------------------------------------------------------------------
# coherent configurations

def coherent_closure(g: Graph) -> EdgeColoring:
    """The stable 2-WL coloring of ``V x V`` of ``g``."""
    c = wl2_stable([g])
    return EdgeColoring(g.n, c.colors[0])


def is_association_scheme(c: EdgeColoring) -> bool:
    """Check the three scheme conditions.

    The loops form one class of their own, transposition maps classes to
    classes, and one round of pair refinement splits nothing.
    """
    n = c.n
    if n == 0:
        return True
    col = c.color
    diag = set(np.diag(col).tolist())
    if len(diag) != 1:
        return False
    off = col[~np.eye(n, dtype=bool)]
    if diag & set(off.tolist()):
        return False
    transpose: dict[int, int] = {}
    for a, b in zip(col.ravel().tolist(), col.T.ravel().tolist()):
        if transpose.setdefault(a, b) != b:
            return False
    _, num = refine_pairs_once([col])
    return num == c.num_classes


def constituents(c: EdgeColoring) -> list[Graph]:
    """Undirected graph of each off-diagonal class (merged with its transpose)."""
    if not is_association_scheme(c):
        raise ValueError("coloring is not an association scheme")
    n = c.n
    col = c.color
    diag = set(np.diag(col).tolist())
    done: set[int] = set()
    out = []
    for a in c.classes():
        if a in diag or a in done:
            continue
        xs, ys = np.nonzero(col == a)
        b = int(col[ys[0], xs[0]])
        done.update((a, b))
        mask = (col == a) | (col == b)
        out.append(Graph.from_edges(n, ((int(x), int(y)) for x, y in zip(*np.nonzero(np.triu(mask, 1))))))
    return out


def is_one_half_regular(g: Graph) -> bool:
    """Whether all diagonal pairs share one stable 2-WL color."""
    if g.n == 0:
        return True
    return len(set(np.diag(wl2_stable([g]).colors[0]).tolist())) == 1
