"""Simple undirected graphs, graph6 codec, and the named generators used by the suites.

Graphs are stored as one adjacency bitmask per vertex (``adj[v] >> u & 1``),
which is what the counting backtracker and the width solver want anyway.
"""

from __future__ import annotations

import ast
import itertools
import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Graph",
    "RootedPattern",
    "Graph6Error",
    "parse_graph6",
    "write_graph6",
    "read_graph6_file",
    "generate",
    "parse_generator",
    "GENERATORS",
    "complement",
    "disjoint_union",
    "relabel",
    "is_strongly_regular",
    "PAULUS_25_02",
    "path",
    "cycle",
    "complete",
    "rook",
    "cayley",
    "shrikhande",
    "hypercube",
    "petersen",
    "paulus_25_02",
]

# P_{25.02}, one of the two rigid (25,12,5,6) strongly regular graphs.
PAULUS_25_02 = "X}rU\\adeSetTjKWNJEYNR]PLjPBgUGVTkK^YKbipMcxbk`{DlXF"


@dataclass(frozen=True)
class Graph:
    """Finite simple undirected graph on vertices ``0..n-1``."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0 or len(self.adj) != self.n:
            raise ValueError(f"adjacency has {len(self.adj)} rows for n={self.n}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"vertex {v} has a neighbour outside 0..{self.n - 1}")
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            rest = row
            while rest:
                low = rest & -rest
                u = low.bit_length() - 1
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")
                rest ^= low

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return _bits(self.adj[v])

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, in lexicographic order."""
        for u, row in enumerate(self.adj):
            for v in _bits(row >> (u + 1)):
                yield u, u + 1 + v

    @property
    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def common_neighbors(self, u: int, v: int) -> list[int]:
        return _bits(self.adj[u] & self.adj[v])

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = frontier = 1
        while frontier:
            reach = 0
            for v in _bits(frontier):
                reach |= self.adj[v]
            frontier = reach & ~seen
            seen |= frontier
        return seen == (1 << self.n) - 1

    def components(self) -> list[list[int]]:
        left = (1 << self.n) - 1
        parts = []
        while left:
            start = left & -left
            seen = frontier = start
            while frontier:
                reach = 0
                for v in _bits(frontier):
                    reach |= self.adj[v]
                frontier = reach & ~seen
                seen |= frontier
            parts.append(_bits(seen))
            left &= ~seen
        return parts

    def induced(self, vertices: Sequence[int]) -> "Graph":
        index = {v: i for i, v in enumerate(vertices)}
        return Graph.from_edges(
            len(vertices),
            ((index[u], index[v]) for u, v in self.edges() if u in index and v in index),
        )

    def adjacency_matrix(self):
        import numpy as np

        mat = np.zeros((self.n, self.n), dtype=np.int64)
        for u, v in self.edges():
            mat[u, v] = mat[v, u] = 1
        return mat

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.num_edges})"


@dataclass(frozen=True)
class RootedPattern:
    """A pattern graph with an ordered tuple of labelled vertices (roots).

    Roots may repeat; this happens for quotients where two labelled vertices
    land in the same block.
    """

    graph: Graph
    roots: tuple[int, ...] = field(default=())

    def __post_init__(self) -> None:
        object.__setattr__(self, "roots", tuple(self.roots))
        for z in self.roots:
            if not 0 <= z < self.graph.n:
                raise ValueError(f"root {z} is not a vertex of a {self.graph.n}-vertex pattern")

    @property
    def arity(self) -> int:
        return len(self.roots)

    @property
    def distinct_roots(self) -> bool:
        return len(set(self.roots)) == len(self.roots)


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


# ---------------------------------------------------------------------------
# graph6

class Graph6Error(ValueError):
    """Malformed graph6 input; ``offset`` is the byte index of the problem."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


_G6_HEADER = ">>graph6<<"


def _decode_size(data: bytes) -> tuple[int, int]:
    """Return ``(n, header_length)``."""
    if not data:
        raise Graph6Error("empty graph6 string", 0)
    for i, b in enumerate(data[:8]):
        if not 63 <= b <= 126:
            raise Graph6Error(f"byte {b!r} outside 63..126", i)
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise Graph6Error("truncated 8-byte size header", len(data))
        n = 0
        for b in data[2:8]:
            n = (n << 6) | (b - 63)
        return n, 8
    if len(data) < 4:
        raise Graph6Error("truncated 4-byte size header", len(data))
    n = 0
    for b in data[1:4]:
        n = (n << 6) | (b - 63)
    return n, 4


def _encode_size(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    if n <= 68719476735:
        return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])
    raise ValueError(f"graph6 cannot encode n={n}")


def parse_graph6(text: str | bytes) -> Graph:
    """Decode one graph6 string (an optional ``>>graph6<<`` prefix is accepted)."""
    data = text.encode("ascii") if isinstance(text, str) else bytes(text)
    data = data.strip()
    base = 0
    if data.startswith(_G6_HEADER.encode()):
        base = len(_G6_HEADER)
        data = data[base:]
    n, head = _decode_size(data)
    nbits = n * (n - 1) // 2
    expected = (nbits + 5) // 6
    payload = data[head:]
    if len(payload) != expected:
        raise Graph6Error(
            f"payload has {len(payload)} bytes, n={n} needs {expected}",
            base + head + min(len(payload), expected),
        )
    for i, b in enumerate(payload):
        if not 63 <= b <= 126:
            raise Graph6Error(f"byte {b!r} outside 63..126", base + head + i)
    rows = [0] * n
    k = 0
    pairs = ((i, j) for j in range(1, n) for i in range(j))
    for i, j in pairs:
        byte = payload[k // 6] - 63
        if byte >> (5 - k % 6) & 1:
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        k += 1
    if expected:
        pad = expected * 6 - nbits
        if (payload[-1] - 63) & ((1 << pad) - 1):
            raise Graph6Error("nonzero padding bits", base + head + expected - 1)
    return Graph(n, tuple(rows))


def write_graph6(g: Graph) -> str:
    """Shortest-form graph6 encoding of ``g`` (no ``>>graph6<<`` prefix)."""
    out = bytearray(_encode_size(g.n))
    acc = nacc = 0
    for j in range(1, g.n):
        col = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | (col >> i & 1)
            nacc += 1
            if nacc == 6:
                out.append(acc + 63)
                acc = nacc = 0
    if nacc:
        out.append((acc << (6 - nacc)) + 63)
    return out.decode("ascii")


def read_graph6_file(path) -> list[Graph]:
    """One graph6 string per line; blank lines are skipped."""
    with open(path, "r", encoding="ascii") as fh:
        return [parse_graph6(line) for line in fh if line.strip()]


# ---------------------------------------------------------------------------
# generators

def path(s: int) -> Graph:
    if s < 1:
        raise ValueError(f"path needs at least one vertex, got {s}")
    return Graph.from_edges(s, ((i, i + 1) for i in range(s - 1)))


def cycle(s: int) -> Graph:
    if s < 3:
        raise ValueError(f"cycle needs at least 3 vertices, got {s}")
    return Graph.from_edges(s, ((i, (i + 1) % s) for i in range(s)))


def complete(n: int) -> Graph:
    if n < 0:
        raise ValueError(f"negative vertex count {n}")
    return Graph.from_edges(n, itertools.combinations(range(n), 2))


def rook(m: int) -> Graph:
    """m x m rook's graph (line graph of K_{m,m}); cell (i, j) is vertex m*i + j."""
    if m < 1:
        raise ValueError(f"rook graph needs m >= 1, got {m}")
    cells = [(i, j) for i in range(m) for j in range(m)]
    return Graph.from_edges(
        m * m,
        (
            (m * a + b, m * c + d)
            for (a, b), (c, d) in itertools.combinations(cells, 2)
            if a == c or b == d
        ),
    )


def cayley(m: int, n: int, connection: Iterable[Sequence[int]]) -> Graph:
    """Cayley graph of Z_m x Z_n; the connection set is closed under negation here.

    Element (i, j) is vertex n*i + j.
    """
    if m < 1 or n < 1:
        raise ValueError(f"group orders must be positive, got {m}, {n}")
    gens = set()
    for a, b in connection:
        a, b = a % m, b % n
        if (a, b) == (0, 0):
            raise ValueError("connection set must not contain the identity")
        gens.add((a, b))
        gens.add((-a % m, -b % n))
    edges = set()
    for i in range(m):
        for j in range(n):
            for a, b in gens:
                u, v = n * i + j, n * ((i + a) % m) + (j + b) % n
                edges.add((min(u, v), max(u, v)))
    return Graph.from_edges(m * n, sorted(edges))


def shrikhande() -> Graph:
    return cayley(4, 4, [(1, 0), (0, 1), (1, 1)])


def hypercube(d: int) -> Graph:
    if d < 0:
        raise ValueError(f"negative dimension {d}")
    return Graph.from_edges(
        1 << d, ((v, v ^ (1 << b)) for v in range(1 << d) for b in range(d) if not v >> b & 1)
    )


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def paulus_25_02() -> Graph:
    return parse_graph6(PAULUS_25_02)


GENERATORS = {
    "path": path,
    "cycle": cycle,
    "complete": complete,
    "rook": rook,
    "shrikhande": shrikhande,
    "cayley": cayley,
    "hypercube": hypercube,
    "petersen": petersen,
    "paulus_25_02": paulus_25_02,
}


def generate(name: str, *params) -> Graph:
    """Build a named graph, e.g. ``generate("rook", 4)`` or ``generate("rook(4)")``."""
    if not params and "(" in name:
        return parse_generator(name)
    try:
        fn = GENERATORS[name]
    except KeyError:
        raise ValueError(f"unknown generator {name!r}; known: {', '.join(GENERATORS)}") from None
    try:
        return fn(*params)
    except TypeError as exc:
        raise ValueError(f"bad parameters for {name}: {exc}") from None


_GEN_RE = re.compile(r"^\s*([a-z_0-9]+)\s*(?:\((.*)\))?\s*$", re.S)


def parse_generator(text: str) -> Graph:
    """Parse ``name`` or ``name(args)`` with Python-literal arguments."""
    m = _GEN_RE.match(text)
    if not m:
        raise ValueError(f"cannot parse generator spec {text!r}")
    name, args = m.group(1), m.group(2)
    params: tuple = ()
    if args is not None and args.strip():
        try:
            value = ast.literal_eval(f"({args},)")
        except (ValueError, SyntaxError) as exc:
            raise ValueError(f"bad generator arguments {args!r}: {exc}") from None
        params = tuple(value)
    if name not in GENERATORS:
        raise ValueError(f"unknown generator {name!r}; known: {', '.join(GENERATORS)}")
    return generate(name, *params)


# ---------------------------------------------------------------------------
# operations

def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.adj)))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    return Graph(g.n + h.n, g.adj + tuple(row << g.n for row in h.adj))


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Graph with vertex ``v`` renamed to ``perm[v]``."""
    if sorted(perm) != list(range(g.n)):
        raise ValueError("perm is not a permutation of the vertex set")
    return Graph.from_edges(g.n, ((perm[u], perm[v]) for u, v in g.edges()))


def is_strongly_regular(g: Graph) -> tuple[int, int, int, int] | None:
    """``(n, k, lambda, mu)`` if ``g`` is strongly regular, else ``None``.

    Complete and edgeless graphs are rejected since one of the two
    parameters is vacuous for them.
    """
    n = g.n
    if n == 0:
        return None
    degs = set(g.degrees())
    if len(degs) != 1:
        return None
    k = degs.pop()
    if not 0 < k < n - 1:
        return None
    lam = mu = None
    for u in range(n):
        for v in range(u + 1, n):
            c = (g.adj[u] & g.adj[v]).bit_count()
            if g.has_edge(u, v):
                if lam is None:
                    lam = c
                elif c != lam:
                    return None
            else:
                if mu is None:
                    mu = c
                elif c != mu:
                    return None
    return n, k, lam, mu
