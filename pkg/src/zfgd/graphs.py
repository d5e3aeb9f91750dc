"""Bitset-backed simple graphs: parsing, generators, and the tripled bipartite product.

Vertices are labeled 1..n in every public interface; adjacency rows are machine
integers used as bit vectors with bit i standing for vertex i+1.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Sequence

MAX_N = 62  # graph6 short form limit; also keeps 3n-vertex products comfortably in bitsets

_G6_HEADER = ">>graph6<<"


class ParseError(ValueError):
    """Malformed textual graph or matrix input."""


class CapExceeded(RuntimeError):
    """An exact solver was asked for a graph above its configured size cap."""


def to_mask(vertices: Iterable[int]) -> int:
    """Bit vector for a collection of 1-based vertex labels."""
    m = 0
    for v in vertices:
        m |= 1 << (v - 1)
    return m


def from_mask(mask: int) -> tuple[int, ...]:
    """Sorted 1-based vertex labels stored in a bit vector."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length())
        mask ^= low
    return tuple(out)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 1..n.

    adj[i] is the open-neighborhood bit vector of vertex i+1.  roles, when
    present, tags each vertex with its part in a product construction
    (e.g. "x3" / "y3" / "z3").
    """

    n: int
    adj: tuple[int, ...]
    roles: tuple[str, ...] | None = None

    def __post_init__(self):
        if not 0 <= self.n <= MAX_N:
            raise ValueError(f"vertex count {self.n} outside 0..{MAX_N}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency row count does not match n")
        full = (1 << self.n) - 1
        for i, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"adjacency bit out of range in row {i + 1}")
            if (row >> i) & 1:
                raise ValueError(f"loop at vertex {i + 1}")
        for i in range(self.n):
            for j in range(i + 1, self.n):
                if ((self.adj[i] >> j) & 1) != ((self.adj[j] >> i) & 1):
                    raise ValueError(f"asymmetric adjacency between {i + 1} and {j + 1}")
        if self.roles is not None and len(self.roles) != self.n:
            raise ValueError("role tag count does not match n")

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def m(self) -> int:
        """Number of edges."""
        return sum(row.bit_count() for row in self.adj) // 2

    def nbr_mask(self, v: int) -> int:
        """Open neighborhood of 1-based vertex v, as a bit vector."""
        return self.adj[v - 1]

    def closed_mask(self, v: int) -> int:
        return self.adj[v - 1] | (1 << (v - 1))

    def neighbors(self, v: int) -> tuple[int, ...]:
        return from_mask(self.adj[v - 1])

    def degree(self, v: int) -> int:
        return self.adj[v - 1].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u - 1] >> (v - 1)) & 1)

    def edges(self) -> list[tuple[int, int]]:
        """All edges as sorted 1-based pairs, lexicographic order."""
        out = []
        for i in range(self.n):
            row = self.adj[i] >> (i + 1)
            j = i + 1
            while row:
                if row & 1:
                    out.append((i + 1, j + 1))
                row >>= 1
                j += 1
        return out

    def isolated(self) -> tuple[int, ...]:
        return tuple(i + 1 for i in range(self.n) if not self.adj[i])

    def vertices(self) -> range:
        return range(1, self.n + 1)


def graph_from_edges(n: int, edges: Iterable[tuple[int, int]],
                     roles: Sequence[str] | None = None) -> Graph:
    """Build a graph from 1-based edge pairs; duplicates collapse."""
    adj = [0] * n
    for u, v in edges:
        if not (1 <= u <= n and 1 <= v <= n):
            raise ValueError(f"edge ({u},{v}) out of range 1..{n}")
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        adj[u - 1] |= 1 << (v - 1)
        adj[v - 1] |= 1 << (u - 1)
    return Graph(n, tuple(adj), tuple(roles) if roles is not None else None)


# ---------------------------------------------------------------------------
# graph6 codec (short form only)

def parse_graph6(text: str) -> Graph:
    """Decode a short-form graph6 string, optionally prefixed with >>graph6<<."""
    s = text.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):]
    if not s:
        raise ParseError("empty graph6 string")
    b0 = ord(s[0])
    if b0 == 126:
        raise ParseError("extended graph6 size marker at byte offset 0 (n > 62 unsupported)")
    if not 63 <= b0 <= 125:
        raise ParseError(f"invalid graph6 byte {b0} at offset 0")
    n = b0 - 63
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(s) - 1 != need:
        raise ParseError(f"graph6 body has {len(s) - 1} bytes at offset 1, expected {need}")
    adj = [0] * n
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    k = 0
    for off in range(1, len(s)):
        b = ord(s[off])
        if not 63 <= b <= 126:
            raise ParseError(f"invalid graph6 byte {b} at offset {off}")
        val = b - 63
        for t in range(6):
            if k >= nbits:
                break
            if (val >> (5 - t)) & 1:
                i, j = pairs[k]
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph(n, tuple(adj))


def encode_graph6(g: Graph) -> str:
    """Short-form graph6 encoding (upper triangle, column-major, 6-bit chunks)."""
    out = [chr(g.n + 63)]
    bits = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append((g.adj[i] >> j) & 1)
    for k in range(0, len(bits), 6):
        chunk = bits[k:k + 6]
        chunk += [0] * (6 - len(chunk))
        val = 0
        for b in chunk:
            val = (val << 1) | b
        out.append(chr(val + 63))
    return "".join(out)


# ---------------------------------------------------------------------------
# edge-list text format: first line "n <count>", then 1-based "u v" lines

def parse_edge_list(text: str) -> Graph:
    lines = text.splitlines()
    header = None
    edges = []
    for ln, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        toks = line.split()
        if header is None:
            if len(toks) != 2 or toks[0] != "n":
                raise ParseError(f"line {ln}: expected header 'n <count>'")
            try:
                header = int(toks[1])
            except ValueError:
                raise ParseError(f"line {ln}: vertex count {toks[1]!r} is not an integer") from None
            if header < 0:
                raise ParseError(f"line {ln}: negative vertex count")
            continue
        if len(toks) != 2:
            raise ParseError(f"line {ln}: expected 'u v'")
        try:
            u, v = int(toks[0]), int(toks[1])
        except ValueError:
            raise ParseError(f"line {ln}: unparsable vertex token") from None
        if u == v:
            raise ParseError(f"line {ln}: self-loop at vertex {u}")
        if not (1 <= u <= header and 1 <= v <= header):
            raise ParseError(f"line {ln}: vertex label out of range 1..{header}")
        edges.append((u, v))
    if header is None:
        raise ParseError("missing 'n <count>' header line")
    return graph_from_edges(header, edges)


def parse_graph6_lines(text: str) -> list[Graph]:
    """One graph per non-empty line of graph6."""
    return [parse_graph6(line) for line in text.splitlines() if line.strip()]


def graph_to_json_dict(g: Graph) -> dict:
    d: dict = {"n": g.n, "edges": [list(e) for e in g.edges()]}
    if g.roles is not None:
        d["roles"] = list(g.roles)
    return d


# ---------------------------------------------------------------------------
# generators

def family(name: str, *params: int) -> Graph:
    """Standard labeled families: path, cycle, complete, complete_bipartite, empty, petersen."""
    for p in params:
        if p < 0:
            raise ValueError(f"negative size {p}")
    if name == "path":
        (k,) = params
        return graph_from_edges(k, [(i, i + 1) for i in range(1, k)])
    if name == "cycle":
        (k,) = params
        if k == 0:
            return Graph(0, ())
        if k < 3:
            raise ValueError("cycle needs at least 3 vertices")
        return graph_from_edges(k, [(i, i + 1) for i in range(1, k)] + [(k, 1)])
    if name == "complete":
        (k,) = params
        return graph_from_edges(k, [(i, j) for i in range(1, k + 1) for j in range(i + 1, k + 1)])
    if name == "complete_bipartite":
        a, b = params
        return graph_from_edges(a + b, [(i, a + j) for i in range(1, a + 1) for j in range(1, b + 1)])
    if name == "empty":
        (k,) = params
        return Graph(k, (0,) * k)
    if name == "petersen":
        if params:
            raise ValueError("petersen takes no size")
        outer = [(i, i % 5 + 1) for i in range(1, 6)]
        spokes = [(i, i + 5) for i in range(1, 6)]
        inner = [(6, 8), (8, 10), (10, 7), (7, 9), (9, 6)]
        return graph_from_edges(10, outer + spokes + inner)
    raise ValueError(f"unknown family {name!r}")


def build_BL(g: Graph) -> Graph:
    """Tripled bipartite product on x/y/z copies.

    Vertex order is the x block (1..n), then y (n+1..2n), then z (2n+1..3n).
    Each edge {i,j} of g contributes x_i~y_j, x_j~y_i, x_i~z_j, x_j~z_i, and
    every i contributes x_i~y_i, for 4m + n edges in total.
    """
    if g.roles is not None:
        raise ValueError("expected a plain (untagged) graph")
    n = g.n
    if 3 * n > MAX_N:
        raise CapExceeded(f"product needs {3 * n} vertices, above the {MAX_N} cap")
    edges = [(i, n + i) for i in range(1, n + 1)]
    for i, j in g.edges():
        edges += [(i, n + j), (j, n + i), (i, 2 * n + j), (j, 2 * n + i)]
    roles = [f"x{i}" for i in range(1, n + 1)] + \
            [f"y{i}" for i in range(1, n + 1)] + \
            [f"z{i}" for i in range(1, n + 1)]
    return graph_from_edges(3 * n, edges, roles=roles)


def add_isolated(g: Graph, r: int) -> Graph:
    """g plus r extra isolated vertices (labels n+1..n+r)."""
    return Graph(g.n + r, g.adj + (0,) * r, None)


def bipartition(g: Graph) -> tuple[frozenset[int], frozenset[int]] | None:
    """A 2-coloring (side-0 set, side-1 set) via BFS, or None if an odd cycle exists."""
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = [s]
        while queue:
            u = queue.pop()
            row = g.adj[u]
            while row:
                low = row & -row
                v = low.bit_length() - 1
                row ^= low
                if color[v] < 0:
                    color[v] = 1 - color[u]
                    queue.append(v)
                elif color[v] == color[u]:
                    return None
    side0 = frozenset(i + 1 for i in range(g.n) if color[i] == 0)
    return side0, frozenset(range(1, g.n + 1)) - side0


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    """Erdos-Renyi G(n, p); deterministic for a given rng state."""
    edges = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)
             if rng.random() < p]
    return graph_from_edges(n, edges)


def random_bipartite_graph(n: int, p: float, rng: random.Random) -> Graph:
    """Random bipartite graph without isolated vertices.

    Part sizes are drawn uniformly (both nonempty, needs n >= 2); every vertex
    that ends up isolated is given one random cross edge.
    """
    if n < 2:
        raise ValueError("need n >= 2 for a nonempty bipartition")
    a = rng.randint(1, n - 1)
    left = list(range(1, a + 1))
    right = list(range(a + 1, n + 1))
    edges = [(u, v) for u in left for v in right if rng.random() < p]
    covered = set()
    for u, v in edges:
        covered.add(u)
        covered.add(v)
    for u in left:
        if u not in covered:
            edges.append((u, rng.choice(right)))
    for v in right:
        if v not in covered:
            edges.append((rng.choice(left), v))
    return graph_from_edges(n, edges)
