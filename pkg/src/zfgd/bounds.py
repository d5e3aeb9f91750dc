"""Exact classical graph optimization: independence, domination, edge clique covers.

All solvers are bitmask branch-and-bound with deterministic traversal order;
they are meant for desk-scale graphs (caps are enforced by the callers that
expose them).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .graphs import CapExceeded, Graph, from_mask


@dataclass(frozen=True)
class BoundsReport:
    """Exact combinatorial parameters with verifying certificates."""

    alpha: int
    beta: int
    gamma: int
    cc: int | None
    independent_set: frozenset[int]
    vertex_cover: frozenset[int]
    dominating_set: frozenset[int]
    clique_cover: tuple[frozenset[int], ...] | None


def maximum_independent_set(g: Graph) -> frozenset[int]:
    """A maximum independent set via include/exclude branch and bound."""
    adj = g.adj
    best_size = 0
    best_mask = 0

    def rec(remaining: int, cur: int, size: int) -> None:
        nonlocal best_size, best_mask
        if size > best_size:
            best_size, best_mask = size, cur
        if size + remaining.bit_count() <= best_size:
            return
        # branch on a max-degree vertex within the remaining subgraph
        v = -1
        vdeg = -1
        rem = remaining
        while rem:
            low = rem & -rem
            u = low.bit_length() - 1
            rem ^= low
            d = (adj[u] & remaining).bit_count()
            if d > vdeg:
                v, vdeg = u, d
        bit = 1 << v
        rec(remaining & ~(adj[v] | bit), cur | bit, size + 1)
        rec(remaining & ~bit, cur, size)

    rec(g.full_mask, 0, 0)
    return frozenset(from_mask(best_mask))


def dominating_set(g: Graph) -> tuple[int, frozenset[int]]:
    """Minimum dominating set via set-cover branch and bound."""
    n = g.n
    if n == 0:
        return 0, frozenset()
    closed = [g.adj[i] | (1 << i) for i in range(n)]
    full = g.full_mask
    max_cover = max(c.bit_count() for c in closed)

    # greedy upper bound
    covered = 0
    chosen = 0
    while covered != full:
        v = max(range(n), key=lambda u: (closed[u] & ~covered).bit_count())
        chosen |= 1 << v
        covered |= closed[v]
    best = [chosen.bit_count(), chosen]

    def rec(covered: int, chosen: int, count: int) -> None:
        if covered == full:
            if count < best[0]:
                best[0], best[1] = count, chosen
            return
        uncovered = (full & ~covered).bit_count()
        if count + -(-uncovered // max_cover) >= best[0]:
            return
        u = ((full & ~covered) & -(full & ~covered)).bit_length() - 1
        dominators = closed[u]
        while dominators:
            low = dominators & -dominators
            v = low.bit_length() - 1
            dominators ^= low
            rec(covered | closed[v], chosen | (1 << v), count + 1)

    rec(0, 0, 0)
    return best[0], frozenset(from_mask(best[1]))


def maximal_cliques(g: Graph) -> list[frozenset[int]]:
    """All maximal cliques (Bron-Kerbosch with pivoting), sorted for stability."""
    adj = g.adj
    out: list[int] = []

    def bk(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(r)
            return
        # pivot with most neighbors in p trims the branching set
        pivot = -1
        pdeg = -1
        scan = p | x
        while scan:
            low = scan & -scan
            u = low.bit_length() - 1
            scan ^= low
            d = (adj[u] & p).bit_count()
            if d > pdeg:
                pivot, pdeg = u, d
        cand = p & ~adj[pivot]
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            bk(r | low, p & adj[v], x & adj[v])
            p &= ~low
            x |= low
    if g.n:
        bk(0, g.full_mask, 0)
    return sorted((frozenset(from_mask(m)) for m in out), key=sorted)


def edge_clique_cover(g: Graph, *, max_n: int = 16,
                      ) -> tuple[int, tuple[frozenset[int], ...]]:
    """Minimum number of cliques covering every edge, with an optimal cover.

    Branches over maximal cliques containing the first uncovered edge; any
    optimal cover by arbitrary cliques can be replaced by maximal ones
    without increasing the count, so this search is exact.
    """
    if g.n > max_n:
        raise CapExceeded(f"n={g.n} above the clique-cover cap {max_n}")
    edges = g.edges()
    if not edges:
        return 0, ()
    edge_index = {e: i for i, e in enumerate(edges)}
    full = (1 << len(edges)) - 1
    cliques = [c for c in maximal_cliques(g) if len(c) >= 2]
    cl_masks = []
    for c in cliques:
        mem = sorted(c)
        m = 0
        for a in range(len(mem)):
            for b in range(a + 1, len(mem)):
                m |= 1 << edge_index[(mem[a], mem[b])]
        cl_masks.append(m)
    max_edges = max(m.bit_count() for m in cl_masks)

    # greedy upper bound: repeatedly take the clique covering most new edges
    covered = 0
    greedy: list[int] = []
    while covered != full:
        i = max(range(len(cliques)), key=lambda t: (cl_masks[t] & ~covered).bit_count())
        greedy.append(i)
        covered |= cl_masks[i]
    best: list = [len(greedy), tuple(greedy)]

    def rec(covered: int, chosen: tuple[int, ...]) -> None:
        if covered == full:
            if len(chosen) < best[0]:
                best[0], best[1] = len(chosen), chosen
            return
        rest = (full & ~covered).bit_count()
        if len(chosen) + -(-rest // max_edges) >= best[0]:
            return
        e = ((full & ~covered) & -(full & ~covered)).bit_length() - 1
        u, v = edges[e]
        for i, c in enumerate(cliques):
            if u in c and v in c:
                rec(covered | cl_masks[i], chosen + (i,))

    rec(0, ())
    return best[0], tuple(cliques[i] for i in best[1])


def combinatorial_bounds(g: Graph, *, max_n: int = 20, max_n_cc: int = 16,
                         include_cc: bool = True) -> BoundsReport:
    """Exact alpha/beta/gamma (and optionally cc) with certificates."""
    if g.n > max_n:
        raise CapExceeded(f"n={g.n} above the bounds-solver cap {max_n}")
    ind = maximum_independent_set(g)
    cover = frozenset(g.vertices()) - ind
    gamma, dom = dominating_set(g)
    cc = None
    cliques = None
    if include_cc:
        cc, cliques = edge_clique_cover(g, max_n=max_n_cc)
    return BoundsReport(alpha=len(ind), beta=len(cover), gamma=gamma, cc=cc,
                        independent_set=ind, vertex_cover=cover,
                        dominating_set=dom, clique_cover=cliques)
