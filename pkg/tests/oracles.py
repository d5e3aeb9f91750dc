"""Independent brute-force oracles for the test suite.

Everything here is deliberately naive and set-based, written straight from
the rule/sequence definitions, and никогда shares code with the solvers it
checks.  Keep it slow and obvious.
"""

from fractions import Fraction
from itertools import combinations

import networkx as nx

RULES = ("Z", "Zld", "Zminus", "ZL")
KINDS = ("Zseq", "Dominating", "TotalDominating", "Lseq")
KIND_OF_RULE = dict(zip(RULES, KINDS))


def nbrs(g, v):
    """Open neighborhood as a set, via the public API only."""
    return set(g.neighbors(v))


def closed(g, v):
    return nbrs(g, v) | {v}


def applicable_oracle(g, blue, rule):
    """All legal (actor, target) forces, from the rule definitions."""
    blue = set(blue)
    out = set()
    for x in g.vertices():
        white_nbrs = nbrs(g, x) - blue
        if rule == "Z":
            if x in blue and len(white_nbrs) == 1:
                out.add((x, white_nbrs.pop()))
        elif rule == "Zld":
            if x in blue:
                if len(white_nbrs) == 1:
                    out.add((x, white_nbrs.pop()))
            elif not white_nbrs:
                out.add((x, x))
        elif rule == "Zminus":
            if len(white_nbrs) == 1:
                out.add((x, white_nbrs.pop()))
        elif rule == "ZL":
            if len(white_nbrs) == 1:
                out.add((x, white_nbrs.pop()))
            elif x not in blue and not white_nbrs:
                out.add((x, x))
    return out


def closure_oracle(g, blue, rule):
    """Final blue set, applying forces highest-target-first (a different
    canonical order than the library's, on purpose)."""
    blue = set(blue)
    while True:
        forces = applicable_oracle(g, blue, rule)
        if not forces:
            return blue
        target = max(t for _, t in forces)
        blue.add(target)


def brute_forcing(g, rule):
    """Minimum forcing set size by subset enumeration, smallest set first."""
    verts = list(g.vertices())
    for k in range(g.n + 1):
        for sub in combinations(verts, k):
            if closure_oracle(g, sub, rule) == set(verts):
                return k, set(sub)
    raise AssertionError


def gain_oracle(g, kind, v, done):
    """Gain set of v given the already-played prefix `done`."""
    if kind == "Zseq":
        return nbrs(g, v) - set().union(*[closed(g, w) for w in done], set())
    if kind == "Dominating":
        return closed(g, v) - set().union(*[closed(g, w) for w in done], set())
    if kind == "TotalDominating":
        return nbrs(g, v) - set().union(*[nbrs(g, w) for w in done], set())
    if kind == "Lseq":
        return closed(g, v) - set().union(*[nbrs(g, w) for w in done], set())
    raise ValueError(kind)


def is_valid_oracle(g, kind, seq):
    return all(gain_oracle(g, kind, v, seq[:i]) for i, v in enumerate(seq))


def brute_grundy(g, kind, allowed=None):
    """Maximum sequence length by exhaustive extension (no pruning)."""
    if allowed is None:
        allowed = set(g.vertices())
    best = [0, ()]

    def rec(seq):
        if len(seq) > best[0]:
            best[0], best[1] = len(seq), tuple(seq)
        for v in sorted(allowed - set(seq)):
            if gain_oracle(g, kind, v, seq):
                rec(seq + [v])

    rec([])
    return best[0], best[1]


def brute_gamma(g):
    verts = list(g.vertices())
    for k in range(g.n + 1):
        for sub in combinations(verts, k):
            if set().union(*[closed(g, v) for v in sub], set()) == set(verts):
                return k
    raise AssertionError


def brute_alpha(g):
    verts = list(g.vertices())
    for k in range(g.n, -1, -1):
        for sub in combinations(verts, k):
            if not any(g.has_edge(u, v) for u, v in combinations(sub, 2)):
                return k
    return 0


def brute_cc(g):
    """Minimum edge clique cover by enumerating covers over all cliques."""
    edges = g.edges()
    if not edges:
        return 0
    verts = list(g.vertices())
    cliques = []
    for k in range(2, g.n + 1):
        for sub in combinations(verts, k):
            if all(g.has_edge(u, v) for u, v in combinations(sub, 2)):
                cliques.append(sub)
    for k in range(1, len(edges) + 1):
        for combo in combinations(cliques, k):
            covered = set()
            for cl in combo:
                covered.update((min(u, v), max(u, v)) for u, v in combinations(cl, 2))
            if covered >= set(edges):
                return k
    raise AssertionError


def frac_rank(rows):
    """Plain Gaussian elimination over exact rationals."""
    m = [[Fraction(x) for x in row] for row in rows]
    nr = len(m)
    nc = len(m[0]) if nr else 0
    r = 0
    for c in range(nc):
        piv = next((i for i in range(r, nr) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(nr):
            if i != r and m[i][c] != 0:
                f = m[i][c] / m[r][c]
                for j in range(c, nc):
                    m[i][j] -= f * m[r][j]
        r += 1
    return r


def to_nx(g):
    out = nx.Graph()
    out.add_nodes_from(g.vertices())
    out.add_edges_from(g.edges())
    return out
