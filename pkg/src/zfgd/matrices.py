"""Exact integer matrices: fraction-free rank, graph pattern families, witnesses.

All arithmetic is exact (Python integers); no floating point is used anywhere,
since the certified ranks are small and near-singular samples are common.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from .graphs import Graph, ParseError


class PatternKind(Enum):
    S = "S"                # symmetric, off-diagonal support = E(G), free diagonal
    S_LOOP = "S_loop"      # every diagonal entry nonzero
    S_ZERO = "S_zero"      # every diagonal entry zero
    L_PAIR = "L_pair"      # n x 2n, left block S_loop, right block S_zero


@dataclass(frozen=True)
class IntMatrix:
    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.rows:
            raise ValueError("row count mismatch")
        for row in self.entries:
            if len(row) != self.cols:
                raise ValueError("ragged matrix")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "IntMatrix":
        ent = tuple(tuple(int(x) for x in row) for row in rows)
        return cls(len(ent), len(ent[0]) if ent else 0, ent)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls.from_rows([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, tuple((0,) * cols for _ in range(rows)))


def hstack(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    if a.rows != b.rows:
        raise ValueError("row count mismatch in hstack")
    return IntMatrix(a.rows, a.cols + b.cols,
                     tuple(ra + rb for ra, rb in zip(a.entries, b.entries)))


def rank_exact(m: IntMatrix) -> int:
    """Exact rank over the rationals via fraction-free (Bareiss) elimination.

    One-step Bareiss: every division by the previous pivot is exact by
    Sylvester's identity; a nonzero remainder would mean corrupted input.
    """
    a = [list(row) for row in m.entries]
    nr, nc = m.rows, m.cols
    rank = 0
    prev = 1
    for col in range(nc):
        piv = next((r for r in range(rank, nr) if a[r][col]), None)
        if piv is None:
            continue
        if piv != rank:
            a[rank], a[piv] = a[piv], a[rank]
        pv = a[rank][col]
        prow = a[rank]
        for r in range(rank + 1, nr):
            row = a[r]
            arc = row[col]
            for c in range(col + 1, nc):
                q, rem = divmod(pv * row[c] - arc * prow[c], prev)
                if rem:
                    raise ArithmeticError("fraction-free elimination invariant violated")
                row[c] = q
            row[col] = 0
        prev = pv
        rank += 1
    return rank


def _square_member(m: IntMatrix, g: Graph, diag: str) -> bool:
    ent = m.entries
    n = g.n
    for i in range(n):
        if diag == "nonzero" and ent[i][i] == 0:
            return False
        if diag == "zero" and ent[i][i] != 0:
            return False
        for j in range(i + 1, n):
            if ent[i][j] != ent[j][i]:
                return False
            if (ent[i][j] != 0) != g.has_edge(i + 1, j + 1):
                return False
    return True


def pattern_member(m: IntMatrix, g: Graph, p: PatternKind) -> bool:
    """Whether m lies in the pattern family of g (support, diagonal, symmetry)."""
    n = g.n
    if p is PatternKind.L_PAIR:
        if m.rows != n or m.cols != 2 * n:
            raise ValueError(f"expected a {n}x{2 * n} matrix, got {m.rows}x{m.cols}")
        left = IntMatrix.from_rows([row[:n] for row in m.entries])
        right = IntMatrix.from_rows([row[n:] for row in m.entries])
        return _square_member(left, g, "nonzero") and _square_member(right, g, "zero")
    if m.rows != n or m.cols != n:
        raise ValueError(f"expected a {n}x{n} matrix, got {m.rows}x{m.cols}")
    diag = {PatternKind.S: "free", PatternKind.S_LOOP: "nonzero",
            PatternKind.S_ZERO: "zero"}[p]
    return _square_member(m, g, diag)


# ---------------------------------------------------------------------------
# fixed witness matrices used by the regression suite

def _circulant5(shifts: Iterable[int]) -> list[list[int]]:
    return [[1 if (j - i) % 5 in shifts else 0 for j in range(5)] for i in range(5)]


def witness_matrix(name: str) -> IntMatrix:
    """Named rank witnesses: petersen_A, petersen_B (10x10), k33_C (6x12)."""
    if name in ("petersen_A", "petersen_B"):
        c = _circulant5((1, 4))    # pentagon on the outer vertices
        cp = _circulant5((2, 3))   # pentagram on the inner vertices
        eye = [[1 if i == j else 0 for j in range(5)] for i in range(5)]
        if name == "petersen_A":
            tl = [[c[i][j] - eye[i][j] for j in range(5)] for i in range(5)]
            br = [[cp[i][j] - eye[i][j] for j in range(5)] for i in range(5)]
        else:
            tl = [[-x for x in row] for row in c]
            br = cp
        rows = [tl[i] + eye[i] for i in range(5)] + [eye[i] + br[i] for i in range(5)]
        return IntMatrix.from_rows(rows)
    if name == "k33_C":
        return IntMatrix.from_rows([
            [3, 0, 0, 1, 1, -2, 0, 0, 0, 1, 1, 1],
            [0, 3, 0, 1, -2, 1, 0, 0, 0, 1, 1, 1],
            [0, 0, 3, -2, 1, 1, 0, 0, 0, 1, 1, 1],
            [1, 1, -2, 3, 0, 0, 1, 1, 1, 0, 0, 0],
            [1, -2, 1, 0, 3, 0, 1, 1, 1, 0, 0, 0],
            [-2, 1, 1, 0, 0, 3, 1, 1, 1, 0, 0, 0],
        ])
    raise ValueError(f"unknown witness matrix {name!r}")


# ---------------------------------------------------------------------------
# sampling within a pattern family

def _nonzero(rng: random.Random, bound: int) -> int:
    v = rng.randint(-bound, bound - 1)
    return v + 1 if v >= 0 else v


def sample_pattern_matrix(g: Graph, p: PatternKind, rng: random.Random,
                          entry_bound: int = 10) -> IntMatrix:
    """One random member of the pattern family.

    Draw order is fixed (edge entries in row-major i<j order, then the
    diagonal ascending; for L_pair the left block is drawn before the right),
    so a seeded rng gives identical matrices everywhere.
    """
    if p is PatternKind.L_PAIR:
        a = sample_pattern_matrix(g, PatternKind.S_LOOP, rng, entry_bound)
        b = sample_pattern_matrix(g, PatternKind.S_ZERO, rng, entry_bound)
        return hstack(a, b)
    n = g.n
    ent = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if g.has_edge(i + 1, j + 1):
                e = _nonzero(rng, entry_bound)
                ent[i][j] = ent[j][i] = e
    for i in range(n):
        if p is PatternKind.S:
            ent[i][i] = rng.randint(-entry_bound, entry_bound)
        elif p is PatternKind.S_LOOP:
            ent[i][i] = _nonzero(rng, entry_bound)
    return IntMatrix.from_rows(ent)


def sample_rank_bound(g: Graph, p: PatternKind, trials: int = 32, seed: int = 0,
                      entry_bound: int = 10) -> tuple[int, int]:
    """(smallest rank seen, n minus it) over seeded random pattern members.

    The first component is an upper bound on the minimum rank of the family,
    the second a lower bound on the matching maximum nullity.  Trial t uses
    the derived seed "{seed}:{t}", so results are reproducible and
    schedule-independent.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if entry_bound < 1:
        raise ValueError("entry_bound must be >= 1")
    best = None
    for t in range(trials):
        rng = random.Random(f"{seed}:{t}")
        r = rank_exact(sample_pattern_matrix(g, p, rng, entry_bound))
        if best is None or r < best:
            best = r
    return best, g.n - best


# ---------------------------------------------------------------------------
# constructive bounds

def clique_cover_matrix(g: Graph, cliques: Iterable[Iterable[int]],
                        ) -> tuple[IntMatrix, tuple[frozenset[int], ...]]:
    """Sum of all-ones blocks, one per clique of an edge cover.

    Vertices lying in no given clique get an automatic singleton clique so
    the result has a fully nonzero diagonal; the returned clique tuple is the
    actual (patched) list used, whose length bounds the rank.
    """
    used = []
    covered_edges = set()
    covered_vertices = set()
    for cl in cliques:
        cs = frozenset(cl)
        if not cs:
            raise ValueError("empty clique")
        members = sorted(cs)
        for a in range(len(members)):
            for b in range(a + 1, len(members)):
                if not g.has_edge(members[a], members[b]):
                    raise ValueError(f"{members} is not a clique: "
                                     f"{members[a]} !~ {members[b]}")
                covered_edges.add((members[a], members[b]))
        used.append(cs)
        covered_vertices |= cs
    missing = [e for e in g.edges() if e not in covered_edges]
    if missing:
        raise ValueError(f"edge {missing[0]} not covered by any clique")
    for v in g.vertices():
        if v not in covered_vertices:
            used.append(frozenset((v,)))
    ent = [[0] * g.n for _ in range(g.n)]
    for cs in used:
        for i in cs:
            for j in cs:
                ent[i - 1][j - 1] += 1
    return IntMatrix.from_rows(ent), tuple(used)


def embed_L_block(g: Graph, a: IntMatrix, b: IntMatrix) -> IntMatrix:
    """3n x 3n symmetric embedding [[0,A,B],[A,0,0],[B,0,0]] of a valid pair.

    The result lies in the all-zero-diagonal family of the tripled bipartite
    product of g and has exactly twice the rank of [A B].
    """
    if not pattern_member(a, g, PatternKind.S_LOOP):
        raise ValueError("left block is not a nonzero-diagonal pattern member")
    if not pattern_member(b, g, PatternKind.S_ZERO):
        raise ValueError("right block is not a zero-diagonal pattern member")
    n = g.n
    rows = []
    for i in range(n):
        rows.append((0,) * n + a.entries[i] + b.entries[i])
    for i in range(n):
        rows.append(a.entries[i] + (0,) * (2 * n))
    for i in range(n):
        rows.append(b.entries[i] + (0,) * (2 * n))
    return IntMatrix(3 * n, 3 * n, tuple(rows))


# ---------------------------------------------------------------------------
# text and JSON formats

def parse_matrix(text: str) -> IntMatrix:
    """Parse 'rows cols' header plus space-separated integer rows."""
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise ParseError("empty matrix text")
    head = lines[0].split()
    if len(head) != 2:
        raise ParseError("line 1: expected 'rows cols'")
    try:
        rows, cols = int(head[0]), int(head[1])
    except ValueError:
        raise ParseError("line 1: non-integer dimensions") from None
    if rows < 0 or cols < 0:
        raise ParseError("line 1: negative dimensions")
    if len(lines) - 1 != rows:
        raise ParseError(f"expected {rows} data rows, got {len(lines) - 1}")
    ent = []
    for idx, line in enumerate(lines[1:], start=2):
        toks = line.split()
        if len(toks) != cols:
            raise ParseError(f"line {idx}: expected {cols} entries, got {len(toks)}")
        try:
            ent.append(tuple(int(t) for t in toks))
        except ValueError:
            raise ParseError(f"line {idx}: non-integer entry") from None
    return IntMatrix(rows, cols, tuple(ent))


def format_matrix(m: IntMatrix) -> str:
    lines = [f"{m.rows} {m.cols}"]
    lines += [" ".join(str(x) for x in row) for row in m.entries]
    return "\n".join(lines) + "\n"


def matrix_to_json_dict(m: IntMatrix) -> dict:
    return {"rows": m.rows, "cols": m.cols, "entries": [list(r) for r in m.entries]}
