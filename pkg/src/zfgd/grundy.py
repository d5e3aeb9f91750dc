"""Greedy domination sequences of four kinds and their exact maximum lengths.

A sequence (v_1..v_k) of distinct vertices is valid when every step gains a
vertex its predecessors have not yet covered; what "covers" means depends on
the kind:

  kind              gain of v_i                footprint added by v_j
  Zseq              N(v_i) minus footprint     N[v_j]
  Dominating        N[v_i] minus footprint     N[v_j]
  TotalDominating   N(v_i) minus footprint     N(v_j)
  Lseq              N[v_i] minus footprint     N(v_j)
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from .forcing import ColorState, Rule
from .graphs import CapExceeded, Graph, bipartition, to_mask


class SeqKind(Enum):
    ZSEQ = "Zseq"
    DOMINATING = "Dominating"
    TOTAL = "TotalDominating"
    LSEQ = "Lseq"


KIND_FOR_RULE = {
    Rule.Z: SeqKind.ZSEQ,
    Rule.ZLD: SeqKind.DOMINATING,
    Rule.ZMINUS: SeqKind.TOTAL,
    Rule.ZL: SeqKind.LSEQ,
}
RULE_FOR_KIND = {kind: rule for rule, kind in KIND_FOR_RULE.items()}

# (gain uses closed neighborhood, footprint uses closed neighborhood)
_KIND_FLAGS = {
    SeqKind.ZSEQ: (False, True),
    SeqKind.DOMINATING: (True, True),
    SeqKind.TOTAL: (False, False),
    SeqKind.LSEQ: (True, False),
}


@dataclass(frozen=True)
class GrundySequence:
    """An ordered vertex list with one witness per step certifying its gain."""

    kind: SeqKind
    vertices: tuple[int, ...]
    witnesses: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.vertices)


def _tables(g: Graph, kind: SeqKind) -> tuple[list[int], list[int]]:
    gain_closed, foot_closed = _KIND_FLAGS[kind]
    base = [g.adj[i] | (1 << i) if gain_closed else g.adj[i] for i in range(g.n)]
    foot = [g.adj[i] | (1 << i) if foot_closed else g.adj[i] for i in range(g.n)]
    return base, foot


def is_valid_sequence(g: Graph, kind: SeqKind,
                      vertices: Sequence[int]) -> tuple[bool, tuple[int, ...]]:
    """Check the per-step gain condition; witnesses are smallest-index gains.

    Repeated or out-of-range vertices are input errors, not mere invalidity.
    """
    verts = tuple(vertices)
    if len(set(verts)) != len(verts):
        raise ValueError("repeated vertex in sequence")
    for v in verts:
        if not 1 <= v <= g.n:
            raise ValueError(f"vertex {v} out of range 1..{g.n}")
    base, foot = _tables(g, kind)
    footprint = 0
    wits = []
    for v in verts:
        gain = base[v - 1] & ~footprint
        if not gain:
            return False, ()
        wits.append((gain & -gain).bit_length())
        footprint |= foot[v - 1]
    return True, tuple(wits)


def _search_max(base: list[int], foot: list[int], allowed: int,
                self_gain: bool) -> tuple[int, tuple[int, ...]]:
    """Branch-and-bound maximum over valid sequences within the allowed set.

    Candidates are ordered by descending gain size so the greedy extension is
    explored first.  Two admissible bounds cap every completion: the number
    of remaining candidates (gains only shrink as footprints grow), and the
    number of still-coverable vertices (each step's witness is new, so steps
    whose gain lies inside their footprint contribution cover fresh ground;
    self_gain marks the one kind that can also spend an uncovered candidate
    on itself without covering anything).
    """
    best_len = 0
    best_path: tuple[int, ...] = ()

    def rec(used: int, footprint: int, path: list[int]) -> None:
        nonlocal best_len, best_path
        if len(path) > best_len:
            best_len = len(path)
            best_path = tuple(path)
        cands = []
        cand_mask = 0
        reach = 0
        rem = allowed & ~used
        while rem:
            low = rem & -rem
            v = low.bit_length() - 1
            rem ^= low
            gain = base[v] & ~footprint
            if gain:
                cands.append((-gain.bit_count(), v))
                cand_mask |= low
                reach |= foot[v]
        potential = (reach & ~footprint).bit_count()
        if self_gain:
            potential += (cand_mask & ~footprint).bit_count()
        if len(path) + min(len(cands), potential) <= best_len:
            return
        cands.sort()
        for _, v in cands:
            path.append(v)
            rec(used | (1 << v), footprint | foot[v], path)
            path.pop()

    rec(0, 0, [])
    return best_len, best_path


def _search_lex(base: list[int], foot: list[int], allowed: int, target: int,
                self_gain: bool) -> tuple[int, ...]:
    """First sequence of the target length in ascending-index DFS order.

    Prefixes of valid sequences are valid and DFS visits equal-length
    sequences lexicographically, so the first hit is the lexicographically
    smallest optimal sequence.
    """
    if target == 0:
        return ()

    def rec(used: int, footprint: int, path: list[int]) -> tuple[int, ...] | None:
        cands = []
        cand_mask = 0
        reach = 0
        rem = allowed & ~used
        while rem:
            low = rem & -rem
            v = low.bit_length() - 1
            rem ^= low
            if base[v] & ~footprint:
                cands.append(v)
                cand_mask |= low
                reach |= foot[v]
        potential = (reach & ~footprint).bit_count()
        if self_gain:
            potential += (cand_mask & ~footprint).bit_count()
        if len(path) + min(len(cands), potential) < target:
            return None
        for v in cands:
            path.append(v)
            if len(path) == target:
                return tuple(path)
            got = rec(used | (1 << v), footprint | foot[v], path)
            if got is not None:
                return got
            path.pop()
        return None

    found = rec(0, 0, [])
    assert found is not None
    return found


def _search_memo(base: list[int], foot: list[int], allowed: int) -> tuple[int, tuple[int, ...]]:
    """Exact DP over used-sets.

    The footprint is a function of the used set, so states are just subsets:
    permutations of a prefix collapse into one entry, which beats plain
    branch and bound by orders of magnitude on sparse graphs.  Reconstruction
    picks the smallest vertex achieving the optimum at every step, so the
    result is lexicographically canonical.
    """
    memo: dict[int, int] = {}

    def value(used: int, footprint: int) -> int:
        got = memo.get(used)
        if got is not None:
            return got
        best = 0
        rem = allowed & ~used
        while rem:
            low = rem & -rem
            v = low.bit_length() - 1
            rem ^= low
            if base[v] & ~footprint:
                ext = 1 + value(used | low, footprint | foot[v])
                if ext > best:
                    best = ext
        memo[used] = best
        return best

    total = value(0, 0)
    path = []
    used = 0
    footprint = 0
    need = total
    while need:
        rem = allowed & ~used
        while rem:
            low = rem & -rem
            v = low.bit_length() - 1
            rem ^= low
            if base[v] & ~footprint and \
                    1 + value(used | low, footprint | foot[v]) == need:
                path.append(v)
                used |= low
                footprint |= foot[v]
                need -= 1
                break
    return total, tuple(path)


def _witnesses(base: list[int], foot: list[int], path: tuple[int, ...]) -> tuple[int, ...]:
    footprint = 0
    wits = []
    for v in path:
        gain = base[v] & ~footprint
        wits.append((gain & -gain).bit_length())
        footprint |= foot[v]
    return tuple(wits)


_MEMO_AUTO_MAX = 16  # above this the used-set table gets too large; fall back to B&B


def _solve(g: Graph, kind: SeqKind, allowed: int, max_n: int,
           deterministic: bool, use_memo: bool | None) -> tuple[int, GrundySequence]:
    if g.n > max_n:
        raise CapExceeded(f"n={g.n} above the sequence-solver cap {max_n}")
    base, foot = _tables(g, kind)
    self_gain = kind is SeqKind.LSEQ  # gain may be the vertex itself, outside its footprint
    if use_memo is None:
        use_memo = allowed.bit_count() <= _MEMO_AUTO_MAX
    if use_memo:
        k, path = _search_memo(base, foot, allowed)
    else:
        k, path = _search_max(base, foot, allowed, self_gain)
        if deterministic:
            path = _search_lex(base, foot, allowed, k, self_gain)
    seq = GrundySequence(kind, tuple(v + 1 for v in path), _witnesses(base, foot, path))
    return k, seq


def grundy_number(g: Graph, kind: SeqKind, *, max_n: int = 20,
                  deterministic: bool = False, use_memo: bool | None = None,
                  split_bipartite: bool = False) -> tuple[int, GrundySequence]:
    """Exact maximum sequence length of the given kind, with an optimal sequence.

    use_memo selects the used-set DP (automatic up to 16 candidate vertices,
    branch and bound beyond; pass True/False to force either).

    split_bipartite solves the TotalDominating kind side-by-side on a
    bipartition when one exists: steps on one side only ever cover the other,
    so valid sequences are exactly the interleavings of valid one-sided
    sequences and the maxima add.  This makes tripled-product graphs
    tractable; the returned certificate is the two one-sided optima
    concatenated (canonical per side under deterministic, not globally
    lexicographic).
    """
    if split_bipartite and kind is SeqKind.TOTAL:
        parts = bipartition(g)
        if parts is not None:
            kx, sx = _solve(g, kind, to_mask(parts[0]), max_n, deterministic, use_memo)
            ky, sy = _solve(g, kind, to_mask(parts[1]), max_n, deterministic, use_memo)
            seq = GrundySequence(kind, sx.vertices + sy.vertices,
                                 sx.witnesses + sy.witnesses)
            return kx + ky, seq
    return _solve(g, kind, g.full_mask, max_n, deterministic, use_memo)


def grundy_total_restricted(g: Graph, x: Iterable[int], *, max_n: int = 20,
                            deterministic: bool = False,
                            use_memo: bool | None = None) -> tuple[int, GrundySequence]:
    """Maximum TotalDominating sequence length using vertices from x only."""
    allowed = to_mask(x)
    if allowed & ~g.full_mask:
        raise ValueError("restriction set contains vertices outside the graph")
    return _solve(g, SeqKind.TOTAL, allowed, max_n, deterministic, use_memo)


def sequence_from_game(g: Graph, state: ColorState, rule: Rule) -> GrundySequence:
    """Reversed chronological targets of a successful game, actors as witnesses."""
    if state.blue != frozenset(g.vertices()):
        raise ValueError("game is not successful: white vertices remain")
    targets = [f.target for f in state.history]
    if len(set(targets)) != len(targets):
        raise ValueError("chronological list repeats a target")
    kind = KIND_FOR_RULE[rule]
    vertices = tuple(reversed(targets))
    witnesses = tuple(f.actor for f in reversed(state.history))
    base, foot = _tables(g, kind)
    footprint = 0
    for v, u in zip(vertices, witnesses):
        gain = base[v - 1] & ~footprint
        if not (gain >> (u - 1)) & 1:
            raise ValueError(f"history is not a legal game under {rule.value}: "
                             f"actor {u} does not certify step {v}")
        footprint |= foot[v - 1]
    return GrundySequence(kind, vertices, witnesses)
