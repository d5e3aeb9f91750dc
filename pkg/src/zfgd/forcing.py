"""Color-change propagation games: four rules, closures, and exact forcing numbers.

Rule semantics, with w = set of white open neighbors of the actor x:
  Z       x blue and |w| = 1        -> forces the white neighbor
  Zld     x blue and |w| = 1        -> forces the white neighbor
          x white and w empty       -> forces itself
  Zminus  |w| = 1 (x any color)     -> forces the white neighbor
  ZL      |w| = 1 (x any color)     -> forces the white neighbor
          x white and w empty       -> forces itself
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from enum import Enum
from typing import Iterable

from .graphs import CapExceeded, Graph, from_mask, to_mask


class Rule(Enum):
    Z = "Z"
    ZLD = "Zld"
    ZMINUS = "Zminus"
    ZL = "ZL"


# (open force needs a blue actor, actor may force itself)
_RULE_FLAGS = {
    Rule.Z: (True, False),
    Rule.ZLD: (True, True),
    Rule.ZMINUS: (False, False),
    Rule.ZL: (False, True),
}


class CrossCheckError(RuntimeError):
    """Direct and dual solvers disagreed; signals a solver bug."""


@dataclass(frozen=True)
class ForceRecord:
    """One performed force actor -> target (1-based labels).

    via is "closed" exactly when the actor forced itself, "open" otherwise;
    it is filled in automatically when omitted.
    """

    actor: int
    target: int
    via: str = ""

    def __post_init__(self):
        expected = "closed" if self.actor == self.target else "open"
        if self.via == "":
            object.__setattr__(self, "via", expected)
        elif self.via != expected:
            raise ValueError(f"force {self.actor}->{self.target} cannot be via={self.via!r}")


@dataclass(frozen=True)
class ColorState:
    """Blue set plus the chronological list of performed forces."""

    blue: frozenset[int]
    history: tuple[ForceRecord, ...] = ()

    def initial_blue(self) -> frozenset[int]:
        return self.blue - {f.target for f in self.history}


def _blue_mask(g: Graph, blue: Iterable[int]) -> int:
    m = to_mask(blue)
    if m & ~g.full_mask:
        raise ValueError("blue set contains vertices outside the graph")
    return m


def _actor_force(adj_x: int, blue: int, x: int, needs_blue: bool, allow_self: bool) -> int:
    """Target bit vector of the unique legal force from actor x, or 0."""
    w = adj_x & ~blue
    if w:
        if not (w & (w - 1)) and (not needs_blue or (blue >> x) & 1):
            return w
        return 0
    if allow_self and not (blue >> x) & 1:
        return 1 << x
    return 0


def _closure_mask(g: Graph, blue: int, rule: Rule) -> int:
    """Final blue set from repeated forcing; order-independent."""
    needs_blue, allow_self = _RULE_FLAGS[rule]
    adj = g.adj
    n = g.n
    changed = True
    while changed:
        changed = False
        for x in range(n):
            w = adj[x] & ~blue
            if w:
                if not (w & (w - 1)) and (not needs_blue or (blue >> x) & 1):
                    blue |= w
                    changed = True
            elif allow_self and not (blue >> x) & 1:
                blue |= 1 << x
                changed = True
    return blue


def applicable_forces(g: Graph, state: ColorState | Iterable[int], rule: Rule) -> list[ForceRecord]:
    """All currently legal forces, in ascending (actor, target) order.

    Each actor admits at most one legal force per rule, so the list has at
    most n entries.
    """
    blue = state.blue if isinstance(state, ColorState) else state
    mask = _blue_mask(g, blue)
    needs_blue, allow_self = _RULE_FLAGS[rule]
    out = []
    for x in range(g.n):
        t = _actor_force(g.adj[x], mask, x, needs_blue, allow_self)
        if t:
            out.append(ForceRecord(x + 1, t.bit_length()))
    return out


def closure(g: Graph, initial: Iterable[int], rule: Rule) -> ColorState:
    """Repeatedly apply the first applicable force in (actor, target) order.

    The final blue set is order-independent; the returned chronological list
    is the canonical one.
    """
    blue = _blue_mask(g, initial)
    needs_blue, allow_self = _RULE_FLAGS[rule]
    adj = g.adj
    n = g.n
    hist = []
    progressing = True
    while progressing:
        progressing = False
        for x in range(n):
            t = _actor_force(adj[x], blue, x, needs_blue, allow_self)
            if t:
                blue |= t
                hist.append(ForceRecord(x + 1, t.bit_length()))
                progressing = True
                break
    return ColorState(frozenset(from_mask(blue)), tuple(hist))


def closure_random_order(g: Graph, initial: Iterable[int], rule: Rule,
                         rng: random.Random) -> ColorState:
    """Like closure, but applying a uniformly random applicable force each step."""
    blue = _blue_mask(g, initial)
    needs_blue, allow_self = _RULE_FLAGS[rule]
    hist = []
    while True:
        forces = []
        for x in range(g.n):
            t = _actor_force(g.adj[x], blue, x, needs_blue, allow_self)
            if t:
                forces.append((x, t))
        if not forces:
            break
        x, t = rng.choice(forces)
        blue |= t
        hist.append(ForceRecord(x + 1, t.bit_length()))
    return ColorState(frozenset(from_mask(blue)), tuple(hist))


def is_forcing_set(g: Graph, b: Iterable[int], rule: Rule) -> bool:
    return _closure_mask(g, _blue_mask(g, b), rule) == g.full_mask


def _zfn_direct(g: Graph, rule: Rule) -> tuple[int, frozenset[int]]:
    """Exact minimum by subset enumeration, size-major then lexicographic.

    Returns the lexicographically smallest minimum forcing set.
    """
    full = g.full_mask
    for k in range(g.n + 1):
        for combo in itertools.combinations(range(g.n), k):
            m = 0
            for i in combo:
                m |= 1 << i
            if _closure_mask(g, m, rule) == full:
                return k, frozenset(i + 1 for i in combo)
    raise AssertionError("V(G) always forces")  # pragma: no cover


def zero_forcing_number(g: Graph, rule: Rule, method: str = "dual", *,
                        max_n: int = 20,
                        deterministic: bool = False) -> tuple[int, frozenset[int]]:
    """Exact forcing number and a minimum forcing set.

    method "direct" enumerates candidate sets; "dual" complements an optimal
    Grundy sequence of the paired kind; "cross_check" runs both and raises
    CrossCheckError on disagreement.
    """
    if method not in ("direct", "dual", "cross_check"):
        raise ValueError(f"unknown method {method!r}")
    if g.n > max_n:
        raise CapExceeded(f"n={g.n} above the forcing-solver cap {max_n}")
    if method == "direct":
        return _zfn_direct(g, rule)

    from .grundy import KIND_FOR_RULE, grundy_number

    k, seq = grundy_number(g, KIND_FOR_RULE[rule], max_n=max_n,
                           deterministic=deterministic)
    witness = frozenset(g.vertices()) - set(seq.vertices)
    if method == "cross_check":
        dk, dwitness = _zfn_direct(g, rule)
        if dk != g.n - k:
            raise CrossCheckError(
                f"rule {rule.value}: direct {dk} vs dual {g.n - k} on n={g.n}")
        return dk, dwitness
    return g.n - k, witness


def game_from_sequence(g: Graph, seq) -> ColorState:
    """Successful game whose chronological targets are the reverse of seq.

    The actor at each step is the smallest-index witness of the corresponding
    sequence step, per the sequence/game correspondence.
    """
    from .grundy import RULE_FOR_KIND, is_valid_sequence

    ok, wits = is_valid_sequence(g, seq.kind, seq.vertices)
    if not ok:
        raise ValueError(f"not a valid {seq.kind.value} sequence: {seq.vertices}")
    rule = RULE_FOR_KIND[seq.kind]
    needs_blue, allow_self = _RULE_FLAGS[rule]
    blue = g.full_mask & ~to_mask(seq.vertices)
    hist = []
    for v, u in zip(reversed(seq.vertices), reversed(wits)):
        t = _actor_force(g.adj[u - 1], blue, u - 1, needs_blue, allow_self)
        if t != 1 << (v - 1):  # pragma: no cover - guaranteed by the correspondence
            raise AssertionError(f"replay failed at {u}->{v}")
        blue |= t
        hist.append(ForceRecord(u, v))
    return ColorState(frozenset(from_mask(blue)), tuple(hist))
