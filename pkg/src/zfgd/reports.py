"""Whole-graph parameter reports, the cross-parameter invariant battery, sweeps."""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass
from typing import Iterable

from . import bounds as bounds_mod
from . import forcing, grundy, matrices
from .graphs import (CapExceeded, Graph, bipartition, build_BL, encode_graph6,
                     from_mask, parse_graph6)
from .forcing import Rule
from .grundy import KIND_FOR_RULE, RULE_FOR_KIND, SeqKind
from .matrices import PatternKind

_RULES = (Rule.Z, Rule.ZLD, Rule.ZMINUS, Rule.ZL)
_DIRECT_AUTO_MAX = 10  # above this, "auto" switches the forcing side to the dual method


@dataclass
class ParameterReport:
    """All eight parameters of one graph plus bounds, residuals, certificates."""

    graph6: str
    n: int
    m: int
    method: str
    forcing: dict
    grundy: dict
    z_loop: int
    residuals: dict
    bounds: dict
    order_violations: tuple
    certificates: dict
    timings: dict


@dataclass(frozen=True)
class InvariantOutcome:
    invariant: str
    statement: str
    graph6: str
    status: str  # "pass" | "fail" | "skip"
    detail: dict | None = None


def _seq_dict(seq: grundy.GrundySequence) -> dict:
    return {"kind": seq.kind.value, "vertices": list(seq.vertices),
            "witnesses": list(seq.witnesses)}


def compute_all(g: Graph, *, method: str = "auto", max_n: int = 20,
                max_n_cc: int = 16, deterministic: bool = False,
                include_cc: bool = True) -> ParameterReport:
    """Populate every parameter of one graph; residuals must all be zero.

    method "auto" solves the forcing side directly for n <= 10 and by the
    dual otherwise, so the duality residuals stay a genuine cross-check on
    small graphs.
    """
    if g.n > max_n:
        raise CapExceeded(f"n={g.n} above the report cap {max_n}")
    if method == "auto":
        method = "direct" if g.n <= _DIRECT_AUTO_MAX else "dual"
    timings: dict = {}

    gd_vals: dict = {}
    gd_seqs: dict = {}
    for kind in (SeqKind.ZSEQ, SeqKind.DOMINATING, SeqKind.TOTAL, SeqKind.LSEQ):
        t0 = time.perf_counter()
        k, seq = grundy.grundy_number(g, kind, max_n=max_n, deterministic=deterministic)
        timings[f"grundy.{kind.value}"] = time.perf_counter() - t0
        gd_vals[kind.value] = k
        gd_seqs[kind.value] = seq

    z_vals: dict = {}
    z_sets: dict = {}
    for rule in _RULES:
        t0 = time.perf_counter()
        k, witness = forcing.zero_forcing_number(g, rule, method, max_n=max_n,
                                                 deterministic=deterministic)
        timings[f"forcing.{rule.value}"] = time.perf_counter() - t0
        z_vals[rule.value] = k
        z_sets[rule.value] = witness

    residuals = {rule.value:
                 z_vals[rule.value] + gd_vals[KIND_FOR_RULE[rule].value] - g.n
                 for rule in _RULES}

    t0 = time.perf_counter()
    br = bounds_mod.combinatorial_bounds(g, max_n=max_n, max_n_cc=max(max_n_cc, 0),
                                         include_cc=include_cc and g.n <= max_n_cc)
    timings["bounds"] = time.perf_counter() - t0

    violations = []
    gZ, ggr, gdt, gdL = (gd_vals["Zseq"], gd_vals["Dominating"],
                         gd_vals["TotalDominating"], gd_vals["Lseq"])
    for label, ok in (("gdZ<=gdt", gZ <= gdt), ("gdZ<=ggr", gZ <= ggr),
                      ("gdt<=gdL", gdt <= gdL), ("ggr<=gdL", ggr <= gdL),
                      ("ZL<=Zld", z_vals["ZL"] <= z_vals["Zld"]),
                      ("Zld<=Z", z_vals["Zld"] <= z_vals["Z"]),
                      ("ZL<=Zminus", z_vals["ZL"] <= z_vals["Zminus"]),
                      ("Zminus<=Z", z_vals["Zminus"] <= z_vals["Z"])):
        if not ok:
            violations.append(label)

    certificates = {
        "forcing_sets": {r.value: sorted(z_sets[r.value]) for r in _RULES},
        "sequences": {k: _seq_dict(s) for k, s in gd_seqs.items()},
        "independent_set": sorted(br.independent_set),
        "vertex_cover": sorted(br.vertex_cover),
        "dominating_set": sorted(br.dominating_set),
        "clique_cover": None if br.clique_cover is None
        else [sorted(c) for c in br.clique_cover],
    }
    return ParameterReport(
        graph6=encode_graph6(g), n=g.n, m=g.m, method=method,
        forcing=z_vals, grundy=gd_vals,
        z_loop=z_vals["Zld"] + len(g.isolated()),
        residuals=residuals,
        bounds={"alpha": br.alpha, "beta": br.beta, "gamma": br.gamma, "cc": br.cc},
        order_violations=tuple(violations),
        certificates=certificates,
        timings=timings,
    )


def report_to_json_dict(r: ParameterReport) -> dict:
    return {
        "graph6": r.graph6, "n": r.n, "m": r.m, "method": r.method,
        "forcing": r.forcing, "grundy": r.grundy, "Zl": r.z_loop,
        "residuals": r.residuals, "bounds": r.bounds,
        "order_violations": list(r.order_violations),
        "certificates": r.certificates, "timings": r.timings,
    }


def report_from_json_dict(d: dict) -> ParameterReport:
    return ParameterReport(
        graph6=d["graph6"], n=d["n"], m=d["m"], method=d["method"],
        forcing=dict(d["forcing"]), grundy=dict(d["grundy"]), z_loop=d["Zl"],
        residuals=dict(d["residuals"]), bounds=dict(d["bounds"]),
        order_violations=tuple(d["order_violations"]),
        certificates=d["certificates"], timings=dict(d["timings"]),
    )


def validate_report(r: ParameterReport, g: Graph | None = None) -> list[str]:
    """Re-derive every checkable claim in a report; returns problem strings."""
    problems = []
    if g is None:
        g = parse_graph6(r.graph6)
    if r.n != g.n or r.m != g.m:
        problems.append("size fields disagree with the graph")
    for rule_name, residual in r.residuals.items():
        if residual != 0:
            problems.append(f"nonzero duality residual for {rule_name}")
    if r.order_violations:
        problems.append(f"order violations: {r.order_violations}")
    for rule in _RULES:
        witness = r.certificates["forcing_sets"][rule.value]
        if len(witness) != r.forcing[rule.value]:
            problems.append(f"forcing witness size mismatch for {rule.value}")
        if not forcing.is_forcing_set(g, witness, rule):
            problems.append(f"forcing witness for {rule.value} does not force")
    for kind in (SeqKind.ZSEQ, SeqKind.DOMINATING, SeqKind.TOTAL, SeqKind.LSEQ):
        sd = r.certificates["sequences"][kind.value]
        ok, _ = grundy.is_valid_sequence(g, kind, sd["vertices"])
        if not ok:
            problems.append(f"invalid optimal sequence for {kind.value}")
        if len(sd["vertices"]) != r.grundy[kind.value]:
            problems.append(f"sequence length mismatch for {kind.value}")
    ind = r.certificates["independent_set"]
    if len(ind) != r.bounds["alpha"]:
        problems.append("alpha certificate size mismatch")
    if any(g.has_edge(u, v) for i, u in enumerate(ind) for v in ind[i + 1:]):
        problems.append("independent set certificate has an edge")
    if r.bounds["alpha"] + r.bounds["beta"] != g.n:
        problems.append("alpha + beta != n")
    dom = set()
    for v in r.certificates["dominating_set"]:
        dom.add(v)
        dom.update(g.neighbors(v))
    if len(dom) != g.n or len(r.certificates["dominating_set"]) != r.bounds["gamma"]:
        problems.append("dominating set certificate fails")
    if r.bounds["cc"] is not None:
        cover = r.certificates["clique_cover"]
        if len(cover) != r.bounds["cc"]:
            problems.append("clique cover size mismatch")
        covered = set()
        for cl in cover:
            for i, u in enumerate(cl):
                for v in cl[i + 1:]:
                    if not g.has_edge(u, v):
                        problems.append(f"clique cover contains a non-clique {cl}")
                    covered.add((min(u, v), max(u, v)))
        if set(g.edges()) - covered:
            problems.append("clique cover misses an edge")
    if r.z_loop != r.forcing["Zld"] + len(g.isolated()):
        problems.append("derived loop-forcing value mismatch")
    return problems


# ---------------------------------------------------------------------------
# invariant battery

def _sample_initial_sets(g: Graph, rng: random.Random, count: int) -> list[int]:
    """A few initial blue sets: empty, full, and random subsets."""
    sets = [0, g.full_mask]
    for _ in range(max(0, count - 2)):
        sets.append(rng.getrandbits(g.n) if g.n else 0)
    return sets


def verify_invariants(g: Graph, seed: int = 0, *, trials: int = 8,
                      entry_bound: int = 10, max_n: int = 20, max_n_cc: int = 16,
                      bl_max_n: int = 6, orders: int = 20,
                      order_sets: int = 4) -> list[InvariantOutcome]:
    """Run the full cross-module invariant battery on one graph.

    Failures are data (returned outcomes), never exceptions.  Checks whose
    precondition the graph does not meet are reported as skipped with the
    reason; product-based checks are capped at bl_max_n.
    """
    if g.n > max_n:
        raise CapExceeded(f"n={g.n} above the battery cap {max_n}")
    g6 = encode_graph6(g)
    outcomes: list[InvariantOutcome] = []

    def record(iid: str, statement: str, ok: bool, detail: dict | None = None):
        outcomes.append(InvariantOutcome(
            iid, statement, g6, "pass" if ok else "fail",
            None if ok else {"seed": seed, **(detail or {})}))

    def skip(iid: str, statement: str, reason: str):
        outcomes.append(InvariantOutcome(iid, statement, g6, "skip", {"reason": reason}))

    n = g.n
    isolated = len(g.isolated())
    has_edge = g.m > 0

    gd = {}
    seqs = {}
    for kind in (SeqKind.ZSEQ, SeqKind.DOMINATING, SeqKind.TOTAL, SeqKind.LSEQ):
        gd[kind], seqs[kind] = grundy.grundy_number(g, kind, max_n=max_n)
    z = {rule: n - gd[KIND_FOR_RULE[rule]] for rule in _RULES}

    # duality against the independent direct search (small graphs only)
    for rule in _RULES:
        iid = f"duality.{rule.value}"
        stmt = f"{rule.value} + paired sequence maximum = n (direct search)"
        if n <= _DIRECT_AUTO_MAX:
            dk, _ = forcing.zero_forcing_number(g, rule, "direct", max_n=max_n)
            record(iid, stmt, dk + gd[KIND_FOR_RULE[rule]] == n,
                   {"direct": dk, "grundy": gd[KIND_FOR_RULE[rule]]})
        else:
            skip(iid, stmt, f"n={n} above the direct-method budget")

    gZ, ggr, gdt, gdL = (gd[SeqKind.ZSEQ], gd[SeqKind.DOMINATING],
                         gd[SeqKind.TOTAL], gd[SeqKind.LSEQ])
    record("ineq.sandwich_closed", "gdZ <= ggr <= gdL", gZ <= ggr <= gdL,
           {"gdZ": gZ, "ggr": ggr, "gdL": gdL})
    record("ineq.sandwich_open", "gdZ <= gdt <= gdL", gZ <= gdt <= gdL,
           {"gdZ": gZ, "gdt": gdt, "gdL": gdL})
    if isolated:
        skip("ineq.total_le_2Z", "gdt <= 2 gdZ", "graph has isolated vertices")
    else:
        record("ineq.total_le_2Z", "gdt <= 2 gdZ", gdt <= 2 * gZ,
               {"gdt": gdt, "gdZ": gZ})
    record("ineq.L_le_2dom", "gdL <= 2 ggr", gdL <= 2 * ggr, {"gdL": gdL, "ggr": ggr})
    if has_edge:
        record("ineq.dom_lt_L", "ggr <= gdL - 1 when an edge exists",
               ggr <= gdL - 1, {"ggr": ggr, "gdL": gdL})
    else:
        skip("ineq.dom_lt_L", "ggr <= gdL - 1 when an edge exists", "no edge")
    record("ineq.forcing_chain_closed", "ZL <= Zld <= Z",
           z[Rule.ZL] <= z[Rule.ZLD] <= z[Rule.Z], {k.value: v for k, v in z.items()})
    record("ineq.forcing_chain_open", "ZL <= Zminus <= Z",
           z[Rule.ZL] <= z[Rule.ZMINUS] <= z[Rule.Z], {k.value: v for k, v in z.items()})
    record("ineq.two_Z", "2Z <= n + Zminus", 2 * z[Rule.Z] <= n + z[Rule.ZMINUS],
           {"Z": z[Rule.Z], "Zminus": z[Rule.ZMINUS]})
    record("ineq.two_Zld", "2Zld <= n + ZL", 2 * z[Rule.ZLD] <= n + z[Rule.ZL],
           {"Zld": z[Rule.ZLD], "ZL": z[Rule.ZL]})
    if has_edge:
        record("ineq.ZL_lt_Zld", "ZL + 1 <= Zld when an edge exists",
               z[Rule.ZL] + 1 <= z[Rule.ZLD], {"ZL": z[Rule.ZL], "Zld": z[Rule.ZLD]})
    else:
        skip("ineq.ZL_lt_Zld", "ZL + 1 <= Zld when an edge exists", "no edge")

    gamma, _ = bounds_mod.dominating_set(g)
    if isolated:
        skip("ineq.gamma_le_gdZ", "gamma <= gdZ", "graph has isolated vertices")
        skip("ineq.Z_le_n_minus_gamma", "Z <= n - gamma", "graph has isolated vertices")
    else:
        record("ineq.gamma_le_gdZ", "gamma <= gdZ", gamma <= gZ,
               {"gamma": gamma, "gdZ": gZ})
        record("ineq.Z_le_n_minus_gamma", "Z <= n - gamma", z[Rule.Z] <= n - gamma,
               {"Z": z[Rule.Z], "gamma": gamma})

    # sampled matrix families: grundy values bound every member's rank
    mis = bounds_mod.maximum_independent_set(g)
    beta = n - len(mis)
    for pattern, low, label in ((PatternKind.S, gZ, "gdZ"),
                                (PatternKind.S_LOOP, ggr, "ggr"),
                                (PatternKind.S_ZERO, gdt, "gdt")):
        iid = f"rank.ge_{label}"
        stmt = f"every sampled {pattern.value} member has rank >= {label}"
        ranks = []
        for t in range(trials):
            rng = random.Random(f"{seed}:{pattern.value}:{t}")
            m = matrices.sample_pattern_matrix(g, pattern, rng, entry_bound)
            ranks.append(matrices.rank_exact(m))
        record(iid, stmt, all(r >= low for r in ranks), {"ranks": ranks, label: low})
        if pattern is PatternKind.S_ZERO:
            record("rank.le_2beta", "every sampled S_zero member has rank <= 2 beta",
                   all(r <= 2 * beta for r in ranks), {"ranks": ranks, "beta": beta})

    if n <= max_n_cc:
        cc, cover = bounds_mod.edge_clique_cover(g, max_n=max_n_cc)
        mat, used = matrices.clique_cover_matrix(g, cover)
        ok = (matrices.pattern_member(mat, g, PatternKind.S_LOOP)
              and matrices.rank_exact(mat) <= len(used)
              and ggr <= len(used))
        record("rank.clique_cover",
               "clique-cover matrix is a loop-pattern member of rank <= patched "
               "cover size, which bounds ggr",
               ok, {"cc": cc, "used": len(used), "ggr": ggr})
    else:
        skip("rank.clique_cover", "clique-cover rank bound",
             f"n={n} above the clique-cover cap {max_n_cc}")

    # sequence <-> game round trips on the optimal certificates
    for kind, seq in seqs.items():
        state = forcing.game_from_sequence(g, seq)
        back = grundy.sequence_from_game(g, state, RULE_FOR_KIND[kind])
        record(f"seq.roundtrip.{kind.value}",
               "optimal sequence survives game conversion and back",
               back.vertices == seq.vertices,
               {"sequence": list(seq.vertices), "back": list(back.vertices)})

    # closure order-independence and monotonicity on sampled initial sets
    rng = random.Random(f"{seed}:closure")
    indep_ok = True
    mono_ok = True
    indep_detail: dict | None = None
    mono_detail: dict | None = None
    for rule in _RULES:
        for init in _sample_initial_sets(g, rng, order_sets):
            vertices = from_mask(init)
            canonical = forcing.closure(g, vertices, rule).blue
            for _ in range(orders):
                got = forcing.closure_random_order(g, vertices, rule, rng).blue
                if got != canonical:
                    indep_ok = False
                    indep_detail = {"rule": rule.value, "initial": list(vertices)}
            extra = init | (rng.getrandbits(g.n) if g.n else 0)
            larger = forcing.closure(g, from_mask(extra), rule).blue
            if not canonical <= larger:
                mono_ok = False
                mono_detail = {"rule": rule.value, "initial": list(vertices),
                               "superset": list(from_mask(extra))}
    record("closure.order_independence",
           "random force orders reach the canonical closure set", indep_ok, indep_detail)
    record("closure.monotonicity",
           "closures grow monotonically with the initial set", mono_ok, mono_detail)

    # bipartite halving of the total-domination maximum
    parts = bipartition(g)
    if parts is None:
        skip("bipartite.halving", "gdt = 2 gdt(G,X) = 2 gdt(G,Y)", "graph is not bipartite")
    elif isolated:
        skip("bipartite.halving", "gdt = 2 gdt(G,X) = 2 gdt(G,Y)",
             "graph has isolated vertices")
    else:
        kx, _ = grundy.grundy_total_restricted(g, parts[0], max_n=max_n)
        ky, _ = grundy.grundy_total_restricted(g, parts[1], max_n=max_n)
        record("bipartite.halving", "gdt = 2 gdt(G,X) = 2 gdt(G,Y)",
               gdt == 2 * kx == 2 * ky, {"gdt": gdt, "gdt_X": kx, "gdt_Y": ky})

    # product-based identities and rank bounds
    bl_stmts = {
        "bl.structure": "product is bipartite with the prescribed degrees and edge count",
        "bl.gdt_identity": "gdt of the product equals 2 gdL",
        "bl.restricted": "x-restricted gdt of the product equals gdL",
        "bl.Zminus_identity": "Zminus of the product equals n + 2 ZL",
        "bl.asymbound": "2 gdL <= rank of every sampled S_zero member of the product",
        "rank.L_pair": "gdL <= rank of every sampled rectangular pair",
        "rank.embed_identity": "block embedding doubles the pair rank",
    }
    if n > bl_max_n:
        for iid, stmt in bl_stmts.items():
            skip(iid, stmt, f"n={n} above the product cap {bl_max_n}")
    else:
        bl = build_BL(g)
        xs = list(range(1, n + 1))
        struct_ok = bl.m == 4 * g.m + n
        parts_bl = bipartition(bl)
        if parts_bl is None:
            struct_ok = False
        else:
            xset = frozenset(xs)
            struct_ok = struct_ok and (xset <= parts_bl[0] or xset <= parts_bl[1])
        for i in range(1, n + 1):
            struct_ok = struct_ok and bl.degree(i) == 2 * g.degree(i) + 1
            struct_ok = struct_ok and bl.degree(n + i) == g.degree(i) + 1
            struct_ok = struct_ok and bl.degree(2 * n + i) == g.degree(i)
        record("bl.structure", bl_stmts["bl.structure"], struct_ok,
               {"edges": bl.m, "expected": 4 * g.m + n})

        gdt_bl, _ = grundy.grundy_number(bl, SeqKind.TOTAL, max_n=max(max_n, 3 * n),
                                         split_bipartite=True)
        record("bl.gdt_identity", bl_stmts["bl.gdt_identity"], gdt_bl == 2 * gdL,
               {"gdt_product": gdt_bl, "gdL": gdL})
        kx, _ = grundy.grundy_total_restricted(bl, xs, max_n=max(max_n, 3 * n))
        record("bl.restricted", bl_stmts["bl.restricted"], kx == gdL,
               {"gdt_product_x": kx, "gdL": gdL})
        record("bl.Zminus_identity", bl_stmts["bl.Zminus_identity"],
               3 * n - gdt_bl == n + 2 * (n - gdL),
               {"Zminus_product": 3 * n - gdt_bl, "ZL": n - gdL})

        bl_ranks = []
        for t in range(trials):
            rng = random.Random(f"{seed}:bl:{t}")
            m = matrices.sample_pattern_matrix(bl, PatternKind.S_ZERO, rng, entry_bound)
            bl_ranks.append(matrices.rank_exact(m))
        record("bl.asymbound", bl_stmts["bl.asymbound"],
               all(2 * gdL <= r for r in bl_ranks), {"ranks": bl_ranks, "gdL": gdL})

        pair_ok = True
        embed_ok = True
        pair_detail: dict | None = None
        for t in range(trials):
            rng = random.Random(f"{seed}:pair:{t}")
            pair = matrices.sample_pattern_matrix(g, PatternKind.L_PAIR, rng, entry_bound)
            r_pair = matrices.rank_exact(pair)
            if r_pair < gdL:
                pair_ok = False
                pair_detail = {"rank": r_pair, "gdL": gdL, "trial": t}
            left = matrices.IntMatrix.from_rows([row[:n] for row in pair.entries])
            right = matrices.IntMatrix.from_rows([row[n:] for row in pair.entries])
            emb = matrices.embed_L_block(g, left, right)
            if matrices.rank_exact(emb) != 2 * r_pair:
                embed_ok = False
            if not matrices.pattern_member(emb, bl, PatternKind.S_ZERO):
                embed_ok = False
        record("rank.L_pair", bl_stmts["rank.L_pair"], pair_ok, pair_detail)
        record("rank.embed_identity", bl_stmts["rank.embed_identity"], embed_ok)

    return outcomes


# ---------------------------------------------------------------------------
# sweeps

def sweep(graphs: Iterable[Graph], out: str, *, method: str = "auto",
          max_n: int = 20, max_n_cc: int = 16,
          deterministic: bool = False) -> dict:
    """One report per graph appended as JSON lines; returns a failure summary."""
    total = 0
    failures = 0
    skipped = 0
    with open(out, "w", encoding="utf-8") as fh:
        for g in graphs:
            total += 1
            try:
                rep = compute_all(g, method=method, max_n=max_n, max_n_cc=max_n_cc,
                                  deterministic=deterministic)
            except CapExceeded as exc:
                skipped += 1
                fh.write(json.dumps({"graph6": encode_graph6(g),
                                     "skipped": str(exc)}) + "\n")
                continue
            problems = validate_report(rep, g)
            if problems:
                failures += 1
            fh.write(json.dumps(report_to_json_dict(rep)) + "\n")
    return {"graphs": total, "failures": failures, "skipped": skipped}
