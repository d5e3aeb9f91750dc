#!/usr/bin/env python3
"""Regenerate tests/data/graphs_upto7.g6: all isomorph-free graphs on 1..7 vertices.

Uses the networkx graph atlas as the reference enumeration (counts
1, 2, 4, 11, 34, 156, 1044) and its graph6 encoder, so the committed catalog
is independent of this package's own codec.
"""

from collections import Counter
from pathlib import Path

import networkx as nx
from networkx.generators.atlas import graph_atlas_g

EXPECTED = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044}


def main() -> None:
    out = Path(__file__).resolve().parent.parent / "tests" / "data" / "graphs_upto7.g6"
    out.parent.mkdir(parents=True, exist_ok=True)
    lines = []
    counts: Counter = Counter()
    for g in graph_atlas_g():
        if not 1 <= len(g) <= 7:
            continue
        counts[len(g)] += 1
        lines.append(nx.to_graph6_bytes(g, header=False).decode().strip())
    assert dict(counts) == EXPECTED, counts
    out.write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"wrote {len(lines)} graphs to {out}")


if __name__ == "__main__":
    main()
