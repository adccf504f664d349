#!/usr/bin/env python3
"""Regenerates the graph6 fixture corpora under fixtures/.

Produces two families of files:

  connected{n}.g6   all connected graphs on n vertices, 1 <= n <= 7
  cubic{n}.g6       all connected 3-regular graphs on n vertices, n in {4,6,8,10}

Each file holds one graph6 string per line. The expected counts are asserted
against the standard census (OEIS A001349 for connected graphs, A002851 for
connected cubic graphs), so a regeneration that drifts fails loudly.

Requires networkx (atlas + isomorphism testing). The output is deterministic:
graphs are emitted in sorted graph6 order.
"""

import itertools
import sys
from pathlib import Path

import networkx as nx

CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}
CUBIC_COUNTS = {4: 1, 6: 2, 8: 5, 10: 19}

OUT_DIR = Path(__file__).resolve().parent.parent / "fixtures"


def to_graph6(g: nx.Graph) -> str:
    return nx.to_graph6_bytes(g, header=False).decode().strip()


def connected_graphs(n: int):
    """All connected graphs of order n, via the atlas for n <= 7."""
    if n <= 7:
        for g in nx.graph_atlas_g():
            if g.number_of_nodes() == n and n >= 1 and nx.is_connected(g):
                yield nx.convert_node_labels_to_integers(g)
        return
    raise ValueError("atlas only covers n <= 7")


def cubic_graphs(n: int):
    """All connected cubic graphs of order n by backtracking search.

    Builds adjacency lists degree-constrained, with vertex 0's neighbourhood
    fixed to {1,2,3} to cut the symmetry, then dedupes up to isomorphism.
    """
    found = []  # list of (invariant, [nx.Graph])

    def invariant(g: nx.Graph):
        tri = sum(nx.triangles(g).values()) // 3
        degs = tuple(sorted(d for _, d in g.degree()))
        cyc4 = sum(1 for _ in find_c4(g))
        return (degs, tri, cyc4, tuple(sorted(nx.degree_histogram(g))))

    def find_c4(g):
        nodes = list(g.nodes)
        for a, b, c, d in itertools.combinations(nodes, 4):
            quad = [a, b, c, d]
            for perm in itertools.permutations(quad[1:]):
                cyc = [quad[0], *perm]
                if all(
                    g.has_edge(cyc[i], cyc[(i + 1) % 4]) for i in range(4)
                ) and not g.has_edge(cyc[0], cyc[2]) and not g.has_edge(cyc[1], cyc[3]):
                    yield cyc
                    break

    deg = [0] * n
    adj = [set() for _ in range(n)]

    def register():
        g = nx.Graph()
        g.add_nodes_from(range(n))
        for u in range(n):
            for v in adj[u]:
                if u < v:
                    g.add_edge(u, v)
        if not nx.is_connected(g):
            return
        inv = invariant(g)
        for other_inv, bucket in found:
            if other_inv == inv:
                if any(nx.is_isomorphic(g, h) for h in bucket):
                    return
                bucket.append(g)
                return
        found.append((inv, [g]))

    def extend(u: int):
        if u == n:
            register()
            return
        if deg[u] == 3:
            extend(u + 1)
            return
        # Pair u with higher-indexed vertices until its degree is full.
        start = u + 1
        needed = 3 - deg[u]
        candidates = [v for v in range(start, n) if deg[v] < 3 and v not in adj[u]]
        for combo in itertools.combinations(candidates, needed):
            ok = True
            for v in combo:
                if deg[v] >= 3:
                    ok = False
                    break
            if not ok:
                continue
            for v in combo:
                adj[u].add(v)
                adj[v].add(u)
                deg[u] += 1
                deg[v] += 1
            # Feasibility: remaining demand must be realisable.
            if all(deg[w] <= 3 for w in range(n)):
                extend(u + 1)
            for v in combo:
                adj[u].remove(v)
                adj[v].remove(u)
                deg[u] -= 1
                deg[v] -= 1

    # Symmetry break: vertex 0 is adjacent to exactly 1, 2, 3.
    for v in (1, 2, 3):
        adj[0].add(v)
        adj[v].add(0)
        deg[0] += 1
        deg[v] += 1
    extend(1)

    for _, bucket in found:
        yield from bucket


def write_corpus(path: Path, graphs, expected: int):
    lines = sorted(to_graph6(g) for g in graphs)
    assert len(lines) == expected, f"{path.name}: got {len(lines)}, expected {expected}"
    assert len(set(lines)) == len(lines), f"{path.name}: duplicate graph6 lines"
    path.write_text("\n".join(lines) + "\n")
    print(f"{path.name}: {len(lines)} graphs")


def main():
    OUT_DIR.mkdir(exist_ok=True)
    for n, count in CONNECTED_COUNTS.items():
        write_corpus(OUT_DIR / f"connected{n}.g6", connected_graphs(n), count)
    for n, count in CUBIC_COUNTS.items():
        write_corpus(OUT_DIR / f"cubic{n}.g6", cubic_graphs(n), count)


if __name__ == "__main__":
    sys.exit(main())
