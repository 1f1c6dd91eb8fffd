#!/usr/bin/env python3
"""Regenerate the graph6 census files used by the census tests.

Enumerates every graph of order 1..8 up to isomorphism by vertex
augmentation, deduplicating with nauty certificates (pynauty).

    python3 gen_census.py            # writes graphs_n1-7.g6 and graphs_n8.g6
"""
import itertools
import sys

import networkx as nx
import pynauty

EXPECTED = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346}


def certificate(n, edges):
    adj = {v: [] for v in range(n)}
    for u, v in edges:
        adj[u].append(v)
    return pynauty.certificate(pynauty.Graph(n, adjacency_dict=adj))


def canonical_edges(n, edges):
    adj = {v: [] for v in range(n)}
    for u, v in edges:
        adj[u].append(v)
    lab = pynauty.canon_label(pynauty.Graph(n, adjacency_dict=adj))
    pos = {old: new for new, old in enumerate(lab)}
    return sorted(tuple(sorted((pos[u], pos[v]))) for u, v in edges)


def main():
    levels = {1: [[]]}
    for n in range(2, 9):
        seen = {}
        for edges in levels[n - 1]:
            for k in range(n):
                for nbrs in itertools.combinations(range(n - 1), k):
                    e = edges + [(u, n - 1) for u in nbrs]
                    cert = certificate(n, e)
                    if cert not in seen:
                        seen[cert] = canonical_edges(n, e)
        levels[n] = sorted(seen.values(), key=lambda e: (len(e), e))
        if len(levels[n]) != EXPECTED[n]:
            sys.exit(f"order {n}: got {len(levels[n])} graphs")

    def g6(n, edges):
        g = nx.Graph()
        g.add_nodes_from(range(n))
        g.add_edges_from(edges)
        return nx.to_graph6_bytes(g, header=False).decode().strip()

    with open("graphs_n1-7.g6", "w") as out:
        for n in range(1, 8):
            for edges in levels[n]:
                out.write(g6(n, edges) + "\n")
    with open("graphs_n8.g6", "w") as out:
        for edges in levels[8]:
            out.write(g6(8, edges) + "\n")


if __name__ == "__main__":
    main()
