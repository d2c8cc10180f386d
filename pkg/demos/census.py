#!/usr/bin/env python3
"""Census of all connected graphs on up to 7 vertices.

Enumerates the networkx atlas, classifies every connected graph, and prints
the verdict counts per vertex count, cross-checked against the numeric
oracle on a sample.  Takes about a minute.
"""

import collections
import random

import networkx as nx

from maxmult2 import Graph, classify, estimate_M


def main():
    counts = collections.Counter()
    graphs = []
    for h in nx.graph_atlas_g()[1:]:
        if h.number_of_nodes() == 0 or not nx.is_connected(h):
            continue
        g = Graph(
            h.number_of_nodes(),
            frozenset(tuple(sorted(e)) for e in h.edges()),
        )
        c = classify(g)
        counts[(g.n, c.verdict)] += 1
        graphs.append((g, c))

    print(f"{'n':>3s} {'M1':>5s} {'M2':>5s} {'MGE3':>5s}")
    for n in range(1, 8):
        print(
            f"{n:3d} {counts[(n, 'M1')]:5d} {counts[(n, 'M2')]:5d} "
            f"{counts[(n, 'MGE3')]:5d}"
        )
    total = collections.Counter(c.verdict for _, c in graphs)
    print("totals:", dict(total))

    rnd = random.Random(0)
    sample = rnd.sample(graphs, 40)
    agree = sum(
        1
        for g, c in sample
        if min(estimate_M(g, restarts=96, max_iters=600).m_estimate, 3) == c.m
    )
    print(f"oracle agreement on a random sample: {agree}/40")


if __name__ == "__main__":
    main()
