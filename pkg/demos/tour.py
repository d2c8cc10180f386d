#!/usr/bin/env python3
"""A guided tour of the trichotomy.

For a graph G, S(G) is the set of real symmetric matrices whose off-diagonal
zeros match the non-edges, and M(G) is the largest eigenvalue multiplicity
achievable in S(G).  M(G) = 1 exactly for paths; this package decides where
the line between M = 2 and M >= 3 falls, with checkable evidence on both
sides.  Run this script to watch the pieces fit together.
"""

import numpy as np

from maxmult2 import (
    Graph,
    classify,
    complete_bipartite,
    complete_graph,
    construct_corank3_hK23,
    cycle_graph,
    estimate_M,
    exact_rank,
    find_two_parallel_paths,
    maximize_nullity,
    path_graph,
    to_graph6,
    verify_certificate,
)


def section(title):
    print(f"\n=== {title} " + "=" * max(0, 60 - len(title)))


def show(g, label):
    c = classify(g)
    oracle = estimate_M(g).m_estimate
    print(f"{label:30s} {to_graph6(g):>8s}  verdict={c.verdict}  oracle M={oracle}")
    return c


def main():
    section("The three classes")
    show(path_graph(5), "path P5")
    show(cycle_graph(5), "cycle C5")
    show(complete_graph(4), "complete K4")
    show(complete_bipartite(2, 3), "bipartite K2,3")

    section("M = 2 comes with a structure and a proof")
    c5 = cycle_graph(5)
    c = classify(c5)
    cover = find_two_parallel_paths(c5)
    print("two-parallel-paths cover of C5:", list(cover.p1), list(cover.p2))
    print(
        "rank certificate verifies (any matrix with this pattern has "
        f"rank >= n-2): {verify_certificate(c5, c.certificate)}"
    )
    res = maximize_nullity(c5, 2)
    w = np.sort(np.linalg.eigvalsh(res.matrix))
    print("numeric realization eigenvalues:", np.round(w, 6))

    section("M >= 3 comes with an exact matrix")
    k23 = complete_bipartite(2, 3)
    c = classify(k23)
    mat = construct_corank3_hK23(k23, c.reason.witness)
    print(f"reason: {c.reason.kind}; exact rational matrix of rank "
          f"{exact_rank(mat)} on 5 vertices (corank 3):")
    for row in mat.entries:
        print("  ", "  ".join(f"{str(x):>6s}" for x in row))

    section("The surprise: M = 2 without the path cover")
    chain = Graph(
        8,
        frozenset(
            {
                (0, 1), (0, 3), (1, 3), (0, 2), (1, 2),
                (2, 4), (0, 4), (0, 5), (1, 6), (2, 7),
            }
        ),
    )
    c = show(chain, "3-triangle chain + pendants")
    print("two-parallel-paths cover:", find_two_parallel_paths(chain))
    print("exceptional screen conditions:")
    for name, val in c.exceptional.conditions:
        print(f"  {name:40s} {val}")


if __name__ == "__main__":
    main()
