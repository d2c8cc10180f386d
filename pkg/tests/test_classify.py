"""Full trichotomy verdicts and their evidence."""

import random

import pytest

from maxmult2 import (
    Graph,
    M1,
    M2,
    MGE3,
    classify,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    exceptional_test,
    m_upper_by_pendant_reduction,
    path_graph,
    verify_certificate,
)

EXCEPTIONAL_CHAIN = Graph(
    8,
    frozenset(
        {
            (0, 1), (0, 3), (1, 3), (0, 2), (1, 2),
            (2, 4), (0, 4), (0, 5), (1, 6), (2, 7),
        }
    ),
)


def test_paths_are_m1():
    for n in range(1, 9):
        c = classify(path_graph(n))
        assert c.verdict == M1 and c.m == 1


def test_cycles_are_m2():
    for n in range(3, 9):
        c = classify(cycle_graph(n))
        assert c.verdict == M2 and c.cover is not None
        assert c.certificate is not None
        assert verify_certificate(cycle_graph(n), c.certificate)


def test_k4_and_k23_are_mge3():
    for g, kind in ((complete_graph(4), "hK4"), (complete_bipartite(2, 3), "hK23")):
        c = classify(g)
        assert c.verdict == MGE3 and c.m == 3
        assert c.reason is not None and c.reason.kind == kind
        assert c.reason.witness is not None


def test_trees_with_high_cover_are_mge3():
    star = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    c = classify(star)
    assert c.verdict == M2  # K1,3 covers with two paths
    star5 = Graph.from_edges(6, [(0, i) for i in range(1, 6)])
    c = classify(star5)
    assert c.verdict == MGE3 and c.reason.kind == "tree-cover"


def test_cut_vertex_in_min_degree_2_graph_is_mge3():
    # two triangles sharing one vertex: min degree 2 but a cut vertex
    g = Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])
    c = classify(g)
    assert c.verdict == MGE3 and c.reason.kind == "c2-not-linear"


def test_disconnected_sum_rule():
    # two disjoint paths: M = 1 + 1 = 2, glued cover + certificate
    g = Graph.from_edges(5, [(0, 1), (2, 3), (3, 4)])
    c = classify(g)
    assert c.verdict == M2 and c.cover is not None
    assert verify_certificate(g, c.certificate)

    # path + cycle: M = 1 + 2 = 3
    g = Graph.from_edges(6, [(0, 1), (2, 3), (3, 4), (4, 5), (2, 5)])
    c = classify(g)
    assert c.verdict == MGE3 and c.reason.kind == "component-sum"

    # three paths: M = 3
    g = Graph(3, frozenset())
    c = classify(g)
    assert c.verdict == MGE3

    # single isolated vertex: M = 1
    assert classify(Graph(1, frozenset())).verdict == M1


def test_relabeling_invariance():
    rnd = random.Random(1)
    base = EXCEPTIONAL_CHAIN
    for _ in range(10):
        perm = list(range(base.n))
        rnd.shuffle(perm)
        g = Graph.from_edges(
            base.n, [(perm[u], perm[v]) for u, v in base.edges]
        )
        assert classify(g).verdict == classify(base).verdict == M2


def test_exceptional_chain_report():
    rep = exceptional_test(EXCEPTIONAL_CHAIN)
    assert rep.passed
    assert all(v for _, v in rep.conditions)
    assert rep.chosen_pendant is not None
    c = classify(EXCEPTIONAL_CHAIN)
    assert c.verdict == M2 and c.cover is None and c.exceptional.passed


def test_exceptional_screen_rejects_double_pendant():
    # add a second pendant at the distinguished vertex's pendant spot
    g = Graph(9, EXCEPTIONAL_CHAIN.edges | {(0, 8)})
    rep = exceptional_test(g)
    assert not rep.passed


def test_pendant_reduction_recursion():
    m, steps = m_upper_by_pendant_reduction(path_graph(5))
    assert m == 1
    m, _ = m_upper_by_pendant_reduction(cycle_graph(6))
    assert m == 2
    m, _ = m_upper_by_pendant_reduction(complete_graph(4))
    assert m == 3
    m, _ = m_upper_by_pendant_reduction(EXCEPTIONAL_CHAIN)
    assert m == 2
    # pendant hanging off a K4 keeps M = 3
    g = Graph(5, complete_graph(4).edges | {(0, 4)})
    m, steps = m_upper_by_pendant_reduction(g)
    assert m == 3 and steps


def test_verdicts_match_recursion_exhaustively_n5():
    nx = pytest.importorskip("networkx")
    for h in nx.graph_atlas_g()[1:]:
        if not 0 < h.number_of_nodes() <= 5 or not nx.is_connected(h):
            continue
        g = Graph(
            h.number_of_nodes(),
            frozenset(tuple(sorted(e)) for e in h.edges()),
        )
        assert classify(g).m == m_upper_by_pendant_reduction(g)[0]
