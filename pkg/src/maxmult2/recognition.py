"""Recognizers for the graph classes the classification needs.

Covers: two-parallel-paths covers (with the staircase no-crossing test),
partial 2-tree recognition, K4/K2,3 homeomorph witnesses, decomposition of
edge-articulated cycle chains, and minimum path covers of trees.
"""

from __future__ import annotations

import dataclasses
import itertools
from typing import Dict, List, Optional, Tuple

from .graphs import Graph, cut_vertices, is_path

MAX_EXHAUSTIVE_N = 14


@dataclasses.dataclass(frozen=True)
class ParallelPathsCover:
    """Two disjoint induced paths covering V with non-crossing cross edges."""

    p1: tuple
    p2: tuple


@dataclasses.dataclass(frozen=True)
class HomeomorphWitness:
    """A subdivision image of K4 or K2,3 found as a subgraph.

    branch_vertices: 4 vertices for kind "hK4"; (u, v) for kind "hK23".
    paths: tuples of full vertex sequences, endpoints included.
    """

    kind: str  # "hK4" | "hK23"
    branch_vertices: tuple
    paths: tuple

    def interior_vertices(self):
        out = []
        for p in self.paths:
            out.extend(p[1:-1])
        return out


@dataclasses.dataclass(frozen=True)
class SeacDecomposition:
    cycles: tuple            # tuples of vertices in cyclic order
    articulation_edges: tuple  # (u, v) with u < v
    neighbor_graph: tuple    # adjacency among cycle indices
    terminal_cycles: tuple   # indices of cycles with <= 1 neighbor
    distinguished: tuple     # vertices belonging to every terminal cycle
    is_lseac: bool


# ---------------------------------------------------------------------------
# two parallel paths


def _staircase_ok(g: Graph, p1, p2) -> bool:
    nz = [
        (i, j)
        for i in range(len(p1))
        for j in range(len(p2))
        if g.has_edge(p1[i], p2[j])
    ]
    for (i, j), (k, l) in itertools.combinations(nz, 2):
        if (k > i and l < j) or (k < i and l > j):
            return False
    if len(nz) == 1:
        # A single cross edge joining an endpoint of p1 to an endpoint of
        # p2 concatenates the two paths into one, which is excluded.
        i, j = nz[0]
        if i in (0, len(p1) - 1) and j in (0, len(p2) - 1):
            return False
    return True


def check_staircase(g: Graph, p1, p2) -> bool:
    """Non-crossing test for two ordered paths covering V.

    Raises ValueError if p1, p2 are not disjoint induced paths covering the
    vertex set in the given orders.
    """
    p1, p2 = list(p1), list(p2)
    if set(p1) & set(p2):
        raise ValueError("paths are not disjoint")
    if set(p1) | set(p2) != set(range(g.n)):
        raise ValueError("paths do not cover the vertex set")
    for p in (p1, p2):
        if not p:
            raise ValueError("empty path")
        sub, vmap = g.subgraph(p)
        order = is_path(sub)
        if order is None:
            raise ValueError(f"{p} does not induce a path")
        seq = [vmap[i] for i in order]
        if seq != p and seq != p[::-1]:
            raise ValueError(f"{p} is not in path order")
    return _staircase_ok(g, p1, p2)


def find_two_parallel_paths(g: Graph) -> Optional[ParallelPathsCover]:
    """Exhaustive search for a two-parallel-paths cover.

    A single path returns None; two unconnected paths are a valid cover.
    Exact for all n up to MAX_EXHAUSTIVE_N.
    """
    if g.n == 0:
        raise ValueError("empty graph")
    if g.n > MAX_EXHAUSTIVE_N:
        raise ValueError(f"exhaustive cover search capped at n={MAX_EXHAUSTIVE_N}")
    if is_path(g) is not None:
        return None
    orders = {}
    for mask in range(1, 2 ** g.n - 1):
        verts = [v for v in range(g.n) if mask >> v & 1]
        sub, vmap = g.subgraph(verts)
        order = is_path(sub)
        orders[mask] = None if order is None else [vmap[i] for i in order]
    full = 2 ** g.n - 1
    for mask in range(1, 2 ** (g.n - 1)):
        # fix vertex n-1 on the p2 side to halve the search
        o1 = orders[mask]
        o2 = orders[full ^ mask]
        if o1 is None or o2 is None:
            continue
        for q1 in (o1, o1[::-1]):
            for q2 in (o2, o2[::-1]):
                if _staircase_ok(g, q1, q2):
                    return ParallelPathsCover(tuple(q1), tuple(q2))
    return None


# ---------------------------------------------------------------------------
# partial 2-trees and homeomorph witnesses


def is_partial_two_tree(g: Graph) -> bool:
    """True iff g reduces to nothing by the degree-<=2 peel with fill-in."""
    adj = {v: set(g.neighbors(v)) for v in range(g.n)}
    queue = sorted(adj)
    while adj:
        v = min(adj, key=lambda x: (len(adj[x]), x))
        if len(adj[v]) > 2:
            return False
        nbrs = list(adj[v])
        for w in nbrs:
            adj[w].discard(v)
        if len(nbrs) == 2:
            a, b = nbrs
            adj[a].add(b)
            adj[b].add(a)
        del adj[v]
    return True


def _all_paths(g: Graph, a: int, b: int, allowed: set):
    """Simple paths from a to b with interior vertices drawn from allowed."""
    out = []

    def extend(path):
        cur = path[-1]
        for w in sorted(g.neighbors(cur)):
            if w == b and len(path) >= 1:
                out.append(path + [b])
            elif w in allowed and w not in path:
                extend(path + [w])

    extend([a])
    out.sort(key=lambda p: (len(p), p))
    return out


def _disjoint_path_system(g: Graph, pairs, allowed, budget):
    """Internally disjoint paths for the given endpoint pairs, using at most
    `budget` interior vertices in total.  Returns list of paths or None."""
    if not pairs:
        return []
    (a, b), rest = pairs[0], pairs[1:]
    for p in _all_paths(g, a, b, allowed):
        interior = p[1:-1]
        if len(interior) > budget:
            break
        tail = _disjoint_path_system(
            g, rest, allowed - set(interior), budget - len(interior)
        )
        if tail is not None:
            return [p] + tail
    return None


def find_hK4(g: Graph) -> Optional[HomeomorphWitness]:
    """Search for a K4-homeomorph subgraph, minimizing interior vertices.

    Minimizing interiors first makes the witness land in the earliest
    possible construction case for the corank-3 matrix builder.
    """
    candidates = [v for v in range(g.n) if g.degree(v) >= 3]
    if len(candidates) < 4:
        return None
    quads = list(itertools.combinations(candidates, 4))
    for budget in range(0, max(0, g.n - 4) + 1):
        for quad in quads:
            pairs = list(itertools.combinations(quad, 2))
            allowed = set(range(g.n)) - set(quad)
            paths = _disjoint_path_system(g, pairs, allowed, budget)
            if paths is not None:
                return HomeomorphWitness(
                    kind="hK4",
                    branch_vertices=tuple(quad),
                    paths=tuple(tuple(p) for p in paths),
                )
    return None


def find_hK23(g: Graph) -> Optional[HomeomorphWitness]:
    """Search for a K2,3-homeomorph: three internally disjoint u-v paths of
    at least two edges each."""
    for u, v in itertools.combinations(range(g.n), 2):
        allowed = set(range(g.n)) - {u, v}
        found = _hk23_paths(g, u, v, allowed, [])
        if found is not None:
            return HomeomorphWitness(
                kind="hK23",
                branch_vertices=(u, v),
                paths=tuple(tuple(p) for p in found),
            )
    return None


def _hk23_paths(g: Graph, u, v, allowed, acc):
    if len(acc) == 3:
        return acc
    for p in _all_paths(g, u, v, allowed):
        if len(p) < 3:
            continue  # need at least two edges
        res = _hk23_paths(g, u, v, allowed - set(p[1:-1]), acc + [p])
        if res is not None:
            return res
    return None


# ---------------------------------------------------------------------------
# edge-articulated cycle chains


def seac_decompose(g: Graph) -> Optional[SeacDecomposition]:
    """Decompose a connected C2 graph into singly edge-articulated cycles.

    Returns None when no such build sequence exists.  Peels terminal cycles
    with backtracking; an articulation edge is never reused.
    """
    if g.n < 3 or not g.is_connected():
        raise ValueError("seac_decompose requires a connected graph on >= 3 vertices")
    if any(g.degree(v) < 2 for v in range(g.n)):
        raise ValueError("seac_decompose requires minimum degree 2")
    if cut_vertices(g):
        return None  # edge articulation always preserves 2-connectivity

    failed = set()

    def peel(alive: frozenset, used: frozenset):
        deg = {v: sum(1 for w in g.neighbors(v) if w in alive) for v in alive}
        if all(d == 2 for d in deg.values()):
            cyc = _trace_cycle(g, alive)
            return [(cyc, None)] if cyc is not None else None
        key = (alive, used)
        if key in failed:
            return None
        for cyc, e in _terminal_candidates(g, alive, deg, used):
            interior = frozenset(cyc) - set(e)
            rest = peel(alive - interior, used | {e})
            if rest is not None:
                return rest + [(cyc, e)]
        failed.add(key)
        return None

    result = peel(frozenset(range(g.n)), frozenset())
    if result is None:
        return None
    result.reverse()  # build order: base cycle first
    cycles = tuple(tuple(c) for c, _ in result)
    art = tuple(e for _, e in result if e is not None)
    edge_sets = [
        {tuple(sorted((c[i], c[(i + 1) % len(c)]))) for i in range(len(c))}
        for c in cycles
    ]
    nbr = [set() for _ in cycles]
    for e in art:
        members = [i for i, es in enumerate(edge_sets) if e in es]
        assert len(members) == 2, "articulation edge must join exactly two cycles"
        i, j = members
        nbr[i].add(j)
        nbr[j].add(i)
    terminal = tuple(i for i in range(len(cycles)) if len(nbr[i]) <= 1)
    distinguished = set(cycles[terminal[0]]) if terminal else set()
    for i in terminal[1:]:
        distinguished &= set(cycles[i])
    return SeacDecomposition(
        cycles=cycles,
        articulation_edges=art,
        neighbor_graph=tuple(tuple(sorted(s)) for s in nbr),
        terminal_cycles=terminal,
        distinguished=tuple(sorted(distinguished)),
        is_lseac=all(len(s) <= 2 for s in nbr),
    )


def _trace_cycle(g: Graph, alive):
    """Cyclic order of a vertex set all of whose members have degree 2."""
    start = min(alive)
    order = [start]
    prev = None
    while True:
        nxt = [w for w in g.neighbors(order[-1]) if w in alive and w != prev]
        if not nxt:
            return None
        prev = order[-1]
        if nxt[0] == start:
            break
        order.append(nxt[0])
        if len(order) > len(alive):
            return None
    return order if len(order) == len(alive) else None


def _terminal_candidates(g: Graph, alive, deg, used):
    """Peelable terminal cycles: a maximal chain of degree-2 vertices closed
    off by an unused edge between two higher-degree vertices."""
    seen = set()
    out = []
    for v in sorted(alive):
        if deg[v] != 2 or v in seen:
            continue
        chain = [v]
        seen.add(v)
        ends = []
        for w0 in sorted(g.neighbors(v)):
            if w0 not in alive:
                continue
            prev, cur = v, w0
            while cur in alive and deg[cur] == 2 and cur not in chain:
                chain.append(cur)
                seen.add(cur)
                nxt = [x for x in g.neighbors(cur) if x in alive and x != prev]
                if not nxt:
                    break
                prev, cur = cur, nxt[0]
            ends.append(cur)
        if len(ends) != 2:
            continue
        u, w = ends
        if u == w or u in chain or w in chain:
            continue
        if deg[u] < 3 or deg[w] < 3:
            continue
        e = (min(u, w), max(u, w))
        if e in used or not g.has_edge(*e):
            continue
        # order the chain from the u side
        ordered = _chain_order(g, alive, chain, u)
        out.append(([u] + ordered + [w], e))
    return out


def _chain_order(g: Graph, alive, chain, u):
    chain_set = set(chain)
    start = [c for c in chain if g.has_edge(c, u)]
    order = [start[0]]
    prev = u
    while len(order) < len(chain):
        nxt = [
            w
            for w in g.neighbors(order[-1])
            if w in chain_set and w != prev and w not in order
        ]
        prev = order[-1]
        order.append(nxt[0])
    return order


# ---------------------------------------------------------------------------
# tree path covers


def tree_path_cover(g: Graph) -> Tuple[int, List[List[int]]]:
    """Minimum number of vertex-disjoint paths covering a forest, with an
    optimal cover.  Raises ValueError if the input has a cycle."""
    comp_sizes = 0
    paths: List[List[int]] = []
    seen = set()
    for s in range(g.n):
        if s in seen:
            continue
        comp = _component(g, s)
        seen |= comp
        comp_sizes += len(comp)
        edges = sum(1 for u, v in g.edges if u in comp)
        if edges != len(comp) - 1:
            raise ValueError("tree_path_cover requires an acyclic graph")
        paths.extend(_cover_tree(g, comp, s))
    return len(paths), paths


def _component(g: Graph, s):
    comp = {s}
    stack = [s]
    while stack:
        for w in g.neighbors(stack.pop()):
            if w not in comp:
                comp.add(w)
                stack.append(w)
    return comp


def _cover_tree(g: Graph, comp, root):
    # post-order greedy: each vertex absorbs at most two child chains
    parent = {root: None}
    order = [root]
    i = 0
    while i < len(order):
        v = order[i]
        i += 1
        for w in sorted(g.neighbors(v)):
            if w in comp and w not in parent:
                parent[w] = v
                order.append(w)
    children = {v: [] for v in comp}
    for v in order[1:]:
        children[parent[v]].append(v)
    closed = []
    dangling: Dict[int, List[int]] = {}
    for v in reversed(order):
        chains = [dangling.pop(c) for c in children[v] if c in dangling]
        if len(chains) == 0:
            dangling[v] = [v]
        elif len(chains) == 1:
            dangling[v] = chains[0] + [v]
        else:
            closed.append(chains[0] + [v] + chains[1][::-1])
            closed.extend(chains[2:])
    if root in dangling:
        closed.append(dangling.pop(root))
    return closed
