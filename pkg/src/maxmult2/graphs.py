"""Simple undirected graphs with dense labels 0..n-1, plus the structural
operations (cores, cut vertices, subdivisions, pendant-path contraction)
that the classification pipeline is built on.

Interchange formats: a plain edge-list text format and graph6 (n <= 62).
"""

from __future__ import annotations

import dataclasses
from typing import Iterable, Optional


class ParseError(ValueError):
    """Malformed graph input; carries the offending line number."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclasses.dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph on vertices 0..n-1."""

    n: int
    edges: frozenset  # frozenset of (u, v) tuples with u < v

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        for u, v in self.edges:
            if not (0 <= u < v < self.n):
                raise ValueError(f"bad edge ({u}, {v}) for n={self.n}")
        adj = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        object.__setattr__(self, "_adj", tuple(frozenset(s) for s in adj))

    @staticmethod
    def from_edges(n: int, edges: Iterable) -> "Graph":
        norm = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            norm.add((min(u, v), max(u, v)))
        return Graph(n, frozenset(norm))

    def neighbors(self, v: int) -> frozenset:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    @property
    def edge_list(self):
        return sorted(self.edges)

    @property
    def vertices(self):
        return range(self.n)

    def edge_count(self) -> int:
        return len(self.edges)

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = {0}
        stack = [0]
        while stack:
            for w in self._adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n

    def subgraph(self, vertices) -> tuple:
        """Induced subgraph on the given vertices, relabeled 0..k-1.

        Returns (graph, vmap) with vmap[new] == old.
        """
        vmap = sorted(set(vertices))
        index = {old: new for new, old in enumerate(vmap)}
        edges = {
            (index[u], index[v])
            for u, v in self.edges
            if u in index and v in index
        }
        return Graph(len(vmap), frozenset(edges)), tuple(vmap)

    def remove_vertices(self, vertices) -> tuple:
        keep = [v for v in range(self.n) if v not in set(vertices)]
        return self.subgraph(keep)

    def with_edge(self, u: int, v: int) -> "Graph":
        return Graph.from_edges(self.n, list(self.edges) + [(u, v)])


# ---------------------------------------------------------------------------
# parsing / serialization


def parse_edge_list(text: str) -> Graph:
    """Parse the text format: first line n, then one "u v" pair per line."""
    lines = text.splitlines()
    if not lines:
        raise ParseError("empty input")
    try:
        n = int(lines[0].strip())
    except ValueError:
        raise ParseError(f"expected vertex count, got {lines[0]!r}", line=1)
    if n < 0:
        raise ParseError("vertex count must be nonnegative", line=1)
    edges = set()
    for i, raw in enumerate(lines[1:], start=2):
        line = raw.strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected 'u v', got {raw!r}", line=i)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"non-integer endpoint in {raw!r}", line=i)
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex out of range in {raw!r}", line=i)
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", line=i)
        edges.add((min(u, v), max(u, v)))
    return Graph(n, frozenset(edges))


def to_edge_list(g: Graph) -> str:
    lines = [str(g.n)]
    lines += [f"{u} {v}" for u, v in g.edge_list]
    return "\n".join(lines)


def parse_graph6(text: str) -> Graph:
    """Decode a graph6 string (n <= 62, single-byte size header)."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise ParseError("empty graph6 string")
    data = []
    for ch in s:
        c = ord(ch)
        if not (63 <= c <= 126):
            raise ParseError(f"invalid graph6 character {ch!r}")
        data.append(c - 63)
    n = data[0]
    if n == 63:
        raise ParseError("graph6 strings with n > 62 are not supported")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(data) - 1 != need:
        raise ParseError(
            f"graph6 payload has {len(data) - 1} chunks, expected {need}"
        )
    bits = []
    for chunk in data[1:]:
        for k in range(5, -1, -1):
            bits.append((chunk >> k) & 1)
    edges = set()
    idx = 0
    for v in range(1, n):
        for u in range(v):
            if bits[idx]:
                edges.add((u, v))
            idx += 1
    return Graph(n, frozenset(edges))


def to_graph6(g: Graph) -> str:
    if g.n > 62:
        raise ValueError("graph6 output supported only for n <= 62")
    bits = []
    for v in range(1, g.n):
        for u in range(v):
            bits.append(1 if g.has_edge(u, v) else 0)
    while len(bits) % 6:
        bits.append(0)
    out = [chr(g.n + 63)]
    for i in range(0, len(bits), 6):
        val = 0
        for b in bits[i:i + 6]:
            val = (val << 1) | b
        out.append(chr(val + 63))
    return "".join(out)


# ---------------------------------------------------------------------------
# structural operations


def components(g: Graph):
    """Connected components, each relabeled, with maps back to g."""
    seen = set()
    out = []
    for s in range(g.n):
        if s in seen:
            continue
        comp = {s}
        stack = [s]
        while stack:
            for w in g.neighbors(stack.pop()):
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        out.append(g.subgraph(comp))
    return out


def is_path(g: Graph):
    """Path ordering if g is a path graph (single vertex included), else None."""
    if g.n == 0 or not g.is_connected():
        return None
    if g.n == 1:
        return [0]
    if g.edge_count() != g.n - 1:
        return None
    degs = [g.degree(v) for v in range(g.n)]
    if max(degs) > 2:
        return None
    start = degs.index(1)
    order = [start]
    prev = None
    cur = start
    while len(order) < g.n:
        nxt = [w for w in g.neighbors(cur) if w != prev]
        prev, cur = cur, nxt[0]
        order.append(cur)
    return order


def cut_vertices(g: Graph) -> list:
    """Articulation points of a connected graph (Hopcroft-Tarjan)."""
    if not g.is_connected():
        raise ValueError("cut_vertices requires a connected graph")
    if g.n == 0:
        return []
    disc = [-1] * g.n
    low = [0] * g.n
    cuts = set()
    timer = [0]

    def dfs(root):
        # iterative DFS to keep recursion depth bounded
        stack = [(root, -1, iter(g.neighbors(root)))]
        disc[root] = low[root] = timer[0]
        timer[0] += 1
        children = {root: 0}
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] == -1:
                    disc[w] = low[w] = timer[0]
                    timer[0] += 1
                    children[v] = children.get(v, 0) + 1
                    stack.append((w, v, iter(g.neighbors(w))))
                    advanced = True
                    break
                elif w != parent:
                    low[v] = min(low[v], disc[w])
            if not advanced:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    low[p] = min(low[p], low[v])
                    if stack[-1][1] != -1 and low[v] >= disc[p]:
                        cuts.add(p)
        if children.get(root, 0) > 1:
            cuts.add(root)

    dfs(0)
    return sorted(cuts)


def core_vertex_set(g: Graph) -> set:
    """Vertices surviving iterated deletion of degree <= 1 vertices."""
    deg = {v: g.degree(v) for v in range(g.n)}
    alive = set(range(g.n))
    queue = [v for v in alive if deg[v] <= 1]
    while queue:
        v = queue.pop()
        if v not in alive or deg[v] > 1:
            continue
        alive.discard(v)
        for w in g.neighbors(v):
            if w in alive:
                deg[w] -= 1
                if deg[w] <= 1:
                    queue.append(w)
    return alive


def core_of(g: Graph):
    """Maximal induced C2 subgraph of a connected graph.

    Returns (core graph, vmap new->old, removal order in old labels).
    Raises ValueError("tree") on acyclic input.
    """
    if not g.is_connected():
        raise ValueError("core_of requires a connected graph")
    deg = {v: g.degree(v) for v in range(g.n)}
    alive = set(range(g.n))
    removal = []
    queue = sorted(v for v in alive if deg[v] <= 1)
    while queue:
        v = queue.pop(0)
        if v not in alive or deg[v] > 1:
            continue
        alive.discard(v)
        removal.append(v)
        for w in g.neighbors(v):
            if w in alive:
                deg[w] -= 1
                if deg[w] <= 1:
                    queue.append(w)
    if not alive:
        raise ValueError("tree")
    core, vmap = g.subgraph(alive)
    return core, vmap, removal


def pendant_path_contract(g: Graph):
    """Shorten every pendant path to length one.

    Repeatedly deletes a pendant vertex whose unique neighbor has degree 2
    and sits outside the core, until each pendant vertex is adjacent to a
    core vertex (when the hanging pieces are paths).  The verdict of the
    classifier is invariant under this contraction.

    Returns (contracted graph, vmap new->old, log of deleted old labels).
    """
    if not g.is_connected():
        raise ValueError("pendant_path_contract requires a connected graph")
    core = core_vertex_set(g)
    if not core:
        raise ValueError("tree")
    alive = set(range(g.n))
    adj = {v: set(g.neighbors(v)) for v in range(g.n)}
    log = []
    changed = True
    while changed:
        changed = False
        for v in sorted(alive):
            if len(adj[v]) == 1:
                (u,) = adj[v]
                if u not in core and len(adj[u]) == 2:
                    alive.discard(v)
                    adj[u].discard(v)
                    del adj[v]
                    log.append(v)
                    changed = True
                    break
    sub = [(u, v) for u in alive for v in adj[u] if u < v]
    kept = sorted(alive)
    index = {old: new for new, old in enumerate(kept)}
    contracted = Graph.from_edges(
        len(kept), [(index[u], index[v]) for u, v in sub]
    )
    return contracted, tuple(kept), log


def subdivide_edge(g: Graph, edge) -> Graph:
    """Replace edge (u, v) by a path u-w-v through a new vertex w = n."""
    u, v = min(edge), max(edge)
    if not g.has_edge(u, v):
        raise ValueError(f"edge ({u}, {v}) not in graph")
    w = g.n
    edges = set(g.edges)
    edges.discard((u, v))
    edges.add((u, w))
    edges.add((v, w))
    return Graph(g.n + 1, frozenset(edges))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(
        n, [(i, j) for i in range(n) for j in range(i + 1, n)]
    )


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(
        a + b, [(i, a + j) for i in range(a) for j in range(b)]
    )
