"""Machine-checkable rank certificates.

Two kinds of evidence are produced here:

* combinatorial lower bounds: an (n-2)-square submatrix of the symmetric
  pattern of a two-parallel-paths graph that is permutation equivalent to a
  triangular matrix with forced-nonzero diagonal, proving rank >= n-2 for
  every matrix with that pattern (over any field);
* exact rational matrices of corank 3 for graphs containing a K4 or K2,3
  homeomorph, built through Schur complements and verified by fraction-free
  elimination.
"""

from __future__ import annotations

import dataclasses
import itertools
import json
import random
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .graphs import Graph, to_graph6, parse_graph6
from .recognition import HomeomorphWitness, ParallelPathsCover, check_staircase

STRUCT_ZERO = 0
FREE_DIAG = 1
FORCED_NONZERO = 2


@dataclasses.dataclass(frozen=True)
class PatternMatrix:
    """Symmetric entry pattern of S(G): free diagonal, forced nonzeros at
    edges, structural zeros elsewhere."""

    n: int
    entries: tuple  # tuple of tuples over {STRUCT_ZERO, FREE_DIAG, FORCED_NONZERO}

    @staticmethod
    def of(g: Graph) -> "PatternMatrix":
        rows = []
        for i in range(g.n):
            row = []
            for j in range(g.n):
                if i == j:
                    row.append(FREE_DIAG)
                elif g.has_edge(i, j):
                    row.append(FORCED_NONZERO)
                else:
                    row.append(STRUCT_ZERO)
            rows.append(tuple(row))
        return PatternMatrix(g.n, tuple(rows))


@dataclasses.dataclass(frozen=True)
class TriangularCertificate:
    """Proof object: after deleting two rows and two columns, the remaining
    pattern is permutation equivalent to a triangular matrix whose diagonal
    consists of edge entries only.  Valid over any field."""

    deleted_rows: tuple
    deleted_cols: tuple
    row_order: tuple
    col_order: tuple


@dataclasses.dataclass(frozen=True)
class RationalMatrix:
    """Dense symmetric matrix with exact rational entries."""

    entries: tuple  # tuple of tuples of Fraction

    @property
    def n(self) -> int:
        return len(self.entries)

    @staticmethod
    def from_rows(rows) -> "RationalMatrix":
        return RationalMatrix(
            tuple(tuple(Fraction(x) for x in row) for row in rows)
        )

    def __getitem__(self, idx):
        return self.entries[idx]

    def pattern_matches(self, g: Graph) -> bool:
        if self.n != g.n:
            return False
        for i in range(g.n):
            for j in range(i + 1, g.n):
                nz = self.entries[i][j] != 0
                if nz != g.has_edge(i, j):
                    return False
                if self.entries[i][j] != self.entries[j][i]:
                    return False
        return True

    def to_json(self, g: Optional[Graph] = None) -> str:
        doc = {
            "n": self.n,
            "entries": [[str(x) for x in row] for row in self.entries],
        }
        if g is not None:
            doc["graph6"] = to_graph6(g)
        return json.dumps(doc)

    @staticmethod
    def from_json(text: str):
        doc = json.loads(text)
        m = RationalMatrix.from_rows(
            [[Fraction(s) for s in row] for row in doc["entries"]]
        )
        g = parse_graph6(doc["graph6"]) if "graph6" in doc else None
        return m, g


def exact_rank(m: RationalMatrix) -> int:
    """Rank over the rationals by Gaussian elimination."""
    rows = [list(r) for r in m.entries]
    n = len(rows)
    ncols = n
    rank = 0
    col = 0
    for col in range(ncols):
        piv = None
        for r in range(rank, n):
            if rows[r][col] != 0:
                piv = r
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pr = rows[rank]
        for r in range(rank + 1, n):
            if rows[r][col] != 0:
                f = rows[r][col] / pr[col]
                for c in range(col, ncols):
                    rows[r][c] -= f * pr[c]
        rank += 1
    return rank


# ---------------------------------------------------------------------------
# parallel-paths patterns and the triangular certificate


def cover_order(cover: ParallelPathsCover) -> list:
    return list(cover.p1) + list(cover.p2)


def parallel_paths_pattern(g: Graph, cover: ParallelPathsCover) -> PatternMatrix:
    """Pattern of S(G) renumbered along the cover: two irreducible
    tridiagonal blocks coupled by a staircase block."""
    if not check_staircase(g, cover.p1, cover.p2):
        raise ValueError("cover violates the staircase condition")
    order = cover_order(cover)
    rows = []
    for i in order:
        row = []
        for j in order:
            if i == j:
                row.append(FREE_DIAG)
            elif g.has_edge(i, j):
                row.append(FORCED_NONZERO)
            else:
                row.append(STRUCT_ZERO)
        rows.append(tuple(row))
    return PatternMatrix(g.n, tuple(rows))


def lower_bound_certificate(
    g: Graph, cover: ParallelPathsCover
) -> TriangularCertificate:
    """Build the rank >= n-2 certificate for a two-parallel-paths graph.

    Deletes the rows of both path ends and the columns of both path starts,
    then peels columns having a single possibly-nonzero entry; the pattern
    structure of the cover guarantees the peel never gets stuck.
    """
    if not check_staircase(g, cover.p1, cover.p2):
        raise ValueError("cover violates the staircase condition")
    del_rows = (cover.p1[-1], cover.p2[-1])
    del_cols = (cover.p1[0], cover.p2[0])
    rows = [v for v in range(g.n) if v not in del_rows]
    cols = [v for v in range(g.n) if v not in del_cols]

    def possibly_nonzero(r, c):
        return r == c or g.has_edge(r, c)

    rev_rows: List[int] = []
    rev_cols: List[int] = []
    rem_rows = list(rows)
    rem_cols = list(cols)
    while rem_cols:
        picked = None
        for c in rem_cols:
            live = [r for r in rem_rows if possibly_nonzero(r, c)]
            if len(live) == 1 and g.has_edge(live[0], c):
                picked = (live[0], c)
                break
        if picked is None:
            raise ValueError("triangular peel stuck; cover is not valid")
        r, c = picked
        rev_rows.append(r)
        rev_cols.append(c)
        rem_rows.remove(r)
        rem_cols.remove(c)
    return TriangularCertificate(
        deleted_rows=del_rows,
        deleted_cols=del_cols,
        row_order=tuple(reversed(rev_rows)),
        col_order=tuple(reversed(rev_cols)),
    )


def search_certificate(g: Graph) -> Optional[TriangularCertificate]:
    """Exhaustive fallback: try every pair of deleted rows and columns.

    The greedy peel is complete for triangularizability, so this finds a
    rank >= n-2 certificate whenever one exists.  Quadratic in the number
    of vertex pairs; meant for small graphs without a parallel-paths cover."""
    n = g.n

    def peel(rows, cols):
        rem_r, rem_c = list(rows), list(cols)
        rr, cc = [], []
        while rem_c:
            pick = None
            for c in rem_c:
                live = [r for r in rem_r if r == c or g.has_edge(r, c)]
                if len(live) == 1 and g.has_edge(live[0], c):
                    pick = (live[0], c)
                    break
            if pick is None:
                return None
            rr.append(pick[0])
            cc.append(pick[1])
            rem_r.remove(pick[0])
            rem_c.remove(pick[1])
        return tuple(reversed(rr)), tuple(reversed(cc))

    for dr in itertools.combinations(range(n), 2):
        rows = [v for v in range(n) if v not in dr]
        for dc in itertools.combinations(range(n), 2):
            cols = [v for v in range(n) if v not in dc]
            out = peel(rows, cols)
            if out is not None:
                return TriangularCertificate(dr, dc, out[0], out[1])
    return None


def verify_certificate(g: Graph, cert: TriangularCertificate) -> bool:
    """Purely combinatorial re-check of a TriangularCertificate against the
    pattern of S(G); no numeric values involved."""
    k = g.n - 2
    rows = set(cert.row_order)
    cols = set(cert.col_order)
    if len(cert.deleted_rows) != 2 or len(cert.deleted_cols) != 2:
        return False
    if len(rows) != k or len(cols) != k:
        return False
    if rows | set(cert.deleted_rows) != set(range(g.n)):
        return False
    if cols | set(cert.deleted_cols) != set(range(g.n)):
        return False
    for s in range(k):
        for t in range(k):
            r, c = cert.row_order[s], cert.col_order[t]
            if s == t:
                if not g.has_edge(r, c):
                    return False
            elif s < t:
                if r == c or g.has_edge(r, c):
                    return False
    return True


# ---------------------------------------------------------------------------
# linear algebra helpers over the rationals


def _solve(a: List[List[Fraction]], rhs: List[List[Fraction]]):
    """Solve a X = rhs for square invertible a; rhs given as columns."""
    n = len(a)
    m = [row[:] + [col[i] for col in rhs] for i, row in enumerate(a)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            raise ValueError("singular system")
        m[col], m[piv] = m[piv], m[col]
        inv = Fraction(1) / m[col][col]
        m[col] = [x * inv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return [[m[i][n + j] for i in range(n)] for j in range(len(rhs))]


def _mat_inv3(g):
    det = (
        g[0][0] * (g[1][1] * g[2][2] - g[1][2] * g[2][1])
        - g[0][1] * (g[1][0] * g[2][2] - g[1][2] * g[2][0])
        + g[0][2] * (g[1][0] * g[2][1] - g[1][1] * g[2][0])
    )
    if det == 0:
        return None, det
    adj = _adj3(g)
    return [[adj[i][j] / det for j in range(3)] for i in range(3)], det


def _adj3(g):
    c = lambda i, j: g[i][j]
    return [
        [
            c(1, 1) * c(2, 2) - c(1, 2) * c(2, 1),
            c(0, 2) * c(2, 1) - c(0, 1) * c(2, 2),
            c(0, 1) * c(1, 2) - c(0, 2) * c(1, 1),
        ],
        [
            c(1, 2) * c(2, 0) - c(1, 0) * c(2, 2),
            c(0, 0) * c(2, 2) - c(0, 2) * c(2, 0),
            c(0, 2) * c(1, 0) - c(0, 0) * c(1, 2),
        ],
        [
            c(1, 0) * c(2, 1) - c(1, 1) * c(2, 0),
            c(0, 1) * c(2, 0) - c(0, 0) * c(2, 1),
            c(0, 0) * c(1, 1) - c(0, 1) * c(1, 0),
        ],
    ]


# ---------------------------------------------------------------------------
# corank-3 construction for K2,3 homeomorphs


def construct_corank3_hK23(g: Graph, witness: HomeomorphWitness) -> RationalMatrix:
    """Exact rational matrix in S(G) of rank n-3 when G contains a K2,3
    homeomorph but no K4 homeomorph.

    Pins the block of the two branch vertices and the three path neighbors
    through a Schur complement against an M-matrix on the remaining
    vertices, then tunes the free entries so that block has rank 2.
    """
    if witness.kind != "hK23":
        raise ValueError("witness must be an hK23")
    u, v = witness.branch_vertices
    ws = [p[1] for p in witness.paths]
    if len(set(ws)) != 3 or any(w in (u, v) for w in ws):
        raise ValueError("invalid hK23 witness")
    s_verts = [u, v] + ws
    sc = [x for x in range(g.n) if x not in s_verts]
    sc_index = {x: i for i, x in enumerate(sc)}

    # interiors of the three paths must fall into distinct components of
    # G - {u, v}: otherwise G contains an hK4 and this construction does not
    # apply
    rest, rmap = g.remove_vertices([u, v])
    comp_of = {}
    cid = 0
    seen = set()
    for i in range(rest.n):
        if i in seen:
            continue
        stack, comp = [i], {i}
        while stack:
            for w in rest.neighbors(stack.pop()):
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        for x in comp:
            comp_of[rmap[x]] = cid
        cid += 1
    if len({comp_of[w] for w in ws}) != 3:
        raise ValueError("hK23 paths not separated by the branch pair; hK4 present")

    # M-matrix on the complement of the pinned set
    acc = [
        [Fraction(0)] * len(sc) for _ in range(len(sc))
    ]
    for i, x in enumerate(sc):
        nbrs = [y for y in g.neighbors(x) if y in sc_index]
        acc[i][i] = Fraction(len(nbrs) + 1)
        for y in nbrs:
            acc[i][sc_index[y]] = Fraction(-1)
    # all pinned-to-complement edges are +1
    b_cols = []
    for x in s_verts:
        col = [Fraction(1) if g.has_edge(x, y) else Fraction(0) for y in sc]
        b_cols.append(col)
    if sc:
        solved = _solve(acc, b_cols)  # columns of acc^{-1} B
        cross = [
            [
                sum(b_cols[i][t] * solved[j][t] for t in range(len(sc)))
                for j in range(5)
            ]
            for i in range(5)
        ]
    else:
        cross = [[Fraction(0)] * 5 for _ in range(5)]

    # row/col roles in the pinned 5x5 block: 0 = u, 1 = v, 2..4 = path nbrs
    a_vals = []
    for k, w in enumerate(ws):
        if g.has_edge(v, w):
            a_vals.append(Fraction(1))
        else:
            val = -cross[1][2 + k]
            if val == 0:
                raise ValueError("degenerate Schur entry; construction bug")
            a_vals.append(val)
    t12 = Fraction(1) if g.has_edge(u, v) else -cross[0][1]
    lam = None
    for cand in range(1, 100):
        lam_c = Fraction(cand)
        if all(lam_c * a_vals[k] + cross[0][2 + k] != 0 for k in range(3)):
            lam = lam_c
            break
    assert lam is not None
    t = [[Fraction(0)] * 5 for _ in range(5)]
    if t12 == 0:
        t[0][0] = t[1][1] = Fraction(0)
    else:
        t[0][0] = lam * t12
        t[1][1] = t12 / lam
    t[0][1] = t[1][0] = t12
    for k in range(3):
        t[0][2 + k] = t[2 + k][0] = lam * a_vals[k]
        t[1][2 + k] = t[2 + k][1] = a_vals[k]

    # assemble the full matrix in original labels
    a = [[Fraction(0)] * g.n for _ in range(g.n)]
    for i, x in enumerate(sc):
        for j, y in enumerate(sc):
            a[x][y] = acc[i][j]
    for i, x in enumerate(s_verts):
        for y in sc:
            if g.has_edge(x, y):
                a[x][y] = a[y][x] = Fraction(1)
    for i, x in enumerate(s_verts):
        for j, y in enumerate(s_verts):
            a[x][y] = t[i][j] + cross[i][j]
    m = RationalMatrix.from_rows(a)
    if not m.pattern_matches(g):
        raise ValueError("pattern mismatch in hK23 construction; bug")
    if exact_rank(m) != g.n - 3:
        raise ValueError("rank mismatch in hK23 construction; bug")
    return m


# ---------------------------------------------------------------------------
# corank-3 construction for K4 homeomorphs


def hk4_case(witness: HomeomorphWitness) -> int:
    """Construction case 1..4: one plus the minimum, over the four triples
    of branch vertices, of the number of subdivided paths inside the triple."""
    counts = _triple_counts(witness)
    return 1 + min(c for _, c in counts)


def _triple_counts(witness: HomeomorphWitness):
    paths = {}
    for p in witness.paths:
        paths[(p[0], p[-1])] = p
        paths[(p[-1], p[0])] = p[::-1]
    out = []
    for triple in itertools.combinations(witness.branch_vertices, 3):
        cnt = sum(
            1
            for a, b in itertools.combinations(triple, 2)
            if len(paths[(a, b)]) > 2
        )
        out.append((triple, cnt))
    return out


def _appendix_frame(witness: HomeomorphWitness):
    """Choose the labeled front vertices for the corank-3 construction.

    Returns (case, front) where front lists the vertices playing the roles
    1..l of the construction (l = case + 2).
    """
    paths = {}
    for p in witness.paths:
        paths[(p[0], p[-1])] = list(p)
        paths[(p[-1], p[0])] = list(p)[::-1]
    counts = _triple_counts(witness)
    best = min(c for _, c in counts)
    triple = next(t for t, c in counts if c == best)
    case = 1 + best
    sub = [
        (a, b)
        for a, b in itertools.combinations(triple, 2)
        if len(paths[(a, b)]) > 2
    ]
    if case == 1:
        return 1, list(triple)
    if case == 2:
        b, c = sub[0]
        a = next(x for x in triple if x not in sub[0])
        p = paths[(b, c)]
        return 2, [a, b, c, p[-2]]
    if case == 3:
        (e1, e2) = sub
        shared = set(e1) & set(e2)
        c = shared.pop()
        others = sorted(set(triple) - {c})
        a, b = others
        p4 = paths[(b, c)]
        p5 = paths[(a, c)]
        return 3, [a, b, c, p4[-2], p5[-2]]
    a, b, c = triple
    p4 = paths[(b, c)]
    p5 = paths[(a, c)]
    p6 = paths[(a, b)]
    return 4, [a, b, c, p4[-2], p5[-2], p6[1]]


def construct_corank3_hK4(
    g: Graph, witness: HomeomorphWitness, seed: int = 0
) -> RationalMatrix:
    """Exact rational matrix in S(G) of rank n-3 for any G containing a K4
    homeomorph.

    Random rational substitutions are drawn from a seeded source and retried
    until all required Schur-complement entries are nonzero; the appendix
    analysis guarantees such values exist.
    """
    if witness.kind != "hK4":
        raise ValueError("witness must be an hK4")
    rng = random.Random(seed)
    last_err = None
    for attempt in range(100):
        try:
            return _hk4_attempt(g, witness, rng)
        except _Degenerate as e:
            last_err = e
    raise ValueError(f"hK4 construction failed after retries: {last_err}")


class _Degenerate(Exception):
    pass


def _rand_frac(rng) -> Fraction:
    return Fraction(rng.randint(1, 1000))


def _hk4_attempt(g: Graph, witness: HomeomorphWitness, rng) -> RationalMatrix:
    case, front = _appendix_frame(witness)
    l = len(front)
    rest = [x for x in range(g.n) if x not in front]
    ridx = {x: i for i, x in enumerate(rest)}

    # A22 = I - mu*B on the back vertices; mu small enough for strict
    # diagonal dominance, so A22 is always invertible
    bmat = [[Fraction(0)] * len(rest) for _ in rest]
    for i, x in enumerate(rest):
        for y in g.neighbors(x):
            if y in ridx and ridx[y] > i:
                val = _rand_frac(rng)
                bmat[i][ridx[y]] = val
                bmat[ridx[y]][i] = val
    mu = Fraction(1, 1000 * (len(rest) + 1) * rng.randint(1, 50))
    a22 = [
        [
            (Fraction(1) if i == j else Fraction(0)) - mu * bmat[i][j]
            for j in range(len(rest))
        ]
        for i in range(len(rest))
    ]
    a12 = [[Fraction(0)] * len(rest) for _ in range(l)]
    for i, x in enumerate(front):
        for y in g.neighbors(x):
            if y in ridx:
                a12[i][ridx[y]] = _rand_frac(rng)
    if rest:
        cols = [[a12[i][t] for t in range(len(rest))] for i in range(l)]
        solved = _solve(a22, cols)
        c = [
            [
                sum(a12[i][t] * solved[j][t] for t in range(len(rest)))
                for j in range(l)
            ]
            for i in range(l)
        ]
    else:
        c = [[Fraction(0)] * l for _ in range(l)]

    e = lambda i, j: g.has_edge(front[i], front[j])
    builders = {1: _case1, 2: _case2, 3: _case3, 4: _case4}
    a11 = builders[case](c, e, rng)

    # assemble in original labels
    a = [[Fraction(0)] * g.n for _ in range(g.n)]
    for i in range(l):
        for j in range(l):
            a[front[i]][front[j]] = a11[i][j]
        for t, y in enumerate(rest):
            a[front[i]][y] = a[y][front[i]] = a12[i][t]
    for i, x in enumerate(rest):
        for j, y in enumerate(rest):
            a[x][y] = a22[i][j]
    m = RationalMatrix.from_rows(a)
    if not m.pattern_matches(g):
        raise _Degenerate("pattern mismatch")
    if exact_rank(m) != g.n - 3:
        raise _Degenerate("rank mismatch")
    return m


def _case1(c, e, rng):
    for i, j in itertools.combinations(range(3), 2):
        if c[i][j] == 0:
            raise _Degenerate(f"c[{i}][{j}] vanished")
    return [row[:] for row in c]


def _nonzero_choice(rng, *avoid):
    for _ in range(50):
        v = Fraction(rng.randint(1, 50))
        if all(v != a for a in avoid):
            return v
    raise _Degenerate("no admissible value")


def _case2(c, e, rng):
    # front roles: 0,1,2 are the chosen triple; 3 is the interior vertex of
    # the subdivided path, adjacent to role 2
    if e(1, 2):
        raise _Degenerate("triple pair adjacent; should have been case 1")
    t23 = -c[1][2]
    if t23 == 0:
        raise _Degenerate("forced entry (2,3) vanished")
    if e(1, 3):
        t24 = _nonzero_choice(rng, -c[1][3])
    else:
        t24 = -c[1][3]
        if t24 == 0:
            raise _Degenerate("forced entry (2,4) vanished")
    if e(0, 3):
        t14 = _nonzero_choice(rng, -c[0][3])
    else:
        t14 = -c[0][3]
    x = [t14 / t24, Fraction(1), t23, t24]
    a11 = [[x[i] * x[j] + c[i][j] for j in range(4)] for i in range(4)]
    _check_front_pattern(a11, e, 4)
    return a11


def _case3(c, e, rng):
    # roles: paths (1,3) and (2,3) subdivided, 4 adj role 2's path end...
    # 3 = shared branch, 4 = interior adj 3 on path(2,3), 5 on path(1,3)
    if e(0, 2) or e(1, 2):
        raise _Degenerate("triple pair adjacent; earlier case applies")
    t13 = -c[0][2]
    t23 = -c[1][2]
    if t13 == 0 or t23 == 0:
        raise _Degenerate("forced (1,3)/(2,3) entry vanished")
    t14 = _nonzero_choice(rng, -c[0][3]) if e(0, 3) else -c[0][3]
    t25 = _nonzero_choice(rng, -c[1][4]) if e(1, 4) else -c[1][4]
    if e(0, 4):
        t15 = _nonzero_choice(rng, -c[0][4])
    else:
        t15 = -c[0][4]
        if t15 == 0:
            raise _Degenerate("forced (1,5) entry vanished")
    if e(1, 3):
        t24 = _nonzero_choice(rng, -c[1][3])
    else:
        t24 = -c[1][3]
        if t24 == 0:
            raise _Degenerate("forced (2,4) entry vanished")
    t45 = _nonzero_choice(rng, -c[3][4]) if e(3, 4) else -c[3][4]
    k1, k2, k3 = t14 * t15, t14 * t25 + t15 * t24, t24 * t25
    uvw = _solve_three_term(k1, k2, k3, t45, rng)
    u, v, w = uvw
    det = u * w - v * v
    p11, p12, p22 = w / det, -v / det, u / det
    q = [[t13, t14, t15], [t23, t24, t25]]
    r = [
        [
            sum(
                q[s][i] * [[u, v], [v, w]][s][t] * q[t][j]
                for s in range(2)
                for t in range(2)
            )
            for j in range(3)
        ]
        for i in range(3)
    ]
    t = [[Fraction(0)] * 5 for _ in range(5)]
    t[0][0], t[0][1], t[1][1] = p11, p12, p22
    t[1][0] = p12
    for i in range(2):
        for j in range(3):
            t[i][2 + j] = t[2 + j][i] = q[i][j]
    for i in range(3):
        for j in range(3):
            t[2 + i][2 + j] = r[i][j]
    assert t[3][4] == t45
    a11 = [[t[i][j] + c[i][j] for j in range(5)] for i in range(5)]
    _check_front_pattern(a11, e, 5)
    return a11


def _solve_three_term(k1, k2, k3, target, rng):
    """Rationals (u, v, w) with k1*u + k2*v + k3*w == target and uw != v^2."""
    coeffs = [k1, k2, k3]
    if all(k == 0 for k in coeffs):
        raise _Degenerate("all Schur couplings vanished")
    pivot = next(i for i in range(3) if coeffs[i] != 0)
    for _ in range(200):
        vals = [Fraction(rng.randint(-9, 9)) for _ in range(3)]
        vals[pivot] = (
            target - sum(coeffs[i] * vals[i] for i in range(3) if i != pivot)
        ) / coeffs[pivot]
        u, v, w = vals
        if u * w - v * v != 0:
            return vals
    raise _Degenerate("no invertible solution found")


def _case4(c, e, rng):
    # roles: all three triple paths subdivided; 4 adj 3 (path 2-3), 5 adj 3
    # (path 1-3), 6 adj 1 (path 1-2)
    if e(0, 1) or e(0, 2) or e(1, 2):
        raise _Degenerate("triple pair adjacent; earlier case applies")
    fixed = {}
    must_nonzero = {(0, 1), (0, 2), (1, 2), (0, 4), (1, 3), (1, 5)}
    fixed_pairs = [
        (0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (1, 3), (1, 4), (1, 5),
        (2, 5), (3, 4), (3, 5), (4, 5),
    ]
    for i, j in fixed_pairs:
        if e(i, j):
            fixed[(i, j)] = _nonzero_choice(rng, -c[i][j])
        else:
            fixed[(i, j)] = -c[i][j]
            if (i, j) in must_nonzero and fixed[(i, j)] == 0:
                raise _Degenerate(f"forced entry {(i, j)} vanished")
    tv = lambda i, j: fixed[(min(i, j), max(i, j))]
    t12, t26 = tv(0, 1), tv(1, 5)
    h = [tv(0, 3), tv(1, 3), tv(3, 5)]  # couples row (4) to rows (1,2,6)
    k = [tv(0, 4), tv(1, 4), tv(4, 5)]  # couples row (5) to rows (1,2,6)
    t45 = tv(3, 4)

    found = None
    for u0 in _candidate_values(rng):
        if u0 == -c[0][5] or found:
            continue
        for y0 in _candidate_values(rng):
            # the rank equation is bilinear in the remaining unknowns x, z:
            # f(x, z) = a + b x + c z + d x z, recovered from four exact
            # evaluations, then solved for z at candidate values of x
            gm = lambda x, z: [
                [x, t12, u0],
                [t12, y0, t26],
                [u0, t26, z],
            ]
            f = lambda x, z: (
                t45 * _det3(gm(x, z)) - _quad(h, _adj3(gm(x, z)), k)
            )
            zero, one = Fraction(0), Fraction(1)
            f00, f10, f01, f11 = f(zero, zero), f(one, zero), f(zero, one), f(one, one)
            ca = f00
            cb = f10 - f00
            cc = f01 - f00
            cd = f11 - f10 - f01 + f00
            for x0 in _candidate_values(rng):
                den = cc + cd * x0
                if den != 0:
                    z0 = -(ca + cb * x0) / den
                elif ca + cb * x0 == 0:
                    z0 = next(
                        (z for z in _candidate_values(rng)
                         if _det3(gm(x0, z)) != 0),
                        None,
                    )
                    if z0 is None:
                        continue
                else:
                    continue
                if _det3(gm(x0, z0)) != 0:
                    found = (x0, y0, z0, u0)
                    break
            if found:
                break
    if found is None:
        raise _Degenerate("no solution of the rank-3 equation found")
    x0, y0, z0, u0 = found
    gmat = [[x0, t12, u0], [t12, y0, t26], [u0, t26, z0]]
    ginv, _ = _mat_inv3(gmat)
    # K block: rows (1,2,6) x cols (3,4,5)
    kblock = [
        [tv(0, 2), tv(0, 3), tv(0, 4)],
        [tv(1, 2), tv(1, 3), tv(1, 4)],
        [tv(2, 5), tv(3, 5), tv(4, 5)],
    ]
    r = [
        [
            sum(
                kblock[s][i] * ginv[s][t] * kblock[t][j]
                for s in range(3)
                for t in range(3)
            )
            for j in range(3)
        ]
        for i in range(3)
    ]
    assert r[1][2] == t45
    t = [[Fraction(0)] * 6 for _ in range(6)]
    trip = [0, 1, 5]  # indices of roles 1, 2, 6
    mid = [2, 3, 4]  # indices of roles 3, 4, 5
    for s in range(3):
        for tt in range(3):
            t[trip[s]][trip[tt]] = gmat[s][tt]
            t[mid[s]][mid[tt]] = r[s][tt]
            t[trip[s]][mid[tt]] = kblock[s][tt]
            t[mid[tt]][trip[s]] = kblock[s][tt]
    a11 = [[t[i][j] + c[i][j] for j in range(6)] for i in range(6)]
    _check_front_pattern(a11, e, 6)
    return a11


def _candidate_values(rng):
    vals = [Fraction(x) for x in (1, 2, -1, 3, -2, 5, -3, 7)]
    vals += [Fraction(rng.randint(-60, 60)) for _ in range(12)]
    return vals


def _det3(g):
    return (
        g[0][0] * (g[1][1] * g[2][2] - g[1][2] * g[2][1])
        - g[0][1] * (g[1][0] * g[2][2] - g[1][2] * g[2][0])
        + g[0][2] * (g[1][0] * g[2][1] - g[1][1] * g[2][0])
    )


def _quad(h, adj, k):
    return sum(h[i] * adj[i][j] * k[j] for i in range(3) for j in range(3))


def _check_front_pattern(a11, e, l):
    for i in range(l):
        for j in range(i + 1, l):
            if e(i, j) and a11[i][j] == 0:
                raise _Degenerate(f"edge entry {(i, j)} vanished")
            if not e(i, j) and a11[i][j] != 0:
                raise _Degenerate(f"non-edge entry {(i, j)} nonzero")


# ---------------------------------------------------------------------------
# matrix lifting through pendant additions and subdivisions


KEEP_NEIGHBOR = "keep-neighbor"
DROP_BOTH = "drop-both"


def pendant_lift(
    b: RationalMatrix,
    g: Graph,
    u: int,
    v: int,
    case: str,
    x: Fraction = Fraction(1),
) -> RationalMatrix:
    """Lift a matrix through the pendant-vertex reduction, preserving corank.

    KEEP_NEIGHBOR: b is in S(G - v); appends the pendant v with a nonzero
    diagonal x (rank grows by one).  DROP_BOTH: b is in S(G - {u, v});
    reinstates both u and its pendant v with an off-diagonal 2x2 block
    (rank grows by two).  v must be a pendant of g with neighbor u.
    """
    x = Fraction(x)
    if x == 0:
        raise ValueError("scalar must be nonzero")
    if g.degree(v) != 1 or u not in g.neighbors(v):
        raise ValueError("v must be a pendant vertex with neighbor u")
    if case == KEEP_NEIGHBOR:
        sub, vmap = g.remove_vertices([v])
        if b.n != sub.n:
            raise ValueError("matrix size mismatch")
        a = [[Fraction(0)] * g.n for _ in range(g.n)]
        for i in range(sub.n):
            for j in range(sub.n):
                a[vmap[i]][vmap[j]] = b[i][j]
        a[v][v] = x
        a[u][v] = a[v][u] = x  # one reversed column operation with factor 1
        a[u][u] += x
        m = RationalMatrix.from_rows(a)
    elif case == DROP_BOTH:
        sub, vmap = g.remove_vertices([u, v])
        if b.n != sub.n:
            raise ValueError("matrix size mismatch")
        a = [[Fraction(0)] * g.n for _ in range(g.n)]
        for i in range(sub.n):
            for j in range(sub.n):
                a[vmap[i]][vmap[j]] = b[i][j]
        a[u][v] = a[v][u] = x
        for w in g.neighbors(u):
            if w != v:
                a[w][u] = a[u][w] = x  # reversed operations, factor 1 each
        m = RationalMatrix.from_rows(a)
    else:
        raise ValueError(f"unknown lift case {case!r}")
    if not m.pattern_matches(g):
        raise ValueError("lifted matrix does not match the target pattern")
    return m


def subdivision_project(
    ap: RationalMatrix, gp: Graph, new_vertex: int
) -> Tuple[RationalMatrix, int]:
    """Project a matrix on a subdivided graph back onto the original graph.

    new_vertex must have degree 2; its two neighbors become adjacent in the
    projected graph.  Returns (matrix on G, rank delta = rank(ap) - rank(b)).
    With a nonzero diagonal at the new vertex the delta is exactly 1; with a
    zero diagonal the entry is first shifted by 1, which can add one more.
    """
    if not ap.pattern_matches(gp):
        raise ValueError("matrix does not match the subdivided graph")
    nbrs = sorted(gp.neighbors(new_vertex))
    if len(nbrs) != 2:
        raise ValueError("subdivision vertex must have degree 2")
    v1, v2 = nbrs
    rows = [list(r) for r in ap.entries]
    if rows[new_vertex][new_vertex] == 0:
        rows[new_vertex][new_vertex] = Fraction(1)
    d = rows[new_vertex][new_vertex]
    # eliminate the new vertex's row and column against its two neighbors
    keep = [i for i in range(gp.n) if i != new_vertex]
    out = [[rows[i][j] for j in keep] for i in keep]
    pos = {old: new for new, old in enumerate(keep)}
    for a_ in (v1, v2):
        for b_ in (v1, v2):
            out[pos[a_]][pos[b_]] -= (
                rows[a_][new_vertex] * rows[new_vertex][b_] / d
            )
    b = RationalMatrix.from_rows(out)
    delta = exact_rank(ap) - exact_rank(b)
    return b, delta
