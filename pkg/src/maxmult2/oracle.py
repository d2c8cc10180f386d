"""Floating-point search for high-multiplicity eigenvalues.

Independent numeric cross-check of the combinatorial classifier: for a
pattern S(G) and a target multiplicity m, the search drives m consecutive
eigenvalues of a matrix in S(G) onto a common value.  A batched projected
spectral iteration finds the right structure cheaply (with step 1/2 on the
squared-eigenvalue objective the gradient step annihilates the selected
eigenvalue window exactly, so the scheme is an alternating projection), and
a quasi-Newton polish on the window variance finishes the convergence,
which for tangential intersections is too slow by projection alone.
"""

from __future__ import annotations

import dataclasses
from typing import Optional, Tuple

import numpy as np
from scipy.optimize import minimize

from .graphs import Graph

ACCEPT_TOL = 1e-16
GAP_TOL = 1e-4
PATTERN_FLOOR = 1e-3


@dataclasses.dataclass
class RealizationResult:
    """Outcome of one nullity-m search."""

    matrix: Optional[np.ndarray]
    target_nullity: int
    residual: float
    gap: float
    iterations: int
    success: bool
    seed: int = 0


@dataclasses.dataclass
class OracleVerdict:
    """Numeric estimate of the maximum eigenvalue multiplicity."""

    m_estimate: int
    attempts: Tuple[RealizationResult, ...]


def _random_start(rng, shape):
    """Entries with magnitude in [0.1, 2] and random sign."""
    mag = rng.uniform(0.1, 2.0, shape)
    sign = rng.choice([-1.0, 1.0], shape)
    return mag * sign


def _adjacency_mask(g: Graph) -> np.ndarray:
    adj = np.zeros((g.n, g.n), dtype=bool)
    for u, v in g.edges:
        adj[u, v] = adj[v, u] = True
    return adj


def _project(a: np.ndarray, adj: np.ndarray, floor: float) -> np.ndarray:
    """Nearest matrices with the required pattern: structural zeros cleared,
    edge entries pushed off zero."""
    n = adj.shape[0]
    eye = np.eye(n, dtype=bool)
    a = np.where(adj | eye, a, 0.0)
    small = adj & (np.abs(a) < floor)
    signs = np.where(a >= 0, 1.0, -1.0)
    a = np.where(small, signs * floor, a)
    return (a + np.swapaxes(a, -1, -2)) / 2.0


def _window_scores(w: np.ndarray, m: int):
    """Best length-m window of consecutive eigenvalues per batch entry.

    The score is the sum of squared deviations from the window mean,
    computed by direct subtraction (a cumulative-sum shortcut cancels
    catastrophically near convergence).  Returns (score, start, mean).
    """
    r, n = w.shape
    k = n - m + 1
    scores = np.empty((r, k))
    means = np.empty((r, k))
    for s in range(k):
        win = w[:, s : s + m]
        mu = win.mean(axis=1)
        d = win - mu[:, None]
        scores[:, s] = np.einsum("ri,ri->r", d, d)
        means[:, s] = mu
    starts = np.argmin(scores, axis=1)
    idx = np.arange(r)
    return scores[idx, starts], starts, means[idx, starts]


def _cluster(w, start: int, m: int, mean: float, tol: float):
    """Maximal run of consecutive eigenvalues around the chosen window whose
    distance from the window mean is below tol; returns [lo, hi)."""
    n = len(w)
    lo, hi = start, start + m
    while lo > 0 and abs(w[lo - 1] - mean) < tol:
        lo -= 1
    while hi < n and abs(w[hi] - mean) < tol:
        hi += 1
    return lo, hi


def _assess(
    a: np.ndarray,
    m: int,
    adj: np.ndarray,
    accept_tol: float,
    gap_tol: float,
    pattern_floor: float,
):
    """Normalize scale, then judge a candidate matrix.

    Returns (success, residual, gap, shifted matrix).  The Frobenius
    normalization stops a shrinking matrix from faking a small residual.
    """
    n = a.shape[0]
    norm = np.linalg.norm(a)
    if norm < 1e-12:
        return False, np.inf, 0.0, a
    a = a * (np.sqrt(n) / norm)
    if np.any(adj & (np.abs(a) < pattern_floor)):
        return False, np.inf, 0.0, a
    w, _ = np.linalg.eigh(a)
    score, start, mean = _window_scores(w[None, :], m)
    score, start, mean = float(score[0]), int(start[0]), float(mean[0])
    lo, hi = _cluster(w, start, m, mean, 1e-7)
    glo = mean - w[lo - 1] if lo > 0 else np.inf
    ghi = w[hi] - mean if hi < n else np.inf
    gap = float(min(glo, ghi))
    ok = score < accept_tol and gap > gap_tol
    return ok, score, gap, a - mean * np.eye(n)


def _polish(g: Graph, a0: np.ndarray, m: int, maxiter: int = 400) -> np.ndarray:
    """Quasi-Newton minimization of the window variance over the free
    pattern coordinates, warm-started from a0."""
    n = g.n
    edges = sorted(g.edges)
    ne = len(edges)

    def unpack(p):
        a = np.diag(p[:n])
        for t, (u, v) in enumerate(edges):
            a[u, v] = a[v, u] = p[n + t]
        return a

    def fg(p):
        a = unpack(p)
        w, v = np.linalg.eigh(a)
        score, start, mean = _window_scores(w[None, :], m)
        k = int(start[0])
        mu = float(mean[0])
        gmat = np.zeros((n, n))
        for i in range(k, k + m):
            gmat += 2.0 * (w[i] - mu) * np.outer(v[:, i], v[:, i])
        grad = np.empty(n + ne)
        grad[:n] = np.diag(gmat)
        for t, (u, vv) in enumerate(edges):
            grad[n + t] = 2.0 * gmat[u, vv]
        return float(score[0]), grad

    p0 = np.empty(n + ne)
    p0[:n] = np.diag(a0)
    for t, (u, v) in enumerate(edges):
        p0[n + t] = a0[u, v]
    res = minimize(
        fg,
        p0,
        jac=True,
        method="L-BFGS-B",
        options={"maxiter": maxiter, "ftol": 1e-18, "gtol": 1e-14},
    )
    return unpack(res.x)


def maximize_nullity(
    g: Graph,
    m: int,
    seed: int = 0,
    restarts: int = 32,
    max_iters: int = 400,
    accept_tol: float = ACCEPT_TOL,
    gap_tol: float = GAP_TOL,
    pattern_floor: float = PATTERN_FLOOR,
) -> RealizationResult:
    """Search S(G) for a matrix with an eigenvalue of multiplicity >= m.

    Success requires the m-eigenvalue residual below accept_tol on the
    Frobenius-normalized matrix while the eigenvalues outside the
    degenerate cluster stay at least gap_tol away, so a success is a
    genuine multiplicity-m witness and not a near-degenerate fluke.
    """
    n = g.n
    if not 1 <= m <= n:
        raise ValueError("target nullity out of range")
    adj = _adjacency_mask(g)
    rng = np.random.default_rng(seed)
    if m == n:
        # multiplicity n forces a scalar matrix, possible only without edges
        if g.edges:
            return RealizationResult(None, m, np.inf, 0.0, 0, False, seed)
        return RealizationResult(np.zeros((n, n)), m, 0.0, np.inf, 0, True, seed)
    if m == 1:
        # any pattern matrix works: shift by an eigenvalue
        a = _project(_random_start(rng, (n, n)), adj, pattern_floor)
        w = np.linalg.eigvalsh(a)
        a = a - w[0] * np.eye(n)
        gaps = np.diff(np.sort(w))
        gap = float(gaps.min()) if len(gaps) else np.inf
        return RealizationResult(a, 1, 0.0, gap, 0, True, seed)

    a = _random_start(rng, (restarts, n, n))
    a = _project(a, adj, pattern_floor)
    # phase 1: batched alternating projection to locate the structure
    pre_iters = min(max_iters, 120)
    it = 0
    for it in range(pre_iters):
        w, v = np.linalg.eigh(a)
        scores, starts, means = _window_scores(w, m)
        shifted = w - means[:, None]
        sel = np.zeros_like(w, dtype=bool)
        for r in range(restarts):
            lo, hi = _cluster(w[r], starts[r], m, means[r], gap_tol / 2)
            sel[r, lo:hi] = True
        wsel = np.where(sel, shifted, 0.0)
        a = a - means[:, None, None] * np.eye(n)
        a = a - np.einsum("rim,rm,rjm->rij", v, wsel, v)
        a = _project(a, adj, pattern_floor)
    w = np.linalg.eigvalsh(a)
    scores, _, _ = _window_scores(w, m)

    # phase 2: quasi-Newton polish, best candidates first
    best = RealizationResult(None, m, np.inf, 0.0, it, False, seed)
    for r in np.argsort(scores):
        cand = _polish(g, a[r], m, maxiter=max_iters)
        ok, score, gap, mat = _assess(
            cand, m, adj, accept_tol, gap_tol, pattern_floor
        )
        if ok:
            return RealizationResult(mat, m, score, gap, it, True, seed)
        if score < best.residual:
            best = RealizationResult(None, m, score, gap, it, False, seed)
    return best


def verify_corank(
    a: np.ndarray,
    g: Graph,
    m: int,
    accept_tol: float = 1e-8,
    gap_tol: float = GAP_TOL,
    pattern_floor: float = PATTERN_FLOOR,
) -> bool:
    """Re-check a realization: pattern compliance (edge entries off zero,
    structural zeros exact) and m near-zero eigenvalues separated from the
    rest of the spectrum."""
    a = np.asarray(a, dtype=float)
    if a.shape != (g.n, g.n) or not np.allclose(a, a.T, atol=0):
        return False
    adj = _adjacency_mask(g)
    eye = np.eye(g.n, dtype=bool)
    if np.any(adj & (np.abs(a) < pattern_floor)):
        return False
    if np.any(a[~(adj | eye)] != 0.0):
        return False
    w = np.sort(np.abs(np.linalg.eigvalsh(a)))
    small = w[:m]
    rest = w[m] if m < len(w) else np.inf
    return bool(np.all(small < accept_tol) and rest > gap_tol)


def estimate_M(
    g: Graph,
    seed: int = 0,
    restarts: int = 32,
    max_iters: int = 400,
    **kw,
) -> OracleVerdict:
    """Numeric maximum-multiplicity estimate: largest m for which the
    nullity search succeeds.  A lower bound on the true value in principle,
    reliable on small graphs with enough restarts."""
    attempts = []
    best = 0
    for m in range(1, g.n + 1):
        res = maximize_nullity(
            g, m, seed=seed + 17 * m, restarts=restarts, max_iters=max_iters, **kw
        )
        attempts.append(res)
        if not res.success:
            break
        best = m
    return OracleVerdict(best, tuple(attempts))


def objective_and_gradient(g: Graph, a: np.ndarray, m: int):
    """The oracle objective (variance of the best window of m consecutive
    eigenvalues) with its exact gradient in the free pattern coordinates.

    Returns (f, diag_grad, edge_grad) where edge_grad maps each edge (u, v)
    with u < v to the derivative with respect to its (shared) entry value.
    """
    w, v = np.linalg.eigh(a)
    score, start, mean = _window_scores(w[None, :], m)
    f = float(score[0])
    k = int(start[0])
    mu = float(mean[0])
    gmat = np.zeros_like(a)
    for i in range(k, k + m):
        gmat += 2.0 * (w[i] - mu) * np.outer(v[:, i], v[:, i])
    diag_grad = np.diag(gmat).copy()
    edge_grad = {(u, vv): 2.0 * gmat[u, vv] for u, vv in sorted(g.edges)}
    return f, diag_grad, edge_grad


def matrix_from_params(
    g: Graph, diag: np.ndarray, edge_vals: dict
) -> np.ndarray:
    """Assemble a symmetric pattern matrix from free-coordinate values."""
    a = np.diag(np.asarray(diag, dtype=float))
    for (u, v), val in edge_vals.items():
        a[u, v] = a[v, u] = val
    return a
