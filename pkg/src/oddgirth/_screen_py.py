"""Pure-numpy scan kernel: hypothesis screening over edge-bitmask ranges.

Batched fallback for the compiled kernel in _screen.pyx.  Both backends must
produce identical counts and hit lists for any (n, start, stop); the tests
and the benchmark enforce the agreement.

For each mask the screen computes: connectivity, the number of distinct
adjacency eigenvalues d+1 (clustered at the pipeline's default tolerance),
and the odd girth via power sums (trace of A^l is an integer, and the first
odd l <= 7 with a positive trace is the odd girth; none means bipartite,
since an odd cycle needs at most n <= 7 vertices).
"""

import numpy as np

_BATCH = 8192


def _pair_index(n):
    us, vs = [], []
    for v in range(1, n):
        for u in range(v):
            us.append(u)
            vs.append(v)
    return np.array(us, dtype=np.int64), np.array(vs, dtype=np.int64)


def _adjacency_batch(n, masks):
    us, vs = _pair_index(n)
    k = len(us)
    bits = ((masks[:, None] >> np.arange(k, dtype=np.int64)[None, :]) & 1).astype(np.float64)
    A = np.zeros((len(masks), n, n))
    if k:
        A[:, us, vs] = bits
        A[:, vs, us] = bits
    return A


def _connected_batch(A):
    n = A.shape[1]
    M = np.minimum(A + np.eye(n), 1.0)
    for _ in range(3):  # (I + A)^8 reaches everything at n <= 7
        M = np.minimum(M @ M, 1.0)
    return M[:, 0, :].min(axis=1) > 0.5


def _screen_batch(n, masks):
    """(connected mask, d, odd girth code) for a batch; og code 0 means infinite."""
    A = _adjacency_batch(n, masks)
    conn = _connected_batch(A)
    if not conn.any():
        return conn, None, None
    w = np.linalg.eigvalsh(A[conn])  # ascending rows
    lam_max = np.abs(w).max(axis=1)
    tol = 1e-8 * n * np.maximum(1.0, lam_max)
    if n > 1:
        dcount = 1 + (np.diff(w, axis=1) > tol[:, None]).sum(axis=1)
    else:
        dcount = np.ones(w.shape[0], dtype=np.int64)
    t3 = (w**3).sum(axis=1)
    t5 = (w**5).sum(axis=1)
    t7 = (w**7).sum(axis=1)
    og = np.select([t3 > 0.5, t5 > 0.5, t7 > 0.5], [3, 5, 7], default=0)
    return conn, dcount - 1, og


def screen_range(n, start, stop):
    """Screen masks [start, stop) on n vertices.

    Returns (examined, hits): examined counts connected graphs, hits is the
    ordered list of (mask, d, odd_girth) for graphs meeting the theorem
    hypothesis (finite odd girth >= 2d+1).
    """
    examined = 0
    hits = []
    for lo in range(start, stop, _BATCH):
        masks = np.arange(lo, min(lo + _BATCH, stop), dtype=np.int64)
        conn, d, og = _screen_batch(n, masks)
        examined += int(conn.sum())
        if d is None:
            continue
        met = (og > 0) & (og >= 2 * d + 1)
        for m, dd, oo in zip(masks[conn][met], d[met], og[met]):
            hits.append((int(m), int(dd), int(oo)))
    return examined, hits


def screen_regular_range(n, start, stop):
    """Masks in [start, stop) whose graphs are connected and regular."""
    out = []
    for lo in range(start, stop, _BATCH):
        masks = np.arange(lo, min(lo + _BATCH, stop), dtype=np.int64)
        A = _adjacency_batch(n, masks)
        conn = _connected_batch(A)
        deg = A.sum(axis=2)
        regular = (deg == deg[:, :1]).all(axis=1)
        for m in masks[conn & regular]:
            out.append(int(m))
    return out
