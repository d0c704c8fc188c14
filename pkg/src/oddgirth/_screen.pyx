# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled scan kernel (n <= 7): connectivity, eigenvalue clustering, odd
girth, and hypothesis screening over edge-bitmask ranges.

Must produce exactly the same counts and hit lists as _screen_py; the tests
and the benchmark enforce the agreement.
"""

from libc.math cimport fabs, sqrt


cdef void _jacobi(double a[8][8], int n, double w[8]) noexcept nogil:
    """Cyclic Jacobi eigenvalues of symmetric a (destroyed), sorted ascending into w."""
    cdef int sweep, p, q, i, j
    cdef double off, apq, app, aqq, theta, t, c, s, tau, aip, aiq, tmp
    for sweep in range(50):
        off = 0.0
        for p in range(n - 1):
            for q in range(p + 1, n):
                off += a[p][q] * a[p][q]
        if off < 1e-26:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p][q]
                if fabs(apq) < 1e-300:
                    continue
                app = a[p][p]
                aqq = a[q][q]
                theta = 0.5 * (aqq - app) / apq
                if theta >= 0.0:
                    t = 1.0 / (theta + sqrt(1.0 + theta * theta))
                else:
                    t = -1.0 / (sqrt(1.0 + theta * theta) - theta)
                c = 1.0 / sqrt(1.0 + t * t)
                s = t * c
                tau = s / (1.0 + c)
                for i in range(n):
                    if i != p and i != q:
                        aip = a[i][p]
                        aiq = a[i][q]
                        a[i][p] = aip - s * (aiq + tau * aip)
                        a[p][i] = a[i][p]
                        a[i][q] = aiq + s * (aip - tau * aiq)
                        a[q][i] = a[i][q]
                a[p][p] = app - t * apq
                a[q][q] = aqq + t * apq
                a[p][q] = 0.0
                a[q][p] = 0.0
    for i in range(n):
        w[i] = a[i][i]
    for i in range(1, n):
        tmp = w[i]
        j = i - 1
        while j >= 0 and w[j] > tmp:
            w[j + 1] = w[j]
            j -= 1
        w[j + 1] = tmp


cdef inline int _popcount(int x) noexcept nogil:
    cdef int c = 0
    while x:
        x &= x - 1
        c += 1
    return c


cdef inline int _connected(int n, int nbr[8]) noexcept nogil:
    cdef int full = (1 << n) - 1
    cdef int seen = 1, frontier = 1, nxt, f, u
    while frontier:
        nxt = 0
        f = frontier
        u = 0
        while f:
            if f & 1:
                nxt |= nbr[u]
            f >>= 1
            u += 1
        frontier = nxt & ~seen
        seen |= frontier
    return seen == full


def screen_range(int n, long long start, long long stop):
    """Screen masks [start, stop) on n vertices.

    Returns (examined, hits): examined counts connected graphs, hits is the
    ordered list of (mask, d, odd_girth) for graphs meeting the theorem
    hypothesis (finite odd girth >= 2d+1).
    """
    if not 1 <= n <= 7:
        raise ValueError("screen supports 1 <= n <= 7")
    cdef int k = n * (n - 1) // 2
    cdef int us[28]
    cdef int vs[28]
    cdef int b = 0, u, v, i
    for v in range(1, n):
        for u in range(v):
            us[b] = u
            vs[b] = v
            b += 1

    cdef long long mask, examined = 0
    cdef int nbr[8]
    cdef double a[8][8]
    cdef double w[8]
    cdef double lam_max, tol, p3, p5, p7, x, x2
    cdef int dcount, og, dd
    hits = []
    for mask in range(start, stop):
        for i in range(n):
            nbr[i] = 0
        for i in range(k):
            if (mask >> i) & 1:
                nbr[us[i]] |= 1 << vs[i]
                nbr[vs[i]] |= 1 << us[i]
        if not _connected(n, nbr):
            continue
        examined += 1

        for u in range(n):
            for v in range(n):
                a[u][v] = 0.0
        for i in range(k):
            if (mask >> i) & 1:
                a[us[i]][vs[i]] = 1.0
                a[vs[i]][us[i]] = 1.0
        _jacobi(a, n, w)

        lam_max = fabs(w[0])
        if fabs(w[n - 1]) > lam_max:
            lam_max = fabs(w[n - 1])
        tol = 1e-8 * n * (lam_max if lam_max > 1.0 else 1.0)
        dcount = 1
        for i in range(1, n):
            if w[i] - w[i - 1] > tol:
                dcount += 1

        p3 = 0.0
        p5 = 0.0
        p7 = 0.0
        for i in range(n):
            x = w[i]
            x2 = x * x
            p3 += x * x2
            p5 += x * x2 * x2
            p7 += x * x2 * x2 * x2
        if p3 > 0.5:
            og = 3
        elif p5 > 0.5:
            og = 5
        elif p7 > 0.5:
            og = 7
        else:
            og = 0

        dd = dcount - 1
        if og > 0 and og >= 2 * dd + 1:
            hits.append((mask, dd, og))
    return examined, hits


def screen_regular_range(int n, long long start, long long stop):
    """Masks in [start, stop) whose graphs are connected and regular."""
    if not 1 <= n <= 7:
        raise ValueError("screen supports 1 <= n <= 7")
    cdef int k = n * (n - 1) // 2
    cdef int us[28]
    cdef int vs[28]
    cdef int b = 0, u, v, i
    for v in range(1, n):
        for u in range(v):
            us[b] = u
            vs[b] = v
            b += 1

    cdef long long mask
    cdef int nbr[8]
    cdef int deg, ok
    out = []
    for mask in range(start, stop):
        for i in range(n):
            nbr[i] = 0
        for i in range(k):
            if (mask >> i) & 1:
                nbr[us[i]] |= 1 << vs[i]
                nbr[vs[i]] |= 1 << us[i]
        if not _connected(n, nbr):
            continue
        deg = _popcount(nbr[0])
        ok = 1
        for i in range(1, n):
            if _popcount(nbr[i]) != deg:
                ok = 0
                break
        if ok:
            out.append(mask)
    return out
