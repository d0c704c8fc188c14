"""Graphs as dense 0/1 adjacency matrices: parsing, families, distances, enumeration.

Everything in this module is exact integer work; the floating-point spectral
machinery lives in the sibling modules.
"""

import math
from collections import deque
from dataclasses import dataclass
from itertools import combinations

import numpy as np

UNREACHABLE = -1  # sentinel for unreachable pairs in distance matrices

_G6_MAX_SHORT = 62
_G6_MAX_LONG = 258047


class GraphError(ValueError):
    """Malformed graph input or bad generator parameters."""


@dataclass(eq=False)
class Graph:
    """Simple undirected graph on vertices 0..n-1 with symmetric 0/1 adjacency."""

    n: int
    adj: np.ndarray

    def __post_init__(self):
        self.adj = np.asarray(self.adj, dtype=np.int64)
        if self.n < 1:
            raise GraphError("graph needs at least one vertex")
        if self.adj.shape != (self.n, self.n):
            raise GraphError("adjacency shape %s does not match n=%d" % (self.adj.shape, self.n))
        if not np.array_equal(self.adj, self.adj.T):
            raise GraphError("adjacency must be symmetric")
        if np.any(np.diag(self.adj) != 0):
            raise GraphError("self-loops are not allowed")
        if not np.isin(self.adj, (0, 1)).all():
            raise GraphError("adjacency entries must be 0 or 1")

    def __eq__(self, other):
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and np.array_equal(self.adj, other.adj)
        )

    def degrees(self):
        return self.adj.sum(axis=1)

    def is_regular(self):
        deg = self.degrees()
        return bool((deg == deg[0]).all())

    def edge_count(self):
        return int(self.adj.sum()) // 2


def graph_from_edges(n, edges):
    """Build a Graph from an iterable of (u, v) pairs."""
    adj = np.zeros((n, n), dtype=np.int64)
    for u, v in edges:
        adj[u, v] = adj[v, u] = 1
    return Graph(n, adj)


def edge_pairs(n):
    """Column-major upper-triangle pair order shared by graph6 and edge bitmasks."""
    return [(u, v) for v in range(1, n) for u in range(v)]


# ---------------------------------------------------------------------------
# graph6 (printable bytes 63..126, 6 bits per byte, column-major upper triangle)

def parse_graph6(text):
    """Decode one graph6-encoded line into a Graph.

    Accepts bytes or an ASCII string; errors name the 0-based byte offset of
    the offending byte.
    """
    if isinstance(text, str):
        try:
            data = text.encode("ascii")
        except UnicodeEncodeError as exc:
            raise GraphError("graph6: non-ASCII character at byte offset %d" % exc.start)
    else:
        data = bytes(text)
    data = data.rstrip(b"\r\n")
    if not data:
        raise GraphError("graph6: empty input")
    for off, byte in enumerate(data):
        if not 63 <= byte <= 126:
            raise GraphError(
                "graph6: byte 0x%02x at offset %d outside printable range 63..126" % (byte, off)
            )

    if data[0] != 126:
        n, pos = data[0] - 63, 1
    elif len(data) >= 2 and data[1] != 126:
        if len(data) < 4:
            raise GraphError("graph6: truncated long header at offset %d" % len(data))
        n = 0
        for byte in data[1:4]:
            n = (n << 6) | (byte - 63)
        pos = 4
    else:
        if len(data) < 8:
            raise GraphError("graph6: truncated very-long header at offset %d" % len(data))
        n = 0
        for byte in data[2:8]:
            n = (n << 6) | (byte - 63)
        pos = 8
    if n < 1:
        raise GraphError("graph6: vertex count %d out of range (offset 0)" % n)

    nbits = n * (n - 1) // 2
    nbytes = -(-nbits // 6)
    body = data[pos:]
    if len(body) < nbytes:
        raise GraphError(
            "graph6: truncated body at offset %d (n=%d needs %d data bytes)"
            % (len(data), n, nbytes)
        )
    if len(body) > nbytes:
        raise GraphError("graph6: trailing data at offset %d" % (pos + nbytes))

    pairs = edge_pairs(n)
    adj = np.zeros((n, n), dtype=np.int64)
    idx = 0
    for k, byte in enumerate(body):
        group = byte - 63
        for shift in range(5, -1, -1):
            bit = (group >> shift) & 1
            if idx < nbits:
                if bit:
                    u, v = pairs[idx]
                    adj[u, v] = adj[v, u] = 1
            elif bit:
                raise GraphError("graph6: nonzero padding bit in byte at offset %d" % (pos + k))
            idx += 1
    return Graph(n, adj)


def encode_graph6(g):
    """Encode a Graph as one graph6 line (bytes, no trailing newline)."""
    n = g.n
    if n <= _G6_MAX_SHORT:
        head = bytes([n + 63])
    elif n <= _G6_MAX_LONG:
        head = bytes([126, 63 + ((n >> 12) & 63), 63 + ((n >> 6) & 63), 63 + (n & 63)])
    else:
        raise GraphError("graph6: n=%d exceeds the supported header range" % n)

    out = bytearray(head)
    val = nfill = 0
    for u, v in edge_pairs(n):
        val = (val << 1) | int(g.adj[u, v])
        nfill += 1
        if nfill == 6:
            out.append(val + 63)
            val = nfill = 0
    if nfill:
        out.append((val << (6 - nfill)) + 63)
    return bytes(out)


# ---------------------------------------------------------------------------
# edge-list format: first token is n, then one "u v" pair per line

def parse_edge_list(text):
    """Parse the edge-list format; errors carry 1-based line numbers."""
    if isinstance(text, bytes):
        text = text.decode("utf-8", errors="replace")
    n = None
    edges = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        tokens = line.split()
        if not tokens:
            continue
        if n is None:
            if len(tokens) != 1:
                raise GraphError("edge list line %d: expected a single vertex count" % lineno)
            try:
                n = int(tokens[0])
            except ValueError:
                raise GraphError("edge list line %d: vertex count %r is not an integer" % (lineno, tokens[0]))
            if n < 1:
                raise GraphError("edge list line %d: vertex count must be positive" % lineno)
            continue
        if len(tokens) != 2:
            raise GraphError("edge list line %d: expected 'u v', got %r" % (lineno, line.strip()))
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise GraphError("edge list line %d: non-integer vertex in %r" % (lineno, line.strip()))
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError("edge list line %d: vertex out of range 0..%d" % (lineno, n - 1))
        if u == v:
            raise GraphError("edge list line %d: self-loop at vertex %d" % (lineno, u))
        edges.append((u, v))
    if n is None:
        raise GraphError("edge list: empty input")
    return graph_from_edges(n, edges)


# ---------------------------------------------------------------------------
# named families

def _complete(n):
    if n < 1:
        raise GraphError("complete: n must be >= 1")
    return Graph(n, np.ones((n, n), dtype=np.int64) - np.eye(n, dtype=np.int64))


def _cycle(n):
    if n < 3:
        raise GraphError("cycle: n must be >= 3")
    return graph_from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def _path(n):
    if n < 1:
        raise GraphError("path: n must be >= 1")
    return graph_from_edges(n, [(i, i + 1) for i in range(n - 1)])


def _petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return graph_from_edges(10, outer + spokes + inner)


def _odd(k):
    # Kneser-style construction: (k-1)-subsets of a (2k-1)-set, disjoint = adjacent.
    if k < 2:
        raise GraphError("odd: k must be >= 2")
    verts = list(combinations(range(2 * k - 1), k - 1))
    sets = [frozenset(v) for v in verts]
    n = len(verts)
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if not (sets[i] & sets[j])]
    return graph_from_edges(n, edges)


def _folded_cube(m):
    # hypercube of dimension m-1 plus the antipodal perfect matching
    if m < 2:
        raise GraphError("folded_cube: m must be >= 2")
    n = 1 << (m - 1)
    full = n - 1
    edges = []
    for u in range(n):
        for b in range(m - 1):
            v = u ^ (1 << b)
            if u < v:
                edges.append((u, v))
        v = u ^ full
        if u < v:
            edges.append((u, v))
    return graph_from_edges(n, edges)


def _prism():
    return graph_from_edges(
        6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]
    )


FAMILIES = {
    "complete": (1, _complete),
    "cycle": (1, _cycle),
    "path": (1, _path),
    "petersen": (0, _petersen),
    "odd": (1, _odd),
    "folded_cube": (1, _folded_cube),
    "prism": (0, _prism),
}


def generate_family(family, params=()):
    """Build a named family member, e.g. generate_family('odd', [3]) -> Petersen."""
    if family not in FAMILIES:
        raise GraphError(
            "unknown family %r (choose from %s)" % (family, ", ".join(sorted(FAMILIES)))
        )
    arity, builder = FAMILIES[family]
    params = [int(p) for p in params]
    if len(params) != arity:
        raise GraphError("family %r takes %d parameter(s), got %d" % (family, arity, len(params)))
    return builder(*params)


# ---------------------------------------------------------------------------
# distances and odd girth

@dataclass
class DistanceData:
    """All-pairs hop distances; UNREACHABLE marks pairs with no path."""

    dist: np.ndarray
    diameter: int
    connected: bool


def distance_data(g):
    """BFS from every vertex; exact distances, diameter, connectivity flag."""
    n = g.n
    nbrs = [np.flatnonzero(g.adj[u]) for u in range(n)]
    dist = np.full((n, n), UNREACHABLE, dtype=np.int64)
    for s in range(n):
        row = dist[s]
        row[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            du = row[u]
            for v in nbrs[u]:
                if row[v] == UNREACHABLE:
                    row[v] = du + 1
                    queue.append(v)
    finite = dist[dist != UNREACHABLE]
    return DistanceData(
        dist=dist,
        diameter=int(finite.max()),
        connected=bool((dist != UNREACHABLE).all()),
    )


def odd_girth(g):
    """Length of a shortest odd cycle; math.inf iff the graph is bipartite.

    Parity-labeled BFS from each start vertex: states are (vertex, parity of
    walk length), and the shortest odd closed walk at the start is the
    distance to (start, odd).  The minimum over starts is attained by an odd
    cycle, so it equals the odd girth.
    """
    n = g.n
    nbrs = [np.flatnonzero(g.adj[u]) for u in range(n)]
    best = math.inf
    for s in range(n):
        dist = np.full((n, 2), UNREACHABLE, dtype=np.int64)
        dist[s, 0] = 0
        queue = deque([(s, 0)])
        while queue:
            u, p = queue.popleft()
            du = dist[u, p]
            if du + 1 >= best:
                continue
            q = 1 - p
            for v in nbrs[u]:
                if dist[v, q] == UNREACHABLE:
                    dist[v, q] = du + 1
                    queue.append((v, q))
        if dist[s, 1] != UNREACHABLE:
            best = min(best, int(dist[s, 1]))
        if best == 3:
            break
    return best


# ---------------------------------------------------------------------------
# exhaustive enumeration by edge bitmask

def graph_from_mask(n, mask):
    """Graph from an edge bitmask; bit b is the edge edge_pairs(n)[b]."""
    adj = np.zeros((n, n), dtype=np.int64)
    for b, (u, v) in enumerate(edge_pairs(n)):
        if (mask >> b) & 1:
            adj[u, v] = adj[v, u] = 1
    return Graph(n, adj)


def graph_mask(g):
    """Edge bitmask of a graph (inverse of graph_from_mask)."""
    mask = 0
    for b, (u, v) in enumerate(edge_pairs(g.n)):
        if g.adj[u, v]:
            mask |= 1 << b
    return mask


def mask_connected(n, mask, pairs=None):
    """Connectivity of the graph encoded by an edge bitmask, via bitset flood fill."""
    if pairs is None:
        pairs = edge_pairs(n)
    nbr = [0] * n
    m = mask
    for u, v in pairs:
        if m & 1:
            nbr[u] |= 1 << v
            nbr[v] |= 1 << u
        m >>= 1
    full = (1 << n) - 1
    seen = frontier = 1
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


def enumerate_connected(n):
    """Yield every labeled connected simple graph on n vertices, 1 <= n <= 7.

    Labeled means isomorphic duplicates appear once per labeling; the scan
    relies only on exhaustiveness, not isomorph rejection.
    """
    if not 1 <= n <= 7:
        raise GraphError("enumeration supports 1 <= n <= 7, got %d" % n)
    pairs = edge_pairs(n)
    for mask in range(1 << len(pairs)):
        if mask_connected(n, mask, pairs):
            yield graph_from_mask(n, mask)
