"""Reference implementations used to pin expected values.

Everything here recomputes results from first principles (exhaustive
enumeration, generic brute force) without touching the routines under
test, so a disagreement always points at the implementation.
"""

from __future__ import annotations

import itertools
from fractions import Fraction


def subgraph_connected(vertices, edges) -> bool:
    """Flood fill over an explicit vertex set; empty counts as connected."""
    verts = set(vertices)
    if not verts:
        return True
    adj = {v: set() for v in verts}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    start = next(iter(verts))
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen == verts


def brute_cut_vertices(g) -> set[int]:
    """Vertices whose removal disconnects the remaining graph."""
    cuts = set()
    for v in range(g.vertex_count):
        rest = [w for w in range(g.vertex_count) if w != v]
        edges = [e for e in g.edges if v not in e]
        if rest and not subgraph_connected(rest, edges):
            cuts.add(v)
    return cuts


def brute_blocks(g) -> list[tuple[frozenset, frozenset]]:
    """(vertex set, edge set) per block, via maximal cut-free vertex subsets.

    A vertex set S of size >= 2 spans a block exactly when G[S] is
    connected, has no cut vertex of its own, and S is maximal with that
    property; the block's edges are all graph edges inside S.  Exponential,
    fine below a dozen vertices.
    """
    n = g.vertex_count

    def induced_edges(s):
        return [e for e in g.edges if e[0] in s and e[1] in s]

    def cut_free(s):
        edges = induced_edges(s)
        if not subgraph_connected(s, edges):
            return False
        return all(
            subgraph_connected(s - {v}, [e for e in edges if v not in e])
            for v in s
        )

    candidates = [
        frozenset(s)
        for k in range(2, n + 1)
        for s in itertools.combinations(range(n), k)
        if cut_free(frozenset(s))
    ]
    maximal = [
        s for s in candidates if not any(s < t for t in candidates)
    ]
    out = [(s, frozenset(induced_edges(s))) for s in maximal]
    out.sort(key=lambda blk: (min(blk[0]), tuple(sorted(blk[0]))))
    return out


def connected_blocksets(g, blocks) -> set[tuple[int, ...]]:
    """All index subsets whose block union induces a connected subgraph."""
    out = {()}
    items = [(set(b.vertices), set(b.edges)) for b in blocks]
    for k in range(1, len(items) + 1):
        for combo in itertools.combinations(range(len(items)), k):
            verts = set().union(*(items[i][0] for i in combo))
            edges = set().union(*(items[i][1] for i in combo))
            if subgraph_connected(verts, edges):
                out.add(combo)
    return out


def count_dilation_points(rows, dim: int, n: int) -> int:
    """Scan the box {0..n}^dim and test every inequality directly."""
    if dim == 0:
        return 1
    count = 0
    for point in itertools.product(range(n + 1), repeat=dim):
        if all(
            sum(c * x for c, x in zip(a, point)) <= b * n for a, b in rows
        ):
            count += 1
    return count


def determinant(rows) -> Fraction:
    """Exact determinant by fraction-free style Gaussian elimination."""
    m = [[Fraction(x) for x in row] for row in rows]
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        pivot = next((i for i in range(c, n) if m[i][c] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            m[c], m[pivot] = m[pivot], m[c]
            det = -det
        det *= m[c][c]
        inv = 1 / m[c][c]
        for i in range(c + 1, n):
            if m[i][c] != 0:
                f = m[i][c] * inv
                for j in range(c, n):
                    m[i][j] -= f * m[c][j]
    return det


def best_blockset(g, blocks, weights) -> tuple[tuple[int, ...], Fraction]:
    """Exhaustive optimum over connected blocksets, smallest-tuple tie-break."""
    w = [Fraction(x) for x in weights]
    best = ((), Fraction(0))
    for a in sorted(connected_blocksets(g, blocks)):
        val = sum((w[i] for i in a), Fraction(0))
        if val > best[1]:
            best = (a, val)
    return best
