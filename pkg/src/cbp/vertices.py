"""Enumeration of connected blocksets, the vertices of the polytope.

The polytope is the convex hull of the indicator vectors of all blocksets
whose union induces a connected subgraph, with the empty set counted as
connected.  Every such indicator vector is a vertex (they are 0/1 points),
and the enumeration below generates each connected blockset exactly once
by growing connected subsets of the block adjacency graph from their
smallest element, instead of filtering all 2^b subsets.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import CountOverflow
from .graphs import BlockDecomposition

BlockSubset = tuple[int, ...]

DEFAULT_VERTEX_CAP = 2**24


def is_connected_blockset(d: BlockDecomposition, a) -> bool:
    """True when the union of the given blocks induces a connected subgraph.

    The empty blockset counts as connected.  Connectivity is equivalent to
    connectivity inside the block adjacency graph, because two blocks meet
    only in single (cut) vertices.
    """
    s = frozenset(a)
    if len(s) <= 1:
        if s and not (0 <= min(s) < len(d.blocks)):
            raise IndexError(f"block index {min(s)} out of range")
        return True
    for i in s:
        if not (0 <= i < len(d.blocks)):
            raise IndexError(f"block index {i} out of range")
    start = min(s)
    seen = {start}
    stack = [start]
    while stack:
        b = stack.pop()
        for j in d.block_neighbors[b]:
            if j in s and j not in seen:
                seen.add(j)
                stack.append(j)
    return len(seen) == len(s)


def enumerate_vertices(d: BlockDecomposition, max_count: int = DEFAULT_VERTEX_CAP) -> tuple[BlockSubset, ...]:
    """All connected blocksets, one tuple each, in (cardinality, lex) order.

    Raises CountOverflow as soon as more than max_count subsets appear.
    """
    nb = d.block_neighbors
    n = len(d.blocks)
    out: list[BlockSubset] = [()]
    count = 1

    def record(subset: frozenset[int]):
        nonlocal count
        count += 1
        if count > max_count:
            raise CountOverflow(f"more than {max_count} connected blocksets")
        out.append(tuple(sorted(subset)))

    for r in range(n):
        base = frozenset([r])
        record(base)
        # grow connected supersets whose minimum element is r; each branch
        # bans the candidates already tried so every subset appears once
        stack = [(base, frozenset(w for w in nb[r] if w > r), frozenset())]
        while stack:
            cur, frontier, banned = stack.pop()
            local_ban = set(banned)
            for v in sorted(frontier - banned):
                new = cur | {v}
                record(new)
                new_frontier = (frontier | frozenset(w for w in nb[v] if w > r)) - new
                stack.append((new, new_frontier, frozenset(local_ban)))
                local_ban.add(v)
    out.sort(key=lambda t: (len(t), t))
    return tuple(out)


def to_incidence(d: BlockDecomposition, a) -> tuple[Fraction, ...]:
    """Indicator vector of a blockset in block-index coordinates."""
    s = frozenset(a)
    return tuple(Fraction(1 if i in s else 0) for i in range(len(d.blocks)))


def polytope_dimension_check(d: BlockDecomposition, max_count: int = DEFAULT_VERTEX_CAP) -> int:
    """Affine rank of the vertex set; equals the number of blocks."""
    from .hull import affine_rank

    verts = enumerate_vertices(d, max_count=max_count)
    return affine_rank([to_incidence(d, a) for a in verts])
