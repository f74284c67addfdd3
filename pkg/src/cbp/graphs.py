"""Graphs, block decompositions, and the block-cut tree.

A block of a connected graph is a maximal subgraph without a cut vertex:
either a maximal 2-connected subgraph or a bridge together with its two
endpoints.  Two distinct blocks share at most one vertex, and every shared
vertex is a cut vertex of the graph.  The block-cut tree has one node per
block and one node per cut vertex, with a block node adjacent to a cut
node exactly when the cut vertex lies in the block.  Everything downstream
(vertex enumeration, facets, the optimizer) works on this decomposition.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

from .errors import EmptyGraph, InvalidGraph, NotConnected, NotCutVertex, ParseError

Edge = tuple[int, int]
TreeNode = tuple[str, int]  # ("B", block index) or ("C", vertex id)


def _norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u <= v else (v, u)


@dataclass(frozen=True)
class Graph:
    """A finite simple undirected graph on vertices 0..vertex_count-1."""

    vertex_count: int
    edges: frozenset[Edge]

    def __post_init__(self):
        if self.vertex_count < 0:
            raise InvalidGraph("vertex_count must be nonnegative")
        norm = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise InvalidGraph(f"self-loop at vertex {u}")
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise InvalidGraph(f"edge {e} has an endpoint outside 0..{self.vertex_count - 1}")
            norm.add(_norm_edge(u, v))
        object.__setattr__(self, "edges", frozenset(norm))

    def adjacency(self) -> dict[int, tuple[int, ...]]:
        adj: dict[int, list[int]] = {v: [] for v in range(self.vertex_count)}
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return {v: tuple(sorted(ws)) for v, ws in adj.items()}

    def sorted_edges(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.edges))


def graph_to_json(g: Graph) -> dict:
    return {"n": g.vertex_count, "edges": [list(e) for e in g.sorted_edges()]}


def graph_from_json(data: dict) -> Graph:
    try:
        n = int(data["n"])
        edges = [(int(u), int(v)) for u, v in data["edges"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidGraph(f"bad graph JSON: {exc}") from exc
    if len(edges) != len({_norm_edge(u, v) for u, v in edges}):
        raise InvalidGraph("duplicate edge in graph JSON")
    return Graph(n, frozenset(edges))


def parse_edge_list(text: str) -> Graph:
    """Parse a whitespace-separated edge list, one "u v" pair per line.

    An optional first line "n <vertex_count>" fixes the vertex count;
    otherwise it defaults to one plus the largest vertex id.  Vertices that
    end up isolated are compacted away with a warning, since every operation
    here requires a connected graph.
    """
    edges: list[Edge] = []
    seen: set[Edge] = set()
    declared_n: int | None = None
    saw_content = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split()
        if not tokens:
            continue
        if not saw_content and len(tokens) == 2 and tokens[0] == "n":
            try:
                declared_n = int(tokens[1])
            except ValueError:
                raise ParseError(f"bad vertex count {tokens[1]!r}", lineno)
            if declared_n < 0:
                raise ParseError("vertex count must be nonnegative", lineno)
            saw_content = True
            continue
        saw_content = True
        if len(tokens) != 2:
            raise ParseError(f"expected two endpoints, got {len(tokens)} tokens", lineno)
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise ParseError(f"non-integer endpoint in {raw.strip()!r}", lineno)
        if u < 0 or v < 0:
            raise ParseError("vertex ids must be nonnegative", lineno)
        if u == v:
            raise InvalidGraph(f"self-loop at vertex {u} (line {lineno})")
        e = _norm_edge(u, v)
        if e in seen:
            raise InvalidGraph(f"duplicate edge {e} (line {lineno})")
        seen.add(e)
        edges.append(e)

    used = sorted({w for e in edges for w in e})
    n = declared_n if declared_n is not None else (used[-1] + 1 if used else 0)
    if used and used[-1] >= n:
        raise InvalidGraph(f"edge endpoint {used[-1]} exceeds declared vertex count {n}")
    if len(used) < n:
        isolated = n - len(used)
        warnings.warn(f"dropping {isolated} isolated vertex id(s) and compacting", stacklevel=2)
        relabel = {old: new for new, old in enumerate(used)}
        edges = [_norm_edge(relabel[u], relabel[v]) for u, v in edges]
        n = len(used)
    return Graph(n, frozenset(edges))


def is_connected(g: Graph) -> bool:
    if g.vertex_count == 0:
        return False
    adj = g.adjacency()
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == g.vertex_count


@dataclass(frozen=True)
class Block:
    """One block: its vertex set and its edge set."""

    vertices: frozenset[int]
    edges: frozenset[Edge]


@dataclass(eq=False)
class BlockDecomposition:
    """A connected graph together with its canonically ordered blocks.

    Blocks are sorted by (smallest vertex id, then the sorted vertex id
    sequence), so block indices are reproducible across runs.  The derived
    maps (blocks at a vertex, block adjacency, block-cut tree adjacency)
    are precomputed because nearly every downstream routine walks them.
    """

    graph: Graph
    blocks: tuple[Block, ...]
    cut_vertices: frozenset[int]
    block_index_of_edge: dict[Edge, int]
    blocks_at_vertex: dict[int, tuple[int, ...]]
    block_neighbors: tuple[frozenset[int], ...]
    tree_adjacency: dict[TreeNode, frozenset[TreeNode]]

    def block_count(self) -> int:
        return len(self.blocks)


def _biconnected_components(n: int, adj: dict[int, tuple[int, ...]]) -> tuple[list[list[Edge]], set[int]]:
    """Iterative lowpoint DFS returning block edge lists and cut vertices."""
    disc = [0] * n  # 0 means unvisited, otherwise discovery time
    low = [0] * n
    parent = [-1] * n
    comps: list[list[Edge]] = []
    cuts: set[int] = set()
    estack: list[Edge] = []
    timer = 1
    for root in range(n):
        if disc[root]:
            continue
        disc[root] = low[root] = timer
        timer += 1
        stack: list[tuple[int, int]] = [(root, 0)]
        root_children = 0
        while stack:
            v, i = stack[-1]
            if i < len(adj[v]):
                stack[-1] = (v, i + 1)
                w = adj[v][i]
                if not disc[w]:
                    parent[w] = v
                    estack.append((v, w))
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, 0))
                    if v == root:
                        root_children += 1
                elif w != parent[v] and disc[w] < disc[v]:
                    estack.append((v, w))
                    if disc[w] < low[v]:
                        low[v] = disc[w]
            else:
                stack.pop()
                if not stack:
                    continue
                u = stack[-1][0]
                if low[v] < low[u]:
                    low[u] = low[v]
                if low[v] >= disc[u]:
                    comp = []
                    while True:
                        e = estack.pop()
                        comp.append(e)
                        if e == (u, v):
                            break
                    comps.append(comp)
                    if u != root or root_children > 1:
                        cuts.add(u)
    return comps, cuts


def block_decomposition(g: Graph) -> BlockDecomposition:
    """Decompose a connected graph with at least one edge into blocks."""
    if g.vertex_count == 0 or not g.edges:
        raise EmptyGraph("graph must have at least one edge")
    if not is_connected(g):
        raise NotConnected("graph must be connected")
    comps, cuts = _biconnected_components(g.vertex_count, g.adjacency())
    raw = []
    for comp in comps:
        edges = frozenset(_norm_edge(u, v) for u, v in comp)
        vertices = frozenset(w for e in edges for w in e)
        raw.append(Block(vertices, edges))
    raw.sort(key=lambda b: (min(b.vertices), tuple(sorted(b.vertices))))
    blocks = tuple(raw)
    if sum(len(b.edges) for b in blocks) != len(g.edges):
        raise AssertionError("blocks do not partition the edge set")

    index_of_edge: dict[Edge, int] = {}
    for i, b in enumerate(blocks):
        for e in b.edges:
            index_of_edge[e] = i

    at_vertex: dict[int, list[int]] = {v: [] for v in range(g.vertex_count)}
    for i, b in enumerate(blocks):
        for v in b.vertices:
            at_vertex[v].append(i)
    blocks_at_vertex = {v: tuple(sorted(ix)) for v, ix in at_vertex.items()}

    neighbors: list[set[int]] = [set() for _ in blocks]
    for v, ix in blocks_at_vertex.items():
        if len(ix) > 1:
            for i in ix:
                for j in ix:
                    if i != j:
                        neighbors[i].add(j)
    block_neighbors = tuple(frozenset(s) for s in neighbors)

    tree: dict[TreeNode, set[TreeNode]] = {("B", i): set() for i in range(len(blocks))}
    for v in sorted(cuts):
        tree[("C", v)] = set()
        for i in blocks_at_vertex[v]:
            tree[("C", v)].add(("B", i))
            tree[("B", i)].add(("C", v))
    tree_adjacency = {node: frozenset(ws) for node, ws in tree.items()}

    return BlockDecomposition(
        graph=g,
        blocks=blocks,
        cut_vertices=frozenset(cuts),
        block_index_of_edge=index_of_edge,
        blocks_at_vertex=blocks_at_vertex,
        block_neighbors=block_neighbors,
        tree_adjacency=tree_adjacency,
    )


@dataclass(eq=False)
class BlockCutTree:
    """The bipartite tree of block nodes ("B", i) and cut nodes ("C", v)."""

    block_count: int
    cut_vertices: tuple[int, ...]
    adjacency: dict[TreeNode, frozenset[TreeNode]]

    def nodes(self) -> tuple[TreeNode, ...]:
        return tuple(sorted(self.adjacency))

    def edge_count(self) -> int:
        return sum(len(ws) for ws in self.adjacency.values()) // 2


def block_cut_tree(d: BlockDecomposition) -> BlockCutTree:
    tree = BlockCutTree(
        block_count=len(d.blocks),
        cut_vertices=tuple(sorted(d.cut_vertices)),
        adjacency=dict(d.tree_adjacency),
    )
    if tree.edge_count() != len(tree.adjacency) - 1:
        raise AssertionError("block-cut incidences do not form a tree")
    return tree


def _check_block_indices(d: BlockDecomposition, a) -> frozenset[int]:
    s = frozenset(a)
    for i in s:
        if not isinstance(i, int) or not (0 <= i < len(d.blocks)):
            raise IndexError(f"block index {i!r} out of range")
    return s


def steiner_nodes(d: BlockDecomposition, a) -> frozenset[TreeNode]:
    """All block-cut tree nodes on paths between the given block nodes."""
    s = _check_block_indices(d, a)
    if not s:
        return frozenset()
    targets = [("B", i) for i in sorted(s)]
    if len(targets) == 1:
        return frozenset(targets)
    root = targets[0]
    parent: dict[TreeNode, TreeNode] = {root: root}
    order = [root]
    k = 0
    while k < len(order):
        x = order[k]
        k += 1
        for y in d.tree_adjacency[x]:
            if y not in parent:
                parent[y] = x
                order.append(y)
    marked = {root}
    for t in targets[1:]:
        x = t
        while x not in marked:
            marked.add(x)
            x = parent[x]
    return frozenset(marked)


def blockset_closure(d: BlockDecomposition, a) -> frozenset[int]:
    """Block nodes of the smallest block-cut subtree containing the given blocks.

    The closure of a blockset is the unique smallest connected blockset
    containing it; a blockset induces a connected subgraph exactly when it
    equals its own closure.
    """
    return frozenset(i for kind, i in steiner_nodes(d, a) if kind == "B")


def split_components_at(d: BlockDecomposition, v: int) -> tuple[frozenset[int], ...]:
    """Partition the block indices by the component of the graph minus a cut vertex.

    Two blocks fall in the same part exactly when they stay connected after
    the cut vertex is removed; equivalently the parts are the components of
    the block-cut tree minus the cut node.  Parts are sorted by smallest
    block index.
    """
    if v not in d.cut_vertices:
        raise NotCutVertex(f"vertex {v} is not a cut vertex")
    removed = ("C", v)
    seen: set[TreeNode] = {removed}
    parts: list[frozenset[int]] = []
    for start in sorted(d.tree_adjacency[removed]):
        if start in seen:
            continue
        comp_blocks: set[int] = set()
        stack = [start]
        seen.add(start)
        while stack:
            x = stack.pop()
            if x[0] == "B":
                comp_blocks.add(x[1])
            for y in d.tree_adjacency[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        parts.append(frozenset(comp_blocks))
    parts.sort(key=min)
    return tuple(parts)


@dataclass(frozen=True)
class GraphClass:
    """Structural flags of a connected graph used across the package."""

    is_tree: bool
    is_cactus: bool
    is_eulerian_cactus: bool
    is_block_path: bool
    cut_vertex_count: int


def classify(g: Graph, d: BlockDecomposition | None = None) -> GraphClass:
    """Classify a connected graph with at least one edge."""
    if d is None:
        d = block_decomposition(g)
    is_tree = len(g.edges) == g.vertex_count - 1
    cactus = all(len(b.edges) == 1 or len(b.edges) == len(b.vertices) for b in d.blocks)
    eulerian = cactus and all(len(b.edges) >= 3 for b in d.blocks)
    block_path = all(len(ws) <= 2 for ws in d.tree_adjacency.values())
    return GraphClass(
        is_tree=is_tree,
        is_cactus=cactus,
        is_eulerian_cactus=eulerian,
        is_block_path=block_path,
        cut_vertex_count=len(d.cut_vertices),
    )
