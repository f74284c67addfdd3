"""Corpus-wide verification sweep: every structural theorem, every graph.

Each check is a function of a per-graph context that returns None on
success or a failure payload.  The sweep runs the battery over a seeded
corpus, optionally in parallel worker processes, and produces a report
whose failure entries carry the graph serialization and the seed needed
to reproduce them.
"""

from __future__ import annotations

import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import repeat

from .corpus import CorpusEntry, corpus
from .ehrhart import hstar_checks, hstar_profile
from .errors import AssertionFailure, CBPError
from .facets import construct_ibis, enumerate_ibis, facet_certificate, h_representation
from .graphs import (
    Graph,
    block_decomposition,
    classify,
    graph_to_json,
    split_components_at,
)
from .hull import RationalPolyhedron, affine_rank, brute_force_facets
from .optimize import (
    brute_force_optimum,
    eulerian_adapter,
    max_weight_connected_blockset,
    tree_adapter,
)
from .serialize import jsonable
from .skeleton import (
    adjacent_combinatorial,
    adjacent_geometric,
    build_polytope_graph,
    hirsch_check,
    simplicity_report,
)
from .toric import (
    buchberger_verify,
    fiber_reduction_test,
    groebner_candidates,
    make_term_order,
    triangulation,
    triangulation_checks,
)
from .vertices import enumerate_vertices, to_incidence


@dataclass(frozen=True)
class VerifyOptions:
    """Budget gates for the sweep; block-count gates skip oversized graphs."""

    max_blocks: int = 5
    seed: int = 7
    random_per_size: int = 8
    facet_max_blocks: int = 7
    adjacency_max_blocks: int = 5
    hstar_max_blocks: int = 5
    max_dilation: int | None = None
    groebner_max_blocks: int = 4
    optimizer_trials: int = 50
    workers: int | None = None


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: str  # "pass" | "fail" | "skip"
    seconds: float
    detail: dict | None


@dataclass(eq=False)
class GraphReport:
    graph_id: str
    graph: Graph
    block_count: int
    checks: tuple[CheckResult, ...]

    def passed(self) -> bool:
        return all(c.status != "fail" for c in self.checks)


@dataclass(eq=False)
class VerificationReport:
    options: VerifyOptions
    reports: tuple[GraphReport, ...]

    def passed(self) -> bool:
        return all(r.passed() for r in self.reports)

    def to_json(self) -> dict:
        return {
            "seed": self.options.seed,
            "max_blocks": self.options.max_blocks,
            "graph_count": len(self.reports),
            "all_passed": self.passed(),
            "graphs": [
                {
                    "id": r.graph_id,
                    "graph": graph_to_json(r.graph),
                    "blocks": r.block_count,
                    "passed": r.passed(),
                    "checks": [
                        {
                            "name": c.name,
                            "status": c.status,
                            "seconds": round(c.seconds, 4),
                            "detail": jsonable(c.detail) if c.detail else None,
                        }
                        for c in r.checks
                    ],
                }
                for r in self.reports
            ],
        }


class GraphContext:
    """Lazily computed per-graph artifacts shared by the checks."""

    def __init__(self, graph: Graph):
        self.graph = graph

    @cached_property
    def decomposition(self):
        return block_decomposition(self.graph)

    @cached_property
    def vertices(self):
        return enumerate_vertices(self.decomposition)

    @cached_property
    def incidence(self):
        return [to_incidence(self.decomposition, a) for a in self.vertices]

    @cached_property
    def hrep(self) -> RationalPolyhedron:
        return h_representation(self.decomposition)

    @cached_property
    def hstar(self):
        return hstar_profile(self.decomposition, self.hrep)


def check_blocks(ctx: GraphContext) -> dict | None:
    """Blocks partition the edges; pairwise meets are single cut vertices."""
    d = ctx.decomposition
    block_edges = [e for blk in d.blocks for e in blk.edges]
    if sorted(block_edges) != sorted(d.graph.sorted_edges()):
        return {"reason": "blocks do not partition the edge set"}
    for i in range(len(d.blocks)):
        for j in range(i + 1, len(d.blocks)):
            shared = set(d.blocks[i].vertices) & set(d.blocks[j].vertices)
            if len(shared) > 1:
                return {"reason": "two blocks share more than one vertex", "pair": [i, j]}
            if shared and next(iter(shared)) not in d.cut_vertices:
                return {"reason": "shared vertex not reported as cut vertex", "pair": [i, j]}
    for v in range(d.graph.vertex_count):
        touching = sum(1 for blk in d.blocks if v in blk.vertices)
        if (v in d.cut_vertices) != (touching >= 2):
            return {"reason": "cut vertex flag disagrees with block incidence", "vertex": v}
    return None


def check_dimension(ctx: GraphContext) -> dict | None:
    """The polytope is full-dimensional: affine rank equals the block count."""
    rank = affine_rank(ctx.incidence)
    if rank != len(ctx.decomposition.blocks):
        return {"rank": rank, "expected": len(ctx.decomposition.blocks)}
    return None


def _cutoff_point(h: RationalPolyhedron, idx: int, incidence) -> tuple | None:
    """A point violating only row idx, certifying the row irredundant."""
    a, b = h.rows[idx]
    tight = [p for p in incidence if sum(c * x for c, x in zip(a, p)) == b]
    if not tight:
        return None
    k = len(tight)
    centroid = tuple(sum(col, Fraction(0)) / k for col in zip(*tight))
    norm = sum(c * c for c in a)
    eps = None
    for j, (a2, b2) in enumerate(h.rows):
        if j == idx:
            continue
        direction = sum(x * y for x, y in zip(a2, a))
        if direction <= 0:
            continue
        slack = b2 - sum(c * x for c, x in zip(a2, centroid))
        if slack <= 0:
            return None
        bound = Fraction(slack, direction)
        eps = bound if eps is None else min(eps, bound)
    eps = Fraction(1) if eps is None else eps / 2
    point = tuple(c + eps * ai for c, ai in zip(centroid, a))
    if sum(c * x for c, x in zip(a, point)) <= b:
        return None
    for j, (a2, b2) in enumerate(h.rows):
        if j != idx and sum(c * x for c, x in zip(a2, point)) > b2:
            return None
    return point


def check_facets(ctx: GraphContext) -> dict | None:
    """H-description equals the hull oracle; every row is a needed facet."""
    d = ctx.decomposition
    n = len(d.blocks)
    oracle = brute_force_facets(ctx.incidence)
    ours = set(ctx.hrep.rows)
    theirs = set(oracle.rows)
    if ours != theirs:
        return {
            "missing_rows": sorted(theirs - ours),
            "extra_rows": sorted(ours - theirs),
        }
    for row in ctx.hrep.rows:
        cert = facet_certificate(d, row, ctx.vertices)
        if not cert.confirms_facet(n):
            return {"reason": "row is not facet-defining", "row": row}
    for idx in range(len(ctx.hrep.rows)):
        if _cutoff_point(ctx.hrep, idx, ctx.incidence) is None:
            return {"reason": "no cut-off point for row", "row": ctx.hrep.rows[idx]}
    return None


def check_ibis(ctx: GraphContext) -> dict | None:
    """Inductive construction reaches exactly the enumerated inequalities."""
    d = ctx.decomposition
    enumerated = set(enumerate_ibis(d))
    constructed = set(construct_ibis(d))
    if enumerated != constructed:
        return {
            "enumerated_only": [list(x.alpha) for x in sorted(enumerated - constructed, key=lambda i: i.alpha)],
            "constructed_only": [list(x.alpha) for x in sorted(constructed - enumerated, key=lambda i: i.alpha)],
        }
    for ibi in enumerated:
        if sum(ibi.alpha) != 1:
            return {"reason": "alpha sum is not 1", "alpha": list(ibi.alpha)}
        for v in sorted(d.cut_vertices):
            sums = [sum(ibi.alpha[b] for b in part) for part in split_components_at(d, v)]
            if sorted(sums) != [0] * (len(sums) - 1) + [1]:
                return {
                    "reason": "component weights are not one 1 and rest 0",
                    "alpha": list(ibi.alpha),
                    "vertex": v,
                }
    return None


def check_adjacency(ctx: GraphContext) -> dict | None:
    """Combinatorial and geometric adjacency agree on every vertex pair."""
    d = ctx.decomposition
    verts = ctx.vertices
    points = ctx.incidence
    for i in range(len(verts)):
        for j in range(i + 1, len(verts)):
            comb_adj = adjacent_combinatorial(d, verts[i], verts[j])
            geo_adj = adjacent_geometric(ctx.hrep, points, i, j)
            if comb_adj != geo_adj:
                return {
                    "pair": [list(verts[i]), list(verts[j])],
                    "combinatorial": comb_adj,
                    "geometric": geo_adj,
                }
    return None


def check_diameter(ctx: GraphContext) -> dict | None:
    """Diameter bounded by the dimension and by the Hirsch bound."""
    pg = build_polytope_graph(ctx.decomposition)
    hirsch_check(ctx.decomposition, pg, ctx.hrep)
    return None


def check_simplicity(ctx: GraphContext) -> dict | None:
    """Measured simplicity flags match the cut-vertex and dimension predictions."""
    pg = build_polytope_graph(ctx.decomposition)
    rep = simplicity_report(ctx.decomposition, pg, ctx.hrep)
    if rep.is_simple != rep.predicted_simple or rep.is_simplicial != rep.predicted_simplicial:
        return {
            "is_simple": rep.is_simple,
            "predicted_simple": rep.predicted_simple,
            "is_simplicial": rep.is_simplicial,
            "predicted_simplicial": rep.predicted_simplicial,
        }
    return None


def check_hstar(ctx: GraphContext) -> dict | None:
    """All h* clauses pass (raises AssertionFailure with details otherwise)."""
    hstar_checks(ctx.hstar, ctx.decomposition, ctx.hrep)
    return None


def check_groebner(ctx: GraphContext) -> dict | None:
    """The claimed basis passes Buchberger and the degree-3 fiber test."""
    d = ctx.decomposition
    order = make_term_order(d, ctx.vertices)
    g = groebner_candidates(d, order, ctx.vertices)
    if not buchberger_verify(g, order):
        return {"reason": "an S-pair does not reduce to zero"}
    if not fiber_reduction_test(d, g, order, maxdeg=3):
        return {"reason": "a fiber difference does not reduce to zero"}
    return None


def check_triangulation(ctx: GraphContext) -> dict | None:
    """The initial complex triangulates the polytope with h-vector h*."""
    d = ctx.decomposition
    order = make_term_order(d, ctx.vertices)
    g = groebner_candidates(d, order, ctx.vertices)
    complex_ = triangulation(d, g, order)
    triangulation_checks(d, complex_, ctx.hstar.hstar)
    return None


def check_optimizer(ctx: GraphContext, trials: int, seed_tag: str) -> dict | None:
    """DP equals brute force, with tie-break, on random rational weights."""
    d = ctx.decomposition
    n = len(d.blocks)
    rng = random.Random(seed_tag)
    for t in range(trials):
        weights = [Fraction(rng.randint(-12, 12), rng.randint(1, 6)) for _ in range(n)]
        dp = max_weight_connected_blockset(d, weights)
        bf = brute_force_optimum(d, weights)
        if dp != bf:
            return {
                "trial": t,
                "weights": weights,
                "dp": {"blockset": dp.blockset, "value": dp.value},
                "brute": {"blockset": bf.blockset, "value": bf.value},
            }
        scale = Fraction(rng.randint(1, 9), rng.randint(1, 9))
        scaled = max_weight_connected_blockset(d, [w * scale for w in weights])
        if scaled.blockset != dp.blockset or scaled.value != dp.value * scale:
            return {"trial": t, "reason": "positive scaling moved the argmax"}
    cls = classify(ctx.graph, d)
    m = len(ctx.graph.edges)
    if cls.is_eulerian_cactus:
        for t in range(min(trials, 20)):
            ew = [Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(m)]
            eulerian_adapter(ctx.graph, ew)
    if cls.is_tree:
        for t in range(min(trials, 20)):
            ew = [Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(m)]
            sol = tree_adapter(ctx.graph, ew)
            wmap = dict(zip(ctx.graph.sorted_edges(), ew))
            direct = max_weight_connected_blockset(
                d, [wmap[next(iter(blk.edges))] for blk in d.blocks]
            )
            if sol.value != direct.value or sol.blockset != direct.blockset:
                return {"trial": t, "reason": "tree adapter disagrees with the DP"}
    return None


def verify_graph(entry: CorpusEntry, options: VerifyOptions) -> GraphReport:
    """Run the gated check battery on one graph."""
    ctx = GraphContext(entry.graph)
    n = len(ctx.decomposition.blocks)
    gates = {
        "facets": n <= options.facet_max_blocks,
        "adjacency": n <= options.adjacency_max_blocks,
        "hstar": n <= options.hstar_max_blocks
        and (options.max_dilation is None or n <= options.max_dilation),
        "groebner": n <= options.groebner_max_blocks,
        "triangulation": n <= options.groebner_max_blocks
        and n <= options.hstar_max_blocks,
    }
    battery = [
        ("blocks", lambda: check_blocks(ctx)),
        ("dimension", lambda: check_dimension(ctx)),
        ("facets", lambda: check_facets(ctx)),
        ("ibis", lambda: check_ibis(ctx)),
        ("adjacency", lambda: check_adjacency(ctx)),
        ("diameter", lambda: check_diameter(ctx)),
        ("simplicity", lambda: check_simplicity(ctx)),
        ("hstar", lambda: check_hstar(ctx)),
        ("groebner", lambda: check_groebner(ctx)),
        ("triangulation", lambda: check_triangulation(ctx)),
        (
            "optimizer",
            lambda: check_optimizer(
                ctx, options.optimizer_trials, f"{options.seed}:{entry.name}"
            ),
        ),
    ]
    results = []
    for name, fn in battery:
        if not gates.get(name, True):
            results.append(CheckResult(name, "skip", 0.0, None))
            continue
        start = time.perf_counter()
        try:
            detail = fn()
            status = "pass" if detail is None else "fail"
        except AssertionFailure as exc:
            detail = {"error": "AssertionFailure", "message": str(exc), **exc.payload}
            status = "fail"
        except CBPError as exc:
            detail = {"error": type(exc).__name__, "message": str(exc)}
            status = "fail"
        elapsed = time.perf_counter() - start
        if detail is not None:
            detail.setdefault("graph", graph_to_json(entry.graph))
            detail.setdefault("seed", options.seed)
        results.append(CheckResult(name, status, elapsed, detail))
    return GraphReport(
        graph_id=entry.name,
        graph=entry.graph,
        block_count=n,
        checks=tuple(results),
    )


def default_workers() -> int:
    """CPU count capped at 8 and by the CBP_THREADS environment variable."""
    workers = min(os.cpu_count() or 1, 8)
    env = os.environ.get("CBP_THREADS")
    if env:
        try:
            workers = min(workers, max(1, int(env)))
        except ValueError:
            pass
    return max(1, workers)


def run_verification(options: VerifyOptions) -> VerificationReport:
    """Sweep the seeded corpus, in parallel when more than one worker."""
    entries = corpus(options.max_blocks, options.seed, options.random_per_size)
    workers = options.workers if options.workers is not None else default_workers()
    if workers <= 1 or len(entries) <= 1:
        reports = [verify_graph(e, options) for e in entries]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(verify_graph, entries, repeat(options)))
    return VerificationReport(options=options, reports=tuple(reports))
