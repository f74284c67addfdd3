"""Command-line entry point: per-graph analyses, corpus generation, verification.

All results go to stdout as JSON with sorted keys; diagnostics go to
stderr.  Exit code 0 means success, 1 means a mathematical check failed
or a budget was exceeded, 2 means the invocation or its input was bad.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict
from fractions import Fraction

from .ehrhart import count_lattice_points, evaluate_polynomial, hstar_checks, hstar_profile
from .errors import (
    AssertionFailure,
    CBPError,
    EmptyGraph,
    InvalidGraph,
    NotConnected,
    NotCutVertex,
    NotEulerianCactus,
    NotTree,
    ParseError,
)
from .facets import h_representation
from .graphs import (
    Graph,
    block_cut_tree,
    block_decomposition,
    classify,
    graph_to_json,
    parse_edge_list,
)
from .corpus import corpus
from .optimize import (
    EdgeSolution,
    Solution,
    eulerian_adapter,
    max_weight_connected_blockset,
    tree_adapter,
)
from .serialize import jsonable, parse_rational
from .skeleton import build_polytope_graph, diameter, hirsch_check, simplicity_report
from .toric import (
    buchberger_verify,
    fiber_reduction_test,
    groebner_candidates,
    make_term_order,
    triangulation,
    triangulation_checks,
)
from .verify import VerifyOptions, run_verification
from .vertices import enumerate_vertices

USAGE_ERRORS = (
    ParseError,
    InvalidGraph,
    NotConnected,
    EmptyGraph,
    NotCutVertex,
    NotEulerianCactus,
    NotTree,
    OSError,
    ValueError,
)


def _emit(payload) -> None:
    print(json.dumps(jsonable(payload), indent=2, sort_keys=True))


def _load_graph(path: str) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def _load_rationals(path: str) -> list[Fraction]:
    out = []
    with open(path, "r", encoding="utf-8") as fh:
        for line in fh:
            body = line.split("#", 1)[0].strip()
            if body:
                out.append(parse_rational(body))
    return out


def _blockset_key(a) -> str:
    return ",".join(str(b) for b in a)


def cmd_blocks(args) -> int:
    g = _load_graph(args.graph)
    d = block_decomposition(g)
    tree = block_cut_tree(d)
    tree_edges = sorted(
        (list(u), list(v)) for u in tree.adjacency for v in tree.adjacency[u] if u < v
    )
    _emit(
        {
            "blocks": [
                {"vertices": sorted(b.vertices), "edges": [list(e) for e in sorted(b.edges)]}
                for b in d.blocks
            ],
            "cut_vertices": sorted(d.cut_vertices),
            "tree": {
                "nodes": [list(node) for node in tree.nodes()],
                "edges": [list(e) for e in tree_edges],
            },
            "class": asdict(classify(g, d)),
        }
    )
    return 0


def cmd_vertices(args) -> int:
    g = _load_graph(args.graph)
    d = block_decomposition(g)
    verts = enumerate_vertices(d)
    _emit(
        {
            "dimension": len(d.blocks),
            "count": len(verts),
            "vertices": [list(a) for a in verts],
        }
    )
    return 0


def _row_kind(a, b) -> str:
    if b == 0 and sum(1 for c in a if c) == 1 and min(a) == -1:
        return "nonnegativity"
    return "independent-blocks"


def cmd_facets(args) -> int:
    g = _load_graph(args.graph)
    d = block_decomposition(g)
    h = h_representation(d, max_blocks=args.max_blocks)
    _emit(
        {
            "dimension": h.dim,
            "count": len(h.rows),
            "rows": [
                {"coeffs": list(a), "rhs": b, "kind": _row_kind(a, b)}
                for a, b in h.rows
            ],
        }
    )
    return 0


def cmd_edges(args) -> int:
    g = _load_graph(args.graph)
    d = block_decomposition(g)
    h = h_representation(d) if args.method == "geometric" else None
    pg = build_polytope_graph(d, h, method=args.method)
    edges = sorted(
        (i, j) for i, nbrs in enumerate(pg.neighbors) for j in nbrs if i < j
    )
    _emit(
        {
            "method": args.method,
            "vertex_count": len(pg.vertices),
            "vertices": [list(a) for a in pg.vertices],
            "edge_count": len(edges),
            "edges": [list(e) for e in edges],
        }
    )
    return 0


def cmd_diameter(args) -> int:
    g = _load_graph(args.graph)
    d = block_decomposition(g)
    h = h_representation(d)
    pg = build_polytope_graph(d)
    hirsch = hirsch_check(d, pg, h)
    simplicity = simplicity_report(d, pg, h)
    _emit({**asdict(hirsch), **asdict(simplicity)})
    return 0


def cmd_hstar(args) -> int:
    g = _load_graph(args.graph)
    d = block_decomposition(g)
    h = h_representation(d)
    dim = len(d.blocks)
    profile = hstar_profile(d, h)
    report = hstar_checks(profile, d, h)
    evaluations = dict(profile.evaluations)
    top = args.max_dilation if args.max_dilation is not None else dim
    if top < dim:
        raise ValueError(f"--max-dilation must be at least the dimension {dim}")
    for n in range(dim + 1, top + 1):
        measured = count_lattice_points(h, n)
        predicted = evaluate_polynomial(profile.ehrhart_coeffs, n)
        if measured != predicted:
            raise AssertionFailure(
                f"lattice count at dilation {n} disagrees with the polynomial",
                payload={
                    "graph": graph_to_json(g),
                    "dilation": n,
                    "measured": measured,
                    "predicted": str(predicted),
                },
            )
        evaluations[n] = measured
    _emit(
        {
            "dimension": dim,
            "evaluations": evaluations,
            "ehrhart": list(profile.ehrhart_coeffs),
            "hstar": list(profile.hstar),
            "flags": asdict(profile.flags),
            "clauses": report.clauses,
            "narayana_index": report.narayana_index,
        }
    )
    return 0


def cmd_groebner(args) -> int:
    g = _load_graph(args.graph)
    d = block_decomposition(g)
    if len(d.blocks) > args.groebner_max_blocks:
        print(
            f"refusing: {len(d.blocks)} blocks exceed --groebner-max-blocks "
            f"{args.groebner_max_blocks}",
            file=sys.stderr,
        )
        return 1
    verts = enumerate_vertices(d)
    order = make_term_order(d, verts)
    basis = groebner_candidates(d, order, verts)
    is_groebner = buchberger_verify(basis, order)
    fiber_ok = fiber_reduction_test(d, basis, order, maxdeg=3)
    _emit(
        {
            "variable_count": order.variable_count(),
            "variables": [list(a) for a in order.variables],
            "binomial_count": len(basis),
            "binomials": [
                {
                    "plus": {_blockset_key(a): e for a, e in f.plus},
                    "minus": {_blockset_key(a): e for a, e in f.minus},
                }
                for f in basis
            ],
            "is_groebner": is_groebner,
            "fiber_test": fiber_ok,
        }
    )
    return 0 if (is_groebner and fiber_ok) else 1


def cmd_triangulate(args) -> int:
    g = _load_graph(args.graph)
    d = block_decomposition(g)
    if len(d.blocks) > args.groebner_max_blocks:
        print(
            f"refusing: {len(d.blocks)} blocks exceed --groebner-max-blocks "
            f"{args.groebner_max_blocks}",
            file=sys.stderr,
        )
        return 1
    h = h_representation(d)
    complex_ = triangulation(d)
    profile = hstar_profile(d, h)
    report = triangulation_checks(d, complex_, profile.hstar)
    _emit(
        {
            "ground": [list(a) for a in complex_.ground],
            "minimal_nonfaces": [list(p) for p in complex_.minimal_nonfaces],
            "maximal_faces": [list(f) for f in complex_.maximal_faces],
            "face_count": report.maximal_face_count,
            "f_vector": list(report.f_vector),
            "h_vector": list(report.h_vector),
            "hstar": list(report.hstar),
        }
    )
    return 0


def _solution_json(g: Graph, d, sol: Solution | EdgeSolution) -> dict:
    if isinstance(sol, EdgeSolution):
        blocks, value, edges = sol.blockset, sol.value, sol.edges
    else:
        blocks, value = sol.blockset, sol.value
        edges = tuple(sorted(e for b in blocks for e in d.blocks[b].edges))
    return {
        "value": value,
        "blocks": list(blocks),
        "edges": [list(e) for e in edges],
    }


def cmd_optimize(args) -> int:
    g = _load_graph(args.graph)
    if args.weights:
        d = block_decomposition(g)
        sol = max_weight_connected_blockset(d, _load_rationals(args.weights))
        _emit(_solution_json(g, d, sol))
        return 0
    if not args.mode:
        raise ValueError("--edge-weights requires --mode eulerian|tree")
    weights = _load_rationals(args.edge_weights)
    sol = eulerian_adapter(g, weights) if args.mode == "eulerian" else tree_adapter(g, weights)
    _emit(_solution_json(g, None, sol))
    return 0


def cmd_corpus(args) -> int:
    entries = corpus(args.max_blocks, args.seed)
    graphs = []
    for entry in entries:
        d = block_decomposition(entry.graph)
        graphs.append(
            {"name": entry.name, "blocks": len(d.blocks), **graph_to_json(entry.graph)}
        )
    _emit(
        {
            "max_blocks": args.max_blocks,
            "seed": args.seed,
            "count": len(entries),
            "graphs": graphs,
        }
    )
    return 0


def cmd_verify(args) -> int:
    options = VerifyOptions(
        max_blocks=args.max_blocks,
        seed=args.seed,
        max_dilation=args.max_dilation,
        groebner_max_blocks=args.groebner_max_blocks,
    )
    report = run_verification(options)
    _emit(report.to_json())
    return 0 if report.passed() else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cbp",
        description="Connected blocks polytope toolkit: exact facets, "
        "lattice counts, Groebner bases, and optimization.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_command(name: str, help_text: str):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--graph", required=True, help="edge-list file, one 'u v' per line")
        return p

    graph_command("blocks", "block decomposition, cut vertices, block-cut tree")

    graph_command("vertices", "all connected blocksets (polytope vertices)")

    p = graph_command("facets", "complete irredundant facet description")
    p.add_argument("--max-blocks", type=int, default=14, help="cap on the block count")

    p = graph_command("edges", "polytope graph edges")
    p.add_argument(
        "--method",
        choices=("combinatorial", "geometric"),
        default="combinatorial",
    )

    graph_command("diameter", "diameter, Hirsch check, simplicity flags")

    p = graph_command("hstar", "Ehrhart polynomial and h* vector with checks")
    p.add_argument(
        "--max-dilation",
        type=int,
        default=None,
        help="also count and cross-check dilations beyond the dimension",
    )

    p = graph_command("groebner", "toric Groebner basis with Buchberger verification")
    p.add_argument("--groebner-max-blocks", type=int, default=6)

    p = graph_command("triangulate", "unimodular triangulation from the basis")
    p.add_argument("--groebner-max-blocks", type=int, default=6)

    p = graph_command("optimize", "max-weight connected blockset")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--weights", help="file with one rational block weight per line")
    group.add_argument("--edge-weights", help="file with one rational edge weight per line")
    p.add_argument("--mode", choices=("eulerian", "tree"), default=None)

    p = sub.add_parser("corpus", help="deterministic graph corpus")
    p.add_argument("--max-blocks", type=int, default=5)
    p.add_argument("--seed", type=int, default=7)

    p = sub.add_parser("verify", help="run every check over the corpus")
    p.add_argument("--max-blocks", type=int, default=5)
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--max-dilation", type=int, default=None)
    p.add_argument("--groebner-max-blocks", type=int, default=4)

    return parser


COMMANDS = {
    "blocks": cmd_blocks,
    "vertices": cmd_vertices,
    "facets": cmd_facets,
    "edges": cmd_edges,
    "diameter": cmd_diameter,
    "hstar": cmd_hstar,
    "groebner": cmd_groebner,
    "triangulate": cmd_triangulate,
    "optimize": cmd_optimize,
    "corpus": cmd_corpus,
    "verify": cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except USAGE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except AssertionFailure as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        if exc.payload:
            print(json.dumps(jsonable(exc.payload), indent=2, sort_keys=True), file=sys.stderr)
        return 1
    except CBPError as exc:
        print(f"failed: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
