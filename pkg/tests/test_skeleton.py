"""Polytope graph: adjacency rules, diameter bounds, simplicity flags."""

from fractions import Fraction

import pytest

from cbp.corpus import path_graph, star_graph
from cbp.errors import AssertionFailure, BudgetExceeded, DimensionMismatch
from cbp.facets import h_representation
from cbp.graphs import block_decomposition
from cbp.skeleton import (
    adjacent_combinatorial,
    adjacent_geometric,
    build_polytope_graph,
    diameter,
    hirsch_check,
    simplicity_report,
)
from cbp.vertices import enumerate_vertices, to_incidence


def test_empty_set_is_adjacent_to_singletons_only(path3_d):
    assert adjacent_combinatorial(path3_d, (), (0,))
    assert adjacent_combinatorial(path3_d, (2,), ())
    assert not adjacent_combinatorial(path3_d, (), (0, 1))
    assert not adjacent_combinatorial(path3_d, (), (0, 1, 2))


def test_adjacency_rules_on_path3(path3_d):
    # disconnected union
    assert adjacent_combinatorial(path3_d, (0,), (2,))
    # incomparable with connected union
    assert not adjacent_combinatorial(path3_d, (0,), (1,))
    assert not adjacent_combinatorial(path3_d, (0, 1), (1, 2))
    assert not adjacent_combinatorial(path3_d, (0,), (1, 2))
    # containment: exactly one difference block may touch the smaller set
    assert adjacent_combinatorial(path3_d, (0,), (0, 1))
    assert adjacent_combinatorial(path3_d, (0, 1), (0, 1, 2))
    # blocks 1 and 2 lie on one side of {0}, so only block 1 touches it
    assert adjacent_combinatorial(path3_d, (0,), (0, 1, 2))


def test_containment_with_two_touching_blocks_is_no_edge(star3_d):
    # on the cube both difference blocks meet the hub: Hamming distance 2
    assert not adjacent_combinatorial(star3_d, (0,), (0, 1, 2))
    assert adjacent_combinatorial(star3_d, (0,), (0, 1))
    assert adjacent_combinatorial(star3_d, (0, 1), (0, 1, 2))


def test_geometric_matches_combinatorial_everywhere(small_corpus):
    for name, g in small_corpus:
        d = block_decomposition(g)
        h = h_representation(d)
        verts = enumerate_vertices(d)
        points = [to_incidence(d, a) for a in verts]
        for i in range(len(verts)):
            for j in range(i + 1, len(verts)):
                comb = adjacent_combinatorial(d, verts[i], verts[j])
                geo = adjacent_geometric(h, points, i, j)
                assert comb == geo, (name, verts[i], verts[j])


def test_build_polytope_graph_methods_agree(path3_d):
    h = h_representation(path3_d)
    a = build_polytope_graph(path3_d, method="combinatorial")
    b = build_polytope_graph(path3_d, h, method="geometric")
    assert a.vertices == b.vertices
    assert a.neighbors == b.neighbors
    with pytest.raises(ValueError):
        build_polytope_graph(path3_d, method="nonsense")
    with pytest.raises(ValueError):
        build_polytope_graph(path3_d, method="geometric")


def test_origin_neighbors_are_singletons(small_corpus):
    for name, g in small_corpus:
        d = block_decomposition(g)
        pg = build_polytope_graph(d)
        assert pg.vertices[0] == ()
        singles = {i for i, a in enumerate(pg.vertices) if len(a) == 1}
        assert pg.neighbors[0] == frozenset(singles), name


def test_diameters():
    # single block: a segment
    assert diameter(build_polytope_graph(block_decomposition(path_graph(1)))) == 1
    # three blocks at a hub: the 3-cube
    assert diameter(build_polytope_graph(block_decomposition(star_graph(3)))) == 3
    # block path of three: squashed to 2 by the long diagonal edges
    assert diameter(build_polytope_graph(block_decomposition(path_graph(3)))) == 2


def test_diameter_budget(path3_d):
    pg = build_polytope_graph(path3_d)
    with pytest.raises(BudgetExceeded):
        diameter(pg, max_vertices=3)


def test_hirsch_path3(path3_d):
    h = h_representation(path3_d)
    pg = build_polytope_graph(path3_d)
    report = hirsch_check(path3_d, pg, h)
    assert report.diameter == 2
    assert report.dim == 3
    assert report.facet_count == 7
    assert report.hirsch_bound == 4
    assert report.diameter_le_dim and report.hirsch_ok and report.facet_count_ok


def test_hirsch_cube(star3_d):
    h = h_representation(star3_d)
    pg = build_polytope_graph(star3_d)
    report = hirsch_check(star3_d, pg, h)
    assert (report.diameter, report.facet_count, report.hirsch_bound) == (3, 6, 3)


def test_hirsch_over_corpus(small_corpus):
    for name, g in small_corpus:
        d = block_decomposition(g)
        report = hirsch_check(d, build_polytope_graph(d), h_representation(d))
        assert report.diameter <= report.dim, name


def test_simplicity_square(path2_d):
    report = simplicity_report(
        path2_d, build_polytope_graph(path2_d), h_representation(path2_d)
    )
    assert report.is_simple and report.is_simplicial
    assert report.predicted_simple and report.predicted_simplicial


def test_simplicity_cube(star3_d):
    report = simplicity_report(
        star3_d, build_polytope_graph(star3_d), h_representation(star3_d)
    )
    assert report.is_simple and not report.is_simplicial
    assert report.predicted_simple and not report.predicted_simplicial


def test_simplicity_path3(path3_d):
    report = simplicity_report(
        path3_d, build_polytope_graph(path3_d), h_representation(path3_d)
    )
    assert not report.is_simple and not report.is_simplicial


def test_predictions_match_measurements(small_corpus):
    for name, g in small_corpus:
        d = block_decomposition(g)
        report = simplicity_report(d, build_polytope_graph(d), h_representation(d))
        assert report.is_simple == report.predicted_simple, name
        assert report.is_simplicial == report.predicted_simplicial, name


def test_nonadjacency_midpoint_witness(small_corpus):
    # an incomparable non-edge pair shares its midpoint with meet and join,
    # and both of those are vertices of the polytope
    from cbp.vertices import is_connected_blockset

    for name, g in small_corpus:
        d = block_decomposition(g)
        verts = enumerate_vertices(d)
        for i in range(len(verts)):
            for j in range(i + 1, len(verts)):
                s1, s2 = set(verts[i]), set(verts[j])
                if s1 <= s2 or s2 <= s1:
                    continue
                if not is_connected_blockset(d, s1 | s2):
                    continue
                assert not adjacent_combinatorial(d, verts[i], verts[j])
                meet, join = s1 & s2, s1 | s2
                assert is_connected_blockset(d, meet), (name, meet)
                x1 = to_incidence(d, verts[i])
                x2 = to_incidence(d, verts[j])
                lo = to_incidence(d, meet)
                hi = to_incidence(d, join)
                assert all(
                    a + b == c + e for a, b, c, e in zip(x1, x2, lo, hi)
                ), (name, verts[i], verts[j])


def test_adjacent_geometric_rejects_bad_points(path3_d):
    h = h_representation(path3_d)
    with pytest.raises(DimensionMismatch):
        adjacent_geometric(h, [(Fraction(0),), (Fraction(1),)], 0, 1)
