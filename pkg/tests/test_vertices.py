"""Connected-blockset enumeration against the exhaustive filter oracle."""

from fractions import Fraction

import pytest

import oracles
from cbp.corpus import path_graph
from cbp.errors import CountOverflow
from cbp.graphs import block_decomposition, blockset_closure
from cbp.vertices import (
    enumerate_vertices,
    is_connected_blockset,
    polytope_dimension_check,
    to_incidence,
)


def test_path3_vertices(path3_d):
    assert enumerate_vertices(path3_d) == (
        (),
        (0,),
        (1,),
        (2,),
        (0, 1),
        (1, 2),
        (0, 1, 2),
    )


def test_star3_vertices(star3_d):
    # every subset is connected through the hub
    assert len(enumerate_vertices(star3_d)) == 8


def test_block_path_vertex_count_is_intervals():
    # nonempty connected subsets of a block path are exactly the intervals
    for k in range(1, 7):
        d = block_decomposition(path_graph(k))
        assert len(enumerate_vertices(d)) == k * (k + 1) // 2 + 1


def test_triangle_vertices(triangle_d):
    assert enumerate_vertices(triangle_d) == ((), (0,))


def test_order_is_cardinality_then_lex(bowtie_d):
    verts = enumerate_vertices(bowtie_d)
    assert verts == ((), (0,), (1,), (0, 1))
    assert verts == tuple(sorted(verts, key=lambda a: (len(a), a)))


def test_matches_filter_oracle(small_corpus):
    for name, g in small_corpus:
        d = block_decomposition(g)
        got = enumerate_vertices(d)
        expected = oracles.connected_blocksets(g, d.blocks)
        assert len(got) == len(set(got)), name
        assert set(got) == expected, name


def test_is_connected_blockset_matches_closure(small_corpus):
    import itertools

    for name, g in small_corpus:
        d = block_decomposition(g)
        n = len(d.blocks)
        for k in range(n + 1):
            for a in itertools.combinations(range(n), k):
                connected = is_connected_blockset(d, a)
                assert connected == (blockset_closure(d, a) == set(a)), (name, a)


def test_is_connected_blockset_index_error(path3_d):
    with pytest.raises(IndexError):
        is_connected_blockset(path3_d, (5,))
    with pytest.raises(IndexError):
        is_connected_blockset(path3_d, (0, 5))


def test_to_incidence(path3_d):
    assert to_incidence(path3_d, (0, 2)) == (Fraction(1), Fraction(0), Fraction(1))
    assert to_incidence(path3_d, ()) == (0, 0, 0)


def test_count_overflow(path3_d):
    with pytest.raises(CountOverflow):
        enumerate_vertices(path3_d, max_count=5)
    assert len(enumerate_vertices(path3_d, max_count=7)) == 7


def test_dimension_equals_block_count(small_corpus):
    for name, g in small_corpus:
        d = block_decomposition(g)
        assert polytope_dimension_check(d) == len(d.blocks), name
