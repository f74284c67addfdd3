import pytest

from cbp.corpus import corpus, flower, path_graph, star_graph
from cbp.graphs import Graph, block_decomposition


@pytest.fixture
def path2_d():
    return block_decomposition(path_graph(2))


@pytest.fixture
def path3_d():
    return block_decomposition(path_graph(3))


@pytest.fixture
def star3_d():
    return block_decomposition(star_graph(3))


@pytest.fixture
def bowtie_d():
    return block_decomposition(flower(2))


@pytest.fixture
def triangle_d():
    return block_decomposition(Graph(3, ((0, 1), (1, 2), (0, 2))))


@pytest.fixture(scope="session")
def small_corpus():
    return corpus(max_blocks=4, seed=7)
