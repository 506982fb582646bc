import pytest

from domdelay.graph import Graph
from domdelay.generators import exhaustive_corpus
from domdelay.recognition import is_chordal, is_pk_free


def path_graph(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(leaves):
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_graph(n):
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def cycle_graph(n):
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


@pytest.fixture(scope="session")
def p6():
    return path_graph(6)


@pytest.fixture(scope="session")
def star3():
    return star_graph(3)


@pytest.fixture(scope="session")
def corpus7():
    """Connected graphs up to 7 vertices, one per isomorphism class."""
    return list(exhaustive_corpus(7))


@pytest.fixture(scope="session")
def chordal_corpus(corpus7):
    return [g for g in corpus7 if is_chordal(g)]


@pytest.fixture(scope="session")
def p7_chordal_corpus(chordal_corpus):
    return [g for g in chordal_corpus if is_pk_free(g, 7)]


@pytest.fixture(scope="session")
def p8_chordal_corpus(chordal_corpus):
    return [g for g in chordal_corpus if is_pk_free(g, 8)]
