import itertools

import pytest

from domdelay.domenum import enumerate_dom, is_minimal_dominating
from domdelay.errors import NotInClassError
from domdelay.generators import gen_chordal, gen_pk_free_chordal, split_stream
from domdelay.graph import Graph, dominates
from domdelay.oracle import brute_dom
from domdelay.redundancy import classify
from conftest import cycle_graph, path_graph


@pytest.mark.parametrize("mode", ["p7", "p8"])
def test_enumerate_dom_star(star3, mode):
    got = list(enumerate_dom(star3, mode))
    assert set(got) == {frozenset({0}), frozenset({1, 2, 3})}
    assert len(got) == 2


@pytest.mark.parametrize("mode", ["p7", "p8"])
def test_enumerate_dom_p6(p6, mode):
    got = list(enumerate_dom(p6, mode))
    assert len(got) == len(set(got))
    assert set(got) == set(brute_dom(p6))


@pytest.mark.parametrize("mode", ["p7", "p8"])
def test_enumerate_dom_k1(mode):
    assert list(enumerate_dom(Graph(1, []), mode)) == [frozenset({0})]


def test_enumerate_dom_matches_brute(p7_chordal_corpus, p8_chordal_corpus):
    for g in p7_chordal_corpus:
        got = list(enumerate_dom(g, "p7"))
        assert len(got) == len(set(got))
        assert set(got) == set(brute_dom(g)), sorted(g.edges())
    for g in p8_chordal_corpus:
        if g.n > 6:
            continue
        got = list(enumerate_dom(g, "p8"))
        assert len(got) == len(set(got))
        assert set(got) == set(brute_dom(g)), sorted(g.edges())


def test_verify_class_rejects_wrong_class():
    with pytest.raises(NotInClassError):
        list(enumerate_dom(cycle_graph(4), "p7", verify_class=True))
    with pytest.raises(NotInClassError):
        list(enumerate_dom(path_graph(7), "p7", verify_class=True))
    # P7 itself is fine in p8 mode
    got = list(enumerate_dom(path_graph(7), "p8", verify_class=True))
    assert set(got) == set(brute_dom(path_graph(7)))


def test_is_minimal_dominating_examples(p6, star3):
    cls = classify(p6)
    assert is_minimal_dominating(p6, cls, {1, 4})
    assert not is_minimal_dominating(p6, cls, {1, 2, 4})
    cls3 = classify(star3)
    assert not is_minimal_dominating(star3, cls3, {0, 1})
    assert is_minimal_dominating(star3, cls3, {0})


def test_is_minimal_dominating_equals_naive_definition(chordal_corpus):
    """The irredundant-side characterization coincides with: dominates all
    vertices and every member has some private neighbor."""
    for g in chordal_corpus:
        if g.n > 6:
            continue
        cls = classify(g)
        verts = list(g.vertices())
        for r in range(1, g.n + 1):
            for d in itertools.combinations(verts, r):
                dset = set(d)
                naive = dominates(g, dset, verts) and all(
                    not dominates(g, dset - {x}, verts) for x in dset
                )
                assert is_minimal_dominating(g, cls, dset) == naive, (
                    sorted(g.edges()),
                    d,
                )


def test_is_minimal_dominating_equals_naive_on_random_graphs():
    for i in range(25):
        rng = split_stream(4242, i)
        g = gen_chordal(9, 0.4, rng.next_u64())
        cls = classify(g)
        verts = list(g.vertices())
        for _ in range(60):
            d = {v for v in verts if rng.random() < 0.4}
            if not d:
                continue
            naive = dominates(g, d, verts) and all(
                not dominates(g, d - {x}, verts) for x in d
            )
            assert is_minimal_dominating(g, cls, d) == naive


def test_enumeration_is_deterministic(p6):
    a = list(enumerate_dom(p6, "p7"))
    b = list(enumerate_dom(p6, "p7"))
    assert a == b
    c = list(enumerate_dom(p6, "p8"))
    d = list(enumerate_dom(p6, "p8"))
    assert c == d


def test_modes_agree_on_p7_free_inputs(p7_chordal_corpus):
    """Both engines enumerate the same families wherever both apply."""
    from domdelay.rnenum import enumerate_rn

    for g in p7_chordal_corpus:
        if g.n > 6:
            continue
        cls = classify(g)
        assert set(enumerate_rn(g, cls, "p7")) == set(enumerate_rn(g, cls, "p8"))
        assert set(enumerate_dom(g, "p7")) == set(enumerate_dom(g, "p8"))


def test_modes_agree_beyond_oracle_reach():
    """Cross-validation of the two engines at sizes the subset oracle
    cannot touch."""
    for i in range(6):
        rng = split_stream(9090, i)
        n = 18 + rng.randrange(8)
        g = gen_pk_free_chordal(n, 7, rng.next_u64())
        fam7 = list(enumerate_dom(g, "p7"))
        fam8 = list(enumerate_dom(g, "p8"))
        assert len(fam7) == len(set(fam7))
        assert len(fam8) == len(set(fam8))
        assert set(fam7) == set(fam8), (i, n)


def test_p8_pipeline_streams_validly_at_scale():
    """On a larger constructed input, every emitted set is a distinct
    minimal dominating set (full-family comparison is out of reach)."""
    from itertools import islice

    g = gen_pk_free_chordal(120, 8, seed=7)
    cls = classify(g)
    seen = set()
    for d in islice(enumerate_dom(g, "p8", cls=cls), 300):
        assert d not in seen
        seen.add(d)
        assert is_minimal_dominating(g, cls, d)
    assert len(seen) == 300


def test_p7_pipeline_streams_validly_at_scale():
    from itertools import islice

    g = gen_pk_free_chordal(600, 7, seed=7)
    cls = classify(g)
    seen = set()
    for d in islice(enumerate_dom(g, "p7", cls=cls), 2000):
        assert d not in seen
        seen.add(d)
        assert is_minimal_dominating(g, cls, d)
    assert len(seen) == 2000
