import itertools

import pytest

from domdelay.graph import Graph, dominates
from domdelay.redundancy import classify, private_neighbors, red_blue
from conftest import complete_graph


def closed(g, v):
    return {v} | set(g.neighbors(v))


def brute_classify(g):
    """Redundancy from the definition: strict inclusion, or equality with a
    smaller index."""
    rn = set()
    for v in g.vertices():
        for u in g.vertices():
            if u == v:
                continue
            cu, cv = closed(g, u), closed(g, v)
            if cu < cv or (cu == cv and u < v):
                rn.add(v)
                break
    return rn


def test_classify_star(star3):
    cls = classify(star3)
    assert cls.ir == {1, 2, 3}
    assert cls.rn == {0}
    assert cls.witness[0] == 1
    assert cls.components == (frozenset({1}), frozenset({2}), frozenset({3}))


def test_classify_p6(p6):
    cls = classify(p6)
    assert cls.ir == {0, 2, 3, 5}
    assert cls.rn == {1, 4}
    assert cls.components == (frozenset({0}), frozenset({2, 3}), frozenset({5}))
    assert cls.comp_of[0] == 1 and cls.comp_of[2] == 2 and cls.comp_of[5] == 3
    assert cls.comp_of[1] == 0


def test_classify_k2_tie_break():
    cls = classify(complete_graph(2))
    assert cls.ir == {0}
    assert cls.rn == {1}


def test_classify_agrees_with_brute(corpus7):
    for g in corpus7:
        cls = classify(g)
        assert cls.rn == brute_classify(g), sorted(g.edges())
        assert cls.ir | cls.rn == set(g.vertices())
        assert not cls.ir & cls.rn


def test_witnesses_are_valid(corpus7):
    for g in corpus7:
        cls = classify(g)
        for y, x in cls.witness.items():
            assert x in cls.ir
            assert closed(g, x) <= closed(g, y)


def test_ir_dominates_graph(corpus7):
    for g in corpus7:
        cls = classify(g)
        assert dominates(g, cls.ir, g.vertices())


def test_partial_component_p6(p6):
    cls = classify(p6)
    # both redundant vertices touch part of the middle component {2, 3}
    assert cls.partial[1] == 2
    assert cls.partial[4] == 2
    assert not cls.multi_partial


def test_multi_partial_detection_and_certified_error():
    # bridge vertex 12 partially touches the middles of two long paths,
    # which no P9-free chordal graph allows
    from domdelay.errors import NotInClassError

    edges = (
        [(i, i + 1) for i in range(5)]
        + [(i, i + 1) for i in range(6, 11)]
        + [(12, 2), (12, 8), (12, 13)]
    )
    g = Graph(14, edges)
    cls = classify(g)
    assert 12 in cls.multi_partial
    assert cls.partial[12] is None
    with pytest.raises(NotInClassError):
        classify(g, certified_p9_free=True)
    with pytest.raises(NotInClassError):
        cls.require_unique_partial()


def test_private_neighbors_star(star3):
    assert private_neighbors(star3, {0}, 0) == {0, 1, 2, 3}


def test_private_neighbors_p6(p6):
    assert private_neighbors(p6, {1, 4}, 1) == {0, 1, 2}
    assert private_neighbors(p6, {1, 2}, 1) == {0}


def test_private_neighbors_requires_membership(p6):
    with pytest.raises(ValueError):
        private_neighbors(p6, {1, 4}, 2)


def test_private_neighbors_brute(corpus7):
    sample = [g for g in corpus7 if g.n == 5]
    for g in sample[:10]:
        verts = list(g.vertices())
        for d in itertools.combinations(verts, 2):
            for x in d:
                expected = {
                    u for u in verts if closed(g, u) & set(d) == {x}
                }
                assert private_neighbors(g, d, x) == expected


def test_red_blue_p6_singleton(p6):
    cls = classify(p6)
    rb = red_blue(p6, cls, {1})
    assert rb.blue == {1}
    assert rb.red == frozenset()
    assert rb.priv[1] == {0, 2}


def test_red_blue_p6_pair(p6):
    cls = classify(p6)
    rb = red_blue(p6, cls, {1, 4})
    assert rb.blue == {1, 4}
    assert rb.red == frozenset()


def test_red_blue_empty(p6):
    cls = classify(p6)
    rb = red_blue(p6, cls, frozenset())
    assert rb.blue == frozenset() and rb.red == frozenset()


def test_red_blue_partition_invariants(chordal_corpus):
    """Blue vertices have a private inside a dominated component; red ones
    appear in red_by_component exactly where they keep privates."""
    for g in chordal_corpus:
        if g.n > 6:
            continue
        cls = classify(g)
        rn_sorted = sorted(cls.rn)
        for r in range(len(rn_sorted) + 1):
            for a_set in itertools.combinations(rn_sorted, min(r, 3)):
                rb = red_blue(g, cls, a_set)
                assert rb.blue | rb.red == set(a_set)
                assert not rb.blue & rb.red
                dominated = set()
                for a in a_set:
                    dominated.update(g.neighbors(a))
                full = {
                    i + 1
                    for i, comp in enumerate(cls.components)
                    if comp <= dominated
                }
                for a in a_set:
                    expect_blue = any(
                        cls.comp_of[u] in full for u in rb.priv[a]
                    )
                    assert (a in rb.blue) == expect_blue
                for i, members in rb.red_by_component.items():
                    for a in members:
                        assert a in rb.red
                        assert rb.priv[a] & cls.components[i - 1]
