import json

import pytest

from domdelay.errors import DegenerateFormulaError, GraphFormatError
from domdelay.generators import split_stream
from domdelay.oracle import brute_drn_member
from domdelay.recognition import is_chordal, is_pk_free
from domdelay.redundancy import classify
from domdelay.satreduction import (
    Cnf3,
    build_reduction,
    decide_and_extract,
    parse_dimacs_cnf,
)


def sample_phi():
    return Cnf3.from_clauses(3, [(1, 2, 3), (-1, 2, -3), (1, -2, 3)])


def unsat_phi():
    clauses = [
        tuple(sorted((s1 * 1, s2 * 2, s3 * 3)))
        for s1 in (1, -1)
        for s2 in (1, -1)
        for s3 in (1, -1)
    ]
    return Cnf3.from_clauses(3, clauses)


def random_phi(rng, n_vars, n_clauses):
    clauses = set()
    guard = 0
    while len(clauses) < n_clauses:
        vs = rng.sample(range(1, n_vars + 1), 3)
        cl = tuple(sorted(v if rng.random() < 0.5 else -v for v in vs))
        clauses.add(cl)
        guard += 1
        if guard > 500:
            raise RuntimeError("clause sampling stuck")
    try:
        return Cnf3.from_clauses(n_vars, sorted(clauses))
    except DegenerateFormulaError:
        return None


def test_vertex_count():
    g, _, _ = build_reduction(sample_phi())
    assert g.n == 12 * 3 + 3
    phi5 = random_phi(split_stream(1, 0), 5, 6)
    g5, _, _ = build_reduction(phi5)
    assert g5.n == 12 * 5 + 6


def test_redundant_roles():
    g, a_set, gmap = build_reduction(sample_phi())
    expected = set()
    for role in ("stem_pos", "stem_neg", "paw_hinge", "paw_inner"):
        expected.update(gmap.by_role[role])
    assert a_set == expected


def test_singleton_components_present():
    g, _, gmap = build_reduction(sample_phi())
    cls = classify(g)
    singles = {next(iter(c)) for c in cls.components if len(c) == 1}
    for role in ("tip_pos", "tip_neg", "paw_tail", "paw_outer"):
        assert set(gmap.by_role[role]) <= singles


def test_core_is_one_component():
    g, _, gmap = build_reduction(sample_phi())
    cls = classify(g)
    core = set()
    for role in ("literal_pos", "literal_neg", "anchor_pos", "anchor_neg", "clause"):
        core.update(gmap.by_role[role])
    assert frozenset(core) in set(cls.components)


def test_gadget_class_membership():
    for phi in (sample_phi(), unsat_phi()):
        g, _, _ = build_reduction(phi)
        assert is_chordal(g)
        assert is_pk_free(g, 9)


def test_gadget_contains_p8():
    g, _, gmap = build_reduction(sample_phi())
    assert not is_pk_free(g, 8)
    # the stated eight-vertex path through two paws is induced
    i, j = 0, 1
    path = [
        gmap.vertex("paw_tail", i),
        gmap.vertex("paw_hinge", i),
        gmap.vertex("paw_inner", i),
        gmap.vertex("anchor_pos", i),
        gmap.vertex("anchor_pos", j),
        gmap.vertex("paw_inner", j),
        gmap.vertex("paw_hinge", j),
        gmap.vertex("paw_tail", j),
    ]
    for a in range(8):
        for b in range(a + 1, 8):
            assert g.adjacent(path[a], path[b]) == (b - a == 1)


def test_decide_and_extract_sat():
    phi = sample_phi()
    g, a_set, gmap = build_reduction(phi)
    assignment = decide_and_extract(g, a_set, gmap)
    assert assignment is not None
    assert phi.evaluate(assignment)


def test_decide_and_extract_unsat():
    phi = unsat_phi()
    assert phi.brute_satisfiable() is None
    g, a_set, gmap = build_reduction(phi)
    assert decide_and_extract(g, a_set, gmap) is None


def test_equivalence_random():
    checked = 0
    for i in range(60):
        rng = split_stream(60321, i)
        n_vars = 3 + rng.randrange(3)
        n_clauses = 3 + rng.randrange(6)
        phi = random_phi(rng, n_vars, n_clauses)
        if phi is None:
            continue
        g, a_set, gmap = build_reduction(phi)
        sat = phi.brute_satisfiable() is not None
        extracted = decide_and_extract(g, a_set, gmap)
        assert (extracted is not None) == sat
        assert brute_drn_member(g, classify(g), a_set) == sat
        if extracted is not None:
            assert phi.evaluate(extracted)
        checked += 1
    assert checked >= 40


def test_degenerate_formulas_rejected():
    with pytest.raises(DegenerateFormulaError):
        Cnf3.from_clauses(2, [(1, 2, 3)] * 3)  # too few variables
    with pytest.raises(DegenerateFormulaError):
        Cnf3.from_clauses(3, [(1, 2, 3), (-1, 2, 3)])  # too few clauses
    with pytest.raises(DegenerateFormulaError):
        Cnf3.from_clauses(3, [(1, 2, 3), (1, 2, 3), (-1, -2, -3)])  # duplicate
    with pytest.raises(DegenerateFormulaError):
        Cnf3.from_clauses(4, [(1, 2, 3), (1, 2, 4), (1, 3, 4), (1, 2, -3)])  # 1 everywhere
    with pytest.raises(DegenerateFormulaError):
        Cnf3.from_clauses(3, [(1, 1, 2), (1, 2, 3), (-1, -2, -3)])  # repeated var


def test_parse_dimacs_cnf():
    text = "c sample\np cnf 3 3\n1 2 3 0\n-1 2 -3 0\n1 -2 3 0\n"
    phi = parse_dimacs_cnf(text)
    assert phi == sample_phi()
    with pytest.raises(GraphFormatError):
        parse_dimacs_cnf("p cnf 3 2\n1 2 3 0\n")
    with pytest.raises(GraphFormatError):
        parse_dimacs_cnf("p cnf 3 1\n1 2 3\n")


def test_role_map_jsonl():
    g, _, gmap = build_reduction(sample_phi())
    lines = gmap.to_jsonl().strip().splitlines()
    assert len(lines) == g.n
    rec = json.loads(lines[0])
    assert set(rec) == {"vertex", "role", "index"}
    seen = {json.loads(l)["vertex"] for l in lines}
    assert seen == set(range(1, g.n + 1))
