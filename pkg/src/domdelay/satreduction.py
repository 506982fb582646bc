"""3-CNF satisfiability as an irredundant-extension membership question.

From a non-degenerate 3-CNF formula the builder produces a chordal graph
with no induced path on nine vertices whose redundant vertices, taken as
the candidate set A, admit an irredundant extension exactly when the
formula is satisfiable.  The construction keeps one split core holding the
literal and clause vertices, pendant paths below the literals, and one paw
per variable tied to the literal copies.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import DegenerateFormulaError, GraphFormatError, SizeLimitError
from .graph import Graph
from .oracle import find_irredundant_extension
from .redundancy import classify

ROLES = (
    "literal_pos",
    "literal_neg",
    "anchor_pos",
    "anchor_neg",
    "clause",
    "stem_pos",
    "stem_neg",
    "tip_pos",
    "tip_neg",
    "paw_hinge",
    "paw_tail",
    "paw_inner",
    "paw_outer",
)


@dataclass(frozen=True)
class Cnf3:
    """3-CNF formula; clauses are sorted tuples of non-zero literals
    (positive literal v means variable v, negative means its negation,
    1-indexed variables)."""

    var_count: int
    clauses: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        if self.var_count < 3:
            raise DegenerateFormulaError("need at least three variables")
        if len(self.clauses) < 3:
            raise DegenerateFormulaError("need at least three clauses")
        seen = set()
        for cl in self.clauses:
            if len(cl) != 3:
                raise DegenerateFormulaError("every clause must hold three literals")
            if tuple(sorted(cl)) != cl:
                raise DegenerateFormulaError("clause literals must be sorted")
            for lit in cl:
                if lit == 0 or abs(lit) > self.var_count:
                    raise DegenerateFormulaError(f"literal {lit} out of range")
            vars_ = {abs(l) for l in cl}
            if len(vars_) != 3:
                raise DegenerateFormulaError(
                    "clause must mention three distinct variables"
                )
            if cl in seen:
                raise DegenerateFormulaError("clauses must be pairwise distinct")
            seen.add(cl)
        for lit in range(-self.var_count, self.var_count + 1):
            if lit and all(lit in cl for cl in self.clauses):
                raise DegenerateFormulaError(
                    f"literal {lit} occurs in every clause"
                )

    @staticmethod
    def from_clauses(var_count: int, clauses) -> "Cnf3":
        return Cnf3(var_count, tuple(tuple(sorted(cl)) for cl in clauses))

    def evaluate(self, assignment: dict[int, bool]) -> bool:
        return all(
            any(assignment[abs(l)] == (l > 0) for l in cl) for cl in self.clauses
        )

    def brute_satisfiable(self) -> dict[int, bool] | None:
        n = self.var_count
        if n > 20:
            raise SizeLimitError("assignment search limited to 20 variables")
        for bits in range(1 << n):
            assignment = {v: bool((bits >> (v - 1)) & 1) for v in range(1, n + 1)}
            if self.evaluate(assignment):
                return assignment
        return None


def parse_dimacs_cnf(text: bytes | str) -> Cnf3:
    """DIMACS CNF: 'p cnf <vars> <clauses>' then clause lines ending in 0."""
    if isinstance(text, bytes):
        text = text.decode("ascii")
    var_count = None
    want = 0
    clauses = []
    for i, raw in enumerate(text.splitlines()):
        s = raw.strip()
        if not s or s.startswith("c"):
            continue
        parts = s.split()
        if parts[0] == "p":
            if len(parts) != 4 or parts[1] != "cnf":
                raise GraphFormatError("malformed CNF header", line=i + 1)
            var_count, want = int(parts[2]), int(parts[3])
            continue
        if var_count is None:
            raise GraphFormatError("clause before header", line=i + 1)
        try:
            lits = [int(x) for x in parts]
        except ValueError:
            raise GraphFormatError("non-integer literal", line=i + 1) from None
        if not lits or lits[-1] != 0:
            raise GraphFormatError("clause line must end in 0", line=i + 1)
        clauses.append(tuple(sorted(lits[:-1])))
    if var_count is None:
        raise GraphFormatError("missing CNF header")
    if len(clauses) != want:
        raise GraphFormatError(f"header announces {want} clauses, found {len(clauses)}")
    return Cnf3(var_count, tuple(clauses))


@dataclass(frozen=True)
class GadgetMap:
    """Vertex roles of a built reduction graph, both directions."""

    cnf: Cnf3
    by_role: dict[str, tuple[int, ...]]
    role_of: dict[int, tuple[str, int]]

    def vertex(self, role: str, index: int) -> int:
        return self.by_role[role][index]

    def to_jsonl(self) -> str:
        lines = []
        for v in sorted(self.role_of):
            role, index = self.role_of[v]
            lines.append(json.dumps({"vertex": v + 1, "role": role, "index": index}))
        return "\n".join(lines) + "\n"


def build_reduction(phi: Cnf3) -> tuple[Graph, frozenset[int], GadgetMap]:
    """Reduction graph, its redundant vertex set, and the role map.

    Vertex layout, in order: positive literals, negative literals,
    positive anchors, negative anchors, clause vertices, then the pendant
    paths (stems, tips) and the paws (hinge, tail, inner, outer).  The
    anchors and clause vertices form a clique; each literal hangs below
    its anchor with a two-edge pendant path, and each variable's paw
    attaches to both of its anchors through the inner paw vertex.
    """
    n = phi.var_count
    m = len(phi.clauses)
    lit_pos = list(range(0, n))
    lit_neg = list(range(n, 2 * n))
    anc_pos = list(range(2 * n, 3 * n))
    anc_neg = list(range(3 * n, 4 * n))
    clause_v = list(range(4 * n, 4 * n + m))
    base = 4 * n + m
    stem_pos = list(range(base, base + n))
    stem_neg = list(range(base + n, base + 2 * n))
    tip_pos = list(range(base + 2 * n, base + 3 * n))
    tip_neg = list(range(base + 3 * n, base + 4 * n))
    base += 4 * n
    paw_hinge = list(range(base, base + n))
    paw_tail = list(range(base + n, base + 2 * n))
    paw_inner = list(range(base + 2 * n, base + 3 * n))
    paw_outer = list(range(base + 3 * n, base + 4 * n))
    total = 12 * n + m

    edges = []
    core = anc_pos + anc_neg + clause_v
    for i in range(len(core)):
        for j in range(i + 1, len(core)):
            edges.append((core[i], core[j]))
    for i in range(n):
        edges.append((anc_pos[i], lit_pos[i]))
        edges.append((anc_neg[i], lit_neg[i]))
        edges.append((lit_pos[i], stem_pos[i]))
        edges.append((stem_pos[i], tip_pos[i]))
        edges.append((lit_neg[i], stem_neg[i]))
        edges.append((stem_neg[i], tip_neg[i]))
        edges.append((paw_hinge[i], paw_tail[i]))
        edges.append((paw_hinge[i], paw_inner[i]))
        edges.append((paw_hinge[i], paw_outer[i]))
        edges.append((paw_inner[i], paw_outer[i]))
        edges.append((paw_inner[i], anc_pos[i]))
        edges.append((paw_inner[i], anc_neg[i]))
    for j, cl in enumerate(phi.clauses):
        for lit in cl:
            v = lit_pos[lit - 1] if lit > 0 else lit_neg[-lit - 1]
            edges.append((v, clause_v[j]))

    g = Graph(total, edges)
    by_role = {
        "literal_pos": tuple(lit_pos),
        "literal_neg": tuple(lit_neg),
        "anchor_pos": tuple(anc_pos),
        "anchor_neg": tuple(anc_neg),
        "clause": tuple(clause_v),
        "stem_pos": tuple(stem_pos),
        "stem_neg": tuple(stem_neg),
        "tip_pos": tuple(tip_pos),
        "tip_neg": tuple(tip_neg),
        "paw_hinge": tuple(paw_hinge),
        "paw_tail": tuple(paw_tail),
        "paw_inner": tuple(paw_inner),
        "paw_outer": tuple(paw_outer),
    }
    role_of = {}
    for role, verts in by_role.items():
        for idx, v in enumerate(verts):
            role_of[v] = (role, idx)
    gmap = GadgetMap(cnf=phi, by_role=by_role, role_of=role_of)
    a_set = classify(g).rn
    return g, a_set, gmap


def decide_and_extract(
    g: Graph, a_set, gmap: GadgetMap, node_budget: int = 2_000_000
) -> dict[int, bool] | None:
    """Search for an irredundant extension and read it back as a satisfying
    assignment, or report None when no extension exists."""
    if gmap.cnf.var_count > 8:
        raise SizeLimitError("extension search limited to 8 variables")
    cls = classify(g)
    ext = find_irredundant_extension(g, cls, a_set, node_budget)
    if ext is None:
        return None
    pos = set(gmap.by_role["literal_pos"])
    neg = set(gmap.by_role["literal_neg"])
    chosen_true = {gmap.role_of[v][1] + 1 for v in ext if v in pos}
    chosen_false = {gmap.role_of[v][1] + 1 for v in ext if v in neg}
    if chosen_true & chosen_false:
        raise AssertionError("extension picked a literal and its negation")
    assignment = {
        v: v in chosen_true for v in range(1, gmap.cnf.var_count + 1)
    }
    if not gmap.cnf.evaluate(assignment):
        raise AssertionError("extension did not evaluate to a satisfying assignment")
    return assignment
