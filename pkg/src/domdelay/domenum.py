"""Full enumeration of minimal dominating sets and the validity checker.

Every solution is the union of a redundant part A and one of its
irredundant extensions, so the enumerators compose the two streams; the
emitted family covers each minimal dominating set exactly once.
"""

from __future__ import annotations

from .errors import NotInClassError
from .graph import Graph, mask_of, bits_of
from .recognition import is_chordal, is_pk_free
from .redundancy import Classification, classify
from .rnenum import (
    EnumerationContext,
    SolutionStream,
    _p7_nodes,
    enumerate_rn,
    require_enumerable,
)
from .irext import enumerate_dir, product_streams, _clique_factory
from ._kernel import get_kernel


def verify_class_certificate(g: Graph, mode: str, pk_budget: int | None = None) -> None:
    """Exact (exponential-time) check of the caller's class claim."""
    k = 7 if mode == "p7" else 8
    if not is_chordal(g):
        raise NotInClassError("input graph is not chordal")
    budget_args = {} if pk_budget is None else {"node_budget": pk_budget}
    if not is_pk_free(g, k, **budget_args):
        raise NotInClassError(f"input graph has an induced path on {k} vertices")


def enumerate_dom(
    g: Graph,
    mode: str = "p7",
    *,
    cls: Classification | None = None,
    verify_class: bool = False,
    pk_budget: int | None = None,
    kernel: str = "auto",
) -> SolutionStream:
    """All minimal dominating sets of a connected P7-free (mode 'p7') or
    P8-free (mode 'p8') chordal graph, exactly once each."""
    if verify_class:
        verify_class_certificate(g, mode, pk_budget)
    if cls is None:
        cls = classify(g)
    require_enumerable(g, cls, mode)
    if mode == "p7":
        return _dom_p7(g, cls, kernel)
    ctx = EnumerationContext(g, cls)
    for i in range(1, len(cls.components) + 1):
        ctx.poset(i)
    return _dom_p8(g, cls, ctx)


def _dom_p7(g: Graph, cls: Classification, kernel: str) -> SolutionStream:
    kern = get_kernel(kernel)
    factories_of = [None] + [_clique_factory(comp) for comp in cls.components]
    for a_set, undominated in _p7_nodes(g, cls, kern):
        factories = [factories_of[i] for i in undominated]
        for ext in product_streams(factories):
            yield a_set | ext


def _dom_p8(g: Graph, cls: Classification, ctx: EnumerationContext) -> SolutionStream:
    for a_set in enumerate_rn(g, cls, "p8"):
        for ext in enumerate_dir(g, cls, a_set, "p8", ctx):
            yield a_set | ext


def is_minimal_dominating(g: Graph, cls: Classification, d) -> bool:
    """Validity of d as a minimal dominating set, decided entirely on the
    irredundant side: d must dominate every irredundant vertex and every
    member must keep an irredundant private neighbor."""
    dset = frozenset(d)
    if not dset <= frozenset(g.vertices()):
        raise ValueError("d contains vertices outside the graph")
    dmask = mask_of(dset)
    cover = 0
    for v in dset:
        cover |= g.closed_bits(v)
    ir_mask = mask_of(cls.ir)
    if ir_mask & ~cover:
        return False
    has_private = 0
    for u in bits_of(ir_mask):
        hits = g.closed_bits(u) & dmask
        if hits.bit_count() == 1:
            has_private |= hits
    return dmask & ~has_private == 0
