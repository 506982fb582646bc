"""Enumeration of the irredundant extensions of a redundant part.

On P7-free chordal inputs every undominated component is a clique and the
extensions are exactly the cross product of one vertex per such clique.
On P8-free chordal inputs each component is searched by backtracking over
its vertices in tree-depth order, branching on forced-in/forced-out and
pruning with the component extension solver.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .errors import MalformedInstanceError
from .graph import Graph
from .redundancy import Classification, red_blue
from .rnenum import (
    EnumerationContext,
    ExtensionInstance,
    SolutionStream,
    component_instance,
)


@dataclass(frozen=True)
class IcepQuery:
    """Component extension query with forced-in (s_set) and forced-out
    (q_set) vertices.  Construction augments the avoid sets with the
    private neighbors every forced-in vertex must keep."""

    instance: ExtensionInstance
    s_set: frozenset[int]
    q_set: frozenset[int]
    x_aug: tuple[frozenset[int], ...]

    @staticmethod
    def build(instance: ExtensionInstance, s_set, q_set) -> "IcepQuery":
        s = frozenset(s_set)
        q = frozenset(q_set)
        if s & q:
            raise MalformedInstanceError("forced-in and forced-out sets overlap")
        comp = set(instance.poset.order)
        if not s <= comp or not q <= comp:
            raise MalformedInstanceError("query vertices leave the component")
        blocked = instance.y_set.union(*instance.x_sets) if instance.x_sets else instance.y_set
        aug = []
        poset = instance.poset
        for sv in sorted(s):
            mine = frozenset(
                u
                for u in poset.order
                if sum(1 for t in s if poset.comparable(u, t)) == 1
                and poset.comparable(u, sv)
                and u not in blocked
            )
            aug.append(mine)
        return IcepQuery(instance=instance, s_set=s, q_set=q, x_aug=tuple(aug))


def solve_icep(query: IcepQuery) -> bool:
    """Existence of a minimal component extension containing s_set and
    avoiding q_set.

    The fringe shrinks to the vertices not already dominated by the
    forced-in set; their strict ancestors are dominated by any solution,
    so an avoid set inside that forced region kills the query outright.
    Remaining fringe vertices each need one selectable subtree vertex that
    dominates no avoid set entirely."""
    inst = query.instance
    poset = inst.poset
    if any(not xs for xs in inst.x_sets):
        return False
    # every forced-in vertex must keep a private neighbor outside X and Y
    for mine in query.x_aug:
        if not mine:
            return False
    s = query.s_set
    q = query.q_set
    s_closed: set[int] = set()
    for sv in s:
        s_closed.update(u for u in poset.order if poset.comparable(u, sv))
    f_active = [x for x in inst.f_set if x not in s_closed]
    fminus: set[int] = set()
    for x in f_active:
        p = poset.parent[x]
        while p is not None and p not in fminus:
            fminus.add(p)
            p = poset.parent[p]
    for xs in inst.x_sets:
        if all(u in s_closed or u in fminus for u in xs):
            return False
    for mine in query.x_aug:
        if mine <= fminus:
            return False
    avoid = list(inst.x_sets) + list(query.x_aug)
    for x in f_active:
        found = False
        for y in poset.subtree(x):
            if y in q or y in s:
                continue
            if any(all(poset.comparable(u, y) for u in xs) for xs in avoid):
                continue
            found = True
            break
        if not found:
            return False
    return True


def component_scan_order(poset) -> list[int]:
    """Backtracking order: non-decreasing tree depth, ties by index.

    Depth-monotone prefixes keep the subtree-only candidate scan of
    solve_icep complete: once a vertex's whole subtree has been decided,
    all of its ancestors have been decided too."""
    return sorted(poset.order, key=lambda v: (poset.depth[v], v))


def enumerate_dir_component(
    g: Graph,
    cls: Classification,
    a_set,
    comp_index: int,
    ctx: EnumerationContext | None = None,
) -> SolutionStream:
    """All minimal extension parts inside one irredundant component, by
    backtracking with the extension solver as pruning oracle."""
    if ctx is None:
        ctx = EnumerationContext(g, cls)
    inst = component_instance(g, cls, a_set, comp_index, ctx)
    return _component_stream(inst)


def _component_stream(inst: ExtensionInstance) -> SolutionStream:
    order = component_scan_order(inst.poset)
    if not solve_icep(IcepQuery.build(inst, frozenset(), frozenset())):
        return

    def rec(i: int, s: frozenset[int], q: frozenset[int]):
        if i == len(order):
            assert _leaf_is_minimal(inst, s), "backtrack leaf is not minimal"
            yield s
            return
        v = order[i]
        if solve_icep(IcepQuery.build(inst, s | {v}, q)):
            yield from rec(i + 1, s | {v}, q)
        if solve_icep(IcepQuery.build(inst, s, q | {v})):
            yield from rec(i + 1, s, q | {v})

    yield from rec(0, frozenset(), frozenset())


def _leaf_is_minimal(inst: ExtensionInstance, s: frozenset[int]) -> bool:
    """Minimality is a consequence of branching on both query sides; this
    only backs the claim in debug runs."""
    poset = inst.poset

    def dominated(z, d):
        return any(poset.comparable(z, v) for v in d)

    if not all(dominated(z, s) for z in inst.z_set):
        return False
    return all(
        any(not dominated(z, s - {v}) for z in inst.z_set) for v in s
    )


def dir_p7(g: Graph, cls: Classification, a_set) -> SolutionStream:
    """Extensions on P7-free chordal inputs: one vertex from each clique
    component not dominated by a_set, in lexicographic order."""
    dominated: set[int] = set()
    for a in set(a_set):
        dominated.update(g.neighbors(a))
    undominated = [
        comp for comp in cls.components if not comp <= dominated
    ]
    factories = [_clique_factory(comp) for comp in undominated]
    return product_streams(factories)


def _clique_factory(comp: frozenset[int]) -> Callable[[], SolutionStream]:
    verts = sorted(comp)

    def factory() -> SolutionStream:
        return (frozenset((v,)) for v in verts)

    return factory


def product_streams(factories: list[Callable[[], SolutionStream]]) -> SolutionStream:
    """Cross product of restartable per-component streams in odometer
    order: the last component advances first, exhausted components restart
    from their first solution."""
    k = len(factories)
    if k == 0:
        yield frozenset()
        return
    its = [f() for f in factories]
    cur = []
    for it in its:
        first = next(it, None)
        if first is None:
            return
        cur.append(first)
    while True:
        yield frozenset().union(*cur)
        i = k - 1
        while i >= 0:
            nxt = next(its[i], None)
            if nxt is not None:
                cur[i] = nxt
                break
            its[i] = factories[i]()
            cur[i] = next(its[i])
            i -= 1
        if i < 0:
            return


def enumerate_dir(
    g: Graph,
    cls: Classification,
    a_set,
    mode: str = "p7",
    ctx: EnumerationContext | None = None,
) -> SolutionStream:
    """All irredundant extensions of a_set (assumed to be a valid redundant
    part), as unions of per-component minimal extension parts."""
    if mode == "p7":
        return dir_p7(g, cls, a_set)
    if mode != "p8":
        raise ValueError("mode must be 'p7' or 'p8'")
    if ctx is None:
        ctx = EnumerationContext(g, cls)
    rb = red_blue(g, cls, a_set)
    dominated: set[int] = set()
    for a in set(a_set):
        dominated.update(g.neighbors(a))
    factories: list[Callable[[], SolutionStream]] = []
    for i, comp in enumerate(cls.components, start=1):
        if comp <= dominated:
            continue
        inst = component_instance(g, cls, a_set, i, ctx, rb)
        factories.append(lambda inst=inst: _component_stream(inst))
    return product_streams(factories)
