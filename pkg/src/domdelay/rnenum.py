"""Enumeration of the redundant parts of minimal dominating sets.

Two engines drive the same solution tree: on P7-free chordal inputs the
family is an independence system and candidates are vetted in O(deg)
amortized time by the array kernel; on P8-free chordal inputs the family
is accessible and membership/maximal-generator queries are answered from
scratch per candidate through the component extension solver below.

Both engines run on an explicit stack and yield one set per pull, with
half of the outputs emitted on entry (even depths) and half after the
candidate loop (odd depths) so that consecutive backtracks never separate
two outputs by more than two candidate sweeps.
"""

from __future__ import annotations

from array import array
from bisect import bisect_left
from typing import Iterator

from ._kernel import get_kernel
from .errors import MalformedInstanceError, NotInClassError, DisconnectedGraphError
from .graph import Graph, is_connected, mask_of
from .recognition import TreePoset, build_tree_poset
from .redundancy import Classification, RedBluePartition, classify, red_blue

SolutionStream = Iterator[frozenset[int]]


class ExtensionInstance:
    """One irredundant component plus the sets steering its extensions.

    x_sets hold the private neighbors that an extension must not swallow
    entirely (one set per constrained member), y_set the remaining already
    dominated vertices; z_set is the rest of the component and f_set its
    deepest elements in the tree order, which are exactly the vertices an
    extension still has to dominate.
    """

    __slots__ = ("poset", "x_sets", "y_set", "z_set", "f_set")

    def __init__(self, poset: TreePoset, x_sets, y_set):
        comp = set(poset.order)
        xs_clean = tuple(frozenset(x) for x in x_sets)
        union_x: set[int] = set()
        for xs in xs_clean:
            if not xs <= comp:
                raise MalformedInstanceError("X set leaves the component")
            if union_x & xs:
                raise MalformedInstanceError("X sets overlap")
            union_x |= xs
        y_clean = frozenset(y_set)
        if not y_clean <= comp:
            raise MalformedInstanceError("Y leaves the component")
        if y_clean & union_x:
            raise MalformedInstanceError("X and Y overlap")
        self.poset = poset
        self.x_sets = xs_clean
        self.y_set = y_clean
        z = comp - union_x - y_clean
        self.z_set = frozenset(z)
        has_z_desc: dict[int, bool] = {}
        f = []
        for v in reversed(poset.order):
            below = any(has_z_desc[ch] for ch in poset.children[v])
            has_z_desc[v] = below or v in z
            if v in z and not below:
                f.append(v)
        self.f_set = frozenset(f)


def chain_top(poset: TreePoset, xs) -> int | None:
    """Deepest element of xs when xs is a chain of the tree order, else None."""
    mx = max(xs, key=lambda v: (poset.depth[v], v))
    for u in xs:
        if not poset.le(u, mx):
            return None
    return mx


def solve_iep(inst: ExtensionInstance) -> bool:
    """Does some subset of the component dominate everything outside X and Y
    while dominating no X set entirely?

    Linear-time shape: an X set entirely below the still-undominated
    fringe can never be saved; an X chain forbids every leaf above it; an
    X set with two incomparable members is dominated by no single leaf and
    drops out.  A solution exists iff every fringe vertex keeps a
    non-forbidden descendant leaf.
    """
    if any(not xs for xs in inst.x_sets):
        return False
    poset = inst.poset
    f = inst.f_set
    if not f:
        return True
    fminus: set[int] = set()
    for x in f:
        p = poset.parent[x]
        while p is not None and p not in fminus:
            fminus.add(p)
            p = poset.parent[p]
    marked: set[int] = set()
    for xs in inst.x_sets:
        if xs <= fminus:
            return False
        top = chain_top(poset, xs)
        if top is not None:
            marked.update(poset.leaves_under(top))
    for x in f:
        if all(t in marked for t in poset.leaves_under(x)):
            return False
    return True


class EnumerationContext:
    """Caches the tree orders of irredundant components for one (g, cls)."""

    def __init__(self, g: Graph, cls: Classification):
        self.g = g
        self.cls = cls
        self._posets: dict[int, TreePoset] = {}

    def poset(self, comp_index: int) -> TreePoset:
        p = self._posets.get(comp_index)
        if p is None:
            comp = self.cls.components[comp_index - 1]
            p = build_tree_poset(self.g, comp)
            self._posets[comp_index] = p
        return p


def component_instance(
    g: Graph,
    cls: Classification,
    a_set,
    comp_index: int,
    ctx: EnumerationContext | None = None,
    rb: RedBluePartition | None = None,
) -> ExtensionInstance:
    """Extension instance of one component for the candidate set a_set."""
    if ctx is None:
        ctx = EnumerationContext(g, cls)
    if rb is None:
        rb = red_blue(g, cls, a_set)
    comp = cls.components[comp_index - 1]
    poset = ctx.poset(comp_index)
    x_sets = []
    for a in sorted(rb.red_by_component.get(comp_index, ())):
        priv = rb.priv[a]
        if not priv <= comp:
            raise NotInClassError(
                f"member {a} has private neighbors in several components; "
                "the input cannot be P9-free chordal"
            )
        x_sets.append(priv)
    dominated = set()
    for a in set(a_set):
        dominated.update(u for u in g.neighbors(a) if u in comp)
    x_union = frozenset().union(*x_sets) if x_sets else frozenset()
    return ExtensionInstance(poset, x_sets, dominated - x_union)


def is_in_drn(g: Graph, cls: Classification, a_set, ctx: EnumerationContext | None = None) -> bool:
    """Membership of a_set among the redundant parts of minimal dominating
    sets, for P7/P8-free chordal inputs: every member keeps an irredundant
    private neighbor and every constrained component admits an extension."""
    a_sorted = sorted(set(a_set))
    if not set(a_sorted) <= cls.rn:
        raise ValueError("a_set must consist of redundant vertices")
    if not a_sorted:
        return True
    rb = red_blue(g, cls, a_sorted)
    if any(not rb.priv[a] for a in a_sorted):
        return False
    if not rb.red_by_component:
        return True
    if ctx is None:
        ctx = EnumerationContext(g, cls)
    for comp_index in sorted(rb.red_by_component):
        inst = component_instance(g, cls, a_sorted, comp_index, ctx, rb)
        if not solve_iep(inst):
            return False
    return True


def solve_mgp(g: Graph, cls: Classification, a_with_c, c: int, ctx: EnumerationContext | None = None) -> bool:
    """Is c the maximal generator of a_with_c, i.e. the largest-index member
    whose removal stays inside the family?"""
    a_full = frozenset(a_with_c)
    if c not in a_full:
        raise ValueError("c must be a member of the set")
    if ctx is None:
        ctx = EnumerationContext(g, cls)
    if not is_in_drn(g, cls, a_full - {c}, ctx):
        return False
    return all(
        not is_in_drn(g, cls, a_full - {y}, ctx) for y in a_full if y > c
    )


class P7Engine:
    """Array state for constant-amortized candidate trials on P7-free
    chordal inputs, where every irredundant component is a clique.

    A trial for candidate c touches only the entries of c's irredundant
    neighbors: newly dominated vertices are claimed as c's private
    neighbors and their component counters drop; already dominated ones
    may be stolen from their current owner, whose remaining private counts
    decide acceptance.  touch[0] accumulates one unit per state entry
    read or written, for the work-accounting checks.
    """

    def __init__(self, g: Graph, cls: Classification, kernel=None):
        cls.require_unique_partial()
        self.g = g
        self.cls = cls
        self.kernel = kernel if kernel is not None else get_kernel("auto")
        n = g.n
        self.n = n
        self.rn_sorted = array("q", sorted(cls.rn))
        rn_set = cls.rn
        ir_set = cls.ir
        indptr = array("q", [0] * (n + 1))
        nbrs = array("q")
        for v in range(n):
            if v in rn_set:
                nbrs.extend(u for u in g.neighbors(v) if u in ir_set)
            indptr[v + 1] = len(nbrs)
        self.indptr = indptr
        self.nbrs = nbrs
        self.undom = array("q", [0] + [len(c) for c in cls.components])
        self.comp = array("q", cls.comp_of)
        self.ca = array("q", (cls.partial.get(v) or 0 for v in range(n)))
        self.priv_in = array("q", (0 if self.ca[v] else -1 for v in range(n)))
        self.priv_out = array("q", [0] * n)
        self.owner = array("q", [0] * n)
        self.in_ca = array("q", [1] * n)
        self.dom_by = array("q", [0] * n)
        max_row = max(
            (indptr[v + 1] - indptr[v] for v in range(n)), default=0
        )
        self.jy = array("q", [0] * (max_row + 1))
        self.ja = array("q", [0] * (max_row + 1))
        self.jmeta = array("q", [0])
        self.touch = array("q", [0])
        self.last_journal = None
        # the kernel holds buffer views, so it must outlive no array
        self._state = self.kernel.KernelState(
            self.rn_sorted if self.rn_sorted else array("q", [0]),
            self.n,
            self.indptr,
            self.nbrs if self.nbrs else array("q", [0]),
            self.undom,
            self.comp if n else array("q", [0]),
            self.ca if n else array("q", [0]),
            self.priv_in if n else array("q", [0]),
            self.priv_out if n else array("q", [0]),
            self.owner if n else array("q", [0]),
            self.in_ca if n else array("q", [0]),
            self.dom_by if n else array("q", [0]),
            self.jy,
            self.ja,
            self.jmeta,
            self.touch,
        )

    def scan_accept(self, start_pos: int, end_pos: int | None = None):
        """First acceptable candidate position in rn_sorted[start:end],
        committed, with its steal journal; None when the range rejects."""
        end = len(self.rn_sorted) if end_pos is None else end_pos
        pos = self._state.scan_accept(start_pos, end)
        if pos < 0:
            return None
        jlen = self.jmeta[0]
        journal = (self.jy[:jlen], self.ja[:jlen])
        self.last_journal = journal
        return pos, journal

    def try_candidate(self, c: int) -> bool:
        """Trial of a single candidate; commits on acceptance (keep
        last_journal to undo), restores the state exactly on rejection."""
        pos = bisect_left(self.rn_sorted, c)
        if pos >= len(self.rn_sorted) or self.rn_sorted[pos] != c:
            raise ValueError(f"vertex {c} is not redundant")
        return self.scan_accept(pos, pos + 1) is not None

    def undo_commit(self, c: int, journal) -> None:
        jy, ja = journal
        self._state.undo_commit(c, jy, ja, len(jy))

    def undominated_components(self) -> tuple[int, ...]:
        return tuple(i for i in range(1, len(self.cls.components) + 1) if self.undom[i] > 0)

    def snapshot(self) -> tuple:
        return tuple(
            tuple(a)
            for a in (
                self.undom,
                self.priv_in,
                self.priv_out,
                self.owner,
                self.in_ca,
                self.dom_by,
            )
        )


def p7_try_candidate(engine: P7Engine, c: int) -> bool:
    """Trial of one candidate against the engine's current set."""
    return engine.try_candidate(c)


def _p7_nodes(g: Graph, cls: Classification, kernel=None):
    """Depth-first walk of the solution tree, yielding each redundant part
    together with its not-yet-dominated component indices."""
    eng = P7Engine(g, cls, kernel)
    rn = eng.rn_sorted
    members: list[int] = []
    # one frame per tree node: [candidate cursor, committed vertex, journal]
    stack: list[list] = [[-1, None, None]]
    yield frozenset(), eng.undominated_components()
    while stack:
        frame = stack[-1]
        res = eng.scan_accept(frame[0] + 1)
        if res is not None:
            pos, journal = res
            frame[0] = pos
            c = rn[pos]
            members.append(c)
            stack.append([pos, c, journal])
            if (len(stack) - 1) % 2 == 0:
                yield frozenset(members), eng.undominated_components()
        else:
            depth = len(stack) - 1
            if depth % 2 == 1:
                yield frozenset(members), eng.undominated_components()
            stack.pop()
            if stack:
                eng.undo_commit(frame[1], frame[2])
                members.pop()


def _p8_nodes(g: Graph, cls: Classification, ctx: EnumerationContext):
    """Same walk through membership and maximal-generator queries, for
    P8-free chordal inputs where the family is merely accessible."""
    rn_sorted = sorted(cls.rn)
    members: list[int] = []
    member_set: set[int] = set()
    stack: list[list] = [[-1, None]]
    yield frozenset()
    while stack:
        frame = stack[-1]
        advanced = False
        i = frame[0] + 1
        while i < len(rn_sorted):
            c = rn_sorted[i]
            if c not in member_set:
                candidate = members + [c]
                if is_in_drn(g, cls, candidate, ctx) and all(
                    not is_in_drn(g, cls, [m for m in candidate if m != y], ctx)
                    for y in members
                    if y > c
                ):
                    frame[0] = i
                    members.append(c)
                    member_set.add(c)
                    stack.append([-1, c])
                    if (len(stack) - 1) % 2 == 0:
                        yield frozenset(members)
                    advanced = True
                    break
            i += 1
        if advanced:
            continue
        depth = len(stack) - 1
        if depth % 2 == 1:
            yield frozenset(members)
        stack.pop()
        if stack and frame[1] is not None:
            member_set.remove(frame[1])
            members.pop()


def require_enumerable(g: Graph, cls: Classification, mode: str) -> None:
    """Cheap structural checks that back the caller's class certificate."""
    if mode not in ("p7", "p8"):
        raise ValueError("mode must be 'p7' or 'p8'")
    if not is_connected(g):
        raise DisconnectedGraphError("enumeration requires a connected graph")
    cls.require_unique_partial()
    if mode == "p7":
        for comp in cls.components:
            cmask = mask_of(comp)
            for v in comp:
                if (g.closed_bits(v) & cmask) != cmask:
                    raise NotInClassError(
                        "an irredundant component is not a clique; "
                        "the input cannot be P7-free chordal"
                    )


def enumerate_rn(
    g: Graph,
    cls: Classification | None = None,
    mode: str = "p7",
    *,
    kernel: str = "auto",
) -> SolutionStream:
    """All redundant parts of minimal dominating sets, each exactly once,
    starting from the empty set.  The caller certifies the graph class;
    internal consistency checks reject inputs that contradict it."""
    if cls is None:
        cls = classify(g)
    require_enumerable(g, cls, mode)
    if mode == "p7":
        kern = get_kernel(kernel)
        return (a for a, _ in _p7_nodes(g, cls, kern))
    ctx = EnumerationContext(g, cls)
    for i in range(1, len(cls.components) + 1):
        ctx.poset(i)  # raises on a component with no tree order
    return _p8_nodes(g, cls, ctx)
