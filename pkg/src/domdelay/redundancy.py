"""Redundant/irredundant classification and private-neighbor machinery.

A vertex is redundant when some other vertex has a strictly smaller closed
neighborhood, or an equal one with a smaller index; the remaining vertices
are irredundant and their induced components drive the enumeration
engines.  Any witness to redundancy is necessarily a neighbor, so the
whole classification costs one neighborhood-inclusion test per edge
direction on bitmask rows.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import NotInClassError
from .graph import Graph, bits_of, connected_components, mask_of


@dataclass(frozen=True)
class Classification:
    """IR/RN bipartition of a graph plus derived component data.

    components are the connected components of the subgraph induced on
    irredundant vertices, ordered by minimum vertex; comp_of maps a vertex
    to its 1-based component index (0 for redundant vertices).  partial
    maps each redundant vertex to the unique component it is partially
    adjacent to (None when it is complete or disconnected to every
    component); vertices partially adjacent to several components are
    collected in multi_partial, which is empty on every P9-free chordal
    input.
    """

    ir: frozenset[int]
    rn: frozenset[int]
    witness: dict[int, int]
    components: tuple[frozenset[int], ...]
    comp_of: tuple[int, ...]
    partial: dict[int, int | None]
    multi_partial: dict[int, tuple[int, ...]]

    def require_unique_partial(self):
        if self.multi_partial:
            a = min(self.multi_partial)
            raise NotInClassError(
                f"vertex {a} is partially adjacent to components "
                f"{self.multi_partial[a]}; the input cannot be P9-free chordal"
            )

    def component_index_of_set(self, vertices: Iterable[int]) -> int:
        idx = {self.comp_of[v] for v in vertices}
        if len(idx) != 1 or 0 in idx:
            raise ValueError("vertices do not lie in a single irredundant component")
        return idx.pop()


def classify(g: Graph, *, certified_p9_free: bool = False) -> Classification:
    """Compute the IR/RN bipartition, witnesses, components and partial map."""
    n = g.n
    redundant = [False] * n
    for v in range(n):
        row_v = g.closed_bits(v)
        for u in g.neighbors(v):
            row_u = g.closed_bits(u)
            if row_u & ~row_v == 0 and (row_u != row_v or u < v):
                redundant[v] = True
                break
    ir = frozenset(v for v in range(n) if not redundant[v])
    rn = frozenset(v for v in range(n) if redundant[v])

    witness: dict[int, int] = {}
    for y in sorted(rn):
        row_y = g.closed_bits(y)
        for x in g.neighbors(y):
            if not redundant[x] and g.closed_bits(x) & ~row_y == 0:
                witness[y] = x
                break
        else:
            raise AssertionError(f"redundant vertex {y} has no irredundant witness")

    components = tuple(connected_components(g, ir))
    comp_of = [0] * n
    for i, comp in enumerate(components, start=1):
        for v in comp:
            comp_of[v] = i

    comp_size = [0] + [len(c) for c in components]
    partial: dict[int, int | None] = {}
    multi_partial: dict[int, tuple[int, ...]] = {}
    for a in sorted(rn):
        touched: dict[int, int] = {}
        for u in g.neighbors(a):
            i = comp_of[u]
            if i:
                touched[i] = touched.get(i, 0) + 1
        partials = sorted(i for i, cnt in touched.items() if cnt < comp_size[i])
        if len(partials) > 1:
            multi_partial[a] = tuple(partials)
            partial[a] = None
        else:
            partial[a] = partials[0] if partials else None

    cls = Classification(
        ir=ir,
        rn=rn,
        witness=witness,
        components=components,
        comp_of=tuple(comp_of),
        partial=partial,
        multi_partial=multi_partial,
    )
    if certified_p9_free:
        cls.require_unique_partial()
    return cls


def private_neighbors(g: Graph, d: Iterable[int], x: int) -> frozenset[int]:
    """Vertices whose closed neighborhood meets d exactly in {x}.

    x itself qualifies when no other member of d is adjacent to it.
    """
    dset = frozenset(d)
    if x not in dset:
        raise ValueError("x must be a member of d")
    dmask = mask_of(dset)
    xbit = 1 << x
    out = [u for u in g.neighbors(x) if g.closed_bits(u) & dmask == xbit]
    if g.closed_bits(x) & dmask == xbit:
        out.append(x)
    return frozenset(out)


def irredundant_private_neighbors(
    g: Graph, cls: Classification, d: Iterable[int], x: int
) -> frozenset[int]:
    return private_neighbors(g, d, x) & cls.ir


@dataclass(frozen=True)
class RedBluePartition:
    """Blue members keep a private neighbor inside a fully dominated
    irredundant component; red members rely on components that extensions
    still have to dominate, so their privates constrain the extension."""

    blue: frozenset[int]
    red: frozenset[int]
    red_by_component: dict[int, frozenset[int]]
    priv: dict[int, frozenset[int]]


def red_blue(g: Graph, cls: Classification, a_set: Iterable[int]) -> RedBluePartition:
    a_sorted = sorted(set(a_set))
    if not set(a_sorted) <= cls.rn:
        raise ValueError("a_set must consist of redundant vertices")
    amask = mask_of(a_sorted)

    # per irredundant vertex: number of dominators in A and one of them
    priv: dict[int, set[int]] = {a: set() for a in a_sorted}
    dominated_in_comp = [0] * (len(cls.components) + 1)
    seen: set[int] = set()
    for a in a_sorted:
        for u in g.neighbors(a):
            if cls.comp_of[u] and u not in seen:
                seen.add(u)
                dmask = g.closed_bits(u) & amask
                if dmask.bit_count() == 1:
                    priv[next(bits_of(dmask))].add(u)
                dominated_in_comp[cls.comp_of[u]] += 1

    fully_dominated = {
        i
        for i in range(1, len(cls.components) + 1)
        if dominated_in_comp[i] == len(cls.components[i - 1])
    }
    blue = frozenset(
        a for a in a_sorted if any(cls.comp_of[u] in fully_dominated for u in priv[a])
    )
    red = frozenset(a_sorted) - blue
    red_by_component: dict[int, set[int]] = {}
    for a in red:
        for u in priv[a]:
            red_by_component.setdefault(cls.comp_of[u], set()).add(a)
    return RedBluePartition(
        blue=blue,
        red=red,
        red_by_component={i: frozenset(s) for i, s in red_by_component.items()},
        priv={a: frozenset(s) for a, s in priv.items()},
    )
