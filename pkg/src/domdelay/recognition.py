"""Recognizers for chordal, Pk-free and trivially perfect graphs.

Chordality is decided by maximum-cardinality search plus verification of
the resulting elimination order; a failed verification is turned into a
chordless-cycle witness.  Pk-freeness is decided by an exact bounded
depth-first search over induced paths and is intended for small instances
only.  Trivially perfect components get a rooted tree order with interval
labels for constant-time ancestor queries.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import BudgetExceededError, NotTriviallyPerfectError
from .graph import Graph, bits_of, connected_components, induced_subgraph

DEFAULT_PATH_BUDGET = 10_000_000


def _mcs_order(g: Graph) -> list[int]:
    """Maximum-cardinality search visit order (ties to smallest index)."""
    n = g.n
    weight = [0] * n
    visited = [False] * n
    order = []
    for _ in range(n):
        best = -1
        best_w = -1
        for v in range(n):
            if not visited[v] and weight[v] > best_w:
                best = v
                best_w = weight[v]
        visited[best] = True
        order.append(best)
        for u in g.neighbors(best):
            if not visited[u]:
                weight[u] += 1
    return order


def find_hole(g: Graph) -> list[int] | None:
    """Return a chordless cycle of length >= 4, or None if g is chordal."""
    if g.n == 0:
        return None
    visit = _mcs_order(g)
    peo = visit[::-1]
    pos = [0] * g.n
    for i, v in enumerate(peo):
        pos[v] = i
    bad = None
    for v in peo:
        later = [u for u in g.neighbors(v) if pos[u] > pos[v]]
        if len(later) < 2:
            continue
        p = min(later, key=lambda u: pos[u])
        for w in later:
            if w != p and not g.adjacent(p, w):
                bad = (v, p, w)
                break
        if bad:
            break
    if bad is None:
        return None
    # Some vertex with two non-adjacent neighbors closes a chordless cycle
    # through a shortest path that avoids the rest of its neighborhood.
    for v in range(g.n):
        nbrs = g.neighbors(v)
        for i, p in enumerate(nbrs):
            for w in nbrs[i + 1 :]:
                if g.adjacent(p, w):
                    continue
                blocked = (g.closed_bits(v)) & ~(1 << p) & ~(1 << w)
                path = _shortest_path_avoiding(g, p, w, blocked)
                if path is not None:
                    return [v] + path
    raise AssertionError("elimination order rejected but no hole found")


def _shortest_path_avoiding(g: Graph, src: int, dst: int, blocked: int) -> list[int] | None:
    if (blocked >> src) & 1 or (blocked >> dst) & 1:
        return None
    prev = {src: -1}
    frontier = [src]
    while frontier:
        nxt = []
        for v in frontier:
            for u in g.neighbors(v):
                if u in prev or (blocked >> u) & 1:
                    continue
                prev[u] = v
                if u == dst:
                    path = [u]
                    while path[-1] != src:
                        path.append(prev[path[-1]])
                    return path[::-1]
                nxt.append(u)
        frontier = nxt
    return None


def is_chordal(g: Graph) -> bool:
    return find_hole(g) is None


def find_induced_path(g: Graph, k: int, node_budget: int = DEFAULT_PATH_BUDGET) -> list[int] | None:
    """Find an induced path on k vertices, or None.

    Exact depth-first search with bitmask pruning; raises
    BudgetExceededError when more than `node_budget` partial paths are
    explored, signalling that the instance is too large for exact checking.
    """
    if k < 1:
        raise ValueError("k must be positive")
    if k == 1:
        return [0] if g.n >= 1 else None
    nodes = 0
    open_bits = [g.open_bits(v) for v in range(g.n)]
    for start in range(g.n):
        # path invariant: candidates must be adjacent to the last vertex
        # and to no other path vertex
        stack = [([start], 1 << start)]
        while stack:
            path, forbid = stack.pop()
            nodes += 1
            if nodes > node_budget:
                raise BudgetExceededError(
                    f"induced-path search exceeded {node_budget} nodes"
                )
            last = path[-1]
            cand = open_bits[last] & ~forbid
            new_forbid = forbid | open_bits[last]
            for w in bits_of(cand):
                if len(path) + 1 == k:
                    return path + [w]
                stack.append((path + [w], new_forbid | (1 << w)))
    return None


def is_pk_free(g: Graph, k: int, node_budget: int = DEFAULT_PATH_BUDGET) -> bool:
    if k < 2:
        raise ValueError("k must be at least 2")
    return find_induced_path(g, k, node_budget) is None


@dataclass(frozen=True)
class TreePoset:
    """Rooted tree order of a trivially perfect component.

    The root is the minimum of the order and is universal in the component;
    deeper vertices have smaller closed neighborhoods.  Two vertices are
    adjacent in the component iff they are comparable here.  Interval
    labels (`_pre`, `_post`) over the preorder make ancestor tests O(1).
    """

    root: int
    parent: dict[int, int | None]
    children: dict[int, tuple[int, ...]]
    depth: dict[int, int]
    leaves: tuple[int, ...]
    order: tuple[int, ...]
    _pre: dict[int, int] = field(repr=False)
    _post: dict[int, int] = field(repr=False)

    def vertices(self) -> tuple[int, ...]:
        return self.order

    def le(self, x: int, y: int) -> bool:
        """True iff x is an ancestor of y or equal to it."""
        return self._pre[x] <= self._pre[y] <= self._post[x]

    def comparable(self, x: int, y: int) -> bool:
        return self.le(x, y) or self.le(y, x)

    def subtree(self, x: int) -> tuple[int, ...]:
        """Vertices of the subtree rooted at x, in preorder (x first)."""
        return self.order[self._pre[x] : self._post[x] + 1]

    def leaves_under(self, x: int) -> list[int]:
        lo, hi = self._pre[x], self._post[x]
        return [t for t in self.leaves if lo <= self._pre[t] <= hi]

    def strict_ancestors(self, x: int) -> list[int]:
        out = []
        p = self.parent[x]
        while p is not None:
            out.append(p)
            p = self.parent[p]
        return out


def _tp_witness(g: Graph, verts: list[int]):
    """Produce an induced P4 or C4 from a non-trivially-perfect component."""
    sub, back = induced_subgraph(g, verts)
    hole = find_hole(sub)
    if hole is not None:
        if len(hole) == 4:
            return [back[v] for v in hole]
        return [back[v] for v in hole[:4]]
    p4 = find_induced_path(sub, 4)
    if p4 is None:
        raise AssertionError("component has no universal vertex but no P4/C4")
    return [back[v] for v in p4]


def build_tree_poset(g: Graph, vertices=None) -> TreePoset:
    """Tree order of a connected trivially perfect (sub)graph.

    The minimum-index universal vertex of each connected piece becomes the
    node; recursion continues on the remaining components, children ordered
    by minimum vertex.  Raises NotTriviallyPerfectError with an induced P4
    or C4 witness when the construction gets stuck.
    """
    if vertices is None:
        verts = sorted(g.vertices())
    else:
        verts = sorted(set(vertices))
    if not verts:
        raise ValueError("empty vertex set")
    if len(connected_components(g, verts)) != 1:
        raise ValueError("vertex set must induce a connected subgraph")

    parent: dict[int, int | None] = {}
    children: dict[int, list[int]] = {}
    depth: dict[int, int] = {}
    # (vertex set, parent vertex, parent depth)
    work: list[tuple[list[int], int | None, int]] = [(verts, None, -1)]
    root = None
    while work:
        piece, par, pdepth = work.pop()
        piece_mask = 0
        for v in piece:
            piece_mask |= 1 << v
        size = len(piece)
        node = None
        for v in piece:
            if (g.open_bits(v) & piece_mask).bit_count() == size - 1:
                node = v
                break
        if node is None:
            raise NotTriviallyPerfectError(
                "component has no universal vertex",
                witness=_tp_witness(g, piece),
            )
        parent[node] = par
        children[node] = []
        depth[node] = pdepth + 1
        if par is None:
            root = node
        else:
            children[par].append(node)
        rest = [v for v in piece if v != node]
        if rest:
            # push in reverse min-vertex order so children pop ascending
            for comp in sorted(connected_components(g, rest), key=min, reverse=True):
                work.append((sorted(comp), node, depth[node]))

    pre: dict[int, int] = {}
    post: dict[int, int] = {}
    order: list[int] = []
    stack = [(root, False)]
    while stack:
        v, done = stack.pop()
        if done:
            post[v] = len(order) - 1
            continue
        pre[v] = len(order)
        order.append(v)
        stack.append((v, True))
        for c in reversed(children[v]):
            stack.append((c, False))
    leaves = tuple(v for v in order if not children[v])
    return TreePoset(
        root=root,
        parent=parent,
        children={v: tuple(cs) for v, cs in children.items()},
        depth=depth,
        leaves=leaves,
        order=tuple(order),
        _pre=pre,
        _post=post,
    )
