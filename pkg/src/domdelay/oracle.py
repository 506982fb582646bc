"""Exponential-time reference implementations used as ground truth.

Everything here works from first definitions on bitmask subsets and shares
no code with the fast enumeration paths it validates.  Subset iteration is
index-lexicographic (ascending masks) so outputs are reproducible.
"""

from __future__ import annotations

from typing import Iterable

from .errors import BudgetExceededError, SizeLimitError
from .graph import Graph, bits_of, mask_of
from .redundancy import Classification

DEFAULT_SUBSET_LIMIT = 16


def _check_limit(n: int, limit: int):
    if n > limit:
        raise SizeLimitError(f"brute-force oracle limited to {limit} vertices, got {n}")


def brute_dom(g: Graph, limit: int = DEFAULT_SUBSET_LIMIT) -> list[frozenset[int]]:
    """All minimal dominating sets, by filtering every vertex subset."""
    _check_limit(g.n, limit)
    n = g.n
    full = (1 << n) - 1
    rows = [g.closed_bits(v) for v in range(n)]
    out = []
    for mask in range(1 << n):
        cover = 0
        for v in bits_of(mask):
            cover |= rows[v]
        if cover != full:
            continue
        minimal = True
        for v in bits_of(mask):
            reduced = 0
            for u in bits_of(mask & ~(1 << v)):
                reduced |= rows[u]
            if reduced == full:
                minimal = False
                break
        if minimal:
            out.append(frozenset(bits_of(mask)))
    return out


def brute_drn(g: Graph, cls: Classification, limit: int = DEFAULT_SUBSET_LIMIT) -> list[frozenset[int]]:
    """The redundant parts {D & RN : D minimal dominating}, duplicate-free."""
    seen = set()
    out = []
    for d in brute_dom(g, limit):
        part = d & cls.rn
        if part not in seen:
            seen.add(part)
            out.append(part)
    return out


def brute_dir(
    g: Graph, cls: Classification, a_set: Iterable[int], limit: int = DEFAULT_SUBSET_LIMIT
) -> list[frozenset[int]]:
    """All irredundant extensions of a_set, straight from brute_dom."""
    a = frozenset(a_set)
    return [d - a for d in brute_dom(g, limit) if d & cls.rn == a]


def brute_iep(instance) -> bool:
    """Exhaustive check whether some D in the component dominates everything
    outside X and Y without dominating any single X_j entirely."""
    comp = sorted(instance.poset.order)
    rows = {v: _component_row(instance, v) for v in comp}
    zmask = mask_of(instance.z_set)
    xmasks = [mask_of(xs) for xs in instance.x_sets]
    for mask in range(1 << len(comp)):
        cover = 0
        for i, v in enumerate(comp):
            if (mask >> i) & 1:
                cover |= rows[v]
        if zmask & ~cover:
            continue
        if any(xm & ~cover == 0 for xm in xmasks):
            continue
        return True
    return False


def brute_dir_component(instance) -> list[frozenset[int]]:
    """All minimal sets D in the component with: D dominates the component
    minus X and Y, and D dominates no X_j entirely."""
    comp = sorted(instance.poset.order)
    rows = {v: _component_row(instance, v) for v in comp}
    zmask = mask_of(instance.z_set)
    xmasks = [mask_of(xs) for xs in instance.x_sets]
    out = []
    for mask in range(1 << len(comp)):
        chosen = [comp[i] for i in range(len(comp)) if (mask >> i) & 1]
        cover = 0
        for v in chosen:
            cover |= rows[v]
        if zmask & ~cover:
            continue
        if any(xm & ~cover == 0 for xm in xmasks):
            continue
        minimal = True
        for v in chosen:
            reduced = 0
            for u in chosen:
                if u != v:
                    reduced |= rows[u]
            if zmask & ~reduced == 0:
                minimal = False
                break
        if minimal:
            out.append(frozenset(chosen))
    return out


def brute_icep(query) -> bool:
    """Exhaustive check for a minimal extension through the forced-in set S
    and avoiding the forced-out set Q."""
    inst = query.instance
    s_set, q_set = query.s_set, query.q_set
    for d in brute_dir_component(inst):
        if s_set <= d and not (d & q_set):
            return True
    return False


def _component_row(instance, v: int) -> int:
    # closed neighborhood within the component, from the tree order
    poset = instance.poset
    row = 1 << v
    for u in poset.order:
        if u != v and poset.comparable(u, v):
            row |= 1 << u
    return row


def find_irredundant_extension(
    g: Graph,
    cls: Classification,
    a_set: Iterable[int],
    node_budget: int = 2_000_000,
) -> frozenset[int] | None:
    """Search for I inside the irredundant vertices with: A | I dominates
    all irredundant vertices and I steals no member's last irredundant
    private neighbor.  Returns one such I, or None.

    Pruned depth-first set-cover search; exact, exponential in the worst
    case, and intended as ground truth at gadget scale.
    """
    a_sorted = sorted(set(a_set))
    if not set(a_sorted) <= cls.rn:
        raise ValueError("a_set must consist of redundant vertices")
    amask = mask_of(a_sorted)

    priv_masks = []
    for a in a_sorted:
        pm = 0
        for u in g.neighbors(a):
            if cls.comp_of[u] and g.closed_bits(u) & amask == 1 << a:
                pm |= 1 << u
        if pm == 0:
            return None
        priv_masks.append(pm)

    ir_mask = mask_of(cls.ir)
    dominated = 0
    for a in a_sorted:
        dominated |= g.open_bits(a)
    need = ir_mask & ~dominated
    candidates = [u for u in sorted(cls.ir) if g.closed_bits(u) & need]
    rows = {u: g.closed_bits(u) & ir_mask for u in candidates}

    budget = [node_budget]

    def search(covered: int, chosen: tuple[int, ...], banned: frozenset[int]):
        budget[0] -= 1
        if budget[0] < 0:
            raise BudgetExceededError("extension search exceeded its node budget")
        missing = need & ~covered
        if not missing:
            return chosen
        z = next(bits_of(missing))
        for u in candidates:
            if u in banned or not rows[u] & (1 << z):
                continue
            new_cover = covered | rows[u]
            if any(pm & ~new_cover == 0 for pm in priv_masks):
                continue
            got = search(new_cover, chosen + (u,), banned)
            if got is not None:
                return got
            banned = banned | {u}
        return None

    got = search(0, (), frozenset())
    return frozenset(got) if got is not None else None


def brute_drn_member(
    g: Graph, cls: Classification, a_set: Iterable[int], node_budget: int = 2_000_000
) -> bool:
    """Membership of a_set among redundant parts, by extension search."""
    return find_irredundant_extension(g, cls, a_set, node_budget) is not None
