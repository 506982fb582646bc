"""Shared randomized-fixture builders for the extension-problem tests.

Generated instances mirror the shapes the enumeration engine produces:
every strict ancestor of a constrained (X) vertex is itself constrained or
already dominated, and forced-in/forced-out sets split a prefix of the
depth-ordered component scan.
"""

from domdelay.generators import split_stream
from domdelay.graph import Graph
from domdelay.irext import IcepQuery, component_scan_order
from domdelay.recognition import build_tree_poset
from domdelay.rnenum import ExtensionInstance


def random_tree_poset(rng, max_size=12, min_size=2):
    size = min_size + rng.randrange(max_size - min_size + 1)
    parent = [None] * size
    edges = []
    anc = [[] for _ in range(size)]
    for v in range(1, size):
        p = rng.randrange(v)
        parent[v] = p
        anc[v] = anc[p] + [p]
        for a in anc[v]:
            edges.append((a, v))
    g = Graph(size, edges)
    return build_tree_poset(g)


def random_extension_instance(seed, max_size=12):
    """Instance with random X sets, X-ancestors forced out of Z."""
    rng = split_stream(0x1EB, seed)
    poset = random_tree_poset(rng, max_size)
    verts = list(poset.order)
    x_all = {v for v in verts if rng.random() < 0.3}
    y = set()
    for v in x_all:
        y.update(a for a in poset.strict_ancestors(v) if a not in x_all)
    for v in verts:
        if v not in x_all and v not in y and rng.random() < 0.2:
            y.add(v)
    x_list = sorted(x_all)
    rng.shuffle(x_list)
    parts = []
    while x_list:
        k = 1 + rng.randrange(min(3, len(x_list)))
        parts.append(frozenset(x_list[:k]))
        x_list = x_list[k:]
    return ExtensionInstance(poset, parts, frozenset(y)), rng


def random_icep_query(seed, max_size=12):
    inst, rng = random_extension_instance(seed, max_size)
    order = component_scan_order(inst.poset)
    prefix = rng.randrange(len(order) + 1)
    s, q = set(), set()
    for v in order[:prefix]:
        (s if rng.random() < 0.4 else q).add(v)
    return IcepQuery.build(inst, frozenset(s), frozenset(q))
