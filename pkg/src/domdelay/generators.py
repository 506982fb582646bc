"""Seeded instance generators and the exhaustive small-graph corpus.

All randomness flows through SplitMix64 so corpora are bit-identical
across platforms and interpreter versions.  Streams are split per graph
index, so corpus entry i never depends on how entries 0..i-1 consumed
their generators.
"""

from __future__ import annotations

import itertools
from typing import Iterator

from .errors import BudgetExceededError
from .graph import Graph
from .recognition import is_pk_free

_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15


class SplitMix64:
    """64-bit SplitMix generator; tiny, fast and platform-stable."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + _GAMMA) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def randrange(self, n: int) -> int:
        if n <= 0:
            raise ValueError("empty range")
        # rejection sampling keeps the stream unbiased
        limit = _MASK64 - (_MASK64 + 1) % n
        while True:
            v = self.next_u64()
            if v <= limit:
                return v % n

    def random(self) -> float:
        return self.next_u64() / (_MASK64 + 1)

    def choice(self, seq):
        return seq[self.randrange(len(seq))]

    def sample(self, seq, k: int) -> list:
        pool = list(seq)
        if k > len(pool):
            raise ValueError("sample larger than population")
        for i in range(k):
            j = i + self.randrange(len(pool) - i)
            pool[i], pool[j] = pool[j], pool[i]
        return pool[:k]

    def shuffle(self, seq: list) -> None:
        for i in range(len(seq) - 1, 0, -1):
            j = self.randrange(i + 1)
            seq[i], seq[j] = seq[j], seq[i]


def split_stream(seed: int, index: int) -> SplitMix64:
    """Independent subgenerator for the index-th item of a seeded corpus."""
    mixer = SplitMix64(seed ^ ((index + 1) * _GAMMA))
    return SplitMix64(mixer.next_u64())


def gen_chordal(n: int, density: float = 0.5, seed: int = 0) -> Graph:
    """Random connected chordal graph via a perfect-elimination construction.

    Vertex v > 0 attaches to a non-empty random subset of a randomly chosen
    clique among the earlier vertices, so the reverse vertex order is a
    perfect elimination order by construction.
    """
    if n < 1:
        raise ValueError("n must be positive")
    rng = SplitMix64(seed)
    cliques: list[list[int]] = [[0]]
    edges: list[tuple[int, int]] = []
    for v in range(1, n):
        i = rng.randrange(len(cliques))
        base = cliques[i]
        chosen = [u for u in base if rng.random() < density]
        if not chosen:
            chosen = [base[rng.randrange(len(base))]]
        edges.extend((u, v) for u in chosen)
        if len(chosen) == len(base):
            cliques[i] = chosen + [v]  # the sampled clique grew whole
        else:
            cliques.append(chosen + [v])
    return Graph(n, edges)


def gen_pk_free_chordal(n: int, k: int, seed: int = 0, attempts: int = 3000) -> Graph:
    """Connected chordal Pk-free graph, k in {6, 7, 8, 9}.

    Small instances (n <= 40) are rejection-sampled from gen_chordal
    through the exact recognizer.  Larger instances are built
    constructively: irredundant cores that are cliques (k = 7) or shallow
    tree-order components (k >= 8), plus redundant vertices attached as
    closed-neighborhood-superset twins.
    """
    if k not in (6, 7, 8, 9):
        raise ValueError("k must be one of 6, 7, 8, 9")
    if n < 1:
        raise ValueError("n must be positive")
    if n <= 40:
        for attempt in range(attempts):
            rng = split_stream(seed, attempt)
            density = 0.3 + 0.6 * rng.random()
            g = gen_chordal(n, density, rng.next_u64())
            if is_pk_free(g, k):
                return g
        raise BudgetExceededError(
            f"no P{k}-free chordal graph with n={n} found in {attempts} attempts"
        )
    if k == 6:
        return _constructive_p6_free(n, seed)
    if k == 7:
        return _constructive_p7_free(n, seed)
    return _constructive_p8_free(n, seed)


def _constructive_p6_free(n: int, seed: int) -> Graph:
    # one hub vertex, pendant arms, one pendant clique per arm
    rng = SplitMix64(seed)
    edges = []
    hub = 0
    next_v = 1
    while next_v < n:
        arm = next_v
        edges.append((hub, arm))
        next_v += 1
        size = min(1 + rng.randrange(3), n - next_v)
        clique = list(range(next_v, next_v + size))
        next_v += size
        for i, u in enumerate(clique):
            edges.append((arm, u))
            for w in clique[i + 1 :]:
                edges.append((u, w))
    return Graph(n, edges)


def _constructive_p7_free(n: int, seed: int) -> Graph:
    """Hub clique, arms on hub vertices, one pendant clique per arm.

    Longest induced paths run leaf-arm-hub-hub-arm-leaf (six vertices), the
    hub and the pendant-clique minima are the irredundant part, and arms
    plus clique twins are redundant.  Hub size ~ sqrt(n) keeps the edge
    count linear in n and the maximum degree O(sqrt(n)).
    """
    rng = SplitMix64(seed)
    t = max(3, round(0.5 * n**0.5))
    edges = [(i, j) for i in range(t) for j in range(i + 1, t)]
    next_v = t
    hub_cycle = itertools.cycle(range(t))
    while next_v < n:
        arm = next_v
        edges.append((next(hub_cycle), arm))
        next_v += 1
        want = 2 + rng.randrange(6)
        size = min(want, n - next_v)
        clique = list(range(next_v, next_v + size))
        next_v += size
        for i, u in enumerate(clique):
            edges.append((arm, u))
            for w in clique[i + 1 :]:
                edges.append((u, w))
    return Graph(n, edges)


def _constructive_p8_free(n: int, seed: int) -> Graph:
    """Hub clique plus star gadgets; irredundant components are stars.

    Each gadget contributes a spoke u adjacent to the whole hub, a
    redundant bridge a, and a pendant clique that keeps the bridge
    redundant.  The spokes with the lowest-index hub vertex form a star
    component in the subgraph induced on irredundant vertices, so paths up
    to P7 occur but no P8.
    """
    rng = SplitMix64(seed)
    t = max(3, round(0.5 * n**0.5))
    edges = [(i, j) for i in range(t) for j in range(i + 1, t)]
    next_v = t
    while next_v < n:
        remaining = n - next_v
        if remaining < 3:
            # too few vertices for a gadget: grow the last pendant clique
            for v in range(next_v, n):
                edges.append((prev_bridge, v))
                for u in prev_clique:
                    edges.append((u, v))
                prev_clique.append(v)
            next_v = n
            break
        spoke = next_v
        bridge = next_v + 1
        for h in range(t):
            edges.append((h, spoke))
        edges.append((spoke, bridge))
        next_v += 2
        want = 1 + rng.randrange(4)
        size = min(want, n - next_v)
        clique = list(range(next_v, next_v + size))
        next_v += size
        for i, u in enumerate(clique):
            edges.append((bridge, u))
            for w in clique[i + 1 :]:
                edges.append((u, w))
        prev_bridge, prev_clique = bridge, clique
    return Graph(n, edges)


def exhaustive_corpus(n_max: int) -> Iterator[Graph]:
    """All connected graphs with up to n_max vertices, one per isomorphism class.

    Canonical augmentation: graphs on k+1 vertices arise from connected
    graphs on k vertices by attaching a new vertex with a non-empty
    neighborhood, deduplicated by a canonical form (color refinement
    followed by the minimum adjacency encoding over color-preserving
    relabelings).
    """
    if n_max < 1 or n_max > 7:
        raise ValueError("n_max must be between 1 and 7")
    level: dict[int, int] = {0: 0}  # canonical edge mask -> edge mask, n = 1
    yield Graph(1, [])
    for n in range(2, n_max + 1):
        nxt: dict[int, tuple] = {}
        for mask in level.values():
            for attach in range(1, 1 << (n - 1)):
                new_mask = mask
                for u in range(n - 1):
                    if (attach >> u) & 1:
                        new_mask |= 1 << _edge_index(u, n - 1)
                key = _canonical_key(n, new_mask)
                if key not in nxt:
                    nxt[key] = new_mask
        level = dict(nxt)
        for key in sorted(level):
            yield _graph_from_mask(n, level[key])


def _edge_index(u: int, v: int) -> int:
    if u > v:
        u, v = v, u
    return v * (v - 1) // 2 + u


def _graph_from_mask(n: int, mask: int) -> Graph:
    edges = []
    for v in range(n):
        for u in range(v):
            if (mask >> _edge_index(u, v)) & 1:
                edges.append((u, v))
    return Graph(n, edges)


def _canonical_key(n: int, mask: int) -> int:
    adj = [0] * n
    for v in range(n):
        for u in range(v):
            if (mask >> _edge_index(u, v)) & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
    # color refinement, then minimize over color-preserving relabelings
    colors = [adj[v].bit_count() for v in range(n)]
    for _ in range(n):
        sigs = sorted(
            (colors[v], tuple(sorted(colors[u] for u in range(n) if (adj[v] >> u) & 1)), v)
            for v in range(n)
        )
        new_colors = [0] * n
        cur = 0
        for i, (c, s, v) in enumerate(sigs):
            if i and (c, s) != (sigs[i - 1][0], sigs[i - 1][1]):
                cur += 1
            new_colors[v] = cur
        if new_colors == colors:
            break
        colors = new_colors
    classes: dict[int, list[int]] = {}
    for v in range(n):
        classes.setdefault(colors[v], []).append(v)
    ordered_classes = [classes[c] for c in sorted(classes)]
    best = None
    for perm_parts in itertools.product(*(itertools.permutations(cls) for cls in ordered_classes)):
        relabel = [v for part in perm_parts for v in part]
        position = [0] * n
        for i, v in enumerate(relabel):
            position[v] = i
        key = 0
        for v in range(n):
            for u in range(v):
                if (mask >> _edge_index(u, v)) & 1:
                    key |= 1 << _edge_index(position[u], position[v])
        if best is None or key < best:
            best = key
    return best
