"""Immutable simple graphs with constant-time adjacency tests.

Vertices are the integers 0..n-1 and double as the fixed total order used
for tie-breaking throughout the package.  Besides sorted neighbor lists,
every vertex carries its open and closed neighborhood as an int bitmask,
which keeps neighborhood-inclusion tests and domination checks cheap.
Intended for graphs up to a few tens of thousands of vertices (the bitmask
rows cost O(n^2) bits).
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .errors import GraphFormatError


class Graph:
    """Undirected, simple, loopless graph on vertices 0..n-1."""

    __slots__ = ("n", "m", "_adj", "_adj_sets", "_open_bits", "_closed_bits")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        adj: list[list[int]] = [[] for _ in range(n)]
        seen: set[tuple[int, int]] = set()
        m = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise ValueError(f"duplicate edge ({u}, {v})")
            seen.add(key)
            adj[u].append(v)
            adj[v].append(u)
            m += 1
        self.n = n
        self.m = m
        self._adj = tuple(tuple(sorted(row)) for row in adj)
        self._adj_sets = tuple(frozenset(row) for row in self._adj)
        open_bits = []
        closed_bits = []
        for v in range(n):
            row = 0
            for u in self._adj[v]:
                row |= 1 << u
            open_bits.append(row)
            closed_bits.append(row | (1 << v))
        self._open_bits = tuple(open_bits)
        self._closed_bits = tuple(closed_bits)

    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in self._adj[u]:
                if u < v:
                    yield (u, v)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def adjacent(self, u: int, v: int) -> bool:
        return v in self._adj_sets[u]

    def open_bits(self, v: int) -> int:
        """Open neighborhood of v as a bitmask."""
        return self._open_bits[v]

    def closed_bits(self, v: int) -> int:
        """Closed neighborhood of v as a bitmask."""
        return self._closed_bits[v]

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def bits_of(mask: int) -> Iterator[int]:
    """Yield the set bit positions of a mask in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def closed_neighborhood(g: Graph, x: int) -> frozenset[int]:
    """N[x], i.e. the neighbors of x together with x itself."""
    return frozenset(g.neighbors(x)) | {x}


def dominates(g: Graph, d: Iterable[int], x: Iterable[int]) -> bool:
    """True iff every vertex of x lies in the closed neighborhood of d."""
    cover = 0
    for v in d:
        cover |= g.closed_bits(v)
    return mask_of(x) & ~cover == 0


def connected_components(g: Graph, restrict: Iterable[int] | None = None) -> list[frozenset[int]]:
    """Components of the subgraph induced on `restrict`, ordered by minimum vertex."""
    if restrict is None:
        live = set(g.vertices())
    else:
        live = set(restrict)
    comps = []
    unseen = sorted(live)
    seen: set[int] = set()
    for start in unseen:
        if start in seen:
            continue
        comp = {start}
        seen.add(start)
        queue = [start]
        while queue:
            v = queue.pop()
            for u in g.neighbors(v):
                if u in live and u not in seen:
                    seen.add(u)
                    comp.add(u)
                    queue.append(u)
        comps.append(frozenset(comp))
    return comps


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return False
    return len(connected_components(g)) == 1


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
    """Subgraph on `vertices` with fresh 0-based labels.

    Returns the subgraph and the list mapping new labels to original ones.
    """
    verts = sorted(set(vertices))
    index = {v: i for i, v in enumerate(verts)}
    edges = []
    for v in verts:
        for u in g.neighbors(v):
            if u > v and u in index:
                edges.append((index[v], index[u]))
    return Graph(len(verts), edges), verts


def parse_graph(text: bytes | str) -> Graph:
    """Parse DIMACS edge format or the plain 0-indexed format.

    DIMACS: optional ``c`` comment lines, one ``p edge <n> <m>`` header and
    m lines ``e <u> <v>`` with 1-indexed endpoints.  Plain: a ``<n> <m>``
    header followed by m lines ``<u> <v>``, 0-indexed.
    """
    if isinstance(text, bytes):
        text = text.decode("ascii")
    lines = text.splitlines()
    header = None
    dimacs = False
    start = 0
    for i, raw in enumerate(lines):
        s = raw.strip()
        if not s or s.startswith("c"):
            continue
        parts = s.split()
        if parts[0] == "p":
            if len(parts) != 4 or parts[1] != "edge":
                raise GraphFormatError("malformed DIMACS header", line=i + 1)
            dimacs = True
        else:
            if len(parts) != 2:
                raise GraphFormatError("malformed header, expected '<n> <m>'", line=i + 1)
            parts = ["p", "edge", parts[0], parts[1]]
        try:
            n, m = int(parts[2]), int(parts[3])
        except ValueError:
            raise GraphFormatError("non-integer vertex/edge count", line=i + 1) from None
        if n < 0 or m < 0:
            raise GraphFormatError("negative vertex/edge count", line=i + 1)
        header = (n, m)
        start = i + 1
        break
    if header is None:
        raise GraphFormatError("missing header line")
    n, m = header
    shift = 1 if dimacs else 0
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for i in range(start, len(lines)):
        s = lines[i].strip()
        if not s or s.startswith("c"):
            continue
        parts = s.split()
        if dimacs:
            if parts[0] != "e" or len(parts) != 3:
                raise GraphFormatError("expected 'e <u> <v>'", line=i + 1)
            su, sv = parts[1], parts[2]
        else:
            if len(parts) != 2:
                raise GraphFormatError("expected '<u> <v>'", line=i + 1)
            su, sv = parts[0], parts[1]
        try:
            u, v = int(su) - shift, int(sv) - shift
        except ValueError:
            raise GraphFormatError("non-integer endpoint", line=i + 1) from None
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"vertex out of range in edge ({su}, {sv})", line=i + 1)
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {su}", line=i + 1)
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise GraphFormatError(f"duplicate edge ({su}, {sv})", line=i + 1)
        seen.add(key)
        edges.append((u, v))
    if len(edges) != m:
        raise GraphFormatError(f"header announces {m} edges, found {len(edges)}")
    return Graph(n, edges)


def serialize_dimacs(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.m}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def serialize_plain(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"
