"""Simple undirected graphs with canonical edge indexing and bitset adjacency.

Vertices are the integers 0..n-1.  Edges are normalised to (u, v) with u < v
and stored sorted lexicographically; the position of an edge in that tuple is
its canonical index, and every other module (solvers, codecs, reports) refers
to edges by that index.  Adjacency is precomputed three ways as Python ints
used as bitsets: neighbour mask per vertex, incident-edge mask per vertex,
and adjacent-edge mask per edge.  Feasibility loops elsewhere then reduce to
integer AND/OR, which is what keeps exhaustive runs affordable.

Caps: at most 64 vertices and 128 edges.  Beyond that the bitset tricks stop
paying for themselves and exact solving is hopeless anyway.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import (
    DuplicateEdgeError,
    EdgeRangeError,
    SelfLoopError,
    SizeLimitError,
    VertexRangeError,
)

MAX_VERTICES = 64
MAX_EDGES = 128


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Immutable simple graph with canonical edge order."""

    __slots__ = ("n", "edges", "vadj", "vinc", "eadj", "_index")

    def __init__(self, n: int, pairs: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise VertexRangeError(f"vertex count must be non-negative, got {n}")
        if n > MAX_VERTICES:
            raise SizeLimitError(f"at most {MAX_VERTICES} vertices supported, got {n}")
        seen: set[tuple[int, int]] = set()
        norm: list[tuple[int, int]] = []
        for u, v in pairs:
            if u == v:
                raise SelfLoopError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise VertexRangeError(f"edge ({u}, {v}) outside vertex range [0, {n})")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise DuplicateEdgeError(f"duplicate edge {e}")
            seen.add(e)
            norm.append(e)
        if len(norm) > MAX_EDGES:
            raise SizeLimitError(f"at most {MAX_EDGES} edges supported, got {len(norm)}")
        norm.sort()
        self._fill(n, tuple(norm))

    @classmethod
    def _from_canonical(cls, n: int, edges: tuple[tuple[int, int], ...]) -> "Graph":
        """Fast path for callers that already hold a sorted, validated edge tuple."""
        g = object.__new__(cls)
        g._fill(n, edges)
        return g

    def _fill(self, n: int, edges: tuple[tuple[int, int], ...]) -> None:
        self.n = n
        self.edges = edges
        self._index = {e: i for i, e in enumerate(edges)}
        vadj = [0] * n
        vinc = [0] * n
        for i, (u, v) in enumerate(edges):
            vadj[u] |= 1 << v
            vadj[v] |= 1 << u
            vinc[u] |= 1 << i
            vinc[v] |= 1 << i
        self.vadj = tuple(vadj)
        self.vinc = tuple(vinc)
        self.eadj = tuple(
            (vinc[u] | vinc[v]) & ~(1 << i) for i, (u, v) in enumerate(edges)
        )

    @property
    def m(self) -> int:
        return len(self.edges)

    def check_vertex(self, v: int) -> int:
        if not (0 <= v < self.n):
            raise VertexRangeError(f"vertex {v} outside range [0, {self.n})")
        return v

    def check_edge(self, e: int) -> int:
        if not (0 <= e < self.m):
            raise EdgeRangeError(f"edge index {e} outside range [0, {self.m})")
        return e

    def degree(self, v: int) -> int:
        return self.vadj[self.check_vertex(v)].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        self.check_vertex(u)
        self.check_vertex(v)
        return (self.vadj[u] >> v) & 1 == 1

    def edge_id(self, u: int, v: int) -> int:
        """Canonical index of the edge {u, v}."""
        self.check_vertex(u)
        self.check_vertex(v)
        key = (u, v) if u < v else (v, u)
        try:
            return self._index[key]
        except KeyError:
            raise EdgeRangeError(f"no edge {key} in graph") from None

    def endpoints(self, e: int) -> tuple[int, int]:
        return self.edges[self.check_edge(e)]

    def open_neighborhood(self, v: int) -> frozenset[int]:
        return frozenset(bits(self.vadj[self.check_vertex(v)]))

    def closed_neighborhood(self, v: int) -> frozenset[int]:
        return frozenset(bits(self.vadj[self.check_vertex(v)] | (1 << v)))

    def edge_neighborhood(self, e: int) -> frozenset[int]:
        """Indices of edges sharing exactly one endpoint with edge e."""
        return frozenset(bits(self.eadj[self.check_edge(e)]))

    def closed_edge_neighborhood(self, e: int) -> frozenset[int]:
        return frozenset(bits(self.eadj[self.check_edge(e)] | (1 << e)))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph({self.n}, {list(self.edges)})"


@dataclass(frozen=True)
class StructuralSummary:
    """Connectivity and shape facts used as theorem preconditions."""

    degrees: tuple[int, ...]
    components: tuple[frozenset[int], ...]
    has_isolated_vertex: bool
    isolated_edges: frozenset[int]
    girth: int | None
    diameters: tuple[int, ...]
    is_connected: bool
    is_forest: bool
    is_tree: bool


def _component_masks(g: Graph) -> list[int]:
    out = []
    left = (1 << g.n) - 1
    while left:
        start = left & -left
        seen = start
        frontier = start
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= g.vadj[v]
            frontier = nxt & ~seen
            seen |= frontier
        out.append(seen)
        left &= ~seen
    return out


def is_connected(g: Graph) -> bool:
    """True when g has at most one component (vacuously for n = 0)."""
    if g.n <= 1:
        return True
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= g.vadj[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == (1 << g.n) - 1


def _bfs_dist(g: Graph, root: int) -> list[int]:
    dist = [-1] * g.n
    dist[root] = 0
    queue = [root]
    for v in queue:
        dv = dist[v]
        for w in bits(g.vadj[v]):
            if dist[w] < 0:
                dist[w] = dv + 1
                queue.append(w)
    return dist


def _girth(g: Graph) -> int | None:
    best: int | None = None
    for root in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[root] = 0
        queue = [root]
        for v in queue:
            for w in bits(g.vadj[v]):
                if dist[w] < 0:
                    dist[w] = dist[v] + 1
                    parent[w] = v
                    queue.append(w)
                elif w != parent[v]:
                    cand = dist[v] + dist[w] + 1
                    if best is None or cand < best:
                        best = cand
        if best == 3:
            break  # nothing shorter exists in a simple graph
    return best


def structural_summary(g: Graph) -> StructuralSummary:
    degrees = tuple(mask.bit_count() for mask in g.vadj)
    comp_masks = _component_masks(g)
    components = tuple(frozenset(bits(mask)) for mask in comp_masks)
    isolated_edges = frozenset(
        i for i, (u, v) in enumerate(g.edges) if degrees[u] == 1 and degrees[v] == 1
    )
    diameters = []
    for mask in comp_masks:
        ecc = 0
        for v in bits(mask):
            ecc = max(ecc, max(d for d in _bfs_dist(g, v) if d >= 0))
        diameters.append(ecc)
    girth = _girth(g)
    connected = len(comp_masks) <= 1
    forest = girth is None
    return StructuralSummary(
        degrees=degrees,
        components=components,
        has_isolated_vertex=any(d == 0 for d in degrees),
        isolated_edges=isolated_edges,
        girth=girth,
        diameters=tuple(diameters),
        is_connected=connected,
        is_forest=forest,
        is_tree=connected and forest and g.m == g.n - 1,
    )


def delete_edges(g: Graph, drop: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Remove the given edge indices; also return the old-to-new index map.

    Deletion preserves the relative lexicographic order of the surviving
    edges, so the map is just each survivor's rank among survivors.
    """
    drop_mask = 0
    for e in drop:
        drop_mask |= 1 << g.check_edge(e)
    kept = tuple(e for i, e in enumerate(g.edges) if not (drop_mask >> i) & 1)
    mapping: dict[int, int] = {}
    new = 0
    for i in range(g.m):
        if not (drop_mask >> i) & 1:
            mapping[i] = new
            new += 1
    return Graph._from_canonical(g.n, kept), mapping
