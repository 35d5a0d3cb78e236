"""Line graph construction with an explicit edge-to-vertex correspondence.

Vertex i of the line graph is edge i of the base graph under the canonical
edge order, so the correspondence is the identity on indices and edge
subsets of the base transfer to vertex subsets of the line graph without
translation.  The map is still carried explicitly because everything that
equates edge parameters of G with vertex parameters of L(G) should state
which bijection it means.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .core import MAX_EDGES, MAX_VERTICES, Graph, bits
from .errors import SizeLimitError


@dataclass(frozen=True)
class LineGraphMap:
    base: Graph
    line: Graph
    edge_to_vertex: tuple[int, ...]


def line_graph(g: Graph) -> LineGraphMap:
    """Build L(g): one vertex per edge, adjacent when the edges share an end.

    Raises SizeLimitError when L(g) overflows the vertex or edge caps
    (dense bases blow up quadratically).
    """
    if g.m > MAX_VERTICES:
        raise SizeLimitError(f"line graph would have {g.m} vertices, cap is {MAX_VERTICES}")
    pairs = []
    for i in range(g.m):
        higher = g.eadj[i] >> (i + 1)
        for off in bits(higher):
            pairs.append((i, i + 1 + off))
    if len(pairs) > MAX_EDGES:
        raise SizeLimitError(f"line graph would have {len(pairs)} edges, cap is {MAX_EDGES}")
    line = Graph._from_canonical(g.m, tuple(pairs))
    return LineGraphMap(base=g, line=line, edge_to_vertex=tuple(range(g.m)))


def transfer_edge_set(lmap: LineGraphMap, members: Iterable[int]) -> frozenset[int]:
    """Map an edge subset of the base graph to a vertex subset of the line graph."""
    out = []
    for e in members:
        lmap.base.check_edge(e)
        out.append(lmap.edge_to_vertex[e])
    return frozenset(out)
