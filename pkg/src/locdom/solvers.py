"""Feasibility predicates and exact minimum solvers for seven
location-domination parameters: domination, total domination, their
locating variants on vertices, and the edge analogues including the weak
variant that exempts edge-twin pairs from location.

All parameters are minimum-cardinality subset problems over the same
skeleton: a ground set (vertices or edges), a covering requirement
(closed neighbourhoods for plain domination, open ones for total), and
optionally a location requirement (elements outside the chosen set must
have pairwise distinct trace on it).  `solve_min` runs iterative deepening
over the subset size k; for each k it enumerates k-subsets in lexicographic
order and returns the first feasible one, so the reported witness is the
lexicographically least optimum and repeated runs are byte-identical.

Two prunes keep the search affordable at census scale.  A branch at
position s dies when some still-uncovered element can only be covered by
ground elements below s, and when the uncovered count exceeds the free
slots times the best single-element coverage.  Location is only checked at
the leaves: it is not monotone along the search path, so interior tests
would be both wrong and wasted work.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable

from .core import Graph, bits
from .errors import InfeasibleError, LocdomError
from .twins import edge_twin_masks


class Parameter(Enum):
    """The seven supported parameters, keyed by their report short names."""

    DOM = "dom"
    TOTAL_DOM = "tdom"
    LOC_DOM = "ld"
    LOC_TOTAL_DOM = "ltd"
    EDGE_LOC_DOM = "eld"
    EDGE_LOC_TOTAL_DOM = "eltd"
    WEAK_EDGE_LOC_DOM = "weld"

    @property
    def short(self) -> str:
        return self.value

    @property
    def on_edges(self) -> bool:
        return self in (
            Parameter.EDGE_LOC_DOM,
            Parameter.EDGE_LOC_TOTAL_DOM,
            Parameter.WEAK_EDGE_LOC_DOM,
        )

    @property
    def total(self) -> bool:
        return self in (Parameter.TOTAL_DOM, Parameter.LOC_TOTAL_DOM, Parameter.EDGE_LOC_TOTAL_DOM)

    @property
    def locating(self) -> bool:
        return self is not Parameter.DOM and self is not Parameter.TOTAL_DOM


_ALIASES = {
    "dom": Parameter.DOM,
    "domination": Parameter.DOM,
    "tdom": Parameter.TOTAL_DOM,
    "total_dom": Parameter.TOTAL_DOM,
    "ld": Parameter.LOC_DOM,
    "loc_dom": Parameter.LOC_DOM,
    "ltd": Parameter.LOC_TOTAL_DOM,
    "loc_total_dom": Parameter.LOC_TOTAL_DOM,
    "eld": Parameter.EDGE_LOC_DOM,
    "edge_loc_dom": Parameter.EDGE_LOC_DOM,
    "eltd": Parameter.EDGE_LOC_TOTAL_DOM,
    "edge_loc_total_dom": Parameter.EDGE_LOC_TOTAL_DOM,
    "weld": Parameter.WEAK_EDGE_LOC_DOM,
    "weak_edge_loc_dom": Parameter.WEAK_EDGE_LOC_DOM,
}

PARAMETER_NAMES = frozenset(_ALIASES)


def parse_parameter(name: "str | Parameter") -> Parameter:
    if isinstance(name, Parameter):
        return name
    try:
        return _ALIASES[name.strip().lower()]
    except KeyError:
        raise LocdomError(
            f"unknown parameter {name!r}; expected one of {sorted(set(_ALIASES))}"
        ) from None


@dataclass(frozen=True)
class SolveResult:
    parameter: Parameter
    value: int
    witness: frozenset[int]
    optimal: bool = True


def _vertex_mask(g: Graph, members: Iterable[int]) -> int:
    mask = 0
    for v in members:
        mask |= 1 << g.check_vertex(v)
    return mask


def _edge_mask(g: Graph, members: Iterable[int]) -> int:
    mask = 0
    for e in members:
        mask |= 1 << g.check_edge(e)
    return mask


def is_dominating(g: Graph, members: Iterable[int]) -> bool:
    """Every vertex outside the set has a neighbour inside it."""
    d = _vertex_mask(g, members)
    return all((g.vadj[v] | (1 << v)) & d for v in range(g.n))


def is_total_dominating(g: Graph, members: Iterable[int]) -> bool:
    """Every vertex of the graph, inside or out, has a neighbour in the set."""
    d = _vertex_mask(g, members)
    return all(g.vadj[v] & d for v in range(g.n))


def is_locating(g: Graph, members: Iterable[int]) -> bool:
    """Vertices outside the set have pairwise distinct neighbour traces on it."""
    d = _vertex_mask(g, members)
    sigs = sorted(g.vadj[v] & d for v in range(g.n) if not (d >> v) & 1)
    return all(a != b for a, b in zip(sigs, sigs[1:]))


def is_edge_dominating(g: Graph, members: Iterable[int]) -> bool:
    """Every edge outside the set shares an endpoint with an edge inside it."""
    d = _edge_mask(g, members)
    return all((g.eadj[e] | (1 << e)) & d for e in range(g.m))


def is_edge_total_dominating(g: Graph, members: Iterable[int]) -> bool:
    """Every edge of the graph is adjacent to an edge of the set."""
    d = _edge_mask(g, members)
    return all(g.eadj[e] & d for e in range(g.m))


def is_edge_locating(g: Graph, members: Iterable[int]) -> bool:
    """Edges outside the set have pairwise distinct adjacency traces on it."""
    d = _edge_mask(g, members)
    sigs = sorted(g.eadj[e] & d for e in range(g.m) if not (d >> e) & 1)
    return all(a != b for a, b in zip(sigs, sigs[1:]))


def is_weak_edge_locating(g: Graph, members: Iterable[int]) -> bool:
    """Like `is_edge_locating`, but pairs of edge-twins may share a trace.

    Edge-twins have equal traces on every possible set, so demanding
    location for them would make the parameter undefined on graphs that
    have twins; the weak variant exempts exactly those pairs.
    """
    d = _edge_mask(g, members)
    twins = edge_twin_masks(g)
    entries = sorted(
        (g.eadj[e] & d, e) for e in range(g.m) if not (d >> e) & 1
    )
    i = 0
    while i < len(entries):
        j = i + 1
        group = 1 << entries[i][1]
        while j < len(entries) and entries[j][0] == entries[i][0]:
            group |= 1 << entries[j][1]
            j += 1
        if j - i > 1:
            for _, e in entries[i:j]:
                if group & ~(twins[e] | (1 << e)):
                    return False
        i = j
    return True


def _predicate_parts(g: Graph, param: Parameter):
    """Covering sets, location adjacency, and twin masks for one parameter."""
    if param.on_edges:
        ground = g.m
        open_adj = g.eadj
    else:
        ground = g.n
        open_adj = g.vadj
    if param.total:
        cover = open_adj
    else:
        cover = tuple(adj | (1 << i) for i, adj in enumerate(open_adj))
    locate_adj = open_adj if param.locating else None
    twins = edge_twin_masks(g) if param is Parameter.WEAK_EDGE_LOC_DOM else None
    return ground, cover, locate_adj, twins


def _check_feasible_at_all(g: Graph, param: Parameter) -> None:
    if param.total and not param.on_edges and g.n:
        if any(adj == 0 for adj in g.vadj):
            raise InfeasibleError(
                "isolated_vertex",
                "infeasible: isolated_vertex (total domination needs every vertex"
                " to have a neighbour)",
            )
    if param.total and param.on_edges and g.m:
        if any(adj == 0 for adj in g.eadj):
            raise InfeasibleError(
                "isolated_edge",
                "infeasible: isolated_edge (edge-total domination needs every edge"
                " to have an adjacent edge)",
            )


def solve_min(g: Graph, parameter: "str | Parameter") -> SolveResult:
    """Exact minimum for one parameter, with the lexicographically least witness.

    Raises InfeasibleError when no set of any size works: total variants on
    graphs with an isolated vertex (respectively isolated edge).  All other
    variants are always feasible (the whole ground set works).
    """
    param = parse_parameter(parameter)
    _check_feasible_at_all(g, param)
    ground, cover, locate_adj, twins = _predicate_parts(g, param)
    size, mask = _minimum_subset(ground, cover, locate_adj, twins)
    return SolveResult(parameter=param, value=size, witness=frozenset(bits(mask)))


def _minimum_subset(ground, cover, locate_adj, twins):
    """Iterative-deepening lexicographic search over the subset lattice."""
    if ground == 0:
        return 0, 0
    full = (1 << ground) - 1

    # need_by[s]: elements whose whole covering set lies strictly below
    # position s; once the scan has passed s without covering them, the
    # branch is dead.
    marks = [0] * (ground + 1)
    for i, c in enumerate(cover):
        marks[c.bit_length()] |= 1 << i
    need_by = [0] * (ground + 1)
    acc = 0
    for s in range(ground + 1):
        acc |= marks[s]
        need_by[s] = acc

    max_cover = max(c.bit_count() for c in cover)

    def locate_ok(d: int) -> bool:
        if twins is None:
            sigs = sorted(locate_adj[i] & d for i in bits(full & ~d))
            return all(a != b for a, b in zip(sigs, sigs[1:]))
        entries = sorted((locate_adj[i] & d, i) for i in bits(full & ~d))
        i = 0
        while i < len(entries):
            j = i + 1
            group = 1 << entries[i][1]
            while j < len(entries) and entries[j][0] == entries[i][0]:
                group |= 1 << entries[j][1]
                j += 1
            if j - i > 1:
                for _, e in entries[i:j]:
                    if group & ~(twins[e] | (1 << e)):
                        return False
            i = j
        return True

    def dfs(start: int, slots: int, covered: int, chosen: int):
        if slots == 0:
            if covered == full and (locate_adj is None or locate_ok(chosen)):
                return chosen
            return None
        if need_by[start] & ~covered:
            return None
        if (full & ~covered).bit_count() > slots * max_cover:
            return None
        for j in range(start, ground - slots + 1):
            hit = dfs(j + 1, slots - 1, covered | cover[j], chosen | (1 << j))
            if hit is not None:
                return hit
        return None

    # Strict location needs ground - k distinct nonempty traces on a k-set,
    # so k-subsets with 2^k - 1 < ground - k cannot work and the deepening
    # can start past them.  Twin exemptions void this bound for the weak
    # variant (a star has weak value 1 at any size).
    first_k = 0
    if locate_adj is not None and twins is None:
        while ground - first_k > (1 << first_k) - 1:
            first_k += 1

    for k in range(first_k, ground + 1):
        hit = dfs(0, k, 0, 0)
        if hit is not None:
            return k, hit
    raise AssertionError("unreachable: the full ground set is always feasible here")
