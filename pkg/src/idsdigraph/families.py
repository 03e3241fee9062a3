"""Structural classification and per-family constructive solvers.

All solvers here run in polynomial time and never consult the exhaustive
oracle, except :func:`solve_dispatch` which falls back to it for digraphs
outside every known family.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from typing import Optional

from . import oracle
from .digraph import Digraph, VertexSet, bits, is_orientation, topological_order
from .errors import NotInFamily, NotOrientation

__all__ = [
    "FAMILIES",
    "FamilyTags",
    "Status",
    "SolveOutcome",
    "classify",
    "two_coloring",
    "solve_tournament",
    "solve_directed_path",
    "solve_oriented_path",
    "solve_dag_greedy",
    "solve_oriented_tree",
    "solve_arborescence",
    "solve_anti_arborescence",
    "solve_directed_cycle",
    "solve_oriented_cycle",
    "solve_bipartite",
    "solve_dispatch",
]

FAMILIES = (
    "orientation",
    "tournament",
    "directed_path",
    "oriented_path",
    "oriented_tree",
    "arborescence",
    "anti_arborescence",
    "dag",
    "directed_cycle",
    "oriented_cycle",
    "bipartite",
    "complete_bipartite_directed",
)


@dataclass(frozen=True)
class FamilyTags:
    flags: frozenset

    def __contains__(self, name) -> bool:
        return name in self.flags

    def __iter__(self):
        return (f for f in FAMILIES if f in self.flags)

    def __len__(self):
        return len(self.flags)


class Status(enum.Enum):
    FOUND = "found"
    NONE_EXISTS = "none"
    NOT_IN_FAMILY = "not-in-family"


@dataclass(frozen=True)
class SolveOutcome:
    """Result of a solver.

    ``set`` is populated only for ``Status.FOUND``; ``reason`` explains a
    ``NONE_EXISTS``.  ``both_sets`` is only filled in for directed even
    cycles, which have exactly two independent dominating sets.
    """

    status: Status
    set: Optional[VertexSet] = None
    reason: str = ""
    route: str = ""
    both_sets: Optional[tuple] = None

    @property
    def found(self) -> bool:
        return self.status is Status.FOUND


def _found(mask, route, both=None):
    return SolveOutcome(Status.FOUND, VertexSet.from_mask(mask), route=route, both_sets=both)


def _none(reason, route):
    return SolveOutcome(Status.NONE_EXISTS, reason=reason, route=route)


# --- structural predicates -------------------------------------------------

def _undirected_masks(D: Digraph):
    return [D.out_mask[v] | D.in_mask[v] for v in range(D.n)]


def _components(adj, n):
    seen = 0
    comps = []
    for s in range(n):
        if seen >> s & 1:
            continue
        comp = 1 << s
        frontier = 1 << s
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= adj[v]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        comps.append(comp)
    return comps


def _edge_count(adj):
    return sum(bin(m).count("1") for m in adj) // 2


def two_coloring(D: Digraph, within: Optional[int] = None) -> Optional[tuple]:
    """2-colour the underlying graph of ``D`` restricted to bitmask ``within``.

    Each component is coloured by BFS from its smallest vertex, which gets
    colour 0.  Returns ``(colour0_mask, colour1_mask)`` or None when the
    underlying graph is not bipartite.
    """
    within = (1 << D.n) - 1 if within is None else within
    adj = _undirected_masks(D)
    color = {}
    for s in bits(within):
        if s in color:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in bits(adj[u] & within):
                if w not in color:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return None
    side0 = sum(1 << v for v, c in color.items() if c == 0)
    return side0, within & ~side0


def _is_tournament(D):
    return D.n >= 1 and is_orientation(D) and len(D.arcs) == D.n * (D.n - 1) // 2


def _is_forest(D):
    if not is_orientation(D):
        return False
    adj = _undirected_masks(D)
    return len(D.arcs) == D.n - len(_components(adj, D.n))


def _is_tree(D):
    return D.n >= 1 and len(D.arcs) == D.n - 1 and _is_forest(D)


def _is_oriented_path(D):
    return _is_tree(D) and all(len(D.out_adj[v]) + len(D.in_adj[v]) <= 2 for v in range(D.n))


def _is_directed_path(D):
    return _is_oriented_path(D) and all(
        len(D.out_adj[v]) <= 1 and len(D.in_adj[v]) <= 1 for v in range(D.n)
    )


def _is_arborescence(D):
    if not _is_tree(D):
        return False
    indeg = [len(a) for a in D.in_adj]
    return indeg.count(0) == 1 and all(d <= 1 for d in indeg)


def _is_anti_arborescence(D):
    if not _is_tree(D):
        return False
    outdeg = [len(a) for a in D.out_adj]
    return outdeg.count(0) == 1 and all(d <= 1 for d in outdeg)


def _is_oriented_cycle(D):
    if D.n < 3 or not is_orientation(D) or len(D.arcs) != D.n:
        return False
    adj = _undirected_masks(D)
    return all(bin(m).count("1") == 2 for m in adj) and len(_components(adj, D.n)) == 1


def _is_directed_cycle(D):
    return _is_oriented_cycle(D) and all(len(D.out_adj[v]) == 1 for v in range(D.n))


def _is_complete_bipartite_directed(D):
    if D.n < 2:
        return False
    x = sum(1 << v for v in range(D.n) if not D.in_mask[v])
    y = ((1 << D.n) - 1) & ~x
    if not x or not y:
        return False
    return all(D.out_mask[v] == y for v in bits(x)) and all(
        D.in_mask[v] == x and not D.out_mask[v] for v in bits(y)
    )


def classify(D: Digraph) -> FamilyTags:
    tags = set()
    if is_orientation(D):
        tags.add("orientation")
    if _is_tournament(D):
        tags.add("tournament")
    if topological_order(D) is not None:
        tags.add("dag")
    if _is_tree(D):
        tags.add("oriented_tree")
        if _is_oriented_path(D):
            tags.add("oriented_path")
        if _is_directed_path(D):
            tags.add("directed_path")
        if _is_arborescence(D):
            tags.add("arborescence")
        if _is_anti_arborescence(D):
            tags.add("anti_arborescence")
    if _is_oriented_cycle(D):
        tags.add("oriented_cycle")
        if _is_directed_cycle(D):
            tags.add("directed_cycle")
    if two_coloring(D) is not None:
        tags.add("bipartite")
    if _is_complete_bipartite_directed(D):
        tags.add("complete_bipartite_directed")
    return FamilyTags(frozenset(tags))


def _require(ok, family):
    if not ok:
        raise NotInFamily(f"digraph is not a {family.replace('_', ' ')}")


# --- solvers ---------------------------------------------------------------

def solve_tournament(D: Digraph) -> SolveOutcome:
    """A tournament has an IDS iff some vertex beats every other one; it is then unique."""
    _require(_is_tournament(D), "tournament")
    for v in range(D.n):
        if len(D.out_adj[v]) == D.n - 1:
            return _found(1 << v, "tournament")
    return _none("no-dominating-vertex", "tournament")


def _path_order(D, start):
    order = [start]
    while D.out_adj[order[-1]]:
        order.append(D.out_adj[order[-1]][0])
    return order


def solve_directed_path(D: Digraph) -> SolveOutcome:
    _require(_is_directed_path(D), "directed_path")
    source = next(v for v in range(D.n) if not D.in_mask[v])
    order = _path_order(D, source)
    return _found(sum(1 << v for v in order[::2]), "directed_path")


def solve_dag_greedy(D: Digraph) -> SolveOutcome:
    """Scan a topological order; take a vertex iff none of its in-neighbours was taken.

    This is the sink-removal recursion run forwards: every vertex skipped
    has a taken in-neighbour, and no taken vertex has a taken in-neighbour.
    """
    order = topological_order(D)
    _require(order is not None, "dag")
    chosen = 0
    inn = D.in_mask
    for v in order:
        if not inn[v] & chosen:
            chosen |= 1 << v
    return _found(chosen, "dag")


def solve_oriented_path(D: Digraph) -> SolveOutcome:
    _require(_is_oriented_path(D), "oriented_path")
    return _with_route(solve_dag_greedy(D), "oriented_path")


def solve_oriented_tree(D: Digraph) -> SolveOutcome:
    """Oriented trees and forests are acyclic, so the DAG greedy applies."""
    _require(_is_forest(D), "oriented_tree")
    return _with_route(solve_dag_greedy(D), "oriented_tree")


def solve_arborescence(D: Digraph) -> SolveOutcome:
    """The unique IDS of an out-tree: vertices at even depth below the root."""
    _require(_is_arborescence(D), "arborescence")
    root = next(v for v in range(D.n) if not D.in_mask[v])
    depth = {root: 0}
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for w in D.out_adj[u]:
            depth[w] = depth[u] + 1
            queue.append(w)
    return _found(sum(1 << v for v, d in depth.items() if d % 2 == 0), "arborescence")


def solve_anti_arborescence(D: Digraph) -> SolveOutcome:
    _require(_is_anti_arborescence(D), "anti_arborescence")
    return _with_route(solve_dag_greedy(D), "anti_arborescence")


def solve_directed_cycle(D: Digraph) -> SolveOutcome:
    """Even directed cycles have exactly two IDS (alternate positions); odd ones have none.

    Positions are counted along the cycle starting from vertex 0.
    """
    _require(_is_directed_cycle(D), "directed_cycle")
    if D.n % 2:
        return _none("directed-odd-cycle", "directed_cycle")
    order = [0]
    while len(order) < D.n:
        order.append(D.out_adj[order[-1]][0])
    even = sum(1 << v for v in order[0::2])
    odd = sum(1 << v for v in order[1::2])
    both = (VertexSet.from_mask(even), VertexSet.from_mask(odd))
    return _found(even, "directed_cycle", both)


def solve_oriented_cycle(D: Digraph) -> SolveOutcome:
    """Any oriented cycle other than a directed one is acyclic as a digraph."""
    _require(_is_oriented_cycle(D), "oriented_cycle")
    if _is_directed_cycle(D):
        return solve_directed_cycle(D)
    return _with_route(solve_dag_greedy(D), "oriented_cycle")


def solve_bipartite(D: Digraph) -> SolveOutcome:
    """Peel in-degree-zero vertices, then take a colour class of what is left.

    While the remaining subdigraph has a vertex of in-degree zero, the
    smallest such ``v`` joins the answer and ``N⁺[v]`` is deleted.  Once every
    remaining vertex has an in-neighbour, each colour class of the remainder
    dominates the other; the class holding the smallest id of each
    component is taken.
    """
    _require(is_orientation(D), "orientation")
    _require(two_coloring(D) is not None, "bipartite")
    remaining = (1 << D.n) - 1
    chosen = 0
    inn, out = D.in_mask, D.out_mask
    while remaining:
        v = next((u for u in bits(remaining) if not inn[u] & remaining), None)
        if v is None:
            side0, _ = two_coloring(D, remaining)
            chosen |= side0
            break
        chosen |= 1 << v
        remaining &= ~((1 << v) | out[v])
    return _found(chosen, "bipartite")


def solve_dispatch(D: Digraph) -> SolveOutcome:
    """Route to the first applicable family solver.

    Priority: tournament, (directed or oriented) cycle, DAG, bipartite.
    Anything else goes to the exhaustive oracle when ``n <= 32``.

    Raises
    ------
    NotOrientation
        If ``D`` contains a digon.
    """
    if not is_orientation(D):
        raise NotOrientation("digraph contains a digon; solvers require an orientation")
    if _is_tournament(D):
        return solve_tournament(D)
    if _is_oriented_cycle(D):
        return solve_oriented_cycle(D)
    if topological_order(D) is not None:
        return solve_dag_greedy(D)
    if two_coloring(D) is not None:
        return solve_bipartite(D)
    if D.n <= oracle.MAX_ORACLE_N:
        first = next(oracle.iter_ids(D), None)
        if first is None:
            return _none("exhaustive-search", "oracle")
        return _found(first, "oracle")
    return SolveOutcome(Status.NOT_IN_FAMILY, reason="no polynomial family applies", route="none")


def _with_route(outcome, route):
    return SolveOutcome(outcome.status, outcome.set, outcome.reason, route, outcome.both_sets)
