"""Orientation constructors and small-graph generators."""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Iterator

from .digraph import Digraph, UGraph, as_vertex_set
from .errors import BadSpec, NotUndirectedIds, TooManyEdges, TrivialGraph
from .verify import is_undirected_ids

__all__ = [
    "MAX_ORIENT_EDGES",
    "GeneratorSpec",
    "orient_away",
    "orient_toward",
    "orientation",
    "enumerate_orientations",
    "gen_base",
    "gen_directed",
    "prufer_decode",
    "prufer_sequence",
    "tree_count",
]

MAX_ORIENT_EDGES = 30
KINDS = ("path", "cycle", "complete", "complete_bipartite", "labeled_tree")


@dataclass(frozen=True)
class GeneratorSpec:
    """What :func:`gen_base` should build.

    ``sizes`` is ``(n,)`` for path/cycle/complete, ``(m, n)`` for
    complete_bipartite and ``(n, index)`` for labeled_tree, where
    ``index`` picks the Prüfer code in base-``n`` counting order.
    """

    kind: str
    sizes: tuple


def _checked_ids(G: UGraph, S):
    S = as_vertex_set(S)
    if S.max_vertex() >= G.n or not is_undirected_ids(G, S):
        raise NotUndirectedIds(f"{list(S)} is not an independent dominating set of the graph")
    return S


def orient_away(G: UGraph, S) -> Digraph:
    """Orient every edge at ``S`` away from ``S``; ``S`` is then an IDS of the result.

    Edges with no endpoint in ``S`` go from smaller to larger id.
    """
    S = _checked_ids(G, S)
    arcs = [(v, u) if v in S else (u, v) for u, v in G.edges]
    return Digraph._trusted(G.n, arcs)


def orient_toward(G: UGraph, S) -> Digraph:
    """Orient every edge at ``S`` into ``S``; ``S`` then dominates nothing outside itself.

    Raises
    ------
    TrivialGraph
        For graphs on fewer than two vertices.
    """
    if G.n < 2:
        raise TrivialGraph("needs a non-trivial graph (n >= 2)")
    S = _checked_ids(G, S)
    arcs = [(v, u) if u in S else (u, v) for u, v in G.edges]
    return Digraph._trusted(G.n, arcs)


def orientation(G: UGraph, index: int) -> Digraph:
    """The ``index``-th orientation: bit ``i`` set flips sorted edge ``i`` to larger->smaller."""
    arcs = [(v, u) if index >> i & 1 else (u, v) for i, (u, v) in enumerate(G.edges)]
    return Digraph._trusted(G.n, arcs)


def enumerate_orientations(G: UGraph) -> Iterator[Digraph]:
    """All ``2**m`` orientations of ``G`` in binary-counter order over its sorted edges."""
    m = len(G.edges)
    if m > MAX_ORIENT_EDGES:
        raise TooManyEdges(f"{m} edges; at most {MAX_ORIENT_EDGES} supported")
    for index in range(1 << m):
        yield orientation(G, index)


def tree_count(n: int) -> int:
    """Number of labelled trees on ``n`` vertices (Cayley)."""
    return 1 if n <= 2 else n ** (n - 2)


def prufer_sequence(n: int, index: int) -> list:
    if n < 1 or not 0 <= index < tree_count(n):
        raise BadSpec(f"Prüfer index {index} out of range for n = {n}")
    seq = []
    for _ in range(max(n - 2, 0)):
        index, digit = divmod(index, n)
        seq.append(digit)
    return seq[::-1]


def prufer_decode(seq, n: int) -> list:
    """Edges of the labelled tree on ``0..n-1`` with Prüfer code ``seq``."""
    if n == 1:
        return []
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u, v = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((u, v))
    return edges


def gen_base(spec: GeneratorSpec) -> UGraph:
    kind, sizes = spec.kind, tuple(spec.sizes)
    if kind not in KINDS:
        raise BadSpec(f"unknown generator kind {kind!r}")
    if kind == "complete_bipartite":
        if len(sizes) != 2 or min(sizes) < 1:
            raise BadSpec("complete_bipartite needs sizes (m, n) >= 1")
        m, n = sizes
        return UGraph(m + n, [(x, m + y) for x in range(m) for y in range(n)])
    if kind == "labeled_tree":
        if len(sizes) != 2 or sizes[0] < 1:
            raise BadSpec("labeled_tree needs sizes (n, index) with n >= 1")
        n, index = sizes
        return UGraph(n, prufer_decode(prufer_sequence(n, index), n))
    if len(sizes) != 1 or sizes[0] < 1:
        raise BadSpec(f"{kind} needs a single size n >= 1")
    (n,) = sizes
    if kind == "path":
        return UGraph(n, [(i, i + 1) for i in range(n - 1)])
    if kind == "cycle":
        if n < 3:
            raise BadSpec("cycle needs n >= 3")
        return UGraph(n, [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)])
    return UGraph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def gen_directed(kind: str, n: int) -> Digraph:
    """Canonical directed path (arcs ``i -> i+1``) or directed cycle (plus ``n-1 -> 0``)."""
    if kind == "path":
        if n < 1:
            raise BadSpec("directed path needs n >= 1")
        return Digraph(n, [(i, i + 1) for i in range(n - 1)])
    if kind == "cycle":
        if n < 3:
            raise BadSpec("directed cycle needs n >= 3")
        return Digraph(n, [(i, (i + 1) % n) for i in range(n)])
    raise BadSpec(f"unknown directed kind {kind!r}")
