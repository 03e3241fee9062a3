"""Immutable digraphs, undirected graphs and bitmask vertex sets.

Vertices are the integers ``0..n-1``.  Every structure here is immutable
once built, and all adjacency lists are sorted so that anything iterating
over them (solvers, enumerators, reports) behaves deterministically.
"""

from __future__ import annotations

import heapq
from typing import Iterable, Iterator, Optional

from .errors import DuplicateArc, SelfLoop, VertexOutOfRange

__all__ = [
    "VertexSet",
    "Digraph",
    "UGraph",
    "build_digraph",
    "build_graph",
    "reversal",
    "underlying_graph",
    "induced_subdigraph",
    "is_orientation",
    "topological_order",
    "bits",
]


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class VertexSet:
    """A set of vertex ids stored as a single integer bitmask.

    Iteration is in increasing id order.  Ordering between two sets is
    lexicographic on their sorted member lists, which is the order the
    oracle emits independent dominating sets in.
    """

    __slots__ = ("mask",)

    def __init__(self, members: Iterable[int] = ()):
        mask = 0
        for v in members:
            v = int(v)
            if v < 0:
                raise VertexOutOfRange(v, 0)
            mask |= 1 << v
        object.__setattr__(self, "mask", mask)

    @classmethod
    def from_mask(cls, mask: int) -> "VertexSet":
        if mask < 0:
            raise ValueError("mask must be non-negative")
        vs = cls.__new__(cls)
        object.__setattr__(vs, "mask", mask)
        return vs

    @classmethod
    def full(cls, n: int) -> "VertexSet":
        return cls.from_mask((1 << n) - 1)

    def __setattr__(self, name, value):
        raise AttributeError("VertexSet is immutable")

    def __iter__(self) -> Iterator[int]:
        return bits(self.mask)

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __bool__(self) -> bool:
        return self.mask != 0

    def __contains__(self, v) -> bool:
        return isinstance(v, int) and v >= 0 and bool(self.mask >> v & 1)

    def __eq__(self, other) -> bool:
        if isinstance(other, VertexSet):
            return self.mask == other.mask
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("VertexSet", self.mask))

    def __lt__(self, other: "VertexSet") -> bool:
        return self.to_tuple() < other.to_tuple()

    def __or__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet.from_mask(self.mask | _as_mask(other))

    def __and__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet.from_mask(self.mask & _as_mask(other))

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet.from_mask(self.mask & ~_as_mask(other))

    def __xor__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet.from_mask(self.mask ^ _as_mask(other))

    def complement(self, n: int) -> "VertexSet":
        return VertexSet.from_mask(((1 << n) - 1) & ~self.mask)

    def issubset(self, other) -> bool:
        return self.mask & ~_as_mask(other) == 0

    def isdisjoint(self, other) -> bool:
        return self.mask & _as_mask(other) == 0

    def max_vertex(self) -> int:
        """Largest member, or -1 for the empty set."""
        return self.mask.bit_length() - 1

    def to_tuple(self) -> tuple:
        return tuple(bits(self.mask))

    def __repr__(self) -> str:
        return "VertexSet({%s})" % ", ".join(map(str, self))


def _as_mask(s) -> int:
    if isinstance(s, VertexSet):
        return s.mask
    return VertexSet(s).mask


def as_vertex_set(s) -> VertexSet:
    return s if isinstance(s, VertexSet) else VertexSet(s)


class Digraph:
    """Simple directed graph on vertices ``0..n-1``.

    Digons (both ``u->v`` and ``v->u``) are allowed; self-loops and
    repeated arcs are not.

    Attributes
    ----------
    n : int
    arcs : tuple of (int, int)
        Sorted arc list.
    out_adj, in_adj : tuple of tuple of int
        Sorted out- and in-neighbour lists per vertex.
    out_mask, in_mask : tuple of int
        The same neighbourhoods as bitmasks.
    """

    __slots__ = ("n", "arcs", "out_adj", "in_adj", "out_mask", "in_mask", "_hash")

    def __init__(self, n: int, arcs: Iterable = ()):
        n = int(n)
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        seen = set()
        for u, v in arcs:
            u, v = int(u), int(v)
            if not 0 <= u < n:
                raise VertexOutOfRange(u, n)
            if not 0 <= v < n:
                raise VertexOutOfRange(v, n)
            if u == v:
                raise SelfLoop(u)
            if (u, v) in seen:
                raise DuplicateArc(u, v)
            seen.add((u, v))
        self._init(n, sorted(seen))

    @classmethod
    def _trusted(cls, n: int, arcs) -> "Digraph":
        """Build from arcs already known to be valid (no checks, any order)."""
        d = cls.__new__(cls)
        d._init(n, sorted(arcs))
        return d

    def _init(self, n, arcs):
        out_mask = [0] * n
        in_mask = [0] * n
        for u, v in arcs:
            out_mask[u] |= 1 << v
            in_mask[v] |= 1 << u
        set_ = object.__setattr__
        set_(self, "n", n)
        set_(self, "arcs", tuple(arcs))
        set_(self, "out_mask", tuple(out_mask))
        set_(self, "in_mask", tuple(in_mask))
        set_(self, "out_adj", tuple(tuple(bits(m)) for m in out_mask))
        set_(self, "in_adj", tuple(tuple(bits(m)) for m in in_mask))
        set_(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Digraph is immutable")

    @property
    def d_out(self) -> tuple:
        return tuple(len(a) for a in self.out_adj)

    @property
    def d_in(self) -> tuple:
        return tuple(len(a) for a in self.in_adj)

    @property
    def vertices(self) -> VertexSet:
        return VertexSet.full(self.n)

    def has_arc(self, u: int, v: int) -> bool:
        return bool(self.out_mask[u] >> v & 1)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.n == other.n and self.arcs == other.arcs

    def __hash__(self) -> int:
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.n, self.arcs)))
        return self._hash

    def __repr__(self) -> str:
        return f"Digraph({self.n}, {list(self.arcs)})"


class UGraph:
    """Simple undirected graph; edges are stored as sorted ``(u, v)`` with u < v."""

    __slots__ = ("n", "edges", "adj", "adj_mask")

    def __init__(self, n: int, edges: Iterable = ()):
        n = int(n)
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        seen = set()
        for u, v in edges:
            u, v = int(u), int(v)
            for w in (u, v):
                if not 0 <= w < n:
                    raise VertexOutOfRange(w, n)
            if u == v:
                raise SelfLoop(u)
            e = (min(u, v), max(u, v))
            if e in seen:
                raise DuplicateArc(*e)
            seen.add(e)
        adj_mask = [0] * n
        for u, v in seen:
            adj_mask[u] |= 1 << v
            adj_mask[v] |= 1 << u
        set_ = object.__setattr__
        set_(self, "n", n)
        set_(self, "edges", tuple(sorted(seen)))
        set_(self, "adj_mask", tuple(adj_mask))
        set_(self, "adj", tuple(tuple(bits(m)) for m in adj_mask))

    def __setattr__(self, name, value):
        raise AttributeError("UGraph is immutable")

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def __eq__(self, other) -> bool:
        if not isinstance(other, UGraph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash(("UGraph", self.n, self.edges))

    def __repr__(self) -> str:
        return f"UGraph({self.n}, {list(self.edges)})"


def build_digraph(n: int, arcs: Iterable = ()) -> Digraph:
    """Validate ``arcs`` and build a :class:`Digraph` on ``n`` vertices.

    Raises
    ------
    SelfLoop, DuplicateArc, VertexOutOfRange
    """
    return Digraph(n, arcs)


def build_graph(n: int, edges: Iterable = ()) -> UGraph:
    return UGraph(n, edges)


def reversal(D: Digraph) -> Digraph:
    return Digraph._trusted(D.n, [(v, u) for u, v in D.arcs])


def underlying_graph(D: Digraph) -> UGraph:
    edges = {(min(u, v), max(u, v)) for u, v in D.arcs}
    return UGraph(D.n, edges)


def induced_subdigraph(D: Digraph, S) -> tuple:
    """Subdigraph induced by ``S``, relabelled to ``0..|S|-1``.

    Returns ``(sub, id_map)`` where ``id_map[i]`` is the original id of new
    vertex ``i``.  The result may be disconnected.
    """
    S = as_vertex_set(S)
    if S.max_vertex() >= D.n:
        raise VertexOutOfRange(S.max_vertex(), D.n)
    id_map = S.to_tuple()
    new_id = {old: i for i, old in enumerate(id_map)}
    arcs = [(new_id[u], new_id[v]) for u, v in D.arcs if u in new_id and v in new_id]
    return Digraph._trusted(len(id_map), arcs), id_map


def is_orientation(D: Digraph) -> bool:
    """True iff ``D`` has no digon."""
    return all(D.out_mask[u] & D.in_mask[u] == 0 for u in range(D.n))


def topological_order(D: Digraph) -> Optional[list]:
    """Kahn's algorithm, always releasing the smallest available source.

    Returns ``None`` when ``D`` contains a directed cycle.
    """
    indeg = [len(a) for a in D.in_adj]
    heap = [v for v in range(D.n) if indeg[v] == 0]
    heapq.heapify(heap)
    order = []
    while heap:
        u = heapq.heappop(heap)
        order.append(u)
        for v in D.out_adj[u]:
            indeg[v] -= 1
            if indeg[v] == 0:
                heapq.heappush(heap, v)
    return order if len(order) == D.n else None
