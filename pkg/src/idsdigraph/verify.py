"""Polynomial-time checks for independence and (out-)domination.

Domination is out-domination throughout: a vertex dominates its
out-neighbours, so ``S`` dominates ``D`` when ``S ∪ N⁺(S) = V(D)``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .digraph import Digraph, UGraph, VertexSet, as_vertex_set, bits, reversal, underlying_graph
from .errors import NotAnIds, VertexOutOfRange

__all__ = [
    "IdsCertificate",
    "is_independent",
    "is_dominating",
    "is_ids",
    "mandatory_vertices",
    "lifts_to_underlying",
    "complement_dominates_reversal",
    "is_undirected_independent",
    "is_undirected_dominating",
    "is_undirected_ids",
]


@dataclass(frozen=True)
class IdsCertificate:
    set: VertexSet
    independent: bool
    dominating: bool

    @property
    def is_ids(self) -> bool:
        return self.independent and self.dominating

    def __bool__(self) -> bool:
        return self.is_ids


def _checked(n: int, S) -> VertexSet:
    S = as_vertex_set(S)
    top = S.max_vertex()
    if top >= n:
        raise VertexOutOfRange(top, n)
    return S


def _out_closure(D: Digraph, mask: int) -> int:
    """``S ∪ N⁺(S)`` as a bitmask."""
    covered = mask
    out = D.out_mask
    for v in bits(mask):
        covered |= out[v]
    return covered


def is_independent(D: Digraph, S) -> bool:
    mask = _checked(D.n, S).mask
    out = D.out_mask
    return all(out[v] & mask == 0 for v in bits(mask))


def is_dominating(D: Digraph, S) -> bool:
    mask = _checked(D.n, S).mask
    return _out_closure(D, mask) == (1 << D.n) - 1


def is_ids(D: Digraph, S) -> IdsCertificate:
    S = _checked(D.n, S)
    return IdsCertificate(S, is_independent(D, S), is_dominating(D, S))


def mandatory_vertices(D: Digraph) -> VertexSet:
    """Vertices of in-degree zero; every independent dominating set contains them."""
    return VertexSet.from_mask(sum(1 << v for v in range(D.n) if not D.in_mask[v]))


def _require_ids(D: Digraph, S) -> VertexSet:
    cert = is_ids(D, S)
    if not cert.is_ids:
        raise NotAnIds(
            f"{list(cert.set)} is not an independent dominating set "
            f"(independent={cert.independent}, dominating={cert.dominating})"
        )
    return cert.set


def is_undirected_independent(G: UGraph, S) -> bool:
    mask = _checked(G.n, S).mask
    return all(G.adj_mask[v] & mask == 0 for v in bits(mask))


def is_undirected_dominating(G: UGraph, S) -> bool:
    mask = _checked(G.n, S).mask
    covered = mask
    for v in bits(mask):
        covered |= G.adj_mask[v]
    return covered == (1 << G.n) - 1


def is_undirected_ids(G: UGraph, S) -> bool:
    return is_undirected_independent(G, S) and is_undirected_dominating(G, S)


def lifts_to_underlying(D: Digraph, S) -> bool:
    """Whether an independent dominating set of ``D`` is one of its underlying graph.

    Raises
    ------
    NotAnIds
        If ``S`` is not an independent dominating set of ``D``.
    """
    S = _require_ids(D, S)
    return is_undirected_ids(underlying_graph(D), S)


def complement_dominates_reversal(D: Digraph, S) -> bool:
    """Whether ``V(D) - S`` dominates the reversal of ``D``, for an IDS ``S`` of ``D``.

    The complement need not be independent.
    """
    S = _require_ids(D, S)
    return is_dominating(reversal(D), S.complement(D.n))
