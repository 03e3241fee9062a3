"""Exact exponential-time enumeration of independent dominating sets.

This is the ground truth every solver and every statement check is tested
against, so it shares no code with the polynomial solvers: it works directly
on the adjacency bitmasks of a :class:`~idsdigraph.digraph.Digraph`.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import islice
from typing import Iterator, Optional

from .digraph import Digraph, VertexSet, bits
from .errors import TooLarge

__all__ = [
    "MAX_ORACLE_N",
    "DEFAULT_CAP",
    "IdsEnumeration",
    "iter_ids",
    "enumerate_ids",
    "exists_ids",
    "count_ids",
    "is_unique_ids",
]

MAX_ORACLE_N = 32
DEFAULT_CAP = 10**6


@dataclass(frozen=True)
class IdsEnumeration:
    digraph_n: int
    sets: tuple
    exhaustive: bool

    def __len__(self):
        return len(self.sets)

    def __iter__(self):
        return iter(self.sets)


def _check_size(D: Digraph):
    if D.n > MAX_ORACLE_N:
        raise TooLarge(f"oracle limited to n <= {MAX_ORACLE_N}, got n = {D.n}")


def iter_ids(D: Digraph) -> Iterator[int]:
    """Yield every independent dominating set of ``D`` as a bitmask.

    Vertices are decided in id order, "include" before "exclude", which
    produces the sets in lexicographic order of their sorted members.
    A branch is cut as soon as some undominated vertex has neither an
    undecided unblocked in-neighbour nor the option of joining the set
    itself.
    """
    _check_size(D)
    n = D.n
    full = (1 << n) - 1
    out = D.out_mask
    inn = D.in_mask
    nbr = [out[v] | inn[v] for v in range(n)]

    def alive(k, blocked, dominated):
        # vertices >= k that may still join the set
        avail = (full >> k << k) & ~blocked
        for j in bits(full & ~dominated):
            if not (inn[j] | (1 << j)) & avail:
                return False
        return True

    def rec(i, chosen, blocked, dominated):
        if i == n:
            if dominated == full:
                yield chosen
            return
        bit = 1 << i
        if not blocked & bit:
            b2 = blocked | nbr[i]
            d2 = dominated | bit | out[i]
            if alive(i + 1, b2, d2):
                yield from rec(i + 1, chosen | bit, b2, d2)
        # excluding i: it stays excludable only if someone can still cover it
        b2 = blocked | bit
        if alive(i + 1, b2, dominated):
            yield from rec(i + 1, chosen, b2, dominated)

    if alive(0, 0, 0):
        yield from rec(0, 0, 0, 0)


def enumerate_ids(D: Digraph, cap: Optional[int] = DEFAULT_CAP) -> IdsEnumeration:
    """All independent dominating sets of ``D`` in lexicographic order.

    At most ``cap`` sets are returned; ``exhaustive`` is False exactly when
    more sets exist than were returned.

    Raises
    ------
    TooLarge
        If ``D`` has more than 32 vertices.
    """
    gen = iter_ids(D)
    if cap is None:
        masks = list(gen)
        exhaustive = True
    else:
        masks = list(islice(gen, cap + 1))
        exhaustive = len(masks) <= cap
        masks = masks[:cap]
    return IdsEnumeration(D.n, tuple(VertexSet.from_mask(m) for m in masks), exhaustive)


def exists_ids(D: Digraph) -> bool:
    return next(iter_ids(D), None) is not None


def count_ids(D: Digraph, cap: Optional[int] = None) -> int:
    return sum(1 for _ in islice(iter_ids(D), cap))


def is_unique_ids(D: Digraph) -> Optional[VertexSet]:
    """The independent dominating set of ``D`` if there is exactly one, else None."""
    first_two = list(islice(iter_ids(D), 2))
    if len(first_two) == 1:
        return VertexSet.from_mask(first_two[0])
    return None
