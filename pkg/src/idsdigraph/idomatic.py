"""Idomatic number: the largest number of pairwise disjoint IDS of a digraph.

A digraph with no independent dominating set has idomatic number 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import families
from .digraph import Digraph, VertexSet
from .errors import CapExceeded, NotInFamily
from .oracle import DEFAULT_CAP, enumerate_ids

__all__ = [
    "IdomaticResult",
    "idomatic_exact",
    "idomatic_closed_form",
    "idomatic_number",
    "max_disjoint_packing",
]


@dataclass(frozen=True)
class IdomaticResult:
    value: int
    witness: tuple
    method: str  # "closed_form" or "exact_packing"


def max_disjoint_packing(masks) -> list:
    """Largest family of pairwise disjoint bitmasks, by branch and bound.

    Candidates are ordered by lowest member.  A branch is abandoned when the
    candidates left, or the free vertices divided by the smallest candidate
    size, cannot lift it above the incumbent.
    """
    cands = sorted(set(masks), key=lambda m: ((m & -m).bit_length(), m))
    best = []

    def search(cands, chosen, used):
        nonlocal best
        if len(chosen) > len(best):
            best = list(chosen)
        if not cands:
            return
        smallest = min(bin(c).count("1") for c in cands)
        free = bin(_union(cands) & ~used).count("1")
        room = len(cands) if smallest == 0 else min(len(cands), free // smallest)
        if len(chosen) + room <= len(best):
            return
        for i, c in enumerate(cands):
            if len(chosen) + len(cands) - i <= len(best):
                return
            rest = [d for d in cands[i + 1:] if not d & c]
            chosen.append(c)
            search(rest, chosen, used | c)
            chosen.pop()

    search(cands, [], 0)
    return best


def _union(masks):
    u = 0
    for m in masks:
        u |= m
    return u


def idomatic_exact(D: Digraph, cap: Optional[int] = DEFAULT_CAP) -> IdomaticResult:
    """Enumerate every IDS with the oracle and pack them exactly.

    Raises
    ------
    TooLarge
        If ``D`` has more than 32 vertices.
    CapExceeded
        If ``D`` has more than ``cap`` independent dominating sets.
    """
    enum = enumerate_ids(D, cap)
    if not enum.exhaustive:
        raise CapExceeded(f"more than {cap} independent dominating sets; packing would be unsound")
    packing = max_disjoint_packing([s.mask for s in enum.sets])
    witness = tuple(sorted(VertexSet.from_mask(m) for m in packing))
    return IdomaticResult(len(witness), witness, "exact_packing")


def idomatic_closed_form(D: Digraph) -> Optional[IdomaticResult]:
    """Idomatic number for families where it is known outright, else None.

    Tournaments: 1 with a vertex beating all others, 0 otherwise.  Directed
    paths, arborescences and anti-arborescences: 1.  Directed cycles: 2 for
    even length, 0 for odd.
    """
    if families._is_tournament(D):
        out = families.solve_tournament(D)
    elif families._is_directed_path(D):
        out = families.solve_directed_path(D)
    elif families._is_directed_cycle(D):
        out = families.solve_directed_cycle(D)
        if out.found:
            return IdomaticResult(2, tuple(sorted(out.both_sets)), "closed_form")
    elif families._is_arborescence(D):
        out = families.solve_arborescence(D)
    elif families._is_anti_arborescence(D):
        out = families.solve_anti_arborescence(D)
    else:
        return None
    if out.found:
        return IdomaticResult(1, (out.set,), "closed_form")
    return IdomaticResult(0, (), "closed_form")


def idomatic_number(D: Digraph, method: str = "auto", cap: Optional[int] = DEFAULT_CAP) -> IdomaticResult:
    """``method`` is ``auto`` (closed form when available), ``closed`` or ``exact``."""
    if method not in ("auto", "closed", "exact"):
        raise ValueError(f"unknown method {method!r}")
    if method != "exact":
        res = idomatic_closed_form(D)
        if res is not None:
            return res
        if method == "closed":
            raise NotInFamily("no closed form applies to this digraph")
    return idomatic_exact(D, cap)
