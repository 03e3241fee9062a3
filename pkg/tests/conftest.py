import itertools

import pytest
from hypothesis import strategies as st

from idsdigraph.digraph import Digraph

# Figure-2 style bipartite example: x1=0, x2=1, y1=2, y2=3
FIG2_ARCS = [(0, 2), (2, 1), (3, 1)]


def naive_is_ids(n, arcs, members):
    """Quadratic re-implementation straight from the definitions."""
    members = set(members)
    for u, v in arcs:
        if u in members and v in members:
            return False
    for v in range(n):
        if v in members:
            continue
        if not any(u in members and w == v for u, w in arcs):
            return False
    return True


def naive_all_ids(D):
    """Filter all 2^n subsets, returned as sorted tuples in lexicographic order."""
    found = []
    for r in range(D.n + 1):
        for combo in itertools.combinations(range(D.n), r):
            if naive_is_ids(D.n, D.arcs, combo):
                found.append(combo)
    return sorted(found)


def has_directed_cycle(D):
    """Three-colour DFS."""
    color = [0] * D.n

    def visit(u):
        color[u] = 1
        for w in D.out_adj[u]:
            if color[w] == 1 or (color[w] == 0 and visit(w)):
                return True
        color[u] = 2
        return False

    return any(color[v] == 0 and visit(v) for v in range(D.n))


@st.composite
def digraphs(draw, max_n=7, digons=False):
    n = draw(st.integers(0, max_n))
    arcs = []
    states = 4 if digons else 3
    for u in range(n):
        for v in range(u + 1, n):
            s = draw(st.integers(0, states - 1))
            if s & 1:
                arcs.append((u, v))
            if s & 2:
                arcs.append((v, u))
    return Digraph(n, arcs)


@pytest.fixture
def fig2():
    return Digraph(4, FIG2_ARCS)


@pytest.fixture
def c4():
    return Digraph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
