"""
Constructive solvers for structured families
============================================

Each family has a direct construction; the dispatcher picks one and falls
back to exhaustive search otherwise.
"""

from idsdigraph import Digraph
from idsdigraph.families import classify, solve_dispatch
from idsdigraph.orientations import gen_directed

samples = {
    "transitive tournament": Digraph(3, [(0, 1), (0, 2), (1, 2)]),
    "cyclic triangle": gen_directed("cycle", 3),
    "directed C6": gen_directed("cycle", 6),
    "zigzag path": Digraph(4, [(0, 1), (2, 1), (2, 3)]),
    "directed K_{2,2}": Digraph(4, [(0, 2), (0, 3), (1, 2), (1, 3)]),
    # a triangle with a pendant arc belongs to no listed family
    "triangle with tail": Digraph(4, [(0, 1), (1, 2), (2, 0), (3, 0)]),
}

for name, D in samples.items():
    out = solve_dispatch(D)
    found = out.set.to_tuple() if out.found else out.reason
    print(f"{name:22s} {' '.join(classify(D)):60s} {out.route:10s} {found}")
