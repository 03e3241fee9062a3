"""
Orienting a graph around an independent dominating set
======================================================

An IDS of an undirected graph stays an IDS once every edge at the set
points away from it, and stops dominating once those edges point inward.
"""

from idsdigraph import UGraph, VertexSet, is_ids
from idsdigraph.verify import is_undirected_ids
from idsdigraph.orientations import orient_away, orient_toward

# the 4-cycle 0-1-2-3-0 with the IDS {0, 2}
G = UGraph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
S = VertexSet([0, 2])
print("undirected IDS:", is_undirected_ids(G, S))

away = orient_away(G, S)
print("away arcs:", away.arcs)
print(is_ids(away, S))

toward = orient_toward(G, S)
print("toward arcs:", toward.arcs)
print(is_ids(toward, S))
