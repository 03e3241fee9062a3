"""
Exhaustive checks of the published statements
==============================================

The quick profile runs every statement on small instances. One of them,
the reversal lemma, has counterexamples: an IDS that contains a sink.
"""

from idsdigraph import Digraph, VertexSet
from idsdigraph.harness import format_reports, verify_all
from idsdigraph.verify import complement_dominates_reversal, is_ids

reports = verify_all("quick")
print(format_reports(reports).split("counterexample")[0])

# the smallest failure: the directed path 0 -> 1 -> 2
P3 = Digraph(3, [(0, 1), (1, 2)])
S = VertexSet([0, 2])
print(is_ids(P3, S).is_ids, complement_dominates_reversal(P3, S))
