"""
Idomatic numbers of directed cycles
===================================

Even directed cycles split into two disjoint IDSs, odd ones have none.
The closed form is compared with exact set packing over all IDSs.
"""

from idsdigraph.idomatic import idomatic_number
from idsdigraph.orientations import gen_directed

for n in range(3, 13):
    C = gen_directed("cycle", n)
    closed = idomatic_number(C, "closed")
    exact = idomatic_number(C, "exact")
    witness = [s.to_tuple() for s in exact.witness]
    print(n, closed.value, exact.value, witness)
