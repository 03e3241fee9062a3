"""Independent dominating sets in directed graphs.

Exact oracle, polynomial family solvers, idomatic numbers, orientation
constructors and an exhaustive statement harness.
"""

from .digraph import (
    Digraph,
    UGraph,
    VertexSet,
    build_digraph,
    build_graph,
    induced_subdigraph,
    is_orientation,
    reversal,
    topological_order,
    underlying_graph,
)
from .edgelist import format_edge_list, parse_edge_list, read_edge_list
from .families import FamilyTags, SolveOutcome, Status, classify, solve_dispatch
from .idomatic import IdomaticResult, idomatic_closed_form, idomatic_exact, idomatic_number
from .oracle import IdsEnumeration, enumerate_ids, exists_ids, is_unique_ids
from .orientations import GeneratorSpec, enumerate_orientations, gen_base, gen_directed, orient_away, orient_toward
from .verify import (
    IdsCertificate,
    complement_dominates_reversal,
    is_dominating,
    is_ids,
    is_independent,
    lifts_to_underlying,
    mandatory_vertices,
)

__version__ = "0.1.0"
