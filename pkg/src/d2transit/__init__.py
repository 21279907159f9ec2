"""Transitive and d2-transitive vertex partitions of graphs."""

from .classes import (
    BipartiteView,
    ChainOrdering,
    SplitDecomposition,
    chain_ordering,
    chain_square_complement,
    d2_of_chain,
    d2_of_complement_bipartite,
    find_star_center,
    recognize_bipartite,
    recognize_split,
    verify_star_convex,
)
from .closed_forms import classify_small, complete_bipartite_d2, cycle_d2, full_value_if_small_diameter, path_d2
from .errors import BudgetError, GraphError, InconclusiveError, PartitionError, VertexBudgetError
from .graph import (
    DistanceRow,
    Graph,
    build_graph,
    complement,
    components,
    diameter,
    distances_from,
    induced_subgraph,
    max_degree,
    square,
)
from .kernel import BACKEND as KERNEL_BACKEND
from .partition import OrderedPartition, d2_dominates, dominates, first_violation, is_d2_transitive, is_transitive
from .reductions import GadgetOutput, bipartite_gadget, check_shift_equivalence, split_gadget, star_convex_gadget
from .solver import (
    SolveResult,
    SolverConfig,
    degree_bounds,
    exact_d2_transitivity,
    exact_transitivity,
    feasible_transitive,
    greedy_d2_lower_bound,
)

__version__ = "0.1.0"
