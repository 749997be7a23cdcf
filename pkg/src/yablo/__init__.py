"""Digraph kernels, the theta hierarchy and successor structures, checked on finite models."""

from .graph import (
    Digraph,
    GraphError,
    VertexSet,
    build,
    directed_cycle,
    enumerate_all,
    format_edge_list,
    has_odd_closed_walk,
    parse_edge_list,
    random_digraph,
    read_edge_list,
    witness_chain,
    write_edge_list,
)
from .kernel import (
    SolveResult,
    brute_force_kernels,
    is_kernel,
    kernel_for_odd_cycle_free,
    solve,
)
from .successor import (
    SuccessorStructure,
    classify,
    fragment_satisfaction,
    kernel_exists_symbolic,
    parse_structure,
    realize,
)

__version__ = "0.1.0"
