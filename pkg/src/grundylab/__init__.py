"""Exact Grundy numbers, graph products and checkable witness constructions."""

from .coloring import (
    GreedyPartition,
    InstanceTooLarge,
    PartitionError,
    SolverError,
    SolverTimeout,
    chromatic_number,
    clique_number,
    dominate_extend,
    enumerate_greedy_partitions,
    find_induced_binomial_tree,
    greedy_color,
    grundy_number,
    is_greedy_partition,
    maximal_independent_sets,
    partition_of,
)
from .graph import Graph, Graph6Error, GraphError, graph_from_edges, parse_graph6, write_graph6
from .products import ProductLayout, cartesian_product, direct_product, lex_product

__all__ = [
    "Graph",
    "Graph6Error",
    "GraphError",
    "GreedyPartition",
    "InstanceTooLarge",
    "PartitionError",
    "ProductLayout",
    "SolverError",
    "SolverTimeout",
    "cartesian_product",
    "chromatic_number",
    "clique_number",
    "direct_product",
    "dominate_extend",
    "enumerate_greedy_partitions",
    "find_induced_binomial_tree",
    "graph_from_edges",
    "greedy_color",
    "grundy_number",
    "is_greedy_partition",
    "lex_product",
    "maximal_independent_sets",
    "parse_graph6",
    "partition_of",
    "write_graph6",
]
