"""Convexity parameters on graphs: intervals, hulls, iteration time and
general position in the geodesic, monophonic, P3 and P3* convexities, plus the
hardness gadgets and kernels that go with them."""

from .convexity import (ConvexityKind, IterationTrace, PositionCheck, exists_induced_path_through,
                        find_induced_path_through, hull, interval, is_convex, is_general_position,
                        iteration_trace, pair_interval)
from .errors import GraphConvexError, InfeasibleError, ParseError, UsageError
from .graph import (Graph, GraphFamily, VertexSet, add_universal_vertex, generate, graph_facts,
                    parse_edge_list, read_edge_list, serialize_edge_list, simplicial_closure,
                    write_edge_list)
from .parameters import (Decision, SolverReport, dissociation_number, gp_decision_xp, gp_number,
                         iteration_time_graph, tree_iteration_time_p3)

__version__ = "0.1.0"

__all__ = [
    "ConvexityKind", "IterationTrace", "PositionCheck", "exists_induced_path_through",
    "find_induced_path_through", "hull", "interval", "is_convex", "is_general_position",
    "iteration_trace", "pair_interval",
    "GraphConvexError", "InfeasibleError", "ParseError", "UsageError",
    "Graph", "GraphFamily", "VertexSet", "add_universal_vertex", "generate", "graph_facts",
    "parse_edge_list", "read_edge_list", "serialize_edge_list", "simplicial_closure",
    "write_edge_list",
    "Decision", "SolverReport", "dissociation_number", "gp_decision_xp", "gp_number",
    "iteration_time_graph", "tree_iteration_time_p3",
]
